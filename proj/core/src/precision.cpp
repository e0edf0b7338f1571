#include "sinesum/precision.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>

namespace sinesum {

namespace {

long read_env_bits() {
    const char* s = std::getenv("SINESUM_PRECISION_BITS");
    if (!s) return 128;
    long v = std::strtol(s, nullptr, 10);
    return (v >= 16 && v <= (1L << 20)) ? v : 128;
}

std::atomic<long>& default_bits_storage() {
    static std::atomic<long> bits{read_env_bits()};
    return bits;
}

std::atomic<long>& ceiling_bits_storage() {
    static std::atomic<long> bits{1L << 20};
    return bits;
}

} // namespace

long default_precision_bits() { return default_bits_storage().load(); }
void set_default_precision_bits(long bits) { default_bits_storage().store(bits); }
long precision_ceiling_bits() { return ceiling_bits_storage().load(); }
void set_precision_ceiling_bits(long bits) { ceiling_bits_storage().store(bits); }

PrecisionReal PrecisionReal::from_double(double x) {
    PrecisionReal r(BigFloat(x, 64), 0.0);
    return r;
}

PrecisionReal PrecisionReal::two_pi_times(const Rat& q) {
    long bits = default_precision_bits();
    BigFloat tp = BigFloat::two_pi(bits + 8);
    BigFloat num((long long)q.num, bits + 8);
    BigFloat den((long long)q.den, bits + 8);
    BigFloat v = BigFloat::div(BigFloat::mul(tp, num, bits + 8), den, bits);
    double scale = std::fabs(v.to_double());
    PrecisionReal r(std::move(v), std::ldexp(scale > 1 ? scale : 1.0, -(int)bits + 2));
    r.pi_rational = q;
    return r;
}

PrecisionReal PrecisionReal::from_rational(const Rat& q) {
    long bits = default_precision_bits();
    BigFloat num((long long)q.num, bits);
    BigFloat den((long long)q.den, bits);
    BigFloat v = BigFloat::div(num, den, bits);
    double scale = std::fabs(v.to_double());
    return PrecisionReal(std::move(v), q.den == 1 ? 0.0
                         : std::ldexp(scale > 1 ? scale : 1.0, -(int)bits + 2));
}

PrecisionReal PrecisionReal::parse_decimal(const std::string& s, long bits) {
    BigFloat v = BigFloat::from_string(s, bits);
    double scale = std::fabs(v.to_double());
    return PrecisionReal(std::move(v), std::ldexp(scale > 1 ? scale : 1.0, -(int)bits + 2));
}

namespace {

// Fractional part of a BigFloat at its own precision, plus the distance to the
// nearest integer as a double (adequate: callers compare it against err).
struct FracRaw {
    BigFloat frac;     // in [0, 1)
    double dist = 0.0; // distance of the input to its nearest integer
};

FracRaw frac_raw(const BigFloat& y) {
    long p = y.precision();
    BigFloat fl = BigFloat::floor(y, p);
    BigFloat fr = BigFloat::sub(y, fl, p);
    // fr in [0, 1) exactly (floor is exact; the subtraction is exact by
    // Sterbenz-type cancellation at matching precision).
    if (fr.sign() < 0) fr = BigFloat::add(fr, BigFloat(1.0, p), p);
    if (fr.cmp_d(1.0) >= 0) fr = BigFloat::sub(fr, BigFloat(1.0, p), p);
    double f = fr.to_double();
    FracRaw out{std::move(fr), f <= 0.5 ? f : 1.0 - f};
    return out;
}

} // namespace

FracPart frac(const PrecisionReal& y) {
    FracRaw raw = frac_raw(y.value);
    if (y.err > 0.0 && raw.dist < y.err)
        throw AmbiguousNearInteger("fractional part within error bound of an integer");
    // The double conversion of the exact fractional part adds at most half an
    // ulp at scale < 1.
    return FracPart{raw.frac.to_double(), y.err + std::ldexp(1.0, -54)};
}

PrecisionReal dist_to_int(const PrecisionReal& y) {
    FracRaw raw = frac_raw(y.value);
    if (y.err > 0.0 && raw.dist < y.err)
        throw AmbiguousNearInteger("distance-to-integer within error bound of an integer");
    long p = y.value.precision();
    BigFloat f = raw.frac;
    BigFloat one_minus = BigFloat::sub(BigFloat(1.0, p), f, p);
    BigFloat d = (f.cmp(one_minus) <= 0) ? f : one_minus;
    return PrecisionReal(std::move(d), y.err);
}

PrecisionReal reduce_mod_2pi(const PrecisionReal& y) {
    if (y.pi_rational) {
        Rat f = y.pi_rational->frac();
        PrecisionReal r = PrecisionReal::two_pi_times(f);
        r.err += y.err;
        return r;
    }
    long base = default_precision_bits();
    long mag = y.value.exponent();
    long w = base + (mag > 0 ? mag : 0) + 16;
    if (w > precision_ceiling_bits())
        throw PrecisionExhausted("modular reduction would need " + std::to_string(w) +
                                 " bits, above the ceiling");
    BigFloat tp = BigFloat::two_pi(w);
    BigFloat q = BigFloat::div(y.value, tp, w);
    BigFloat n = BigFloat::floor(q, w);
    BigFloat r = BigFloat::sub(y.value, BigFloat::mul(n, tp, w), w);
    if (r.sign() < 0) r = BigFloat::add(r, tp, w);
    if (r.cmp(tp) >= 0) r = BigFloat::sub(r, tp, w);
    // Reduction error: |n| * ulp(2*pi at w bits) plus the final rounding.
    double n_abs = std::fabs(n.to_double());
    double red_err = std::ldexp(n_abs + 8.0, -(int)w + 3);
    return PrecisionReal(std::move(r), y.err + red_err);
}

PrecisionReal arg_power(unsigned long long k, double alpha, const PrecisionReal& x) {
    if (k < 1) throw PreconditionViolation("arg_power requires k >= 1");
    if (!(alpha > 0.0)) throw PreconditionViolation("arg_power requires alpha > 0");
    double xmag = std::fabs(x.to_double());
    double lg = alpha * std::log2((double)k) + (xmag > 0 ? std::log2(xmag) : 0.0);
    long w = (long)std::ceil(lg) + 64;
    if (w < default_precision_bits()) w = default_precision_bits();
    if (w > precision_ceiling_bits())
        throw PrecisionExhausted("arg_power would need " + std::to_string(w) +
                                 " bits, above the ceiling");

    BigFloat ka(w);
    double rounded = std::nearbyint(alpha);
    if (rounded == alpha && rounded >= 1.0 && rounded <= 64.0) {
        ka = BigFloat::pow_ui((unsigned long)k, (unsigned long)rounded, w);
    } else {
        BigFloat base((unsigned long long)k, w);
        BigFloat expo(alpha, w);
        ka = BigFloat::pow(base, expo, w);
    }
    BigFloat prod = BigFloat::mul(ka, x.value, w);
    // Propagated input error: |k^alpha| * x.err.
    double kd = ka.to_double();
    PrecisionReal y(std::move(prod), x.err * kd + std::ldexp(std::fabs(kd) * (xmag > 0 ? xmag : 1.0), -(int)w + 4));
    if (x.pi_rational && rounded == alpha && rounded >= 1.0) {
        // k^n * (2*pi*q) stays an exact rational multiple of 2*pi when k^n * q
        // fits; otherwise fall through to numeric reduction.
        __int128 pw = 1;
        bool fits = true;
        for (int i = 0; i < (int)rounded; ++i) {
            pw *= (__int128)k;
            if (pw > ((__int128)1 << 100)) { fits = false; break; }
        }
        if (fits) {
            __int128 nn = pw * x.pi_rational->num;
            if (nn < ((__int128)1 << 120) && nn > -((__int128)1 << 120)) {
                try {
                    Rat q = Rat::from_i128(nn, x.pi_rational->den);
                    PrecisionReal r = PrecisionReal::two_pi_times(q.frac());
                    r.err += x.err * kd;
                    return r;
                } catch (const PreconditionViolation&) {
                    // overflow in reduction: numeric path below
                }
            }
        }
    }
    return reduce_mod_2pi(y);
}

} // namespace sinesum
