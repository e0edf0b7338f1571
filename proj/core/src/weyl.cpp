#include "sinesum/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "sinesum/dd.hpp"
#include "sinesum/errors.hpp"

namespace sinesum {
namespace {

using u64 = unsigned long long;
using u128 = unsigned __int128;
using i128 = __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return (u64)((u128)a * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

long long inv_mod(long long a, long long m) {
    long long t = 0, newt = 1;
    long long r = m, newr = ((a % m) + m) % m;
    while (newr != 0) {
        long long q = r / newr;
        long long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw PreconditionViolation("element not invertible in the residue ring");
    return ((t % m) + m) % m;
}

bool is_prime_ll(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

const dd& two_pi_dd() {
    static const dd v = to_dd(BigFloat::two_pi(160));
    return v;
}

// cos/sin of 2*pi*fr for fr in [0, 1) held as a double-double; the low part
// enters through the first-order rotation so the argument error is O(2^-106).
inline void unit_from_frac(dd fr, double& c, double& s) {
    dd ang = dd_mul(two_pi_dd(), fr);
    double ch = std::cos(ang.hi), sh = std::sin(ang.hi);
    c = ch - ang.lo * sh;
    s = sh + ang.lo * ch;
}

BigFloat bf_from_i128(i128 v, long prec) {
    BigFloat r(prec);
    bool neg = v < 0;
    u128 a = neg ? (u128)(-v) : (u128)v;
    mpfr_set_uj(r.raw(), (uintmax_t)(u64)(a >> 64), MPFR_RNDN);
    mpfr_mul_2ui(r.raw(), r.raw(), 64, MPFR_RNDN);
    mpfr_add_ui(r.raw(), r.raw(), (unsigned long)(u64)a, MPFR_RNDN);
    if (neg) mpfr_neg(r.raw(), r.raw(), MPFR_RNDN);
    return r;
}

// Coefficients of Q*f (integers) with Q = f.integerizer().
long long integer_coeffs(const PolynomialQ& f, std::vector<i128>& out) {
    long long Q = f.integerizer();
    out.clear();
    for (const Rat& c : f.coeffs) out.push_back((i128)c.num * (Q / c.den));
    return Q;
}

// True when sum_j |c_j| P^j stays below 2^126 (so Horner in __int128 is safe
// for every k in [1, P]); the bound itself is returned for error accounting.
bool coeff_bound_fits(const std::vector<i128>& qc, u64 P, i128& bound_out) {
    const i128 lim = (i128)1 << 126;
    i128 bound = 0, pw = 1;
    for (std::size_t j = 0; j < qc.size(); ++j) {
        if (j > 0) {
            if (pw > lim / (i128)P) return false;
            pw *= (i128)P;
        }
        i128 a = qc[j] < 0 ? -qc[j] : qc[j];
        if (a != 0 && pw > lim / a) return false;
        i128 t = a * pw;
        if (bound > lim - t) return false;
        bound += t;
    }
    bound_out = bound;
    return true;
}

// log2 upper bound for max_j sum_t |c_{j,t}| P^t over a family of
// integer-coefficient polynomials.
double bits_bound(const std::vector<std::vector<i128>>& qg, u64 P) {
    double best = 1.0;
    for (const auto& cs : qg) {
        double s = 0.0, pw = 1.0;
        for (std::size_t j = 0; j < cs.size(); ++j) {
            s += std::fabs((double)cs[j]) * pw;
            pw *= (double)P;
        }
        best = std::max(best, s);
    }
    return std::log2(best + 2.0);
}

// ---- direct mode -----------------------------------------------------------

// x = 2*pi*q exactly: phases are exact rationals r/N with N = Q*den(q), so the
// cancellation structure of the sum is reproduced without rounding in the
// argument.  Only the final sin/cos rounds.
WeylSum direct_pi_rational(const PolynomialQ& f, const Rat& q, u64 P) {
    std::vector<i128> qc;
    long long Q = integer_coeffs(f, qc);
    i128 N128 = (i128)Q * q.den;
    if (N128 > ((i128)1 << 52)) throw PreconditionViolation("phase period Q*den too large");
    u64 N = (u64)N128;
    u64 am = (u64)(((q.num % (long long)N) + (long long)N) % (long long)N);
    std::vector<u64> cm(qc.size());
    for (std::size_t j = 0; j < qc.size(); ++j) {
        i128 c = qc[j] % (i128)N;
        if (c < 0) c += N;
        cm[j] = (u64)c;
    }
    dd sre{0.0, 0.0}, sim{0.0, 0.0};
    for (u64 k = 1; k <= P; ++k) {
        u64 km = k % N;
        u64 r = 0;
        for (int j = (int)cm.size() - 1; j >= 0; --j) r = (u64)(((u128)r * km + cm[j]) % N);
        r = mulmod(r, am, N);
        // r/N is exact in dd: r, N < 2^53 and the quotient is corrected by dd_div
        dd fr = dd_div(dd{(double)r, 0.0}, dd{(double)N, 0.0});
        double c, s;
        unit_from_frac(fr, c, s);
        sre = dd_add(sre, c);
        sim = dd_add(sim, s);
    }
    WeylSum w;
    w.re = sre.to_double();
    w.im = sim.to_double();
    w.P = P;
    w.mode = "direct";
    w.err = 2.5e-16 * (double)P + 1e-12;
    return w;
}

// Numeric x, Q*f(k) within __int128: phase(k) = frac(Q f(k) * theta) with
// theta = x/(2*pi*Q).  The integer is split into 32-bit limbs and each limb
// multiplies a precomputed double-double frac(2^(32 i) * theta); this bounds
// the phase error by ~2^-70 per term independent of P.
WeylSum direct_split(const std::vector<i128>& qc, long long Q, const PrecisionReal& x,
                     u64 P, i128 vbound) {
    long w = std::max<long>(x.value.precision(), 64) + 220;
    BigFloat theta = BigFloat::div(
        x.value, BigFloat::mul(BigFloat::two_pi(w), BigFloat((long long)Q, 64), w), w);
    dd t[4];
    BigFloat cur = theta;
    for (int i = 0; i < 4; ++i) {
        BigFloat fr = BigFloat::sub(cur, BigFloat::floor(cur, w), w);
        t[i] = to_dd(fr);
        BigFloat nxt(w);
        mpfr_mul_2ui(nxt.raw(), fr.raw(), 32, MPFR_RNDN);
        cur = std::move(nxt);
    }
    dd sre{0.0, 0.0}, sim{0.0, 0.0};
    for (u64 k = 1; k <= P; ++k) {
        i128 v = 0;
        for (int j = (int)qc.size() - 1; j >= 0; --j) v = v * (i128)k + qc[j];
        bool neg = v < 0;
        u128 a = neg ? (u128)(-v) : (u128)v;
        dd acc{0.0, 0.0};
        for (int i = 0; i < 4 && a != 0; ++i) {
            u64 limb = (u64)(a & 0xffffffffULL);
            a >>= 32;
            if (limb) acc = dd_add(acc, dd_mul(t[i], (double)limb));
        }
        dd fr = dd_frac(neg ? dd_neg(acc) : acc);
        double c, s;
        unit_from_frac(fr, c, s);
        sre = dd_add(sre, c);
        sim = dd_add(sim, s);
    }
    WeylSum ws;
    ws.re = sre.to_double();
    ws.im = sim.to_double();
    ws.P = P;
    ws.mode = "direct";
    double phase_err = (double)vbound * (x.err / (double)Q) + 1e-21;
    ws.err = (double)P * (2.5e-16 + phase_err) + 1e-12;
    return ws;
}

// Numeric x, coefficients too large for the split path: per-term exact integer
// Horner in MPFR at full width, then one reduction.  Slow but certified.
WeylSum direct_mpfr(const std::vector<i128>& qc, long long Q, const PrecisionReal& x, u64 P) {
    std::vector<std::vector<i128>> one{qc};
    double vb = bits_bound(one, P);
    long w = (long)vb + 220;
    BigFloat theta = BigFloat::div(
        x.value, BigFloat::mul(BigFloat::two_pi(w), BigFloat((long long)Q, 64), w), w);
    std::vector<BigFloat> cs;
    for (i128 c : qc) cs.push_back(bf_from_i128(c, 140));
    dd sre{0.0, 0.0}, sim{0.0, 0.0};
    BigFloat v(w), z(w), fr(170);
    for (u64 k = 1; k <= P; ++k) {
        mpfr_set_zero(v.raw(), 1);
        for (int j = (int)cs.size() - 1; j >= 0; --j) {
            mpfr_mul_ui(v.raw(), v.raw(), (unsigned long)k, MPFR_RNDN);
            mpfr_add(v.raw(), v.raw(), cs[(std::size_t)j].raw(), MPFR_RNDN);
        }
        mpfr_mul(z.raw(), v.raw(), theta.raw(), MPFR_RNDN);
        mpfr_frac(fr.raw(), z.raw(), MPFR_RNDN);
        if (mpfr_sgn(fr.raw()) < 0) mpfr_add_ui(fr.raw(), fr.raw(), 1, MPFR_RNDN);
        double c, s;
        unit_from_frac(to_dd(fr), c, s);
        sre = dd_add(sre, c);
        sim = dd_add(sim, s);
    }
    WeylSum ws;
    ws.re = sre.to_double();
    ws.im = sim.to_double();
    ws.P = P;
    ws.mode = "direct";
    double vbound = std::pow(2.0, std::min(vb, 1000.0));
    ws.err = (double)P * (2.5e-16 + vbound * (x.err / (double)Q)) + 1e-12;
    return ws;
}

// ---- fast mode -------------------------------------------------------------

struct DDC {
    dd re, im;
};

inline DDC ddc_mul(const DDC& a, const DDC& b) {
    return {dd_sub(dd_mul(a.re, b.re), dd_mul(a.im, b.im)),
            dd_add(dd_mul(a.re, b.im), dd_mul(a.im, b.re))};
}

// Rotor recurrence over the difference tower of f: z_j(k) = e^{i D^j f(k) x},
// z_j <- z_j * z_{j+1} advances k by one.  Rotors are double-double and are
// reseeded from exact integer evaluations every 2^16 steps, which caps the
// accumulated recurrence error per chunk at ~2^-86.
WeylSum fast_rotor(const PolynomialQ& f, const PrecisionReal& x, u64 P) {
    int n = f.degree();
    std::vector<PolynomialQ> g;
    g.push_back(f);
    for (int j = 0; j < n; ++j) g.push_back(g.back().shifted(1) - g.back());

    long long Q = f.integerizer();
    std::vector<std::vector<i128>> qg(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
        for (const Rat& c : g[j].coeffs) {
            if (Q % c.den != 0) throw PreconditionViolation("difference coefficients escape the integerizer");
            qg[j].push_back((i128)c.num * (Q / c.den));
        }
    }

    double vb = bits_bound(qg, P);
    long w = (long)vb + 220;
    BigFloat theta = BigFloat::div(
        x.value, BigFloat::mul(BigFloat::two_pi(w), BigFloat((long long)Q, 64), w), w);
    std::vector<std::vector<BigFloat>> qgbf(qg.size());
    for (std::size_t j = 0; j < qg.size(); ++j)
        for (i128 c : qg[j]) qgbf[j].push_back(bf_from_i128(c, 140));

    std::vector<DDC> z(g.size());
    auto reseed = [&](u64 k0) {
        BigFloat v(w), zz(w), fr(170), ang(170);
        for (std::size_t j = 0; j < qgbf.size(); ++j) {
            mpfr_set_zero(v.raw(), 1);
            for (int t = (int)qgbf[j].size() - 1; t >= 0; --t) {
                mpfr_mul_ui(v.raw(), v.raw(), (unsigned long)k0, MPFR_RNDN);
                mpfr_add(v.raw(), v.raw(), qgbf[j][(std::size_t)t].raw(), MPFR_RNDN);
            }
            mpfr_mul(zz.raw(), v.raw(), theta.raw(), MPFR_RNDN);
            mpfr_frac(fr.raw(), zz.raw(), MPFR_RNDN);
            if (mpfr_sgn(fr.raw()) < 0) mpfr_add_ui(fr.raw(), fr.raw(), 1, MPFR_RNDN);
            mpfr_mul(ang.raw(), fr.raw(), BigFloat::two_pi(170).raw(), MPFR_RNDN);
            z[j].re = to_dd(BigFloat::cos(ang, 170));
            z[j].im = to_dd(BigFloat::sin(ang, 170));
        }
    };

    dd sre{0.0, 0.0}, sim{0.0, 0.0};
    const u64 kChunk = 1ULL << 16;
    u64 k = 1;
    while (k <= P) {
        reseed(k);
        u64 end = std::min(P, k + kChunk - 1);
        for (; k <= end; ++k) {
            sre = dd_add(sre, z[0].re);
            sim = dd_add(sim, z[0].im);
            for (int j = 0; j < n; ++j) z[(std::size_t)j] = ddc_mul(z[(std::size_t)j], z[(std::size_t)j + 1]);
        }
    }
    WeylSum ws;
    ws.re = sre.to_double();
    ws.im = sim.to_double();
    ws.P = P;
    ws.mode = "fast";
    double vbound = std::pow(2.0, std::min(vb, 1000.0));
    ws.err = (double)P * (1e-24 + vbound * (x.err / (double)Q)) + 1e-13;
    return ws;
}

} // namespace

WeylSum weyl_sum(const PolynomialQ& f, const PrecisionReal& x, u64 P, WeylMode mode) {
    if (P == 0) {
        WeylSum w;
        w.mode = mode == WeylMode::Direct ? "direct" : "fast";
        return w;
    }
    if (mode == WeylMode::Fast) return fast_rotor(f, x, P);
    if (x.pi_rational) return direct_pi_rational(f, *x.pi_rational, P);
    std::vector<i128> qc;
    long long Q = integer_coeffs(f, qc);
    i128 vbound = 0;
    if (coeff_bound_fits(qc, P, vbound)) return direct_split(qc, Q, x, P, vbound);
    return direct_mpfr(qc, Q, x, P);
}

// ---- complete sums over prime-power moduli ---------------------------------

namespace {

u64 validated_prime_power(long long p, int n) {
    if (!is_prime_ll(p)) throw PreconditionViolation("modulus base must be prime");
    if (n <= 2) throw PreconditionViolation("exponent must exceed 2");
    if (p <= n) throw PreconditionViolation("prime must exceed the exponent");
    i128 pn = 1;
    for (int j = 0; j < n; ++j) {
        pn *= p;
        if (pn > 200000000) throw PreconditionViolation("p^n too large to enumerate");
    }
    return (u64)pn;
}

// Residue histogram structure that forces the sum to equal p^(n-1) exactly:
// counts on each progression u + v*p^(n-1) (v = 0..p-1) are constant in v for
// u != 0, constant for v >= 1 at u = 0, and the u = 0 excess is p^(n-1).
// Grouping the full sum by these classes, the constant rows multiply
// sum_v e(v/p) = 0 and only the excess at u = 0 survives.
bool residue_structure_ok(const std::vector<int>& cnt, long long p, u64 pn1) {
    long long c = cnt[pn1]; // u = 0, v = 1
    for (long long v = 2; v < p; ++v)
        if (cnt[(u64)v * pn1] != c) return false;
    if (cnt[0] - c != (long long)pn1) return false;
    for (u64 u = 1; u < pn1; ++u) {
        int c0 = cnt[u];
        for (long long v = 1; v < p; ++v)
            if (cnt[u + (u64)v * pn1] != c0) return false;
    }
    return true;
}

} // namespace

GaussSum gauss_sum(long long p, int n, long long a) {
    u64 pn = validated_prime_power(p, n);
    u64 pn1 = pn / (u64)p;
    long long am_ll = ((a % (long long)pn) + (long long)pn) % (long long)pn;
    if (am_ll % p == 0) throw PreconditionViolation("coefficient must be coprime to the prime");
    u64 am = (u64)am_ll;

    std::vector<int> cnt(pn, 0);
    for (u64 k = 1; k <= pn; ++k) cnt[mulmod(am, powmod(k % pn, (u64)n, pn), pn)]++;

    GaussSum g;
    g.expected = (long long)pn1;
    g.exact = residue_structure_ok(cnt, p, pn1);
    dd sre{0.0, 0.0}, sim{0.0, 0.0};
    for (u64 r = 0; r < pn; ++r) {
        if (!cnt[r]) continue;
        dd fr = dd_div(dd{(double)r, 0.0}, dd{(double)pn, 0.0});
        double c, s;
        unit_from_frac(fr, c, s);
        sre = dd_add(sre, dd_mul(dd{c, 0.0}, (double)cnt[r]));
        sim = dd_add(sim, dd_mul(dd{s, 0.0}, (double)cnt[r]));
    }
    g.re = sre.to_double();
    g.im = sim.to_double();
    return g;
}

GaussExactReport gauss_sum_exact_all(long long p, int n) {
    u64 pn = validated_prime_power(p, n);
    u64 pn1 = pn / (u64)p;

    std::vector<int> cnt1(pn, 0);
    for (u64 k = 1; k <= pn; ++k) cnt1[powmod(k % pn, (u64)n, pn)]++;
    const int* c1 = cnt1.data();

    GaussExactReport rep;
    rep.p = p;
    rep.n = n;
    rep.all_exact = true;
    // The histogram for coefficient a is cnt1 composed with r -> a^{-1} r, so
    // one pass per a over index progressions suffices; no re-enumeration.
    for (u64 a = 1; a < pn; ++a) {
        if (a % (u64)p == 0) continue;
        u64 ainv = (u64)inv_mod((long long)a, (long long)pn);
        u64 st = mulmod(ainv, pn1, pn);
        bool ok = true;
        {
            u64 idx = st;
            int c = c1[idx];
            for (long long v = 2; v < p; ++v) {
                idx += st;
                if (idx >= pn) idx -= pn;
                if (c1[idx] != c) { ok = false; break; }
            }
            if (ok && c1[0] - c != (long long)pn1) ok = false;
        }
        u64 base = 0;
        for (u64 u = 1; ok && u < pn1; ++u) {
            base += ainv;
            if (base >= pn) base -= pn;
            u64 idx = base;
            int c0 = c1[idx];
            for (long long v = 1; v < p; ++v) {
                idx += st;
                if (idx >= pn) idx -= pn;
                if (c1[idx] != c0) { ok = false; break; }
            }
        }
        ++rep.a_checked;
        if (!ok) {
            rep.all_exact = false;
            break;
        }
    }
    return rep;
}

// ---- geometric kernel ------------------------------------------------------

KernelBoundReport kernel_bound_check(u64 l, const PrecisionReal& t) {
    if (l == 0) throw PreconditionViolation("kernel length must be positive");
    KernelBoundReport rep;

    PolynomialQ lin = PolynomialQ::monomial(Rat(1), 1);
    rep.lhs = weyl_sum(lin, t, l, WeylMode::Fast).abs();

    double dist = 0.0;
    if (t.pi_rational) {
        Rat fq = t.pi_rational->frac();
        rep.exact_limit = fq.is_zero();
        Rat alt = Rat(1) - fq;
        dist = (fq < alt ? fq : alt).to_double();
    } else {
        long w = std::max<long>(t.value.precision(), 128) + 32;
        PrecisionReal y(BigFloat::div(t.value, BigFloat::two_pi(w), w), t.err / 6.28 + 1e-30);
        PrecisionReal d = dist_to_int(y);
        dist = d.to_double();
        rep.exact_limit = (dist == 0.0);
    }

    if (rep.exact_limit) {
        rep.closed_form = (double)l;
    } else {
        // |sin(l t / 2)| / |sin(t / 2)| with both arguments reduced mod 2*pi
        long w = std::max<long>(t.value.precision(), 128) + 64;
        PrecisionReal half(BigFloat(w), t.err / 2);
        mpfr_div_2ui(half.value.raw(), t.value.raw(), 1, MPFR_RNDN);
        PrecisionReal lt_half(BigFloat::mul(half.value, BigFloat((long long)l, 64), w),
                              t.err * (double)l / 2);
        if (t.pi_rational) {
            try {
                half.pi_rational = *t.pi_rational / Rat(2);
                lt_half.pi_rational = *t.pi_rational * Rat((long long)l, 2);
            } catch (const PreconditionViolation&) {
                half.pi_rational.reset();
                lt_half.pi_rational.reset();
            }
        }
        BigFloat den = BigFloat::sin(reduce_mod_2pi(half).value, 128);
        BigFloat num = BigFloat::sin(reduce_mod_2pi(lt_half).value, 128);
        rep.closed_form = std::fabs(num.to_double()) / std::fabs(den.to_double());
    }

    rep.rhs = rep.exact_limit || dist == 0.0
                  ? (double)l
                  : std::min((double)l, 1.0 / (2.0 * dist));
    rep.identity_residual = std::fabs(rep.lhs - rep.closed_form) / (double)l;
    rep.holds = rep.identity_residual <= 1e-9 && rep.lhs <= rep.rhs * (1.0 + 1e-12) + 1e-9;
    return rep;
}

// ---- minimum-capped reciprocal sum over product tuples ----------------------

RecipSumReport min_recip_sum(const PrecisionReal& y, u64 m, int n) {
    if (n < 2) throw PreconditionViolation("tuple dimension needs n >= 2");
    if (m < 1) throw PreconditionViolation("range needs m >= 1");
    int dims = n - 1;
    double space = std::pow((double)m, (double)dims);
    if (space > 1e8)
        throw TupleSpaceTooLarge("m^(n-1) = " + std::to_string(space) + " exceeds 1e8");

    dd yd = to_dd(y.value);
    double md = (double)m;
    double sum = 0.0, comp = 0.0;
    u64 capped = 0, tuples = 0;
    std::vector<u64> digit((std::size_t)dims, 1);
    while (true) {
        u64 K = 1;
        for (int i = 0; i < dims; ++i) K *= digit[(std::size_t)i];
        double dist = dd_dist_to_int(dd_mul(yd, (double)K));
        double term;
        if (2.0 * dist * md <= 1.0) {
            term = md;
            ++capped;
        } else {
            term = 1.0 / (2.0 * dist);
        }
        double tt = term - comp;
        double uu = sum + tt;
        comp = (uu - sum) - tt;
        sum = uu;
        ++tuples;
        int i = dims - 1;
        while (i >= 0 && digit[(std::size_t)i] == m) {
            digit[(std::size_t)i] = 1;
            --i;
        }
        if (i < 0) break;
        ++digit[(std::size_t)i];
    }
    RecipSumReport rep;
    rep.value = sum;
    rep.tuples = tuples;
    rep.capped = capped;
    return rep;
}

// ---- squared-out sum inequality ---------------------------------------------

MasterInequalityReport master_inequality_check(const PolynomialQ& f, const PrecisionReal& x,
                                               u64 m) {
    int n = f.degree();
    if (n < 2) throw PreconditionViolation("inequality needs degree >= 2");
    if (n > 20) throw PreconditionViolation("degree too large");

    WeylSum s = weyl_sum(f, x, m, WeylMode::Direct);

    long long fact = 1;
    for (int j = 2; j <= n; ++j) fact *= j;

    PrecisionReal y;
    if (x.pi_rational) {
        Rat yr = (*x.pi_rational) * f.leading() * Rat(fact);
        y = PrecisionReal::from_rational(yr);
    } else {
        long w = std::max<long>(x.value.precision(), 192);
        BigFloat num = BigFloat::mul(
            x.value, BigFloat::mul(BigFloat(fact, 64), BigFloat(f.leading().num, 64), w), w);
        BigFloat den = BigFloat::mul(BigFloat::two_pi(w), BigFloat(f.leading().den, 64), w);
        y.value = BigFloat::div(num, den, w);
        y.err = x.err * std::fabs((double)fact * f.leading().to_double()) / 6.28 +
                std::ldexp(std::fabs(y.value.to_double()) + 1.0, (int)-(w - 8));
    }

    RecipSumReport R = min_recip_sum(y, m, n);

    double E = std::ldexp(1.0, n - 1);
    MasterInequalityReport rep;
    rep.sum_abs = s.abs();
    rep.y = y.to_double();
    rep.tuples = R.tuples;
    rep.lhs = std::pow(rep.sum_abs, E);
    rep.rhs = std::pow(2.0, E) * std::pow((double)m, E - 1.0) * (double)(n - 1) +
              std::pow(2.0, E + 1.0) * std::pow((double)m, E - (double)n) * R.value;
    rep.holds = rep.lhs <= rep.rhs * (1.0 + 1e-9) + 1e-6;
    return rep;
}

} // namespace sinesum
