#include "sinesum/diophantine.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <cmath>
#include <numeric>

#include "sinesum/bigfloat.hpp"

namespace sinesum {

namespace {

// One digit block of a continued-fraction expansion: the digit `a` together
// with the convergent state (p,q at indices i-2 and i-1) before consuming
// it.  Semiconvergents of the block are (p_prev + t*p_cur, q_prev + t*q_cur)
// for t = 1..a; t = a is the full convergent.  `partial` marks a block whose
// digit was clipped so denominators stay under the cap.
struct CFBlock {
    long long a = 0;
    long long p_prev = 0, q_prev = 1; // convergent index i-2
    long long p_cur = 1, q_cur = 0;   // convergent index i-1
    bool partial = false;
};

// Exact continued-fraction digits of y, held as the exact dyadic rational of
// its mantissa, with all emitted denominators kept <= cap.  When y carries a
// positive error bound, expansion stops with PrecisionExhausted as soon as
// the next digit is no longer pinned down by that bound.
class CFEngine {
  public:
    CFEngine(const PrecisionReal& y, long long cap) : err_(y.err), cap_(cap) {
        if (cap_ < 1 || cap_ > (1LL << 40))
            throw PreconditionViolation("denominator cap out of range");
        mpz_inits(num_, den_, a_, r_, nullptr);
        mpfr_exp_t e = mpfr_get_z_2exp(num_, y.value.raw());
        mpz_set_ui(den_, 1);
        if (e >= 0)
            mpz_mul_2exp(num_, num_, (mp_bitcnt_t)e);
        else
            mpz_mul_2exp(den_, den_, (mp_bitcnt_t)(-e));
    }
    ~CFEngine() { mpz_clears(num_, den_, a_, r_, nullptr); }
    CFEngine(const CFEngine&) = delete;
    CFEngine& operator=(const CFEngine&) = delete;

    // Produces the next digit block; false when the expansion is finished
    // (rational value exhausted, or the cap admits no further step).
    bool next(CFBlock& out) {
        if (done_) return false;
        if (mpz_sgn(den_) == 0) {
            done_ = true;
            return false;
        }
        out = CFBlock{};
        out.p_prev = p_prev_;
        out.q_prev = q_prev_;
        out.p_cur = p_cur_;
        out.q_cur = q_cur_;
        mpz_fdiv_qr(a_, r_, num_, den_);
        const bool first = first_;
        first_ = false;
        const long long t_cap =
            (q_cur_ == 0) ? (1LL << 60) : (cap_ - q_prev_) / q_cur_;
        if (t_cap <= 0 && !first) {
            done_ = true;
            return false;
        }
        if (!mpz_fits_slong_p(a_)) {
            if (first) throw PreconditionViolation("value magnitude too large");
            out.a = t_cap;
            out.partial = true;
            done_ = true;
            return out.a >= 1;
        }
        const long long a = mpz_get_si(a_);
        if (!first && a < 1)
            throw PreconditionViolation("non-positive continued fraction digit");
        if (!first && a > t_cap) {
            out.a = t_cap;
            out.partial = true;
            done_ = true;
            return out.a >= 1;
        }
        const long long q_next = a * q_cur_ + q_prev_;
        if (err_ > 0.0 && 4.0 * err_ * (double)q_next * (double)q_next >= 1.0) {
            done_ = true;
            throw PrecisionExhausted("continued fraction digit not determined within error bound");
        }
        out.a = a;
        advance_state(a);
        mpz_swap(num_, den_); // remainder becomes 1/(z - a): expand den/r next
        mpz_swap(den_, r_);
        return true;
    }

  private:
    void advance_state(long long a) {
        const __int128 p_next = (__int128)a * p_cur_ + p_prev_;
        const __int128 q_next = (__int128)a * q_cur_ + q_prev_;
        if (p_next > ((__int128)1 << 62) || p_next < -((__int128)1 << 62) ||
            q_next > ((__int128)1 << 62))
            throw PreconditionViolation("convergent overflow");
        p_prev_ = p_cur_;
        q_prev_ = q_cur_;
        p_cur_ = (long long)p_next;
        q_cur_ = (long long)q_next;
    }

    mpz_t num_, den_, a_, r_;
    double err_;
    long long cap_;
    long long p_prev_ = 0, q_prev_ = 1; // index -2
    long long p_cur_ = 1, q_cur_ = 0;   // index -1
    bool first_ = true;
    bool done_ = false;
};

// |y - C/M|, evaluated at generous precision.
double dist_to_fraction(const PrecisionReal& y, long long C, long long M) {
    const mpfr_prec_t w = std::max<mpfr_prec_t>(y.value.precision() + 64, 192);
    BigFloat t(0.0, w);
    mpfr_mul_si(t.raw(), y.value.raw(), M, MPFR_RNDN);
    mpfr_sub_si(t.raw(), t.raw(), C, MPFR_RNDN);
    mpfr_abs(t.raw(), t.raw(), MPFR_RNDN);
    mpfr_div_si(t.raw(), t.raw(), M, MPFR_RNDN);
    return mpfr_get_d(t.raw(), MPFR_RNDN);
}

// signed y - C/M
double beta_of(const PrecisionReal& y, long long C, long long M) {
    const mpfr_prec_t w = std::max<mpfr_prec_t>(y.value.precision() + 64, 192);
    BigFloat t(0.0, w);
    mpfr_mul_si(t.raw(), y.value.raw(), M, MPFR_RNDN);
    mpfr_sub_si(t.raw(), t.raw(), C, MPFR_RNDN);
    mpfr_div_si(t.raw(), t.raw(), M, MPFR_RNDN);
    return mpfr_get_d(t.raw(), MPFR_RNDN);
}

} // namespace

const char* index_verdict_name(IndexVerdict v) {
    switch (v) {
        case IndexVerdict::Inconvenient: return "inconvenient";
        case IndexVerdict::AlmostConvenient: return "almost_convenient";
        case IndexVerdict::Convenient: return "convenient";
    }
    return "convenient";
}

std::vector<RationalApproximation> convergents(const PrecisionReal& y, long long Qmax) {
    if (Qmax < 1) throw PreconditionViolation("convergents needs Qmax >= 1");
    std::vector<RationalApproximation> out;
    CFEngine eng(y, Qmax);
    CFBlock blk;
    while (eng.next(blk)) {
        if (blk.partial) break; // the full convergent would exceed Qmax
        const long long P = blk.a * blk.p_cur + blk.p_prev;
        const long long Q = blk.a * blk.q_cur + blk.q_prev;
        if (Q > Qmax) break;
        RationalApproximation r;
        r.C = P;
        r.M = Q;
        r.beta = beta_of(y, P, Q);
        r.source = RationalApproximation::Source::Convergent;
        out.push_back(r);
    }
    return out;
}

std::optional<RationalApproximation>
best_approx_below(const PrecisionReal& y, long long Mcap, double tol) {
    if (Mcap < 1) throw PreconditionViolation("best_approx_below needs Mcap >= 1");
    if (!(tol >= 0.0)) throw PreconditionViolation("best_approx_below needs tol >= 0");
    const double guard = y.err;

    // M = 1 first: the nearest integer.
    {
        const double yd = y.to_double();
        const long long C = (long long)std::floor(yd + 0.5);
        const double d = dist_to_fraction(y, C, 1);
        if (guard > 0.0 && std::fabs(d - tol) <= guard)
            throw PrecisionExhausted("tolerance decision inside error bound");
        if (d <= tol) {
            RationalApproximation r;
            r.C = C;
            r.M = 1;
            r.beta = beta_of(y, C, 1);
            return r;
        }
    }

    // Denominators >= 2 in increasing order: walk digit blocks; within a
    // block, distances strictly decrease as t grows, so test the farthest
    // admissible step and binary-search the smallest qualifying t.  Every
    // candidate minimizer is a best approximation, hence a semiconvergent,
    // so this scan is exhaustive over all denominators <= Mcap.
    CFEngine eng(y, Mcap);
    CFBlock blk;
    while (eng.next(blk)) {
        const long long t_hi = blk.a;
        if (t_hi < 1) continue; // leading digit 0 (y below 1): no steps here
        auto den_at = [&](long long t) { return blk.q_prev + t * blk.q_cur; };
        auto num_at = [&](long long t) { return blk.p_prev + t * blk.p_cur; };
        auto dist_at = [&](long long t) { return dist_to_fraction(y, num_at(t), den_at(t)); };
        const double d_best = dist_at(t_hi);
        if (guard > 0.0 && std::fabs(d_best - tol) <= guard)
            throw PrecisionExhausted("tolerance decision inside error bound");
        if (d_best > tol) continue;
        long long lo = 1, hi = t_hi;
        while (lo < hi) {
            const long long mid = lo + (hi - lo) / 2;
            const double dm = dist_at(mid);
            if (guard > 0.0 && std::fabs(dm - tol) <= guard)
                throw PrecisionExhausted("tolerance decision inside error bound");
            if (dm <= tol)
                hi = mid;
            else
                lo = mid + 1;
        }
        if (den_at(lo) < 2) continue; // M = 1 already handled
        RationalApproximation r;
        r.C = num_at(lo);
        r.M = den_at(lo);
        r.beta = beta_of(y, r.C, r.M);
        r.source = (lo == blk.a && !blk.partial)
                       ? RationalApproximation::Source::Convergent
                       : RationalApproximation::Source::Semiconvergent;
        return r;
    }
    return std::nullopt;
}

long long floor_power(long long m, double eps) {
    if (m < 1 || !(eps > 0.0) || !(eps < 1.0))
        throw PreconditionViolation("floor_power needs m >= 1, eps in (0,1)");
    const double inv = 1.0 / eps;
    const long long r = (long long)std::llround(inv);
    auto ipow_le = [](long long base, long long e, long long limit) {
        if (base < 1) return true;
        __int128 acc = 1;
        for (long long i = 0; i < e; ++i) {
            acc *= base;
            if (acc > limit) return false;
        }
        return true;
    };
    if (r >= 2 && std::fabs(inv - (double)r) < 1e-9) {
        long long M = (long long)std::floor(std::pow((double)m, eps) + 0.5);
        if (M < 1) M = 1;
        while (M > 1 && !ipow_le(M, r, m)) --M;
        while (ipow_le(M + 1, r, m)) ++M;
        return M;
    }
    return std::max<long long>(
        1, (long long)std::floor(std::pow((double)m, eps) * (1.0 + 1e-13)));
}

IndexClass classify_index(long long m, const PrecisionReal& y, double eps, int n) {
    if (m < 9) throw PreconditionViolation("classify_index needs m >= 9");
    if (!(eps > 0.0 && eps < 1.0 / 6.0))
        throw PreconditionViolation("classify_index needs eps in (0, 1/6)");
    if (n < 3) throw PreconditionViolation("classify_index needs n >= 3");
    IndexClass ic;
    ic.m = m;
    ic.Mcap = floor_power(m, eps);
    ic.tolA = std::pow((double)m, eps - (double)n);
    ic.tolB = std::pow((double)m, eps - 1.0);
    if (auto w = best_approx_below(y, ic.Mcap, ic.tolA)) {
        ic.verdict = IndexVerdict::Inconvenient;
        ic.witness = *w;
        return ic;
    }
    if (auto w = best_approx_below(y, ic.Mcap, ic.tolB)) {
        ic.verdict = IndexVerdict::AlmostConvenient;
        ic.witness = *w;
        return ic;
    }
    ic.verdict = IndexVerdict::Convenient;
    return ic;
}

std::vector<RationalApproximation>
approx_spectrum(const PrecisionReal& y, double eps, long long Mmax) {
    if (!(eps > 0.0 && eps < 1.0 / 6.0))
        throw PreconditionViolation("approx_spectrum needs eps in (0, 1/6)");
    if (Mmax < 1) throw PreconditionViolation("approx_spectrum needs Mmax >= 1");
    std::vector<RationalApproximation> out;

    // M = 1 always belongs: |y - round(y)| <= 1/2 <= 1 = threshold at M = 1.
    {
        RationalApproximation r;
        const double yd = y.to_double();
        r.C = (long long)std::floor(yd + 0.5);
        r.M = 1;
        r.beta = beta_of(y, r.C, 1);
        out.push_back(r);
    }
    if (Mmax == 1) return out;

    // For M >= 2 the threshold M^((eps-1)/eps) is below 1/(2M^2), so any
    // further member must be a convergent denominator.
    const double expo = (eps - 1.0) / eps;
    for (const auto& c : convergents(y, Mmax)) {
        if (c.M < 2) continue;
        const double thr = std::pow((double)c.M, expo);
        if (std::fabs(c.beta) <= thr) out.push_back(c);
    }
    return out;
}

} // namespace sinesum
