#include "sinesum/blocks.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "sinesum/bigfloat.hpp"
#include "sinesum/errors.hpp"

namespace sinesum {
namespace {

constexpr long W = 192; // working precision for phase arithmetic

BigFloat bsub(const BigFloat& a, const BigFloat& b) { return BigFloat::sub(a, b, W); }
BigFloat badd(const BigFloat& a, const BigFloat& b) { return BigFloat::add(a, b, W); }
BigFloat bmul(const BigFloat& a, const BigFloat& b) { return BigFloat::mul(a, b, W); }
BigFloat bdiv(const BigFloat& a, const BigFloat& b) { return BigFloat::div(a, b, W); }

BigFloat kpow(long long k, const BigFloat& e) {
    if (k == 0) return BigFloat(0.0, W);
    return BigFloat::pow(BigFloat(k, W), e, W);
}

BigFloat mod_two_pi(const BigFloat& v) {
    BigFloat tp = BigFloat::two_pi(W);
    BigFloat q = BigFloat::floor(bdiv(v, tp), W);
    return bsub(v, bmul(q, tp));
}

// first/second differences of k -> k^alpha * x, carried at full precision
struct DiffCtx {
    BigFloat a;  // alpha
    BigFloat xv; // x
    BigFloat d1(long long k) const { return bmul(bsub(kpow(k, a), kpow(k - 1, a)), xv); }
    BigFloat d1t(long long k) const { return mod_two_pi(d1(k)); }
    BigFloat d2(long long k) const { return bsub(d1(k), d1(k - 1)); }
};

// ceil for a BigFloat known to be far from integers at working precision
long long bceil_ll(const BigFloat& v) {
    BigFloat f = BigFloat::floor(v, W);
    long long r = f.to_ll();
    return bsub(v, f).is_zero() ? r : r + 1;
}

long long floor_guarded(const BigFloat& v, double rel_slack) {
    BigFloat f = BigFloat::floor(v, W);
    BigFloat fr = bsub(v, f);
    double d = fr.to_double();
    double slack = (std::fabs(v.to_double()) + 1.0) * rel_slack + 1e-30;
    if (!fr.is_zero() && (d < slack || d > 1.0 - slack))
        throw AmbiguousNearInteger("window boundary is too close to an integer");
    return f.to_ll();
}

double sin_arg(unsigned long long k, double alpha, const PrecisionReal& x) {
    return std::sin(arg_power(k, alpha, x).to_double());
}

SineFloorReport floor_check_impl(const std::vector<double>& y,
                                 const std::vector<double>* w) {
    if (y.empty()) throw PreconditionViolation("empty angle list");
    if (w) {
        if (w->size() != y.size())
            throw PreconditionViolation("weights must match the angle list");
        for (std::size_t i = 0; i < w->size(); ++i) {
            if (!((*w)[i] > 0.0)) throw PreconditionViolation("weights must be positive");
            if (i > 0 && (*w)[i] > (*w)[i - 1] + 1e-15)
                throw PreconditionViolation("weights must be nonincreasing");
        }
    }
    if (!(y[0] > 0.0)) throw HypothesisViolation("angles must start positive");
    double prev_gap = y[0];
    for (std::size_t i = 1; i < y.size(); ++i) {
        double gap = y[i] - y[i - 1];
        if (gap < prev_gap - 1e-15) throw HypothesisViolation("gaps must be nondecreasing");
        prev_gap = gap;
    }
    if (y.back() > 2.0 * M_PI + 1e-12)
        throw HypothesisViolation("last angle exceeds one full period");

    SineFloorReport rep;
    long long k = (long long)y.size();
    long long q = 0;
    while (q < k && y[(std::size_t)q] <= M_PI) ++q; // q = count of angles <= pi
    rep.q = q;
    if (q < k) {
        double below = q == 0 ? 0.0 : y[(std::size_t)q - 1];
        rep.a = y[(std::size_t)q] - below;
        if (!(rep.a < M_PI))
            throw HypothesisViolation("gap at the pi crossing must stay below pi");
        double scale = w ? (*w)[(std::size_t)q] : 1.0;
        rep.floor = -scale * std::sin(rep.a / 2.0);
    } // otherwise every angle is in (0, pi]: the sum is nonnegative, floor 0

    double sum = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i)
        sum += (w ? (*w)[i] : 1.0) * std::sin(y[i]);
    rep.sum = sum;
    rep.holds = sum >= rep.floor - 1e-12;
    return rep;
}

} // namespace

DiffProfile diff_profile(double alpha, const PrecisionReal& x, long long k_lo,
                         long long k_hi) {
    if (!(alpha > 1.0 && alpha < 2.0))
        throw PreconditionViolation("frequency exponent must lie strictly between 1 and 2");
    if (k_lo < 1 || k_hi < k_lo) throw PreconditionViolation("need 1 <= k_lo <= k_hi");
    if (!(x.to_double() > 0.0)) throw PreconditionViolation("x must be positive");

    DiffCtx ctx{BigFloat(alpha, 64), x.value};
    DiffProfile rep;
    rep.k_lo = k_lo;
    rep.k_hi = k_hi;
    std::size_t n = (std::size_t)(k_hi - k_lo + 1);
    std::vector<BigFloat> d1b, d2b;
    for (long long k = k_lo; k <= k_hi; ++k) d1b.push_back(ctx.d1(k));
    for (std::size_t i = 0; i < n; ++i) {
        long long k = k_lo + (long long)i;
        if (i == 0)
            d2b.push_back(k >= 2 ? ctx.d2(k) : BigFloat(0.0, W)); // k = 1 has no d2
        else
            d2b.push_back(bsub(d1b[i], d1b[i - 1]));
        rep.d1.push_back(d1b[i].to_double());
        rep.d2.push_back(d2b[i].to_double());
    }

    std::size_t first = k_lo >= 2 ? 0 : 1; // first index with a meaningful d2
    rep.d2_positive = true;
    rep.d2_decreasing = true;
    rep.bracket_holds = true;
    BigFloat lo_c = BigFloat(alpha * (alpha - 1.0) / 2.0, 64);
    BigFloat hi_c = BigFloat(2.0 * alpha * (alpha - 1.0), 64);
    BigFloat am2 = BigFloat(alpha - 2.0, 64);
    for (std::size_t i = first; i < n; ++i) {
        long long k = k_lo + (long long)i;
        if (d2b[i].sign() <= 0) rep.d2_positive = false;
        if (i > first && d2b[i].cmp(d2b[i - 1]) >= 0) rep.d2_decreasing = false;
        if (k >= 3) {
            BigFloat lo = bmul(bmul(lo_c, x.value), kpow(k + 1, am2));
            BigFloat hi = bmul(bmul(hi_c, x.value), kpow(k - 2, am2));
            if (lo.cmp(d2b[i]) > 0 || d2b[i].cmp(hi) > 0) rep.bracket_holds = false;
        }
    }
    return rep;
}

BlockPartition block_partition(double alpha, const PrecisionReal& x, long long m,
                               double delta) {
    if (!(alpha > 1.0 && alpha < 2.0))
        throw PreconditionViolation("frequency exponent must lie strictly between 1 and 2");
    if (!(delta > 0.0 && delta < 2.0 - alpha))
        throw PreconditionViolation("band exponent must lie in (0, 2 - alpha)");
    double xd = x.to_double();
    if (!(xd > 0.0)) throw PreconditionViolation("x must be positive");
    if (m < 4) throw BaseTooSmall("base index below the smallest usable value");
    double tol_d = 2.0 * alpha * (alpha - 1.0) * xd * std::pow((double)m, alpha - 2.0);
    if (!(tol_d < M_PI))
        throw BaseTooSmall("second-difference window spans a half period");

    DiffCtx ctx{BigFloat(alpha, 64), x.value};
    BlockPartition rep;
    rep.m = m;
    rep.delta = delta;
    BigFloat band_b = BigFloat::pow(BigFloat(m, W), BigFloat(-delta, 64), W);
    rep.band = band_b.to_double();
    BigFloat tol_b(tol_d, 64);
    rep.p_tol = tol_d;

    // least p > 1 with d1_{m+p} within tol of d1_{m+1} + 2*pi
    BigFloat target = badd(ctx.d1(m + 1), BigFloat::two_pi(W));
    long long p = 2;
    while (BigFloat::abs(bsub(ctx.d1(m + p), target), W).cmp(tol_b) > 0) {
        if (++p > 10000000) throw PreconditionViolation("period window exceeds the enumeration cap");
    }
    rep.p = p;
    rep.p_lower_ok =
        (double)p >= -1.0 + 2.0 * M_PI / (2.0 * alpha * (alpha - 1.0) * xd) *
                                std::pow((double)m, 2.0 - alpha);
    rep.p_simple_ok = (double)p >= std::pow((double)m, 2.0 - alpha) / xd;

    // classify k in [m, m+p] by the fractional position of d1~_{k+1}
    BigFloat two_pi_b = BigFloat::two_pi(W);
    BigFloat hi_edge = bsub(two_pi_b, band_b);
    std::vector<BigFloat> vals; // d1~_{k+1} for K1 members, aligned with K1
    std::vector<bool> high;
    for (long long k = m; k <= m + p; ++k) {
        BigFloat wv = ctx.d1t(k + 1);
        bool low_side = wv.cmp(band_b) <= 0;
        bool high_side = wv.cmp(hi_edge) >= 0;
        if (low_side || high_side) {
            rep.K1.push_back(k);
            vals.push_back(wv);
            high.push_back(!low_side);
        } else {
            rep.K2.push_back(k);
        }
    }

    // maximal runs: consecutive indices, constant side, nondecreasing values
    std::size_t i = 0;
    while (i < rep.K1.size()) {
        std::size_t j = i;
        while (j + 1 < rep.K1.size() && rep.K1[j + 1] == rep.K1[j] + 1 &&
               high[j + 1] == high[i] && vals[j + 1].cmp(vals[j]) >= 0)
            ++j;
        BlockRun run;
        run.s = rep.K1[i];
        run.v = (long long)(j - i + 1);
        run.high_side = high[i];

        // phase trajectory from s^alpha*x by the band-reduced steps
        std::vector<BigFloat> ph;
        ph.push_back(bmul(kpow(run.s, ctx.a), x.value));
        for (std::size_t t = i; t <= j; ++t)
            ph.push_back(run.high_side ? badd(ph.back(), bsub(vals[t], two_pi_b))
                                       : badd(ph.back(), vals[t]));

        BigFloat pi_b = BigFloat::pi(W);
        run.u = BigFloat::floor(bdiv(ph[0], pi_b), W).to_ll();
        run.u_even = run.u % 2 == 0;
        long long sgn = run.high_side ? -1 : 1;
        for (int step = 0; step < 200; ++step) {
            long long uu = run.u + sgn * step;
            BigFloat lo_b = bmul(BigFloat(uu, W), pi_b);
            BigFloat up_b = bmul(BigFloat(uu + 1, W), pi_b);
            long long last = -1;
            for (std::size_t t = 0; t < ph.size(); ++t)
                if (ph[t].cmp(lo_b) >= 0 && ph[t].cmp(up_b) < 0) last = (long long)t;
            if (last < 0) break;
            run.t.push_back(last);
        }
        // crossings beyond the first, rounded up to even
        const BigFloat& last_ph = ph.back();
        while (true) {
            long long edge = run.high_side ? run.u - run.R - 1 : run.u + run.R + 2;
            BigFloat eb = bmul(BigFloat(edge, W), pi_b);
            bool inside = run.high_side ? last_ph.cmp(eb) > 0 : last_ph.cmp(eb) < 0;
            if (inside) break;
            run.R += 2;
            if (run.R > 1000000) throw PreconditionViolation("crossing count exceeds the cap");
        }
        run.travel = std::fabs(bsub(last_ph, ph[0]).to_double());

        long long t0 = run.t.empty() ? 0 : run.t[0];
        BigFloat pokr(0.0, W);
        for (long long ii = 2; ii <= t0; ++ii)
            pokr = badd(pokr, bmul(BigFloat(t0 + 1 - ii, W), ctx.d2(run.s + ii)));
        run.coverage_ok = pokr.cmp(pi_b) <= 0;
        double est = 27.0 / (alpha - 1.0) * std::pow((double)run.s, 1.0 - alpha / 2.0) /
                     std::sqrt(xd);
        run.t0_bound_ok = (double)t0 < est;
        run.t1_bound_ok = run.t.size() < 2 || (double)run.t[1] < 2.0 * est;
        run.v_band_ok =
            bsub(ctx.d1(run.s + run.v), ctx.d1(run.s + 1)).cmp(band_b) <= 0;
        run.v_bound_ok = (double)run.v <= rep.band / ((alpha - 1.0) * xd) *
                                                  std::pow((double)(run.s + 1), 2.0 - alpha) +
                                              2.0;
        run.r_bound_ok =
            run.R == 0 ||
            (double)run.R <= ctx.d2(run.s + 2).to_double() * (double)run.v / (2.0 * M_PI);

        rep.runs.push_back(std::move(run));
        i = j + 1;
    }
    rep.runs_at_most_3 = rep.runs.size() <= 3;
    return rep;
}

ChainReport index_chain(double alpha, const PrecisionReal& x, long long m0,
                        double delta, int steps) {
    if (steps < 1) throw PreconditionViolation("need at least one chain step");
    ChainReport rep;
    rep.m_seq.push_back(m0);
    rep.w_seq.push_back((double)m0);
    rep.z_seq.push_back((double)m0);
    rep.growth_ok = true;
    rep.F_m0 = 1.0 / std::log((double)m0);
    double xd = x.to_double();

    for (int s = 0; s < steps; ++s) {
        long long mi = rep.m_seq.back();
        BlockPartition part = block_partition(alpha, x, mi, delta);
        if (part.K2.empty())
            throw PreconditionViolation("no convenient index in the window");
        long long mprime = part.K2.front(); // first k >= mi outside the band
        long long Q = (long long)std::ceil(std::pow((double)mi, (2.0 - alpha) / 3.0));
        long long Qp = Q;
        while (!std::binary_search(part.K2.begin(), part.K2.end(), mprime + Qp)) {
            if (mprime + ++Qp > mi + part.p)
                throw PreconditionViolation("chain step left the partition window");
        }
        long long next = mprime + Qp;
        if ((double)next < (double)mi + std::pow((double)mi, (2.0 - alpha) / 3.0) - 1e-9)
            rep.growth_ok = false;
        rep.m_seq.push_back(next);
        double w = rep.w_seq.back(), z = rep.z_seq.back();
        rep.w_seq.push_back(w + std::pow(w, 2.0 - alpha) / xd);
        rep.z_seq.push_back(z + std::pow(z, (2.0 - alpha) / 3.0));
    }
    return rep;
}

SineFloorReport sine_sum_floor_check(const std::vector<double>& y) {
    return floor_check_impl(y, nullptr);
}

SineFloorReport sine_sum_floor_check_weighted(const std::vector<double>& y,
                                              const std::vector<double>& w) {
    return floor_check_impl(y, &w);
}

long long pairing_threshold(double alpha, double x) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw PreconditionViolation("frequency exponent must lie strictly between 0 and 1");
    if (!(x > 0.0)) throw PreconditionViolation("x must be positive");
    double inv = 1.0 / alpha;
    double t1 = std::pow(12.0 * alpha / std::pow(M_PI / x, inv), 1.0 / (inv - 1.0));
    double t2 = 1.0 / (std::pow(4.0 / 3.0, 1.0 / (inv - 1.0)) - 1.0);
    double t3 = 3.0 / (2.0 * alpha * (1.0 - std::pow(4.0 / 3.0, 1.0 / (alpha - 1.0))));
    double t4 = inv <= 2.0 ? 0.0 : 1.5 / (std::pow(2.0, 1.0 / (inv - 2.0)) - 1.0);
    double d = std::max({3.0, t1, t2, t3, t4});
    if (!(d < 9.0e18)) throw PreconditionViolation("admissibility threshold overflows");
    long long di = (long long)std::floor(d);
    if (di % 2 == 0) di += 1;
    if ((double)di < d) di += 2;
    di = std::max(di, 3LL);

    auto ok = [&](long long dd) {
        double b3 = 1.0 - (3.0 / (2.0 * alpha)) / (double)dd;
        return std::pow(M_PI / x, inv) * std::pow((double)dd, inv - 1.0) >= 12.0 * alpha &&
               std::pow(1.0 + 1.0 / (double)dd, inv - 1.0) <= 4.0 / 3.0 && b3 > 0.0 &&
               std::pow(b3, alpha - 1.0) <= 4.0 / 3.0 &&
               std::pow(1.0 + 3.0 / (2.0 * (double)dd), inv - 2.0) <= 2.0;
    };
    int guard = 0;
    while (!ok(di)) {
        di += 2;
        if (++guard > 10000) throw PreconditionViolation("threshold scan did not converge");
    }
    while (di > 3 && ok(di - 2)) {
        di -= 2;
        if (++guard > 10000) throw PreconditionViolation("threshold scan did not converge");
    }
    return di;
}

PairingPlan pairing_plan(double alpha, const PrecisionReal& x, long long d) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw PreconditionViolation("frequency exponent must lie strictly between 0 and 1");
    double xd = x.to_double();
    PairingPlan plan;
    plan.alpha = alpha;
    plan.x = xd;
    plan.d = d;
    plan.D = pairing_threshold(alpha, xd);
    if (d % 2 == 0) throw PreconditionViolation("block index must be odd");
    if (d < plan.D) throw PreconditionViolation("block index below the admissibility threshold");

    // window boundaries n_u = floor((pi*u/x)^(1/alpha)), u = d..d+2 by halves
    BigFloat inv_a = bdiv(BigFloat(1LL, W), BigFloat(alpha, 64));
    auto boundary = [&](long long u2) { // u = u2/2
        BigFloat arg = bdiv(bmul(BigFloat::pi(W), BigFloat(u2, W)),
                            bmul(BigFloat(2LL, W), x.value));
        BigFloat v = BigFloat::pow(arg, inv_a, W);
        double rel = (x.err / std::max(xd, 1e-300)) / alpha + 1e-25;
        return floor_guarded(v, rel);
    };
    plan.n_d = boundary(2 * d);
    plan.n_d_half = boundary(2 * d + 1);
    plan.n_d1 = boundary(2 * d + 2);
    plan.n_d1_half = boundary(2 * d + 3);
    plan.n_d2 = boundary(2 * d + 4);

    long long S1 = plan.n_d_half - plan.n_d;
    long long S2 = plan.n_d1 - plan.n_d_half;
    long long S3 = plan.n_d1_half - plan.n_d1;
    long long S4 = plan.n_d2 - plan.n_d1_half;

    bool sines_ok = true;
    // centre pairs (n_d1 - 1 - s, n_d1 + s) inside S2 union S3: sums <= 0
    plan.centre_pairs = std::min(S3, S2 - 1);
    for (long long s = 0; s < plan.centre_pairs; ++s) {
        double v = sin_arg((unsigned long long)(plan.n_d1 + s), alpha, x) +
                   sin_arg((unsigned long long)(plan.n_d1 - 1 - s), alpha, x);
        if (v > 1e-12) sines_ok = false;
    }

    // first-to-second window: partner k_s is the least k with
    // (n_d + k)^alpha >= pi*(2d+1)/x - (n_d + s)^alpha
    auto partner = [&](long long base, long long probe, double target) {
        double need = target - std::pow((double)probe, alpha);
        long long k = std::max(
            1LL, (long long)std::ceil(std::pow(std::max(need, 0.0), 1.0 / alpha) -
                                      (double)base));
        while (std::pow((double)(base + k), alpha) < need) ++k;
        while (k > 1 && std::pow((double)(base + k - 1), alpha) >= need) --k;
        return k;
    };
    std::set<long long> used;
    double target1 = M_PI * (double)(2 * d + 1) / xd;
    for (long long s = 1; s <= S1; ++s) {
        long long k = partner(plan.n_d, plan.n_d + s, target1);
        if (k < S1 + 1 || k > plan.n_d1 - plan.n_d) {
            ++plan.out_of_window;
            continue;
        }
        if (!used.insert(k).second) continue; // collision: unmatched
        ++plan.cross_12;
        if (sin_arg((unsigned long long)(plan.n_d + s), alpha, x) >
            sin_arg((unsigned long long)(plan.n_d + k), alpha, x) + 1e-12)
            sines_ok = false;
    }
    // fourth-to-third window, mirrored about pi*(2d+3)/x
    std::set<long long> used2;
    double target2 = M_PI * (double)(2 * d + 3) / xd;
    for (long long s = 1; s <= S4; ++s) {
        long long k = partner(plan.n_d1, plan.n_d1_half + s, target2);
        if (k < 1 || k > S3) {
            ++plan.out_of_window;
            continue;
        }
        if (!used2.insert(k).second) continue;
        ++plan.cross_43;
        if (sin_arg((unsigned long long)(plan.n_d1_half + s), alpha, x) >
            sin_arg((unsigned long long)(plan.n_d1 + k), alpha, x) + 1e-12)
            sines_ok = false;
    }
    plan.pair_sums_ok = sines_ok;

    plan.leftover = (S2 - plan.centre_pairs) + (S3 - plan.centre_pairs) +
                    (S1 - plan.cross_12) + (S4 - plan.cross_43);
    plan.leftover_bound = (2.0 / alpha) * (1.0 / alpha - 1.0) *
                              std::pow((double)d, 1.0 / alpha - 2.0) *
                              std::pow(M_PI / xd, 1.0 / alpha) +
                          4.0;
    plan.leftover_ok = (double)plan.leftover <= plan.leftover_bound;

    long long lo = boundary(2 * d - 4); // n_{d-2}
    plan.ratio_bound = 2.0 * (std::pow(3.0, 1.0 / alpha) - 1.0);
    plan.ratio_ok =
        (double)(plan.n_d - lo) / (double)(lo + 1) <= plan.ratio_bound;
    return plan;
}

HalfPeriodResult half_period_endpoints(double alpha, const PrecisionReal& x,
                                       long long l, long long L) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw PreconditionViolation("frequency exponent must lie strictly between 0 and 1");
    if (l < 1 || L <= l) throw PreconditionViolation("need 1 <= l < L");
    if (!(x.to_double() > 0.0)) throw PreconditionViolation("x must be positive");

    BigFloat a(alpha, 64);
    BigFloat xl = bmul(kpow(l, a), x.value);
    BigFloat xL = bmul(kpow(L, a), x.value);
    BigFloat pi_b = BigFloat::pi(W);

    if (xL.cmp(pi_b) <= 0)
        return HalfPeriodCase1{M_PI * std::pow(2.0, alpha) / alpha};
    if (xl.cmp(pi_b) < 0) return CaseNotApplicable{};

    BigFloat span = bsub(xL, xl);
    if (span.cmp(bmul(BigFloat(6LL, W), pi_b)) <= 0)
        return HalfPeriodCase2{std::pow(7.0, 1.0 / alpha)};

    HalfPeriodMain main;
    BigFloat rl = bdiv(xl, pi_b);
    BigFloat rL = bdiv(xL, pi_b);
    main.e1 = 2 * bceil_ll(bdiv(xl, BigFloat::two_pi(W)));
    long long c = bceil_ll(rl);
    main.d1 = c % 2 == 1 ? c : c + 1;
    main.e2 = 2 * (BigFloat::floor(bdiv(xL, BigFloat::two_pi(W)), W).to_ll());
    long long f = BigFloat::floor(rL, W).to_ll();
    main.d2 = f % 2 == 1 ? f : f - 1;

    auto pi_times = [&](long long n) { return bmul(BigFloat(n, W), pi_b); };
    main.brackets_ok =
        pi_times(main.e1 - 2).cmp(xl) < 0 && xl.cmp(pi_times(main.e1)) <= 0 &&
        pi_times(main.d1 - 2).cmp(xl) < 0 && xl.cmp(pi_times(main.d1)) <= 0 &&
        pi_times(main.e2).cmp(xL) <= 0 && xL.cmp(pi_times(main.e2 + 2)) < 0 &&
        pi_times(main.d2).cmp(xL) <= 0 && xL.cmp(pi_times(main.d2 + 2)) <= 0 &&
        main.e1 % 2 == 0 && main.d1 % 2 == 1 && main.e2 % 2 == 0 && main.d2 % 2 == 1;
    return main;
}

} // namespace sinesum
