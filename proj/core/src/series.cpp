#include "sinesum/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "sinesum/dd.hpp"
#include "sinesum/errors.hpp"
#include "sinesum/parallel.hpp"

namespace sinesum {
namespace {

using u64 = unsigned long long;
using i128 = __int128;

const dd& two_pi_dd() {
    static const dd v = to_dd(BigFloat::two_pi(160));
    return v;
}

// sin(2*pi*fr) for fr in [0, 1) held as a double-double.
inline double sin_two_pi_frac(dd fr) {
    dd ang = dd_mul(two_pi_dd(), fr);
    return std::sin(ang.hi) + ang.lo * std::cos(ang.hi);
}

u64 powmod_small(u64 b, int e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    for (int i = 0; i < e; ++i) r = r * b % m;
    return r;
}

} // namespace

PartialSumReport partial_sum(const CoeffSequence& seq, double alpha,
                             const PrecisionReal& x, long long l, u64 L) {
    if (l < 1 || (u64)l > L) throw PreconditionViolation("need 1 <= l <= L");
    PartialSumReport rep;
    rep.l = l;
    rep.L = L;
    rep.x = x.to_double();

    double sum = 0.0, comp = 0.0;
    rep.arg_sup = (u64)l;
    for (u64 k = (u64)l; k <= L; ++k) {
        double ck = seq.at((long long)k);
        if (ck != 0.0) {
            double s = std::sin(arg_power(k, alpha, x).to_double());
            double t = ck * s - comp;
            double u = sum + t;
            comp = (u - sum) - t;
            sum = u;
        }
        double a = std::fabs(sum);
        if (a > rep.sup_abs) {
            rep.sup_abs = a;
            rep.arg_sup = k;
        }
    }
    rep.final_sum = sum;
    TailStat ts = tail_sup(seq, l, L);
    rep.comparator = ts.value;
    rep.ratio = rep.comparator > 0.0 ? rep.sup_abs / rep.comparator : 0.0;
    return rep;
}

std::vector<double> uniform_grid(int n, const std::vector<double>& extra) {
    if (n < 1) throw PreconditionViolation("grid size must be positive");
    std::vector<double> xs;
    xs.reserve((std::size_t)n + extra.size());
    double two_pi = 2.0 * M_PI;
    for (int j = 1; j <= n; ++j) xs.push_back((double)j / (double)(n + 1) * two_pi);
    for (double e : extra) xs.push_back(e);
    return xs;
}

TailSupSweep tail_sup_sweep(const CoeffSequence& seq, double alpha,
                            const std::vector<double>& grid, long long l,
                            const std::vector<u64>& checkpoints, int threads) {
    if (grid.empty()) throw PreconditionViolation("empty abscissa grid");
    if (checkpoints.empty()) throw PreconditionViolation("no stopping checkpoints");
    if (l < 1) throw PreconditionViolation("start index must be positive");
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] < (u64)l)
            throw PreconditionViolation("checkpoint precedes the start index");
        if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
            throw PreconditionViolation("checkpoints must increase");
    }
    u64 Lmax = checkpoints.back();

    // shared per-k tables: coefficients and k^alpha as double-double
    std::vector<double> c((std::size_t)Lmax + 1, 0.0);
    for (u64 k = (u64)l; k <= Lmax; ++k) c[k] = seq.at((long long)k);
    std::vector<dd> ka((std::size_t)Lmax + 1);
    bool integer_alpha = alpha == std::floor(alpha) && alpha >= 1.0 && alpha <= 3.0;
    if (integer_alpha && std::pow((double)Lmax, alpha) < 9.0e15) {
        int e = (int)alpha;
        for (u64 k = 1; k <= Lmax; ++k) {
            double v = 1.0;
            for (int j = 0; j < e; ++j) v *= (double)k; // exact below 2^53
            ka[k] = dd{v, 0.0};
        }
    } else {
        BigFloat a(alpha, 64);
        for (u64 k = 1; k <= Lmax; ++k)
            ka[k] = to_dd(BigFloat::pow(BigFloat((long long)k, 64), a, 128));
    }

    std::size_t G = grid.size(), C = checkpoints.size();
    std::vector<double> sup_at((std::size_t)(G * C), 0.0);
    parallel_for(G, [&](std::size_t j) {
        dd t = dd_div(dd{grid[j], 0.0}, two_pi_dd());
        double sum = 0.0, comp = 0.0, sup = 0.0;
        std::size_t ci = 0;
        for (u64 k = (u64)l; k <= Lmax; ++k) {
            if (c[k] != 0.0) {
                double s = sin_two_pi_frac(dd_frac(dd_mul(ka[k], t)));
                double tt = c[k] * s - comp;
                double uu = sum + tt;
                comp = (uu - sum) - tt;
                sum = uu;
            }
            double a = std::fabs(sum);
            if (a > sup) sup = a;
            while (ci < C && checkpoints[ci] == k) {
                sup_at[j * C + ci] = sup;
                ++ci;
            }
        }
    }, (unsigned)std::max(threads, 0));

    TailSupSweep out;
    out.l = l;
    out.grid = grid;
    for (std::size_t i = 0; i < C; ++i) {
        SweepPoint p;
        p.L = checkpoints[i];
        for (std::size_t j = 0; j < G; ++j) {
            if (sup_at[j * C + i] > p.sup_abs) {
                p.sup_abs = sup_at[j * C + i];
                p.x_at_sup = grid[j];
            }
        }
        out.checkpoints.push_back(p);
    }
    return out;
}

EvenAlphaReport even_alpha_lower_bound(const CoeffSequence& seq, int n,
                                       long long l, long long L,
                                       SpecialPoint point) {
    if (n < 2 || n % 2 != 0) throw PreconditionViolation("exponent must be even and >= 2");
    if (l < 0 || L <= l) throw PreconditionViolation("need 0 <= l < L");

    EvenAlphaReport rep;
    rep.n = n;
    long long mod;
    Rat q;
    if (point == SpecialPoint::HalfPi) {
        rep.window_lo = 2 * l + 1;
        rep.window_hi = 2 * L;
        rep.factor = 0.5;
        mod = 4;
        q = Rat(1, 4); // x = pi/2 = 2*pi/4
    } else {
        rep.window_lo = 3 * l + 1;
        rep.window_hi = 3 * L;
        rep.factor = std::sqrt(3.0) / 3.0;
        mod = 3;
        q = Rat(1, 3); // x = 2*pi/3
    }
    PrecisionReal x = PrecisionReal::two_pi_times(q);
    double hit = point == SpecialPoint::HalfPi ? 1.0 : std::sqrt(3.0) / 2.0;

    double sum = 0.0, ident = 0.0, csum = 0.0;
    for (long long k = rep.window_lo; k <= rep.window_hi; ++k) {
        double ck = seq.at(k);
        csum += ck;
        // the exact reduction: k^n * x mod 2*pi depends only on k^n mod `mod`
        sum += ck * std::sin(arg_power((u64)k, (double)n, x).to_double());
        u64 r = powmod_small((u64)k, n, (u64)mod);
        if (r == 1) ident += ck * hit;
        // r == 0 contributes nothing; other residues cannot occur for even n
    }
    rep.sum = sum;
    rep.identity_value = ident;
    rep.identity_residual = std::fabs(sum - ident);
    rep.coeff_sum = csum;
    rep.holds = rep.identity_residual <= 1e-12 &&
                sum >= rep.factor * csum - 1e-12;
    return rep;
}

NecessityReport neighbourhood_necessity_check(const CoeffSequence& seq,
                                              double alpha, double gamma,
                                              long long l) {
    if (!(alpha > 0.0)) throw PreconditionViolation("alpha must be positive");
    if (!(gamma >= 2.0)) throw PreconditionViolation("gamma must be at least 2");
    if (l < 1) throw PreconditionViolation("l must be positive");

    NecessityReport rep;
    rep.alpha = alpha;
    rep.gamma = gamma;
    rep.l = l;
    rep.x0 = M_PI / (std::pow(gamma, alpha + 1.0) * std::pow((double)l, alpha));

    // every argument k^alpha x0, l < k <= 2l, lies in (0, pi/2]: no reduction
    double sum = 0.0, comp = 0.0;
    for (long long k = l + 1; k <= 2 * l; ++k) {
        double term = seq.at(k) * std::sin(std::pow((double)k, alpha) * rep.x0);
        double t = term - comp;
        double u = sum + t;
        comp = (u - sum) - t;
        sum = u;
    }
    rep.lhs = sum;
    rep.rhs = std::pow(gamma, -alpha - 1.0) * seq.at(2 * l) * 2.0 * (double)l;
    rep.holds = rep.lhs >= rep.rhs * (1.0 - 1e-12) - 1e-15;
    rep.reverse_lhs = seq.at(2 * l + 1) * (double)(2 * l + 1);
    rep.reverse_rhs = 2.0 * std::pow(gamma, alpha + 1.0) * rep.lhs;
    rep.reverse_holds = rep.reverse_lhs <= rep.reverse_rhs * (1.0 + 1e-12) + 1e-15;
    return rep;
}

double NeighbourhoodSpec::x_at(long long j) const {
    return M_PI / (std::pow(gamma, alpha + 1.0) * std::pow((double)(N + j), alpha));
}

const char* convergence_verdict_name(ConvergenceVerdict v) {
    switch (v) {
        case ConvergenceVerdict::ConvergesUniformly: return "converges-uniformly";
        case ConvergenceVerdict::FailsUniformConvergence: return "fails-uniform-convergence";
        case ConvergenceVerdict::OutOfTheoremScope: return "out-of-theorem-scope";
    }
    return "?";
}

const char* verdict_clause_name(VerdictClause c) {
    switch (c) {
        case VerdictClause::EvenIntegerPointSet: return "even-integer-point-set";
        case VerdictClause::OddIntegerNeighbourhood: return "odd-integer-neighbourhood";
        case VerdictClause::FractionalNeighbourhood: return "fractional-neighbourhood";
        case VerdictClause::None: return "none";
    }
    return "?";
}

CriterionReport criterion_verdict(double alpha, const CoeffSequence& seq,
                                  PointContext ctx) {
    CriterionReport rep;
    bool integral = alpha == std::floor(alpha) && alpha >= 1.0;
    long long ai = integral ? (long long)alpha : 0;

    if (integral && ai % 2 == 0 && ctx == PointContext::PointSetWithSpecialAngles) {
        rep.clause = VerdictClause::EvenIntegerPointSet;
        rep.decided_by_sum_finite = true;
        rep.verdict = seq.sum_finite ? ConvergenceVerdict::ConvergesUniformly
                                     : ConvergenceVerdict::FailsUniformConvergence;
        return rep;
    }
    bool near_zero = ctx == PointContext::NeighbourhoodOfZero;
    if ((integral && ai % 2 == 1 && near_zero) ||
        (!integral && alpha > 0.0 && alpha < 2.0 && near_zero)) {
        rep.clause = integral ? VerdictClause::OddIntegerNeighbourhood
                              : VerdictClause::FractionalNeighbourhood;
        rep.decided_by_ckk = true;
        rep.verdict = seq.ckk_to_zero ? ConvergenceVerdict::ConvergesUniformly
                                      : ConvergenceVerdict::FailsUniformConvergence;
        return rep;
    }
    return rep; // out of scope
}

CancellationReport pi_rational_cancellation_check(const PolynomialQ& f,
                                                  const PrecisionReal& x) {
    if (!x.pi_rational)
        throw PreconditionViolation("argument must carry an exact 2*pi-rational tag");
    if (!f.odd_powers_only())
        throw HypothesisViolation("phase polynomial must have odd powers only");
    int n = f.degree();
    if (n < 1 || n > 20) throw PreconditionViolation("degree out of range");

    CancellationReport rep;
    rep.n = n;
    Rat q = *x.pi_rational;
    rep.C = q.num;
    rep.M = q.den;
    rep.Q = f.integerizer();
    i128 N128 = (i128)rep.Q * rep.M;
    if (N128 > 10000000) throw PreconditionViolation("period Q*M too large to enumerate");
    long long N = (long long)N128;
    rep.N = N;

    // integer coefficients of Q*f reduced mod N, and C mod N
    std::vector<long long> cm;
    for (const Rat& cj : f.coeffs) {
        i128 c = (i128)cj.num * (rep.Q / cj.den) % N;
        if (c < 0) c += N;
        cm.push_back((long long)c);
    }
    long long Cm = ((rep.C % N) + N) % N;

    std::vector<long long> r((std::size_t)N, 0);
    std::vector<long long> cnt((std::size_t)N, 0);
    for (long long k = 0; k < N; ++k) {
        i128 v = 0;
        for (int j = (int)cm.size() - 1; j >= 0; --j) v = (v * k + cm[(std::size_t)j]) % N;
        r[(std::size_t)k] = (long long)((v * Cm) % N);
        ++cnt[(std::size_t)r[(std::size_t)k]];
    }

    rep.mirror_pairing = true;
    for (long long k = 0; k < N; ++k) {
        long long mirrored = r[(std::size_t)((N - k) % N)];
        long long negated = (N - r[(std::size_t)k]) % N;
        if (mirrored != negated) rep.mirror_pairing = false;
    }
    rep.period_sum_zero = true;
    for (long long v = 0; v < N; ++v)
        if (cnt[(std::size_t)v] != cnt[(std::size_t)((N - v) % N)]) rep.period_sum_zero = false;

    double sum = 0.0;
    for (long long k = 1; k <= N; ++k) {
        dd fr = dd_div(dd{(double)r[(std::size_t)(k % N)], 0.0}, dd{(double)N, 0.0});
        sum += sin_two_pi_frac(fr);
        rep.sup_partial = std::max(rep.sup_partial, std::fabs(sum));
    }

    long long fact = 1;
    for (int j = 2; j <= n; ++j) fact *= j;
    rep.bound = (double)rep.Q * (double)rep.M * (double)fact;
    rep.holds = rep.mirror_pairing && rep.period_sum_zero &&
                rep.sup_partial <= rep.bound * (1.0 + 1e-12) + 1e-9;
    return rep;
}

} // namespace sinesum
