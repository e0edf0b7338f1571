#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sinesum/polynomial.hpp"
#include "sinesum/precision.hpp"
#include "sinesum/sequences.hpp"

namespace sinesum {

// Running partial sums of sum_{k=l}^{L'} c_k sin(k^alpha x), L' in [l, L],
// with the largest absolute value reached along the way, compared against
// the tail statistic sup_{k >= l} c_k k on the same range.
struct PartialSumReport {
    long long l = 0;
    unsigned long long L = 0;
    double x = 0.0;
    double final_sum = 0.0;
    double sup_abs = 0.0;      // max over L' in [l, L] of |partial sum|
    unsigned long long arg_sup = 0;
    double comparator = 0.0;   // sup c_k k over [l, L]
    double ratio = 0.0;        // sup_abs / comparator (0 when comparator is 0)
};

PartialSumReport partial_sum(const CoeffSequence& seq, double alpha,
                             const PrecisionReal& x, long long l,
                             unsigned long long L);

// Largest |partial sum| over a grid of x values and all stopping indices
// L' in [l, L], with per-checkpoint records.
struct SweepPoint {
    unsigned long long L = 0;
    double sup_abs = 0.0;
    double x_at_sup = 0.0;
};

struct TailSupSweep {
    long long l = 0;
    std::vector<double> grid;
    std::vector<SweepPoint> checkpoints;
};

// grid: x values (e.g. 2*pi*j/(n+1)); checkpoints: increasing stopping
// indices at which the running sup is recorded.
TailSupSweep tail_sup_sweep(const CoeffSequence& seq, double alpha,
                            const std::vector<double>& grid, long long l,
                            const std::vector<unsigned long long>& checkpoints,
                            int threads = 0);

// Uniform interior grid 2*pi*j/(n+1), j = 1..n, optionally with extra points
// appended.
std::vector<double> uniform_grid(int n, const std::vector<double>& extra = {});

// Exact lower bound at the special abscissae pi/2 (even alpha: sin(k^alpha
// x) is 1 for odd k, 0 for even k) and 2*pi/3 (sin is sqrt(3)/2 unless 3 | k,
// then 0).  On aligned windows ([2l+1, 2L] at pi/2, [3l+1, 3L] at 2*pi/3, for
// nonincreasing coefficients) the window sum is at least `factor` times the
// plain coefficient sum.
enum class SpecialPoint { HalfPi, TwoThirdsPi };

struct EvenAlphaReport {
    int n = 0;
    long long window_lo = 0, window_hi = 0;
    double sum = 0.0;          // sum of c_k sin(k^n x) over the window
    double identity_value = 0.0; // same sum via the residue identity
    double identity_residual = 0.0;
    double coeff_sum = 0.0;    // sum of c_k over the window
    double factor = 0.0;       // 1/2 at pi/2, sqrt(3)/3 at 2*pi/3
    bool holds = false;        // sum >= factor * coeff_sum - tolerance
};

EvenAlphaReport even_alpha_lower_bound(const CoeffSequence& seq, int n,
                                       long long l, long long L,
                                       SpecialPoint point);

// Divergence witness near zero: at x0 = pi / (gamma^(alpha+1) * l^alpha)
// every argument k^alpha x0, l < k <= 2l, lies in (0, pi/2], so
//   sum_{k=l+1}^{2l} c_k sin(k^alpha x0) >= gamma^(-alpha-1) * c_{2l} * 2l
// for nonincreasing nonnegative c.  The reverse form
//   c_{2l+1} * (2l+1) <= 2 * gamma^(alpha+1) * lhs
// is checked alongside.
struct NecessityReport {
    double alpha = 0.0, gamma = 0.0;
    long long l = 0;
    double x0 = 0.0;
    double lhs = 0.0;
    double rhs = 0.0; // gamma^(-alpha-1) * c_{2l} * 2l
    bool holds = false;
    double reverse_lhs = 0.0; // c_{2l+1} * (2l+1)
    double reverse_rhs = 0.0; // 2 * gamma^(alpha+1) * lhs
    bool reverse_holds = false;
};

NecessityReport neighbourhood_necessity_check(const CoeffSequence& seq,
                                              double alpha, double gamma,
                                              long long l);

// Abscissa family x_j = pi / (gamma^(alpha+1) * (N+j)^alpha) used by the
// necessity check.
struct NeighbourhoodSpec {
    double alpha = 0.0;
    double gamma = 2.0; // >= 2
    long long N = 0;
    double x_at(long long j) const;
};

// Where the series sum c_k sin(k^alpha x) is being studied.
enum class PointContext {
    PointSetWithSpecialAngles, // a set containing pi/2 (and 2*pi/3)
    NeighbourhoodOfZero,
};

enum class ConvergenceVerdict {
    ConvergesUniformly,
    FailsUniformConvergence,
    OutOfTheoremScope,
};

enum class VerdictClause {
    EvenIntegerPointSet,     // alpha even integer, special-angle point set
    OddIntegerNeighbourhood, // alpha odd integer, neighbourhood of zero
    FractionalNeighbourhood, // alpha in (0, 2) non-integer, neighbourhood
    None,
};

const char* convergence_verdict_name(ConvergenceVerdict v);
const char* verdict_clause_name(VerdictClause c);

struct CriterionReport {
    ConvergenceVerdict verdict = ConvergenceVerdict::OutOfTheoremScope;
    VerdictClause clause = VerdictClause::None;
    bool decided_by_sum_finite = false;
    bool decided_by_ckk = false;
};

// Dispatch: even integer alpha on a special-angle point set decides by
// whether sum c_k is finite; odd integer alpha, or non-integer alpha in
// (0, 2), on a neighbourhood of zero decides by whether c_k * k -> 0;
// anything else is out of scope.
CriterionReport criterion_verdict(double alpha, const CoeffSequence& seq,
                                  PointContext ctx);

// Exact cancellation for x a rational multiple of 2*pi.  With f having
// rational coefficients, odd powers only, Q the least common multiple of the
// coefficient denominators, and x = 2*pi*C/M (reduced), the phases
// sin(f(k) x) have period N = Q*M in k, the residue r_{N-k} is the negation
// of r_k mod N, every length-N block sums to exactly zero, and partial sums
// are bounded by Q*M*n! where n = deg f.
struct CancellationReport {
    long long Q = 0, C = 0, M = 0, N = 0;
    int n = 0;
    bool mirror_pairing = false;   // r_{N-k} == -r_k (mod N) for all k
    bool period_sum_zero = false;  // residue multiset symmetric under negation
    double sup_partial = 0.0;      // max_m |S_m| over one period
    double bound = 0.0;            // Q * M * n!
    bool holds = false;
};

CancellationReport pi_rational_cancellation_check(const PolynomialQ& f,
                                                  const PrecisionReal& x);

} // namespace sinesum
