#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "sinesum/precision.hpp"

namespace sinesum {

// First and second differences of k -> k^alpha * x on [k_lo, k_hi]:
//   d1_k = (k^alpha - (k-1)^alpha) * x,   d2_k = d1_k - d1_{k-1}.
// For alpha in (1, 2), d2 is positive and strictly decreasing, with
//   (alpha*(alpha-1)*x/2) * (k+1)^(alpha-2) <= d2_k
//     <= 2*alpha*(alpha-1)*x * (k-2)^(alpha-2)   for k >= 3.
struct DiffProfile {
    long long k_lo = 0, k_hi = 0;
    std::vector<double> d1; // d1[i] = d1_{k_lo + i}
    std::vector<double> d2; // d2[i] = d2_{k_lo + i}, needs k >= k_lo + 1
    bool d2_positive = false;
    bool d2_decreasing = false;
    bool bracket_holds = false;
};

DiffProfile diff_profile(double alpha, const PrecisionReal& x, long long k_lo,
                         long long k_hi);

// One maximal run of consecutive near-band indices, together with the
// crossing trajectory of the phase k^alpha*x through half-period intervals.
struct BlockRun {
    long long s = 0;      // first index of the run
    long long v = 0;      // run length (number of band values d1~_{s+1..s+v})
    bool high_side = false; // band values near 2*pi rather than near 0
    long long u = 0;      // half-period index: phi(0) = s^alpha*x in [pi*u, pi*(u+1))
    bool u_even = false;
    std::vector<long long> t; // t[i]: last j with phi(j) in the i-th crossed half-interval
    long long R = 0;          // crossings beyond the first, rounded to even
    double travel = 0.0;      // |phi(v) - phi(0)|
    // Checks (true = inequality verified):
    bool coverage_ok = false;   // pi >= sum_{i=2}^{t0} (t0+1-i) * d2_{s+i}
    bool t0_bound_ok = false;   // t0 < 27/(alpha-1) * s^(1-alpha/2) * x^(-1/2)
    bool t1_bound_ok = false;   // t1 < 54/(alpha-1) * s^(1-alpha/2) * x^(-1/2)
    bool v_band_ok = false;     // d1_{s+v} - d1_{s+1} <= m^(-delta)
    bool v_bound_ok = false;    // v <= m^(-delta)/((alpha-1)*x) * (s+1)^(2-alpha) + 2
    bool r_bound_ok = false;    // R <= d2_{s+2} * v / (2*pi), or R = 0
};

// Partition of (m, m+p] by the fractional position of d1~ = d1 mod 2*pi:
// K1 holds the indices whose next first-difference lies within m^(-delta) of
// a multiple of 2*pi (ties to K1), K2 the rest.  p = p(m) is the least p > 1
// with |d1_{m+p} - d1_{m+1} - 2*pi| <= 2*alpha*(alpha-1)*x*m^(alpha-2).
struct BlockPartition {
    long long m = 0;
    double delta = 0.0;
    double band = 0.0; // m^(-delta)
    long long p = 0;
    double p_tol = 0.0;
    bool p_lower_ok = false; // p >= -1 + 2*pi/(2*alpha*(alpha-1)*x) * m^(2-alpha)
    bool p_simple_ok = false; // p >= m^(2-alpha) / x
    std::vector<long long> K1;
    std::vector<long long> K2;
    std::vector<BlockRun> runs; // increasing runs inside K1 (at most 3)
    bool runs_at_most_3 = false;
};

// Requires alpha in (1, 2), x > 0, delta in (0, 2-alpha), and the band
// m^(-delta) < pi; throws BaseTooSmall when m is too small for the band or
// p-window to make sense.
BlockPartition block_partition(double alpha, const PrecisionReal& x,
                               long long m, double delta);

// Index chain m_{i+1} = m'(m_i) + Q'(m_i), where m' is the first k >= m in
// K2 and Q' >= Q(m) = ceil(m^((2-alpha)/3)) is minimal with m' + Q' in K2,
// checked against the growth law m_{i+1} >= m_i + m_i^((2-alpha)/3) and the
// comparison chains w_{i+1} = w_i + w_i^(2-alpha)/x and
// z_{i+1} = z_i + z_i^((2-alpha)/3).
struct ChainReport {
    std::vector<long long> m_seq;
    std::vector<double> w_seq;
    std::vector<double> z_seq;
    bool growth_ok = false; // m_{i+1} >= m_i + m_i^((2-alpha)/3) at every step
    double F_m0 = 0.0;      // 1 / ln(m_0)
};

ChainReport index_chain(double alpha, const PrecisionReal& x, long long m0,
                        double delta, int steps);

// Floor for sums of sines with widening gaps: given
// 0 < y_1 <= y_2 - y_1 <= ... <= y_k - y_{k-1} and y_k <= 2*pi, let q be the
// last index with y_q <= pi and a = y_{q+1} - y_q (requires a < pi when
// q < k).  Then sum_i sin(y_i) >= -sin(a/2).  The weighted variant, with
// nonincreasing positive weights w_i, gives
// sum_i w_i sin(y_i) >= -w_{q+1} * sin(a/2).
struct SineFloorReport {
    double sum = 0.0;
    double floor = 0.0;
    bool holds = false;
    long long q = 0; // 1-based; y_1 > pi would force a = y_1 > pi, so q >= 1
    double a = 0.0;
};

SineFloorReport sine_sum_floor_check(const std::vector<double>& y);
SineFloorReport sine_sum_floor_check_weighted(const std::vector<double>& y,
                                              const std::vector<double>& w);

// Pairing plan for alpha in (0, 1): sign-alternating half-period windows
// S1..S4 around the boundary n_u = floor((pi/x * u)^(1/alpha)), u = d, d+1/2,
// d+1, d+3/2, d+2, with centre pairs inside S2 union S3 and cross pairs
// S1<->S2, S4<->S3; every matched pair of sines sums to <= 0, and the
// unmatched leftovers are bounded by
//   (2/alpha) * (1/alpha - 1) * d^(1/alpha - 2) * (pi/x)^(1/alpha) + 4.
struct PairingPlan {
    double alpha = 0.0, x = 0.0;
    long long d = 0;          // odd block index, d >= D
    long long D = 0;          // admissibility threshold for this (alpha, x)
    long long n_d = 0, n_d_half = 0, n_d1 = 0, n_d1_half = 0, n_d2 = 0;
    long long centre_pairs = 0;
    long long cross_12 = 0, cross_43 = 0;
    long long leftover = 0;       // unmatched indices (all four windows)
    long long out_of_window = 0;  // partner formula landed outside its window
    double leftover_bound = 0.0;
    bool pair_sums_ok = false; // every matched pair: sin + sin <= 0
    bool leftover_ok = false;  // leftover <= leftover_bound
    double ratio_bound = 0.0;  // 2 * (3^(1/alpha) - 1), window-growth cap
    bool ratio_ok = false;
};

// Least odd D >= 3 such that the block admissibility conditions hold at
// (alpha, x): (pi/x)^(1/alpha) D^(1/alpha - 1) >= 12/alpha... (monotone
// closed-form thresholds, verified by scanning +-2 around the candidate).
long long pairing_threshold(double alpha, double x);

// Throws PreconditionViolation when d < pairing_threshold(alpha, x) or d is
// even.
PairingPlan pairing_plan(double alpha, const PrecisionReal& x, long long d);

// Half-period endpoint indices for the window [l, L] at frequency exponent
// alpha in (0, 1):
//   case_1: x <= pi * L^(-alpha)         -> |sum| <= C1 = pi * 2^alpha / alpha
//   case_2: x >= pi * l^(-alpha) and (L^alpha - l^alpha) x <= 6*pi
//                                        -> |sum| <= C2 = 7^(1/alpha)
//   main:   x >= pi * l^(-alpha) and (L^alpha - l^alpha) x > 6*pi
//     brackets pi*(e1-2) < x*l^alpha <= pi*e1 (e1 even), likewise d1 odd,
//     pi*e2 <= x*L^alpha < pi*(e2+2) (e2 even), pi*d2 <= x*L^alpha <=
//     pi*(d2+2) (d2 odd)
//   otherwise (pi*L^(-alpha) < x < pi*l^(-alpha)): not covered by the case
//     split; reported as CaseNotApplicable.
struct HalfPeriodCase1 { double bound = 0.0; };
struct HalfPeriodCase2 { double bound = 0.0; };
struct HalfPeriodMain {
    long long d1 = 0, d2 = 0, e1 = 0, e2 = 0;
    bool brackets_ok = false;
};
struct CaseNotApplicable {};

using HalfPeriodResult =
    std::variant<HalfPeriodCase1, HalfPeriodCase2, HalfPeriodMain, CaseNotApplicable>;

HalfPeriodResult half_period_endpoints(double alpha, const PrecisionReal& x,
                                       long long l, long long L);

} // namespace sinesum
