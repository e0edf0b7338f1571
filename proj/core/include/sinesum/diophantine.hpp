#pragma once

#include <optional>
#include <vector>

#include "sinesum/errors.hpp"
#include "sinesum/precision.hpp"

namespace sinesum {

// A rational C/M close to a target y, with the signed gap beta = y - C/M.
struct RationalApproximation {
    long long C = 0;
    long long M = 1; // M >= 1, gcd(C, M) = 1
    double beta = 0.0;
    enum class Source { Convergent, Semiconvergent } source = Source::Convergent;
};

// Continued-fraction convergents of y with denominator <= Qmax, in increasing
// denominator order.  The first entry is (floor(y), 1), i.e. (0, 1) for y in [0,1).
// Throws PrecisionExhausted when the next digit of the expansion cannot be
// decided within the input's error bound.
std::vector<RationalApproximation> convergents(const PrecisionReal& y, long long Qmax);

// Smallest denominator M <= Mcap admitting C with gcd(C, M) = 1 and
// |y - C/M| <= tol; nullopt when no such M exists.  Exhaustive over all
// denominators: the minimizer is located by a best-approximation scan over
// convergents and intermediate fractions.
std::optional<RationalApproximation>
best_approx_below(const PrecisionReal& y, long long Mcap, double tol);

// Trichotomy for an index m relative to how well y is approximated by
// fractions with small denominator.  With thresholds
//   Mcap = m^eps,  tolA = m^(eps-n),  tolB = m^(eps-1):
//   Inconvenient      exists M <= Mcap with |beta| <= tolA
//   AlmostConvenient  otherwise, exists M <= Mcap with |beta| <= tolB
//   Convenient        neither
enum class IndexVerdict { Inconvenient, AlmostConvenient, Convenient };

const char* index_verdict_name(IndexVerdict v);

struct IndexClass {
    long long m = 0;
    IndexVerdict verdict = IndexVerdict::Convenient;
    std::optional<RationalApproximation> witness;
    long long Mcap = 0;
    double tolA = 0.0, tolB = 0.0;
};

// Requires m >= 9, 0 < eps < 1/6, n >= 3.
IndexClass classify_index(long long m, const PrecisionReal& y, double eps, int n);

// Denominators M <= Mmax admitting coprime C with |y - C/M| <= M^((eps-1)/eps),
// in increasing order.  M = 1 always qualifies.  For M >= 2 the threshold is
// below 1/(2 M^2), so every member is a convergent denominator of y.
std::vector<RationalApproximation>
approx_spectrum(const PrecisionReal& y, double eps, long long Mmax);

// Largest integer M >= 1 with M <= m^eps, computed exactly when 1/eps is an
// integer (M^(1/eps) <= m in integer arithmetic) and by guarded floating
// floor otherwise.
long long floor_power(long long m, double eps);

} // namespace sinesum
