#pragma once

#include <optional>
#include <vector>

#include "sinesum/diophantine.hpp"
#include "sinesum/precision.hpp"

namespace sinesum {

// Number of ordered k-tuples of positive integers with product exactly
// lambda: the k-fold divisor function, computed from the factorization of
// lambda.  Throws FactorizationTooLarge for lambda > 10^12.
unsigned long long tau(int k, unsigned long long lambda);

// Exact count of k-tuples in [1,P]^k with product <= P^k / A, against the
// bound k * P^k / A^(1/k).
struct ProductCountReport {
    unsigned long long count = 0;
    double threshold = 0.0; // P^k / A
    double bound = 0.0;     // k * P^k / A^(1/k)
    bool holds = false;
};

ProductCountReport count_product_le(long long P, int k, double A);

// T in [1, P^(n-1)) with ||y*T|| <= P^(eps-1), together with the
// tau_(n-1)-weighted total.  Distances are evaluated in double-double
// precision; a distance falling within the comparison guard band of the
// threshold raises PrecisionExhausted rather than silently picking a side.
struct HitSet {
    unsigned long long P = 0;
    int n = 0;
    double eps = 0.0;
    double threshold = 0.0; // P^(eps-1)
    std::vector<unsigned long long> hits;
    unsigned long long weighted = 0; // sum of tau_(n-1)(T) over hits
};

HitSet hit_set(const PrecisionReal& y, unsigned long long P, int n, double eps);

// Structure of the hit set when y has a good rational approximation C/M:
// under the hypotheses eps in (0, 1/6), P >= 8, n >= 3, M <= P^eps,
// |beta| <= P^(eps-n), every hit is a multiple of M, consecutive hits differ
// by at least T_1 = M, and when the formula count
//   K = floor(P^(eps-1) / (M * |beta|))   (capped by floor((P^(n-1)-1)/M))
// lies strictly inside the range, the hits are exactly M, 2M, ..., K*M.
// Throws HypothesisViolation when no qualifying (C, M) exists or a
// hypothesis fails.
struct HitStructureReport {
    HitSet set;
    RationalApproximation approx;   // the qualifying C/M
    unsigned long long K_formula = 0;
    bool multiples_only = false;    // every hit divisible by M
    bool progression_exact = false; // hits == {M, 2M, ..., K*M}
    bool gaps_ok = false;           // consecutive hits differ by >= first hit
    bool holds = false;
};

HitStructureReport hit_structure_check(const PrecisionReal& y, unsigned long long P,
                                       int n, double eps);

// Exact hit set for y = C/M + b/2^s (the dyadic-offset form used to build
// test instances): membership decided in integer arithmetic, with the
// threshold comparison d/(M*2^s) <= P^(eps-1) settled exactly when 1/eps is
// an integer (big-integer power comparison), and by guarded floating
// comparison otherwise.
HitSet hit_set_exact_dyadic(long long C, long long M, __int128 b, int s,
                            unsigned long long P, int n, double eps);

} // namespace sinesum
