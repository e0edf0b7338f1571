#pragma once

#include <complex>
#include <string>

#include "sinesum/polynomial.hpp"
#include "sinesum/precision.hpp"

namespace sinesum {

// Exponential sum S(P) = sum_{k=1}^{P} e^{i f(k) x}.
struct WeylSum {
    double re = 0.0;
    double im = 0.0;
    unsigned long long P = 0;
    std::string mode;  // "direct" or "fast"
    double err = 0.0;  // estimated absolute error of (re, im)
    double abs() const { return std::hypot(re, im); }
};

enum class WeylMode {
    Direct, // per-term argument reduction at full precision (certified)
    Fast,   // rotor recurrence over iterated finite differences
};

// f must have rational coefficients; terms are e^{i f(k) x}.
// Direct mode: exact rational evaluation of f(k), argument reduced with
// MPFR (or exactly when x is a rational multiple of 2*pi); for integer
// monomials a dedicated split-product path certifies P up to 10^7.
// Fast mode: complex rotor recurrence with one rotor per difference level,
// renormalized periodically; agreement with direct is ~1e-10 at P = 10^7.
WeylSum weyl_sum(const PolynomialQ& f, const PrecisionReal& x,
                 unsigned long long P, WeylMode mode = WeylMode::Fast);

// Complete exponential sum sum_{k=1}^{p^n} e^(2*pi*i*a*k^n / p^n) for prime
// p > n > 2 and gcd(a, p) = 1; its value is exactly p^(n-1).  The residue
// histogram of a*k^n mod p^n is checked structurally, so `exact` does not
// depend on floating-point cancellation.
struct GaussSum {
    double re = 0.0, im = 0.0;
    long long expected = 0; // p^(n-1)
    bool exact = false;     // structural identity verified
};

GaussSum gauss_sum(long long p, int n, long long a);

// Structural verification of the identity for every a in [1, p^n) coprime
// to p, via one residue histogram of k^n mod p^n shared across all a.
struct GaussExactReport {
    long long p = 0;
    int n = 0;
    unsigned long long a_checked = 0;
    bool all_exact = false;
};

GaussExactReport gauss_sum_exact_all(long long p, int n);

// Geometric kernel: |sum_{k=1}^{l} e^{i k t}| equals |sin(l t/2)/sin(t/2)|
// (equal to l in the limit t -> 2*pi*Z), and is bounded by
// min(l, 1/(2*||t/(2*pi)||)).
struct KernelBoundReport {
    double lhs = 0.0;               // |sum|, term by term
    double closed_form = 0.0;       // |sin(l t/2) / sin(t/2)|, or l at the limit
    double identity_residual = 0.0; // |lhs - closed_form| / l
    double rhs = 0.0;               // min(l, 1/(2*||t/(2*pi)||))
    bool exact_limit = false;       // t in 2*pi*Z
    bool holds = false;             // identity matches and lhs <= rhs (+tol)
};

KernelBoundReport kernel_bound_check(unsigned long long l, const PrecisionReal& t);

// sum over (n-1)-tuples (k_1,...,k_{n-1}) in [1,m]^{n-1} of
//   min(m, 1/(2*||y*k_1*...*k_{n-1}||)),
// where ||.|| is distance to the nearest integer and a zero distance
// contributes m.  Throws TupleSpaceTooLarge when m^(n-1) > 10^8.
struct RecipSumReport {
    double value = 0.0;
    unsigned long long tuples = 0;
    unsigned long long capped = 0; // tuples contributing the cap m
};

RecipSumReport min_recip_sum(const PrecisionReal& y, unsigned long long m, int n);

// Squaring inequality for S(m) = sum_{k=1}^{m} e^{i f(k) x}, deg f = n >= 2:
//   |S(m)|^(2^(n-1)) <= 2^(2^(n-1)) * m^(2^(n-1)-1) * (n-1)
//                     + 2^(2^(n-1)+1) * m^(2^(n-1)-n) * R(y, m, n)
// with y = n! * (leading coefficient of f) * x / (2*pi) and R the min_recip_sum
// above.  Lower-order coefficients of f do not enter the right-hand side.
struct MasterInequalityReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double y = 0.0;
    double sum_abs = 0.0;
    unsigned long long tuples = 0;
    bool holds = false;
};

MasterInequalityReport master_inequality_check(const PolynomialQ& f,
                                               const PrecisionReal& x,
                                               unsigned long long m);

} // namespace sinesum
