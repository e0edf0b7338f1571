#pragma once

#include <string>
#include <vector>

#include "sinesum/errors.hpp"

namespace sinesum {

// Declared regularity class of a coefficient sequence.
enum class DeclaredClass {
    Monotone,   // nonnegative and nonincreasing
    RBVS,       // remainder bounded variation: sum_{k>=m} |c_k - c_{k+1}| <= C*c_m
    GM,         // general monotone: sum_{k=m}^{2m-1} |c_k - c_{k+1}| <= C*c_m
    Unverified,
};

const char* declared_class_name(DeclaredClass c);

// A coefficient sequence c_1, c_2, ... from a small named catalog, or a
// user-supplied finite table.  `at(k)` is defined for k >= 1; table-backed
// sequences return 0 past the end of the table.
struct CoeffSequence {
    std::string id;            // catalog id, or "table"
    double param = 0.0;        // exponent parameter (inv_kpow only)
    std::vector<double> table; // backing data when id == "table"

    DeclaredClass declared_class = DeclaredClass::Unverified;
    double class_constant = 0.0; // declared constant for the class (0 = n/a)
    bool sum_finite = false;     // sum_k c_k converges
    bool ckk_to_zero = false;    // c_k * k -> 0

    double at(long long k) const;

    std::string label() const;

    // Catalog:
    //   inv_k          c_k = 1/k
    //   inv_klogk      c_k = 1/(k*log(k+1))
    //   inv_kpow       c_k = 1/k^p       (param = p > 1)
    //   inv_k2logk     c_k = 1/(k^2*log(k+1))
    //   one            c_k = 1
    //   halving_pairs  c_{2j+1} = c_{2j+2} = 2^-j
    static CoeffSequence from_id(const std::string& id, double param = 0.0);
    static CoeffSequence from_table(std::vector<double> values);
    static std::vector<std::string> catalog_ids();
    // One instance of every catalog entry (inv_kpow appears with p=1.5 and p=2).
    static std::vector<CoeffSequence> catalog_instances();
};

// Smallest class constants measurable on a finite index range, plus a
// monotonicity verdict.  Throws ZeroCoefficient when a required division
// hits a zero coefficient.
struct ClassCheckReport {
    long long lo = 0, hi = 0;
    bool monotone = false;       // nonnegative and nonincreasing on [lo, hi]
    double rbvs_constant = 0.0;  // max_m sum_{k=m}^{hi-1} |dc_k| / c_m
    double gm_constant = 0.0;    // max_m sum_{k=m}^{min(2m-1,hi-1)} |dc_k| / c_m
};

ClassCheckReport check_class(const CoeffSequence& seq, long long lo, long long hi);

// sup of c_k * k over k in [l, Lmax].
struct TailStat {
    long long l = 0;
    unsigned long long Lmax = 0;
    double value = 0.0; // sup c_k * k
    long long argmax = 0;
};

TailStat tail_sup(const CoeffSequence& seq, long long l, unsigned long long Lmax);

// Summation-by-parts identity check.  Given aligned vectors c (coefficients)
// and u (summands), computes
//   direct      = sum_i c_i u_i
//   transformed = sum_{i<n-1} (c_i - c_{i+1}) U_i + c_{n-1} U_{n-1},
// with U_i the running prefix sums of u, and the relative residual between
// the two.
struct AbelReport {
    double direct = 0.0;
    double transformed = 0.0;
    double residual = 0.0; // |direct - transformed| / max(1, |direct|)
};

AbelReport abel_transform(const std::vector<double>& c, const std::vector<double>& u);

} // namespace sinesum
