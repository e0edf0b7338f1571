#pragma once

#include <optional>

#include "sinesum/bigfloat.hpp"
#include "sinesum/errors.hpp"
#include "sinesum/rational.hpp"

namespace sinesum {

// Global precision policy.  The default working precision (bits) is read once
// from the environment variable SINESUM_PRECISION_BITS (fallback 128) and can
// be overridden programmatically.  The ceiling bounds the automatic per-call
// escalation in reduce_mod_2pi / arg_power.
long default_precision_bits();
void set_default_precision_bits(long bits);
long precision_ceiling_bits();
void set_precision_ceiling_bits(long bits);

// Arbitrary-precision real with a tracked absolute error bound.  When the
// value is an exact rational multiple of 2*pi, pi_rational carries that
// rational exactly, enabling exact modular reduction paths.
struct PrecisionReal {
    BigFloat value;
    double err = 0.0;
    std::optional<Rat> pi_rational; // value == 2*pi*(*pi_rational), exactly

    PrecisionReal() = default;
    explicit PrecisionReal(BigFloat v, double e = 0.0) : value(std::move(v)), err(e) {}

    double to_double() const { return value.to_double(); }

    // Exact lift of a double (doubles are dyadic rationals; err = 0).
    static PrecisionReal from_double(double x);
    // Value 2*pi*q, exact tag plus a numeric representation at default bits.
    static PrecisionReal two_pi_times(const Rat& q);
    static PrecisionReal from_rational(const Rat& q);
    // Parse a decimal string at the given precision; err = half ulp.
    static PrecisionReal parse_decimal(const std::string& s, long bits);
};

// Fractional part {y} in [0, 1) with propagated error bound.
struct FracPart {
    double value = 0.0;
    double err = 0.0;
};

// {y}.  Throws AmbiguousNearInteger when the error bound of y straddles an
// integer boundary (err > 0 and y within err of an integer), since the output
// would then be unstable to first order.
FracPart frac(const PrecisionReal& y);

// ||y|| = min({y}, 1-{y}) in [0, 1/2].  Same ambiguity contract as frac.
PrecisionReal dist_to_int(const PrecisionReal& y);

// y reduced to [0, 2*pi).  Uses exact integer reduction when y carries a
// pi_rational tag; otherwise escalates working precision with the magnitude
// of y and throws PrecisionExhausted past the configured ceiling.
PrecisionReal reduce_mod_2pi(const PrecisionReal& y);

// k^alpha * x reduced mod 2*pi, err < 2^-48.  Working precision is
// ceil(alpha*log2(k) + log2|x|) + 64 bits; integer alpha uses the exact
// integer power.  Throws PrecisionExhausted past the precision ceiling.
PrecisionReal arg_power(unsigned long long k, double alpha, const PrecisionReal& x);

} // namespace sinesum
