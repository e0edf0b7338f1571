#include "doctest.h"
#include "oracles.hpp"

#include <mpfr.h>

#include <cmath>

#include "sinesum/precision.hpp"

using namespace sinesum;

namespace {

PrecisionReal sqrt2_times(unsigned long long scale, long prec) {
    BigFloat v(prec);
    mpfr_sqrt_ui(v.raw(), 2, MPFR_RNDN);
    mpfr_mul_ui(v.raw(), v.raw(), scale, MPFR_RNDN);
    return PrecisionReal(std::move(v), std::ldexp(1.0, (int)(-prec + 24)));
}

PrecisionReal golden_ratio(long prec) {
    BigFloat v(prec);
    mpfr_sqrt_ui(v.raw(), 5, MPFR_RNDN);
    mpfr_add_ui(v.raw(), v.raw(), 1, MPFR_RNDN);
    mpfr_div_2ui(v.raw(), v.raw(), 1, MPFR_RNDN);
    return PrecisionReal(std::move(v), std::ldexp(1.0, (int)(-prec + 8)));
}

} // namespace

TEST_SUITE("precision") {

TEST_CASE("frac of a large irrational multiple") {
    const auto y = sqrt2_times(1000000, 256);
    const FracPart f = frac(y);
    CHECK(f.value == doctest::Approx(oracle::frac_sqrt2_1e6).epsilon(1e-14));
    CHECK(f.err < 1e-12);
}

TEST_CASE("frac is exact for exact doubles") {
    const auto y = PrecisionReal::from_double(2.25);
    const FracPart f = frac(y);
    CHECK(f.value == 0.25);
    const auto z = PrecisionReal::from_double(-2.25);
    CHECK(frac(z).value == 0.75);
}

TEST_CASE("frac refuses a value straddling an integer") {
    PrecisionReal y = PrecisionReal::from_double(3.0);
    y.err = 1e-12; // claimed uncertainty covers the integer itself
    CHECK_THROWS_AS((void)frac(y), AmbiguousNearInteger);
}

TEST_CASE("dist_to_int of the golden ratio") {
    const auto y = golden_ratio(256);
    const auto d = dist_to_int(y);
    CHECK(d.to_double() == doctest::Approx(oracle::dist_phi).epsilon(1e-14));
}

TEST_CASE("reduce_mod_2pi far from the origin") {
    // 10^9 * pi / 7 == 2*pi * (10^9/14); the remainder is 6*pi/7.
    const long prec = 256;
    BigFloat v = BigFloat::pi(prec);
    mpfr_mul_ui(v.raw(), v.raw(), 1000000000u, MPFR_RNDN);
    mpfr_div_ui(v.raw(), v.raw(), 7, MPFR_RNDN);
    const PrecisionReal y(std::move(v), 0.0);
    const auto r = reduce_mod_2pi(y);
    CHECK(r.to_double() == doctest::Approx(oracle::mod2pi_1e9_pi_7).epsilon(1e-13));

    // the tagged exact path must agree
    const auto t = PrecisionReal::two_pi_times(Rat(1000000000LL, 14));
    const auto rt = reduce_mod_2pi(t);
    CHECK(rt.to_double() == doctest::Approx(oracle::mod2pi_1e9_pi_7).epsilon(1e-13));
    CHECK(rt.pi_rational.has_value());
    CHECK(rt.pi_rational->num == 3);
    CHECK(rt.pi_rational->den == 7);
}

TEST_CASE("reduce_mod_2pi result lies in [0, 2*pi)") {
    for (double x : {-9.7, -0.0001, 0.0, 1.0, 6.2831, 123456.789}) {
        const auto r = reduce_mod_2pi(PrecisionReal::from_double(x));
        const double v = r.to_double();
        CHECK(v >= 0.0);
        CHECK(v < 6.283185307179587);
    }
}

TEST_CASE("arg_power matches the frozen reference") {
    const auto x = PrecisionReal::from_double(0.3);
    const auto r = arg_power(1000000ULL, 1.5, x);
    CHECK(r.to_double() == doctest::Approx(oracle::argpow_1e6_1p5_0p3).epsilon(1e-12));
    CHECK(r.err < std::ldexp(1.0, -48));
}

TEST_CASE("arg_power integer exponent uses exact integer powers") {
    // k^3 * 2*pi*q stays a rational multiple of 2*pi
    const auto x = PrecisionReal::two_pi_times(Rat(1, 10));
    const auto r = arg_power(7ULL, 3.0, x);
    // 343/10 mod 1 = 3/10 -> angle = 2*pi*3/10
    REQUIRE(r.pi_rational.has_value());
    CHECK(r.pi_rational->num == 3);
    CHECK(r.pi_rational->den == 10);
    CHECK(r.to_double() == doctest::Approx(2.0 * 3.141592653589793 * 0.3).epsilon(1e-14));
}

TEST_CASE("precision ceiling stops runaway reduction") {
    BigFloat v(1.0, 64);
    mpfr_mul_2ui(v.raw(), v.raw(), 1u << 21, MPFR_RNDN); // exponent ~ 2^21
    const PrecisionReal y(std::move(v), 0.0);
    CHECK_THROWS_AS((void)reduce_mod_2pi(y), PrecisionExhausted);
}

TEST_CASE("parse_decimal round-trips short decimals") {
    const auto y = PrecisionReal::parse_decimal("0.125", 128);
    CHECK(y.to_double() == 0.125);
    CHECK(y.err <= std::ldexp(1.0, -120));
}

} // TEST_SUITE
