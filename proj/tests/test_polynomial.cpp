#include "doctest.h"

#include "sinesum/polynomial.hpp"

using namespace sinesum;

namespace {
PolynomialQ cubic() { return PolynomialQ::monomial(Rat(1), 3); }
}

TEST_SUITE("polynomial") {

TEST_CASE("shift expansion is exact") {
    const PolynomialQ f = cubic().shifted(2); // (y+2)^3
    REQUIRE(f.degree() == 3);
    CHECK(f.coeffs[0] == Rat(8));
    CHECK(f.coeffs[1] == Rat(12));
    CHECK(f.coeffs[2] == Rat(6));
    CHECK(f.coeffs[3] == Rat(1));
}

TEST_CASE("iterated differences collapse a cubic to a line") {
    const PolynomialQ g = finite_difference(cubic(), {1, 1});
    REQUIRE(g.degree() == 1);
    CHECK(g.coeffs[1] == Rat(6)); // 3! * product of shifts
    CHECK(g.coeffs[0] == Rat(6));

    const PolynomialQ h = finite_difference(cubic(), {2, 3});
    REQUIRE(h.degree() == 1);
    CHECK(h.coeffs[1] == Rat(36)); // 3! * 2 * 3
    CHECK(h.coeffs[0] == Rat(90));
}

TEST_CASE("difference leading coefficient scales with the input") {
    std::vector<Rat> c = {Rat(0), Rat(1, 3), Rat(0), Rat(5, 2)}; // (5/2)y^3 + y/3
    const PolynomialQ f{c};
    const PolynomialQ g = finite_difference(f, {1, 2});
    REQUIRE(g.degree() == 1);
    CHECK(g.coeffs[1] == Rat(30)); // 6 * (5/2) * 1 * 2
}

TEST_CASE("rational evaluation is exact") {
    std::vector<Rat> c = {Rat(0), Rat(1, 3), Rat(0), Rat(1, 2)};
    const PolynomialQ f{c};
    CHECK(f.eval(6) == Rat(110)); // 108 + 2
    CHECK(f.eval(0) == Rat(0));
    CHECK(f.eval(-6) == Rat(-110));
    CHECK(f.integerizer() == 6);
}

TEST_CASE("structural predicates") {
    std::vector<Rat> c = {Rat(0), Rat(-2), Rat(0), Rat(1)};
    const PolynomialQ f{c};
    CHECK(f.is_monic());
    CHECK(f.odd_powers_only());
    CHECK(f.abs_coeff_sum() == Rat(3));
    std::vector<Rat> c2 = {Rat(1), Rat(0), Rat(0), Rat(1)};
    CHECK_FALSE(PolynomialQ{c2}.odd_powers_only());
}

TEST_CASE("difference requires positive shifts") {
    CHECK_THROWS_AS((void)finite_difference(cubic(), {0}), PreconditionViolation);
}

} // TEST_SUITE
