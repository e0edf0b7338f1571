#include <cmath>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "sinesum/errors.hpp"
#include "sinesum/series.hpp"

using namespace sinesum;

TEST_SUITE("series") {

TEST_CASE("partial sums of sin(kx)/k at x = 1") {
    auto seq = CoeffSequence::from_id("inv_k");
    auto rep = partial_sum(seq, 1.0, PrecisionReal::from_double(1.0), 1, 100000);
    CHECK(rep.final_sum == doctest::Approx(oracle::psum_sin_k_over_k_1e5).epsilon(1e-9));
    CHECK(rep.comparator == 1.0); // c_k * k is identically 1
    CHECK(rep.sup_abs >= std::fabs(rep.final_sum));
    CHECK(rep.arg_sup >= 1);
    CHECK(rep.ratio == doctest::Approx(rep.sup_abs / rep.comparator));

    auto slow = CoeffSequence::from_id("inv_klogk");
    auto rep2 = partial_sum(slow, 1.0, PrecisionReal::from_double(0.5), 100, 200);
    CHECK(rep2.comparator == doctest::Approx(oracle::one_over_log101).epsilon(1e-15));

    CHECK_THROWS_AS(partial_sum(seq, 1.0, PrecisionReal::from_double(1.0), 0, 10),
                    PreconditionViolation);
    CHECK_THROWS_AS(partial_sum(seq, 1.0, PrecisionReal::from_double(1.0), 5, 4),
                    PreconditionViolation);
}

TEST_CASE("uniform grid layout") {
    auto g = uniform_grid(1000, {M_PI / 2});
    REQUIRE(g.size() == 1001);
    CHECK(g[0] == doctest::Approx(2.0 * M_PI / 1001.0).epsilon(1e-15));
    CHECK(g[999] == doctest::Approx(2.0 * M_PI * 1000.0 / 1001.0).epsilon(1e-15));
    CHECK(g[1000] == M_PI / 2);
    CHECK_THROWS_AS(uniform_grid(0), PreconditionViolation);
}

TEST_CASE("sup of partial sums over the grid, alpha = 1, c_k = 1/k") {
    auto seq = CoeffSequence::from_id("inv_k");
    auto sw = tail_sup_sweep(seq, 1.0, uniform_grid(1000), 1, {1000, 10000});
    REQUIRE(sw.checkpoints.size() == 2);
    CHECK(sw.checkpoints[0].L == 1000);
    CHECK(sw.checkpoints[0].sup_abs == doctest::Approx(oracle::sup_a1_L1000).epsilon(1e-9));
    CHECK(sw.checkpoints[1].sup_abs == doctest::Approx(oracle::sup_a1_L10000).epsilon(1e-9));

    auto tail = tail_sup_sweep(seq, 1.0, uniform_grid(1000), 100, {10000});
    CHECK(tail.checkpoints[0].sup_abs ==
          doctest::Approx(oracle::sup_a1_l100_L1e4).epsilon(1e-9));
}

TEST_CASE("sup grows with L for alpha = 2 once pi/2 joins the grid") {
    auto seq = CoeffSequence::from_id("inv_k");
    auto sw = tail_sup_sweep(seq, 2.0, uniform_grid(1000, {M_PI / 2}), 1,
                             {1000, 10000});
    CHECK(sw.checkpoints[0].sup_abs == doctest::Approx(oracle::sup_a2_L1e3).epsilon(1e-8));
    CHECK(sw.checkpoints[1].sup_abs == doctest::Approx(oracle::sup_a2_L1e4).epsilon(1e-8));
    CHECK(sw.checkpoints[1].x_at_sup == M_PI / 2);

    // decreasing checkpoints and checkpoints before l are rejected
    CHECK_THROWS_AS(tail_sup_sweep(seq, 2.0, uniform_grid(10), 1, {100, 100}),
                    PreconditionViolation);
    CHECK_THROWS_AS(tail_sup_sweep(seq, 2.0, uniform_grid(10), 50, {10}),
                    PreconditionViolation);
}

TEST_CASE("sweep result does not depend on the thread count") {
    auto seq = CoeffSequence::from_id("inv_klogk");
    auto a = tail_sup_sweep(seq, 1.5, uniform_grid(64), 1, {500, 2000}, 1);
    auto b = tail_sup_sweep(seq, 1.5, uniform_grid(64), 1, {500, 2000}, 4);
    REQUIRE(a.checkpoints.size() == b.checkpoints.size());
    for (std::size_t i = 0; i < a.checkpoints.size(); ++i) {
        CHECK(a.checkpoints[i].sup_abs == b.checkpoints[i].sup_abs);
        CHECK(a.checkpoints[i].x_at_sup == b.checkpoints[i].x_at_sup);
    }
}

TEST_CASE("window sums at pi/2 collapse to the odd-index coefficients") {
    auto seq = CoeffSequence::from_id("inv_k");
    auto rep = even_alpha_lower_bound(seq, 2, 0, 2, SpecialPoint::HalfPi);
    CHECK(rep.window_lo == 1);
    CHECK(rep.window_hi == 4);
    // k = 1 and k = 3 give sin = 1, the even k give 0
    CHECK(rep.identity_value == doctest::Approx(1.0 + 1.0 / 3.0).epsilon(1e-15));
    CHECK(rep.identity_residual <= 1e-12);
    CHECK(rep.coeff_sum == doctest::Approx(25.0 / 12.0).epsilon(1e-15));
    CHECK(rep.factor == 0.5);
    CHECK(rep.holds);

    auto big = even_alpha_lower_bound(seq, 6, 10, 200, SpecialPoint::HalfPi);
    CHECK(big.identity_residual <= 1e-12);
    CHECK(big.holds);
    CHECK(big.sum >= 0.5 * big.coeff_sum - 1e-12);

    CHECK_THROWS_AS(even_alpha_lower_bound(seq, 3, 0, 2, SpecialPoint::HalfPi),
                    PreconditionViolation);
    CHECK_THROWS_AS(even_alpha_lower_bound(seq, 2, 5, 5, SpecialPoint::HalfPi),
                    PreconditionViolation);
}

TEST_CASE("window sums at 2*pi/3 keep the indices coprime to 3") {
    auto seq = CoeffSequence::from_id("inv_k");
    auto rep = even_alpha_lower_bound(seq, 2, 0, 2, SpecialPoint::TwoThirdsPi);
    CHECK(rep.window_lo == 1);
    CHECK(rep.window_hi == 6);
    double s32 = std::sqrt(3.0) / 2.0;
    CHECK(rep.identity_value ==
          doctest::Approx(s32 * (1.0 + 0.5 + 0.25 + 0.2)).epsilon(1e-14));
    CHECK(rep.identity_residual <= 1e-12);
    CHECK(rep.factor == doctest::Approx(std::sqrt(3.0) / 3.0).epsilon(1e-16));
    CHECK(rep.holds);

    for (const auto& inst : CoeffSequence::catalog_instances()) {
        auto r = even_alpha_lower_bound(inst, 4, 1, 50, SpecialPoint::TwoThirdsPi);
        CHECK(r.identity_residual <= 1e-12);
        CHECK(r.holds);
    }
}

TEST_CASE("divergence witness near zero") {
    auto seq = CoeffSequence::from_id("inv_k");
    auto rep = neighbourhood_necessity_check(seq, 0.5, 2.0, 50);
    CHECK(rep.x0 == doctest::Approx(M_PI / (std::pow(2.0, 1.5) * std::sqrt(50.0)))
                        .epsilon(1e-15));
    CHECK(rep.lhs == doctest::Approx(oracle::necessity_lhs_a05_g2_l50).epsilon(2e-6));
    CHECK(rep.rhs == doctest::Approx(oracle::necessity_rhs_a05_g2_l50).epsilon(1e-15));
    CHECK(rep.holds);
    CHECK(rep.reverse_lhs == doctest::Approx(1.0).epsilon(1e-15)); // c_101 * 101
    CHECK(rep.reverse_holds);

    NeighbourhoodSpec spec;
    spec.alpha = 0.5;
    spec.gamma = 2.0;
    spec.N = 50;
    CHECK(spec.x_at(0) == rep.x0);
    CHECK(spec.x_at(1) < spec.x_at(0));

    for (double alpha : {0.5, 1.0, 1.5, 3.0})
        for (double gamma : {2.0, 3.0}) {
            auto r = neighbourhood_necessity_check(seq, alpha, gamma, 10);
            CHECK(r.holds);
            CHECK(r.reverse_holds);
        }

    CHECK_THROWS_AS(neighbourhood_necessity_check(seq, 0.5, 1.5, 50),
                    PreconditionViolation);
    CHECK_THROWS_AS(neighbourhood_necessity_check(seq, -1.0, 2.0, 50),
                    PreconditionViolation);
}

TEST_CASE("criterion dispatch") {
    auto harmonic = CoeffSequence::from_id("inv_k");          // sum infinite, c_k k = 1
    auto slow = CoeffSequence::from_id("inv_klogk");          // sum infinite, c_k k -> 0
    auto summable = CoeffSequence::from_id("inv_kpow", 1.5);  // sum finite

    auto r1 = criterion_verdict(2.0, summable, PointContext::PointSetWithSpecialAngles);
    CHECK(r1.verdict == ConvergenceVerdict::ConvergesUniformly);
    CHECK(r1.clause == VerdictClause::EvenIntegerPointSet);
    CHECK(r1.decided_by_sum_finite);

    auto r2 = criterion_verdict(2.0, slow, PointContext::PointSetWithSpecialAngles);
    CHECK(r2.verdict == ConvergenceVerdict::FailsUniformConvergence);

    auto r3 = criterion_verdict(3.0, slow, PointContext::NeighbourhoodOfZero);
    CHECK(r3.verdict == ConvergenceVerdict::ConvergesUniformly);
    CHECK(r3.clause == VerdictClause::OddIntegerNeighbourhood);
    CHECK(r3.decided_by_ckk);

    auto r4 = criterion_verdict(3.0, harmonic, PointContext::NeighbourhoodOfZero);
    CHECK(r4.verdict == ConvergenceVerdict::FailsUniformConvergence);

    auto r5 = criterion_verdict(1.5, slow, PointContext::NeighbourhoodOfZero);
    CHECK(r5.clause == VerdictClause::FractionalNeighbourhood);
    CHECK(r5.verdict == ConvergenceVerdict::ConvergesUniformly);

    CHECK(criterion_verdict(2.0, slow, PointContext::NeighbourhoodOfZero).verdict ==
          ConvergenceVerdict::OutOfTheoremScope);
    CHECK(criterion_verdict(2.5, slow, PointContext::NeighbourhoodOfZero).verdict ==
          ConvergenceVerdict::OutOfTheoremScope);
    CHECK(criterion_verdict(1.0, slow, PointContext::PointSetWithSpecialAngles).verdict ==
          ConvergenceVerdict::OutOfTheoremScope);
    CHECK(std::string(convergence_verdict_name(r1.verdict)) == "converges-uniformly");
    CHECK(std::string(verdict_clause_name(r5.clause)) == "fractional-neighbourhood");
}

TEST_CASE("exact cancellation over one period at 2*pi-rational x") {
    PolynomialQ cube = PolynomialQ::monomial(Rat(1), 3);
    auto rep = pi_rational_cancellation_check(cube, PrecisionReal::two_pi_times(Rat(2, 5)));
    CHECK(rep.Q == 1);
    CHECK(rep.M == 5);
    CHECK(rep.N == 5);
    CHECK(rep.mirror_pairing);
    CHECK(rep.period_sum_zero);
    CHECK(rep.bound == doctest::Approx(30.0)); // 1 * 5 * 3!
    CHECK(rep.holds);
    CHECK(rep.sup_partial <= rep.bound);

    // non-monic with a real denominator spread
    PolynomialQ g;
    g.coeffs = {Rat(0), Rat(1, 3), Rat(0), Rat(1, 2), Rat(0), Rat(1, 6)};
    auto rep2 = pi_rational_cancellation_check(g, PrecisionReal::two_pi_times(Rat(3, 7)));
    CHECK(rep2.Q == 6);
    CHECK(rep2.N == 42);
    CHECK(rep2.mirror_pairing);
    CHECK(rep2.period_sum_zero);
    CHECK(rep2.holds);

    PolynomialQ square = PolynomialQ::monomial(Rat(1), 2);
    CHECK_THROWS_AS(
        pi_rational_cancellation_check(square, PrecisionReal::two_pi_times(Rat(1, 3))),
        HypothesisViolation);
    CHECK_THROWS_AS(pi_rational_cancellation_check(cube, PrecisionReal::from_double(0.5)),
                    PreconditionViolation);
}

} // TEST_SUITE("series")
