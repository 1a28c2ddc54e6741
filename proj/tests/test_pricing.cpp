#include "bbplan/pricing.hpp"

#include "bbplan/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace bbplan;

TEST_CASE("practice delta is the excess over the one-kWh baseline") {
    CHECK(practice_delta(2.0) == doctest::Approx(1.0));
    CHECK(practice_delta(3.0) == doctest::Approx(2.0));
    CHECK(practice_delta(2.5) == doctest::Approx(1.5));
    CHECK(practice_delta(1.0) == doctest::Approx(0.0));
    CHECK_THROWS_AS(practice_delta(0.99), BelowBaseline);
}

TEST_CASE("differential rate scales linearly in every factor") {
    CHECK(bpdf_rate(1.0, 1.0, 0.1) == doctest::Approx(0.1));
    CHECK(bpdf_rate(2.0, 1.5, 0.1) == doctest::Approx(0.3));
    CHECK(bpdf_rate(2.0, 3.0, 0.2) == doctest::Approx(2.0 * bpdf_rate(1.0, 3.0, 0.2)));
}

TEST_CASE("total cost: reference points") {
    // e_a = 2, K = 1, c = 0.10.
    PricingParams p{2.0, 1.0, 0.10, 0.0};
    CHECK(total_cost(p) == doctest::Approx(0.20));
    p.fee = 0.5;
    CHECK(total_cost(p) == doctest::Approx(0.10 * (1.0 + 1.0 / 1.5)));
    CHECK(total_cost(p) == doctest::Approx(0.1667).epsilon(0.001));
}

TEST_CASE("a best-practice operator pays the plain electricity price") {
    for (double k : {0.5, 1.0, 10.0}) {
        for (double c : {0.05, 0.1, 0.3}) {
            for (double fee : {0.0, 0.25, 0.9}) {
                const PricingParams p{1.0, k, c, fee};
                CHECK(total_cost(p) == c); // exact: the delta term vanishes
            }
        }
    }
}

TEST_CASE("excess cost is exactly quadratic in the delta") {
    for (double fee : {0.0, 0.3, 0.7}) {
        for (double k : {0.5, 2.0}) {
            const double c = 0.12;
            const PricingParams one{2.0, k, c, fee};  // delta = 1
            const PricingParams two{3.0, k, c, fee};  // delta = 2
            const double excess1 = total_cost(one) - c;
            const double excess2 = total_cost(two) - c;
            CHECK(excess2 == doctest::Approx(4.0 * excess1).epsilon(1e-12));
        }
    }
}

TEST_CASE("holder objective: reference points") {
    const PricingParams p{2.0, 1.0, 0.10, 0.5};
    // fee + K delta^2 c / (1 + K fee) = 0.5 + 0.1/1.5.
    CHECK(holder_objective(p) == doctest::Approx(0.5667).epsilon(0.001));
    const PricingParams at_zero{2.0, 1.0, 0.10, 0.0};
    CHECK(holder_objective(at_zero) == doctest::Approx(0.1));
}

TEST_CASE("the differential revenue equals the operator's excess cost") {
    for (double e_a : {1.5, 2.0, 4.0}) {
        for (double fee : {0.0, 0.4, 0.85}) {
            const PricingParams p{e_a, 1.7, 0.21, fee};
            CHECK(holder_objective(p) - p.fee ==
                  doctest::Approx(total_cost(p) - p.c_elec).epsilon(1e-12));
        }
    }
}

TEST_CASE("fee optimization lands on a boundary") {
    SUBCASE("small differential term: charge the highest fee") {
        // K=1, delta=1, c=0.1: J(0)=0.1, J(1-) ~ 1.05.
        const auto opt = optimize_fee(1.0, 1.0, 0.1, 0.01);
        CHECK(opt.fee_star == doctest::Approx(0.99));
        CHECK(opt.j_star > 1.0);
        CHECK(opt.diagnosis == "boundary");
    }
    SUBCASE("huge differential term: give the license away") {
        // K=10, delta=3, c=1: J(0)=90 dwarfs any fee income.
        const auto opt = optimize_fee(10.0, 3.0, 1.0, 0.01);
        CHECK(opt.fee_star == doctest::Approx(0.0));
        CHECK(opt.j_star == doctest::Approx(90.0));
    }
}

TEST_CASE("grid argmax agrees with the analytic boundary comparison") {
    const double step = 0.001;
    for (double k : {0.5, 2.0, 10.0}) {
        for (double delta : {0.5, 1.0, 3.0}) {
            for (double c : {0.05, 0.2, 1.0}) {
                const auto opt = optimize_fee(k, delta, c, step);
                // J is convex in the fee, so the max is at fee=0 or fee->1.
                const double j0 = holder_objective({1.0 + delta, k, c, 0.0});
                const double top = 1.0 - step;
                const double j1 = holder_objective({1.0 + delta, k, c, top});
                const double analytic_fee = (j0 >= j1) ? 0.0 : top;
                CHECK(std::fabs(opt.fee_star - analytic_fee) <= step + 1e-12);
                CHECK(opt.j_star >= std::max(j0, j1) - 1e-12);
                if (opt.interior_critical_point) {
                    // A stationary point in range must be a minimum: the
                    // objective there cannot beat either boundary.
                    const double jc =
                        holder_objective({1.0 + delta, k, c, *opt.interior_critical_point});
                    CHECK(jc <= std::max(j0, j1) + 1e-12);
                }
            }
        }
    }
}

TEST_CASE("ties break toward the smaller fee") {
    // delta = 0 makes J(fee) = fee, strictly increasing -- not a tie -- so
    // use the degenerate c = 0 with delta = 0: J is still just the fee.
    // A genuine tie needs a flat objective; K=0 is outside the domain, so
    // check the documented behavior on an exact two-way comparison instead:
    // when J(0) == J(top) the optimizer must report fee 0.
    // Construct it: J(0) = K d^2 c, J(top) = top + K d^2 c/(1+K top).
    // Pick K=1, top=0.5 (step 0.5): equality at d^2 c = 1.5/1 * ... solve:
    // K d^2 c - K d^2 c / 1.5 = 0.5  =>  d^2 c (1/3) = 0.5 => d^2 c = 1.5.
    const auto opt = optimize_fee(1.0, 1.0, 1.5, 0.5);
    const double j0 = holder_objective({2.0, 1.0, 1.5, 0.0});
    const double jtop = holder_objective({2.0, 1.0, 1.5, 0.5});
    REQUIRE(j0 == doctest::Approx(jtop).epsilon(1e-12));
    CHECK(opt.fee_star == doctest::Approx(0.0));
}
