#include <doctest.h>

#include <cmath>

#include "simcube/bounds.hpp"

using namespace simcube;

TEST_CASE("upper bound values") {
    CHECK(bounds::upper_bound(1) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(bounds::upper_bound(7) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(bounds::upper_bound(3) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("fourier bounds") {
    auto [basic3, refined3] = bounds::fourier_bounds(3);
    CHECK(basic3 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(refined3 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

    // m = 2 falls in the 2 (mod 4) case: sqrt(2)/(2 cos(pi/4)) = 1, the exact
    // value of the 1-dimensional optimum.
    auto [basic1, refined1] = bounds::fourier_bounds(1);
    CHECK(basic1 == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-15));
    CHECK(refined1 == doctest::Approx(1.0).epsilon(1e-15));

    for (std::size_t n = 1; n <= 10000; ++n)
        CHECK(bounds::fourier_refined(n) >= bounds::fourier_basic(n));
}

TEST_CASE("hadamard gap bound") {
    OrderRegistry reg;
    CHECK(bounds::hadamard_gap_bound(7, 1, reg) == bounds::upper_bound(7));
    CHECK(bounds::hadamard_gap_bound(6, 2, reg) ==
          doctest::Approx((std::sqrt(8.0) - 1.0) / std::sqrt(2.0)).epsilon(1e-15));

    // Decreasing in k at a fixed seed order.
    for (std::size_t k = 1; k < 8; ++k) {
        const double now = bounds::hadamard_gap_formula(96 - k, k);
        const double next = bounds::hadamard_gap_formula(96 - k - 1, k + 1);
        CHECK(next < now);
    }

    // k = 1 equality is bit-exact for every covered order.
    for (int m : reg.covered_orders(668)) {
        if (m < 2) continue;
        const std::size_t n = static_cast<std::size_t>(m) - 1;
        CHECK(bounds::hadamard_gap_bound(n, 1, reg) == bounds::upper_bound(n));
    }

    CHECK_THROWS_AS((void)bounds::hadamard_gap_bound(91, 1, reg), unsupported_order_error);
    CHECK_THROWS_AS((void)bounds::hadamard_gap_bound(7, 0, reg), dimension_error);
}

TEST_CASE("chain bound") {
    const std::size_t N = bounds::chain_seed_start();
    const double c = bounds::chain_seed_coefficient();
    CHECK(N == 332);
    CHECK(c == doctest::Approx((std::sqrt(336.0) - 3.0) / std::sqrt(332.0)).epsilon(1e-15));

    // At n = N the correction term vanishes: intermediate = c sqrt(N/2).
    const bounds::ChainBound at_start = bounds::chain_bound(N, N, c);
    CHECK(at_start.k == 0);
    CHECK(at_start.intermediate ==
          doctest::Approx(c * std::sqrt(static_cast<double>(N) / 2.0)).epsilon(1e-15));

    // The final ratio is the headline constant for every n >= N.
    for (std::size_t n : {332u, 400u, 663u, 664u, 1328u, 9999u}) {
        const bounds::ChainBound ch = bounds::chain_bound(n, N, c);
        CHECK(ch.value / std::sqrt(static_cast<double>(n)) ==
              doctest::Approx(bounds::ratio_floor()).epsilon(1e-13));
        CHECK(ch.value < ch.intermediate); // final is strictly below for all k >= 0
    }

    CHECK_THROWS_AS((void)bounds::chain_bound(100, 332, c), dimension_error);
}

TEST_CASE("ratio floor and guarantee") {
    CHECK(bounds::ratio_floor() == doctest::Approx(0.5012422).epsilon(1e-6));

    const bounds::RatioGuarantee g1 = bounds::ratio_guarantee(1);
    CHECK(g1.satisfied_by == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-15));

    // At 663 the best closed form is the gap bound (sqrt(667)-3)/sqrt(1326).
    const bounds::RatioGuarantee g663 = bounds::ratio_guarantee(663);
    CHECK(g663.satisfied_by ==
          doctest::Approx((std::sqrt(667.0) - 3.0) / std::sqrt(1326.0)).epsilon(1e-14));

    for (std::size_t n = 1; n <= 10000; ++n) {
        const bounds::RatioGuarantee g = bounds::ratio_guarantee(n);
        CHECK(g.satisfied_by > g.floor_constant);
    }
}

TEST_CASE("bound report composition") {
    OrderRegistry reg;

    const bounds::BoundReport r7 = bounds::bound_report(7, reg);
    REQUIRE(r7.hadamard_k.has_value());
    CHECK(*r7.hadamard_k == 1);
    CHECK(*r7.hadamard_gap == r7.upper);
    CHECK(r7.best_lower == r7.upper);
    CHECK(!r7.chain.has_value());

    // Order 92 has no recipe, so dimension 91 reaches for order 96.
    const bounds::BoundReport r91 = bounds::bound_report(91, reg);
    REQUIRE(r91.hadamard_k.has_value());
    CHECK(*r91.hadamard_k == 5);

    const bounds::BoundReport r332 = bounds::bound_report(332, reg);
    CHECK(r332.chain.has_value());
    CHECK(r332.chain_intermediate.has_value());

    for (std::size_t n = 1; n <= 10000; n += 7) {
        const bounds::BoundReport r = bounds::bound_report(n, reg);
        CHECK(r.best_lower <= r.upper);
        CHECK(r.best_lower >= r.fourier_basic);
    }
}
