#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "simcube/bounds.hpp"
#include "simcube/hadamard.hpp"
#include "simcube/ohat.hpp"

using namespace simcube;

namespace {
double edge_of(const OhatMatrix& a) { return 1.0 / (std::sqrt(2.0) * a.norm()); }
} // namespace

TEST_CASE("from_hadamard normalizes rows and scales") {
    const OhatMatrix o2 = from_hadamard(sylvester(1));
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(o2.body()(0, 0) == s);
    CHECK(o2.body()(0, 1) == s);
    CHECK(o2.body()(1, 0) == s);
    CHECK(o2.body()(1, 1) == -s);
    CHECK(o2.norm() == s);

    OrderRegistry reg;
    const OhatMatrix o8 = from_hadamard(reg.generate(8));
    CHECK(o8.norm() == 1.0 / std::sqrt(8.0));
    CHECK(edge_of(o8) == doctest::Approx(2.0).epsilon(1e-13)); // attains the order-8 optimum

    const OhatMatrix o4 = from_hadamard(reg.generate(4));
    CHECK(edge_of(o4) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));

    // Paley seeds have -1 entries in column 0; the row flip must fix them.
    const OhatMatrix o12 = from_hadamard(reg.generate(12));
    for (std::size_t i = 0; i < 12; ++i)
        CHECK(o12.body()(i, 0) == doctest::Approx(1.0 / std::sqrt(12.0)).epsilon(1e-15));
    CHECK(o12.check_invariants());

    HadamardMatrix bad;
    bad.order = 2;
    bad.entries = {1, 1, 1, 1};
    CHECK_THROWS_AS((void)from_hadamard(bad), invariant_error);
}

TEST_CASE("fourier construction") {
    // n = 4, theta = pi/4: every entry is +-1/2.
    const OhatMatrix f4 = fourier(4, PhaseChoice{std::numbers::pi / 4.0});
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(std::fabs(f4.body()(i, j)) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(f4.norm() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(f4.check_invariants());

    // n = 3, theta = pi/4: norm is sqrt(2/3) cos(pi/12), and the induced edge
    // matches the closed form sqrt(3)/(2 cos(pi/12)).
    const OhatMatrix f3 = fourier(3, PhaseChoice{std::numbers::pi / 4.0});
    CHECK(f3.norm() ==
          doctest::Approx(std::sqrt(2.0 / 3.0) * std::cos(std::numbers::pi / 12.0)).epsilon(1e-14));
    CHECK(edge_of(f3) ==
          doctest::Approx(std::sqrt(3.0) / (2.0 * std::cos(std::numbers::pi / 12.0)))
              .epsilon(1e-14));

    CHECK_THROWS_AS((void)fourier(4, PhaseChoice{}), dimension_error);
    CHECK_THROWS_AS((void)fourier(1, PhaseChoice{}), dimension_error);
}

TEST_CASE("fourier norm bound and membership for random phases") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::uniform_int_distribution<std::size_t> dims(2, 48);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = dims(rng);
        PhaseChoice phases((n - 1) / 2);
        for (double& t : phases) t = angle(rng);
        const OhatMatrix a = fourier(n, phases);
        CHECK(a.norm() <= std::sqrt(2.0 / static_cast<double>(n)) + 1e-12);
        double res = 0.0;
        CHECK(a.check_invariants(&res));
        CHECK(res <= 1e-10 * static_cast<double>(n));
    }
}

TEST_CASE("optimal phases match the closed-form case split") {
    CHECK(optimal_phases(4) == PhaseChoice{std::numbers::pi / 4.0});
    CHECK(optimal_phases(8) == PhaseChoice(3, std::numbers::pi / 8.0));
    CHECK(optimal_phases(6) == PhaseChoice(2, std::numbers::pi / 4.0));
    CHECK(optimal_phases(5) == PhaseChoice(2, std::numbers::pi / 4.0));

    // Achieved value equals the closed form for each n through 64 (1e-9).
    for (std::size_t n = 3; n <= 64; ++n) {
        const OhatMatrix a = fourier(n, optimal_phases(n));
        const double achieved = edge_of(a);
        const double expect = bounds::fourier_refined(n - 1);
        CHECK(std::fabs(achieved - expect) <= 1e-9 * expect);
        CHECK(std::fabs(a.norm() - fourier_optimal_norm(n)) <= 1e-12);
    }
}

TEST_CASE("doubling halves the norm exactly") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<std::size_t> dims(2, 24);
        const OhatMatrix a = random_ohat(dims(rng), rng());
        const OhatMatrix d = doubled(a);
        CHECK(d.size() == 2 * a.size());
        CHECK(std::fabs(d.norm() - a.norm() / std::sqrt(2.0)) <= 1e-15 * d.norm());
    }
    const OhatMatrix d2 = doubled(from_hadamard(sylvester(1)));
    CHECK(d2.norm() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(d2.check_invariants());
}

TEST_CASE("reduce produces a valid member one size down") {
    OrderRegistry reg;
    const OhatMatrix o4 = from_hadamard(reg.generate(4));
    const OhatMatrix r = reduce(o4, 0, 1);
    REQUIRE(r.size() == 3);
    CHECK(r.residual() <= 1e-13);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(r.body()(i, 0) == 1.0 / std::sqrt(3.0));

    CHECK_THROWS_AS((void)reduce(o4, 4, 1), dimension_error);
    CHECK_THROWS_AS((void)reduce(o4, 0, 0), dimension_error);
    CHECK_THROWS_AS((void)reduce(from_hadamard(sylvester(1)), 0, 1), dimension_error);
}

TEST_CASE("reduce inequality holds for every pivot of random members") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 8; ++trial) {
        const std::size_t m = 5 + 2 * static_cast<std::size_t>(trial);
        const OhatMatrix a = random_ohat(m, rng());
        const double inv_a = 1.0 / a.norm();
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 1; c < m; ++c) {
                const double norm = detail::reduced_norm(a, r, c);
                CHECK(1.0 / norm - inv_a + 1.0 > 0.0);
            }
    }
}

TEST_CASE("reduce_best modes") {
    OrderRegistry reg;
    const OhatMatrix seed = from_hadamard(reg.generate(20));
    ReduceChoice heuristic_choice, exhaustive_choice;
    const OhatMatrix rh = reduce_best(seed, PivotMode::heuristic, &heuristic_choice);
    const OhatMatrix rx = reduce_best(seed, PivotMode::exhaustive, &exhaustive_choice);
    CHECK(rx.norm() <= rh.norm());

    // Deterministic across calls.
    ReduceChoice again;
    const OhatMatrix rx2 = reduce_best(seed, PivotMode::exhaustive, &again);
    CHECK(again.row == exhaustive_choice.row);
    CHECK(again.col == exhaustive_choice.col);
    CHECK(rx2.body().data() == rx.body().data());
}

TEST_CASE("random sampler meets the membership invariants") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        const OhatMatrix a = random_ohat(16, seed);
        double res = 0.0;
        CHECK(a.check_invariants(&res));
        CHECK(res <= 1e-10 * 16);
        CHECK(a.norm() >= 0.25); // 1/sqrt(16)
    }
}

TEST_CASE("first column deletion preserves the norm of every construction") {
    OrderRegistry reg;
    std::vector<OhatMatrix> members;
    members.push_back(from_hadamard(reg.generate(8)));
    members.push_back(fourier(9, optimal_phases(9)));
    members.push_back(doubled(fourier(5, optimal_phases(5))));
    members.push_back(reduce_best(from_hadamard(reg.generate(12)), PivotMode::heuristic));
    for (const OhatMatrix& a : members) {
        const double full = a.norm();
        const double trimmed = max_norm(delete_first_column(a.body()));
        CHECK(std::fabs(full - trimmed) <= 1e-15 * full);
    }
}
