#include <doctest.h>

#include <cmath>

#include "simcube/bounds.hpp"
#include "simcube/planner.hpp"

using namespace simcube;

TEST_CASE("plan picks the direct seed at covered orders") {
    OrderRegistry reg;
    Planner planner(reg);
    const ConstructionPlan p7 = planner.plan(7);
    CHECK(p7.strategy == "hadamard");
    REQUIRE(p7.steps.size() == 1);
    CHECK(p7.steps[0].order == 8);
    CHECK(p7.achieved_edge == doctest::Approx(2.0).epsilon(1e-13));

    // Order 4 and the four-phase trigonometric matrix tie at norm 1/2; the
    // strategy order resolves the tie toward the Hadamard seed.
    const ConstructionPlan p3 = planner.plan(3);
    CHECK(p3.strategy == "hadamard");
    CHECK(p3.achieved_edge == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
}

TEST_CASE("plan at dimension 6 dominates the gap bound") {
    OrderRegistry reg;
    Planner planner(reg);
    const ConstructionPlan p = planner.plan(6);
    CHECK(p.achieved_edge >= (std::sqrt(8.0) - 1.0) / std::sqrt(2.0) - 1e-9);
    CHECK(p.achieved_edge <= bounds::upper_bound(6) + 1e-12);
}

TEST_CASE("plan at dimension 1 is the segment") {
    OrderRegistry reg;
    Planner planner(reg);
    const ConstructionPlan p = planner.plan(1);
    CHECK(p.achieved_edge == doctest::Approx(1.0).epsilon(1e-14));
    const SimplexEmbedding s = extract(planner.replay(p));
    CHECK(s.vertices[0][0] == 0.5);
    CHECK(s.vertices[1][0] == -0.5);
    CHECK_THROWS_AS((void)planner.plan(0), dimension_error);
}

TEST_CASE("replay reproduces the achieved norm bit for bit") {
    OrderRegistry reg;
    Planner planner(reg);
    for (std::size_t n : {2u, 6u, 13u, 29u, 91u}) {
        const ConstructionPlan p = planner.plan(n);
        const OhatMatrix a = planner.replay(p);
        CHECK(a.norm() == p.achieved_norm);
        const OhatMatrix b = planner.replay(p);
        CHECK(a.body().data() == b.body().data()); // idempotent
    }
}

TEST_CASE("replay output size follows the target dimension") {
    OrderRegistry reg;
    Planner planner(reg);
    for (std::size_t n = 1; n <= 50; ++n) {
        const ConstructionPlan p = planner.plan(n);
        CHECK(planner.replay(p).size() == n + 1);
        CHECK(p.achieved_edge == doctest::Approx(1.0 / (std::sqrt(2.0) * p.achieved_norm)));
        CHECK(p.achieved_edge >= p.bound_predicted - 1e-9);
    }
}

TEST_CASE("plans are deterministic across planner instances") {
    OrderRegistry reg;
    Planner a(reg), b(reg);
    for (std::size_t n : {2u, 6u, 14u, 44u, 91u, 112u}) {
        const ConstructionPlan pa = a.plan(n);
        const ConstructionPlan pb = b.plan(n);
        CHECK(pa.strategy == pb.strategy);
        CHECK(pa.achieved_norm == pb.achieved_norm);
        REQUIRE(pa.steps.size() == pb.steps.size());
        for (std::size_t i = 0; i < pa.steps.size(); ++i) CHECK(pa.steps[i] == pb.steps[i]);
    }
}

TEST_CASE("dominance over the closed-form bounds") {
    OrderRegistry reg;
    Planner planner(reg);
    for (std::size_t n = 1; n <= 64; ++n) {
        const ConstructionPlan p = planner.plan(n);
        CHECK(p.achieved_edge >= bounds::fourier_refined(n) - 1e-9);
        const bounds::BoundReport r = bounds::bound_report(n, reg);
        if (r.hadamard_gap) CHECK(p.achieved_edge >= *r.hadamard_gap - 1e-9);
    }
}

TEST_CASE("forced strategies") {
    OrderRegistry reg;
    PlannerConfig cfg;
    cfg.force_strategy = "fourier";
    Planner fp(reg, cfg);
    const ConstructionPlan pf = fp.plan(7);
    CHECK(pf.strategy == "fourier");
    CHECK(pf.achieved_edge == doctest::Approx(bounds::fourier_refined(7)).epsilon(1e-9));

    cfg.force_strategy = "hadamard";
    Planner hp(reg, cfg);
    CHECK_THROWS_AS((void)hp.plan(5), invalid_plan_error); // order 6 is not covered

    cfg.force_strategy = "double";
    Planner dp(reg, cfg);
    const ConstructionPlan pd = dp.plan(9);
    CHECK(pd.strategy == "double");
    CHECK(pd.steps.back().op == PlanStep::Op::doubled);
}

TEST_CASE("exhaustive pivot config never loses to the heuristic") {
    OrderRegistry reg;
    Planner heuristic(reg);
    PlannerConfig cfg;
    cfg.pivot_mode = PivotMode::exhaustive;
    Planner exhaustive(reg, cfg);
    for (std::size_t n : {6u, 10u, 14u, 22u}) {
        const ConstructionPlan ph = heuristic.plan(n);
        const ConstructionPlan px = exhaustive.plan(n);
        CHECK(px.achieved_edge >= ph.achieved_edge - 1e-9);
        const OhatMatrix replayed = exhaustive.replay(px);
        CHECK(replayed.norm() == px.achieved_norm);
    }
}

TEST_CASE("phase grid search never worsens the fourier candidate") {
    OrderRegistry reg;
    PlannerConfig plain_cfg, grid_cfg;
    plain_cfg.force_strategy = "fourier";
    grid_cfg.force_strategy = "fourier";
    grid_cfg.phase_grid = true;
    Planner plain(reg, plain_cfg);
    Planner grid(reg, grid_cfg);
    for (std::size_t n : {4u, 9u, 16u, 28u}) {
        const ConstructionPlan pp = plain.plan(n);
        const ConstructionPlan pg = grid.plan(n);
        CHECK(pg.achieved_norm <= pp.achieved_norm + 1e-15);
        CHECK(grid.replay(pg).norm() == pg.achieved_norm);
    }
}

TEST_CASE("malformed plans fail replay") {
    OrderRegistry reg;
    ConstructionPlan bad;
    bad.target_dim = 1;
    bad.steps = {PlanStep{.op = PlanStep::Op::hadamard, .order = 2},
                 PlanStep{.op = PlanStep::Op::reduce}};
    CHECK_THROWS_AS((void)replay_plan(bad, reg), invalid_plan_error);

    ConstructionPlan empty;
    empty.target_dim = 3;
    CHECK_THROWS_AS((void)replay_plan(empty, reg), invalid_plan_error);

    ConstructionPlan wrong_size;
    wrong_size.target_dim = 5;
    wrong_size.steps = {PlanStep{.op = PlanStep::Op::hadamard, .order = 4}};
    CHECK_THROWS_AS((void)replay_plan(wrong_size, reg), invalid_plan_error);
}

TEST_CASE("sweep rows are consistent") {
    OrderRegistry reg;
    Planner planner(reg);
    const std::vector<SweepRow> rows = planner.sweep(1, 40);
    REQUIRE(rows.size() == 40);
    for (const SweepRow& row : rows) {
        const double upper_ratio =
            std::sqrt((static_cast<double>(row.n) + 1.0) / (2.0 * static_cast<double>(row.n)));
        CHECK(row.edge_ratio <= upper_ratio + 1e-12);
        CHECK(row.edge_ratio > 0.5012);
        CHECK(row.best_lower <= row.upper);
        if (reg.covered(static_cast<int>(row.n) + 1))
            CHECK(row.edge_ratio == doctest::Approx(upper_ratio).epsilon(1e-12));
    }
    CHECK_THROWS_AS((void)planner.sweep(5, 2), dimension_error);
}

TEST_CASE("every plan's matrix passes membership and geometry checks") {
    OrderRegistry reg;
    Planner planner(reg);
    for (std::size_t n : {2u, 5u, 10u, 22u, 45u, 88u}) {
        const OhatMatrix a = planner.replay(planner.plan(n));
        CHECK(a.check_invariants());
        CHECK(verify(extract(a)).pass);
    }
}
