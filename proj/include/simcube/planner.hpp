#pragma once

#include <list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "simcube/bounds.hpp"
#include "simcube/ohat.hpp"
#include "simcube/simplex.hpp"

namespace simcube {

struct PlanStep {
    enum class Op { hadamard, fourier, doubled, reduce };
    Op op = Op::hadamard;
    int order = 0;        // hadamard: seed order
    std::size_t size = 0; // fourier: matrix size
    PhaseChoice phases;   // fourier
    PivotMode pivot = PivotMode::heuristic; // reduce

    bool operator==(const PlanStep&) const = default;
};

/// A linear chain of steps producing an orthogonal matrix of size
/// target_dim + 1. Replaying the steps reproduces achieved_norm bit for bit.
struct ConstructionPlan {
    std::size_t target_dim = 0;
    std::vector<PlanStep> steps;
    double achieved_norm = 0.0;
    double achieved_edge = 0.0;    // 1/(sqrt(2) * achieved_norm)
    double bound_predicted = 0.0;  // closed-form floor for this strategy
    std::string strategy;          // hadamard | reduce | double | fourier
};

struct PlannerConfig {
    PivotMode pivot_mode = PivotMode::heuristic;
    std::size_t exhaustive_limit = 128; // exhaustive pivots only at sizes <= this
    bool phase_grid = false;            // per-column phase grid search (report-only)
    std::size_t phase_grid_size = 64;
    std::optional<std::string> force_strategy; // restrict to one strategy name
};

struct SweepRow {
    std::size_t n = 0;
    double edge_length = 0.0;
    double edge_ratio = 0.0;
    double best_lower = 0.0;
    double upper = 0.0;
    std::string strategy;
};

/// Searches construction chains for each target dimension and keeps the one
/// with the smallest max-norm (longest edge). Candidates, in tie-break order:
///   (a) direct Hadamard seed when order n+1 is covered;
///   (b) nearest covered order above, followed by one reduction per step down;
///   (c) doubling of the half-size plan (plus one reduction when n+1 is odd);
///   (d) the trigonometric construction with optimal phases.
/// For n >= 664 only doubling chains are searched; they bottom out in the
/// directly constructible range.
class Planner {
public:
    Planner(const OrderRegistry& registry, PlannerConfig config = {});

    ConstructionPlan plan(std::size_t n);

    /// Execute a plan's steps through the public checked operations.
    OhatMatrix replay(const ConstructionPlan& p) const;

    std::vector<SweepRow> sweep(std::size_t n_from, std::size_t n_to);

    const PlannerConfig& config() const { return config_; }
    const OrderRegistry& registry() const { return registry_; }

private:
    struct Scored {
        std::vector<PlanStep> steps;
        double norm = 0.0;
        double bound = 0.0;
        std::string strategy;
    };

    const OrderRegistry& registry_;
    PlannerConfig config_;
    std::map<std::size_t, Scored> cache_; // winner by matrix size
    // Small LRU of scaled Hadamard seeds; adjacent target sizes reuse the same
    // few orders, and regenerating a large order re-runs its O(m^3) exact check.
    mutable std::list<std::pair<int, OhatMatrix>> seed_cache_;

    const OhatMatrix& seed_for(int order) const;

    const Scored& winner_for_size(std::size_t m);
    std::optional<Scored> direct_candidate(std::size_t m) const;
    std::optional<Scored> reduction_candidate(std::size_t m) const;
    std::optional<Scored> doubling_candidate(std::size_t m);
    std::optional<Scored> fourier_candidate(std::size_t m) const;
    PivotMode effective_pivot(std::size_t size) const;
    OhatMatrix execute(const std::vector<PlanStep>& steps, bool checked) const;
};

/// Free-standing replay for stored plans (validates step consistency).
OhatMatrix replay_plan(const ConstructionPlan& p, const OrderRegistry& registry);

} // namespace simcube
