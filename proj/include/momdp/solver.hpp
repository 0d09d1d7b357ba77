#pragma once

#include "momdp/mdp.hpp"
#include "momdp/types.hpp"

#include <cstdint>

namespace momdp {

/// Any state whose scalarized value magnitude passes this bound aborts value
/// iteration with DivergenceError.
inline constexpr double kDivergenceLimit = 1e12;

struct QueryResult {
    Point point;              // value vector at the initial state, user-facing orientation
    double scalar_value = 0;  // w . X(initial) in normalized (maximizing) orientation
    Strategy strategy;
    std::size_t iterations_used = 0;
    bool converged = false;
};

/// Scalarized value iteration over the k-vector of objective values. Each
/// sweep picks per state the action maximizing w.(r(s,a) + sum P(s,a,t)X(t))
/// with lowest-index tie-break, then updates the full vector componentwise.
/// Stops when the scalarized change drops below delta (sup over states) or
/// after max_iters sweeps (converged=false). Requires unbounded objectives.
QueryResult weighted_value_iteration(const NormalizedObjectives& norm,
                                     const WeightVector& w,
                                     double delta = 1e-8,
                                     std::size_t max_iters = 1000000);

/// Exactly `horizon` backups of the same argmax rule from X=0; the strategy is
/// the per-remaining-step action table. All objectives must carry this horizon.
QueryResult finite_horizon_weighted_vi(const NormalizedObjectives& norm,
                                       const WeightVector& w,
                                       std::uint32_t horizon);

/// Value vector of a fixed strategy at the initial state, user-facing
/// orientation. Unbounded objectives: iteration on the induced chain to
/// tolerance 1e-10; bounded objectives: exactly horizon sweeps.
Point evaluate_strategy(const NormalizedObjectives& norm, const Strategy& sigma);

} // namespace momdp
