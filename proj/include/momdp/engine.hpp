#pragma once

#include "momdp/geometry.hpp"
#include "momdp/mdp.hpp"
#include "momdp/types.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace momdp {

enum class EngineStatus { Converged, QueryBudgetExhausted, ViNotConverged, Degenerate };

std::string engine_status_name(EngineStatus status);

struct QueryRecord {
    WeightVector w;
    Point point; // normalized (maximizing) orientation
    double scalar = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
};

struct EngineConfig {
    double epsilon = 1e-3;
    std::size_t max_queries = 64; // must be >= k
    double vi_delta = 1e-8;
    std::size_t vi_max_iters = 1000000;
    double box_margin = 1e-6;
};

/// The two approximations and the query history. Points and halfspaces live in
/// normalized (all-maximizing) orientation; under_points are deduplicated and
/// lexicographically sorted. Invariants: every under point satisfies every
/// halfspace within 1e-6, each logged point supports its own halfspace
/// (w.point = b), and status Converged implies gap <= epsilon.
struct ParetoApproximation {
    std::size_t k = 0;
    std::vector<Point> under_points;
    std::vector<Halfspace> halfspaces;
    std::vector<QueryRecord> query_log;
    double gap = 0.0;
    double epsilon = 0.0;
    EngineStatus status = EngineStatus::Converged;
    Point box_lower;
    Point box_upper;
};

/// Refinement loop: query the k unit weights, then repeatedly compare the hull
/// of achieved points against the halfspace intersection and query the
/// suggested weight of the largest gap until gap <= epsilon, the query budget
/// runs out, or the solver fails to converge. k = 1 short-circuits to a single
/// query with gap 0.
ParetoApproximation approximate_pareto(const NormalizedObjectives& norm,
                                       const EngineConfig& config = {});

enum class Achievability { Achievable, NotAchievable, Unknown };

/// Decides a target vector (normalized orientation) against the approximation:
/// Achievable inside the downward closure of the under set, NotAchievable when
/// some halfspace is violated by more than 1e-9, Unknown in the gap.
Achievability query_achievability(const ParetoApproximation& approx, const Point& target);

} // namespace momdp
