#pragma once

#include "momdp/types.hpp"

#include <cstddef>
#include <vector>

namespace momdp {

/// Absolute tolerance for all geometric predicates.
inline constexpr double kGeomTol = 1e-9;

/// A facet of a hull: corner indices in cyclic order (outward winding for
/// dim 3, counterclockwise for dim 2 edges), outward unit-L1 normal, offset.
struct HullFacet {
    std::vector<std::size_t> vertices;
    Point normal; // |n|_1 = 1, outward
    double offset = 0.0;
};

/// Convex hull of a point set in dimension 2 or 3.
///
/// Nondegenerate hulls list exactly the extreme points (lexicographically
/// sorted) and maximal polygon facets (coplanar triangles merged, cycles
/// starting at their lexicographically smallest corner). Degenerate input
/// yields affine_dim < dim with the lower-dimensional extreme points; a flat
/// point set in dimension 3 carries its polygon as a single facet.
struct Hull {
    int dim = 0;        // requested dimension, 2 or 3
    int affine_dim = 0; // affine dimension actually found
    std::vector<Point> vertices;
    std::vector<HullFacet> facets;

    bool degenerate() const { return affine_dim < dim; }
};

Hull convex_hull(std::vector<Point> points, int dim);

/// All vertices of the intersection of the halfspaces with the box
/// [lower, upper], by enumeration of dim-subsets of bounding planes.
/// Near-singular subsets (pivot < 1e-12) are skipped. Output deduplicated at
/// 1e-9 and sorted lexicographically; empty when the region is empty.
std::vector<Point> halfspace_vertices(const std::vector<Halfspace>& halfspaces,
                                      const Point& lower, const Point& upper,
                                      int dim);

/// Halfspace description of the downward closure of the hull: facet normals
/// with nonnegative components, edge extrusions along the coordinate axes, and
/// per-axis bounds, each with the support-function offset.
std::vector<Halfspace> downward_closure_halfspaces(const Hull& hull);

/// True when q lies in the downward closure of the hull within tol.
bool in_downward_closure(const Point& q, const Hull& hull, double tol = kGeomTol);

/// Euclidean distance from q to the downward closure of the hull; optionally
/// reports the nearest point of the closure.
double distance_to_downward_closure(const Point& q, const Hull& hull,
                                    Point* projection = nullptr);

struct GapResult {
    double gap = 0.0;
    Point witness;
    WeightVector suggested_weight;
};

/// Progress measure between the approximations: max over over-approximation
/// vertices of the distance to the downward closure of the under set, the
/// vertex attaining it, and the separating weight (L1-normalized projection
/// residual at the witness; uniform when the gap is zero).
GapResult pareto_gap(const Hull& under, const std::vector<Point>& over_vertices);

/// Corner indices of a dim-2 hull in counterclockwise cyclic order.
std::vector<std::size_t> polygon_cycle(const Hull& hull);

} // namespace momdp
