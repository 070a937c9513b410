#pragma once

#include <vector>

#include "mdt/point.hpp"

namespace mdt {

// Strict convex hull: indices of the hull corners in counterclockwise
// order, starting from the lexicographically smallest point. Points lying
// on the interior of a hull edge are not included. Requires at least 3
// points, not all collinear; throws std::invalid_argument otherwise.
std::vector<int> convex_hull(const Points& pts);

// Number of input points on the hull boundary: hull corners plus points
// interior to hull edges. This is the h in the m = 3n - h - 3 edge count
// of a triangulation.
int hull_boundary_count(const Points& pts);
int hull_boundary_count(const Points& pts, const std::vector<int>& hull);

}  // namespace mdt
