#pragma once

#include <vector>

#include "mdt/triangulation.hpp"

namespace mdt {

// Delaunay triangulation by lexicographic incremental insertion with
// Lawson legalization. Cocircular ties are broken by a symbolic
// perturbation ordered by point id, so the result is deterministic for a
// fixed input order. Throws std::invalid_argument for fewer than 3
// points, duplicate points, or an all-collinear set.
Triangulation delaunay(const Points& pts);

// Delaunay triangulation constrained to contain the given edges. Each
// constraint must be a valid edge (not through a third point) and the
// constraints must be pairwise non-crossing; the corridor of triangles
// crossed by each constraint is retriangulated cavity by cavity.
Triangulation constrained_delaunay(const Points& pts,
                                   const std::vector<Edge>& constraints);

}  // namespace mdt
