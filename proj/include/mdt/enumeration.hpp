#pragma once

#include <vector>

#include "mdt/point.hpp"
#include "mdt/quadtree.hpp"
#include "mdt/rational.hpp"

namespace mdt {

// Candidate edge after postprocessing: the ids in `crossing` index the
// returned candidate vector itself. An edge nothing crosses is `certain`:
// every maximal crossing-free edge set must contain it.
struct CandidateEdge {
  Edge edge;
  std::vector<int> crossing;
  Interval threshold{1.0, 1.0};
  bool certain = false;
};

struct SourceStats {
  long points_visited = 0;
  long nodes_visited = 0;
  long nodes_pruned = 0;
  long sectors_created = 0;
  long reported = 0;
};

struct EnumerationResult {
  std::vector<Edge> candidates;
  std::vector<SourceStats> per_source;
  int k = 0;  // most reported points over all sources
};

struct NeighborHeuristic {
  int nearest = 6;  // nearest neighbors of the reported point
  int angular = 4;  // previously reported points closest in angle
};

// Collects a superset of every edge that could appear in a triangulation
// with dilation below rho, by running a sector-pruned incremental search
// from every point. A pair survives only if neither endpoint's search
// excluded it.
EnumerationResult enumerate_candidates(const Points& pts, const Quadtree& tree,
                                       const Rational& rho,
                                       const NeighborHeuristic& heur = {});

// Exact quartic-time reference: keeps exactly the point-avoiding segments
// st for which every crossing pair (l, r) satisfies
// min{|ls|+|sr|, |lt|+|tr|} < rho * |lr| strictly. Guarded by a size cap.
std::vector<Edge> brute_force_candidates(const Points& pts, const Rational& rho,
                                         int cap = 400);

// Pairwise stage: drops segments through points, computes crossing sets,
// and eliminates every candidate some crossing pair certifies against.
// Certificate validity never depends on the other edge's candidacy, so a
// single sweep over the original crossing pairs is already the fixpoint.
std::vector<CandidateEdge> postprocess(const Points& pts,
                                       const std::vector<Edge>& candidates,
                                       const Rational& rho);

// Fills per-edge dilation thresholds: the largest min-detour ratio over
// the edge's crossing set, as an enclosing interval; 1 when nothing
// crosses.
void compute_thresholds(const Points& pts, std::vector<CandidateEdge>& edges);

// Instance lower bound from the thresholds, downward rounded: the best of
// the per-edge crossing bound, the counting bound over the 3n-h-3 edges
// every triangulation has, and the connectivity bound. When no
// triangulation below rho can exist at all (too few candidates, or they
// cannot connect the points), the bound is rho itself.
Interval lower_bound(const Points& pts, const std::vector<CandidateEdge>& edges,
                     const Rational& rho);

}  // namespace mdt
