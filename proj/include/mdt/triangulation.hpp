#pragma once

#include <string>
#include <vector>

#include "mdt/point.hpp"

namespace mdt {

// A triangulation of a point set, stored as a sorted list of canonical
// undirected edges. The point set itself lives elsewhere; edges refer to
// point indices.
struct Triangulation {
  std::vector<Edge> edges;

  bool contains(const Edge& e) const;
  // Neighbor lists (CSR layout) for path searches.
  struct Adjacency {
    std::vector<int> offsets;  // size n+1
    std::vector<int> targets;
  };
  Adjacency adjacency(int n) const;
};

void sort_edges(std::vector<Edge>& edges);

// Expected edge count of any triangulation of the set: 3n - h - 3, where
// h counts points on the convex hull boundary.
int triangulation_edge_count(int n, int hull_boundary);

// Verifies that `edges` is a triangulation of pts: pairwise crossing-free,
// no edge passes through a third point, no duplicates, and edge count
// equals 3n - h - 3 (which, for a crossing-free set of valid edges, is
// equivalent to maximality). Throws std::logic_error with a description
// on the first violation.
void verify_triangulation(const Points& pts, const std::vector<Edge>& edges);

// True iff segment (a,b) does not pass through any other point of pts.
bool edge_avoids_points(const Points& pts, int a, int b);

}  // namespace mdt
