#include "mdt/triangulation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mdt/convex_hull.hpp"
#include "mdt/predicates.hpp"

namespace mdt {

bool Triangulation::contains(const Edge& e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

Triangulation::Adjacency Triangulation::adjacency(int n) const {
  Adjacency adj;
  adj.offsets.assign(n + 1, 0);
  for (const Edge& e : edges) {
    ++adj.offsets[e.a + 1];
    ++adj.offsets[e.b + 1];
  }
  for (int i = 0; i < n; ++i) adj.offsets[i + 1] += adj.offsets[i];
  adj.targets.resize(2 * edges.size());
  std::vector<int> cursor(adj.offsets.begin(), adj.offsets.end() - 1);
  for (const Edge& e : edges) {
    adj.targets[cursor[e.a]++] = e.b;
    adj.targets[cursor[e.b]++] = e.a;
  }
  return adj;
}

void sort_edges(std::vector<Edge>& edges) {
  std::sort(edges.begin(), edges.end());
}

int triangulation_edge_count(int n, int hull_boundary) {
  return 3 * n - hull_boundary - 3;
}

bool edge_avoids_points(const Points& pts, int a, int b) {
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    if (i == a || i == b) continue;
    if (point_on_segment(pts[i], pts[a], pts[b])) return false;
  }
  return true;
}

void verify_triangulation(const Points& pts, const std::vector<Edge>& edges) {
  const int n = static_cast<int>(pts.size());
  auto fail = [](const std::string& msg) { throw std::logic_error("triangulation check: " + msg); };

  std::vector<Edge> sorted = edges;
  sort_edges(sorted);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const Edge& e = sorted[i];
    if (e.a < 0 || e.b >= n || e.a >= e.b) fail("malformed edge");
    if (i > 0 && sorted[i - 1] == e) fail("duplicate edge");
    if (!edge_avoids_points(pts, e.a, e.b))
      fail("edge " + std::to_string(e.a) + "-" + std::to_string(e.b) +
           " passes through another point");
  }

  // Pairwise crossing test with a bounding-box prefilter.
  struct Box {
    double xlo, xhi, ylo, yhi;
  };
  std::vector<Box> boxes(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const Point& p = pts[sorted[i].a];
    const Point& q = pts[sorted[i].b];
    boxes[i] = {std::min(p.x, q.x), std::max(p.x, q.x), std::min(p.y, q.y),
                std::max(p.y, q.y)};
  }
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (boxes[i].xhi < boxes[j].xlo || boxes[j].xhi < boxes[i].xlo ||
          boxes[i].yhi < boxes[j].ylo || boxes[j].yhi < boxes[i].ylo)
        continue;
      if (segments_cross(pts[sorted[i].a], pts[sorted[i].b], pts[sorted[j].a],
                         pts[sorted[j].b]))
        fail("edges " + std::to_string(sorted[i].a) + "-" +
             std::to_string(sorted[i].b) + " and " +
             std::to_string(sorted[j].a) + "-" + std::to_string(sorted[j].b) +
             " cross");
    }
  }

  int expect = triangulation_edge_count(n, hull_boundary_count(pts));
  if (static_cast<int>(sorted.size()) != expect)
    fail("edge count " + std::to_string(sorted.size()) + ", expected " +
         std::to_string(expect));
}

}  // namespace mdt
