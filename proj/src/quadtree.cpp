#include "mdt/quadtree.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace mdt {

Quadtree::Quadtree(const Points& pts, int leaf_capacity)
    : pts_(pts), leaf_capacity_(leaf_capacity) {
  if (pts.empty()) throw std::invalid_argument("quadtree: empty point set");
  if (leaf_capacity < 1) throw std::invalid_argument("quadtree: bad capacity");
  ids_.resize(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) ids_[i] = static_cast<int>(i);
  nodes_.reserve(2 * pts.size() / leaf_capacity + 4);
  build(0, static_cast<int>(pts.size()));
}

int Quadtree::build(int first, int count) {
  int id = static_cast<int>(nodes_.size());
  nodes_.push_back({});
  {
    Node& nd = nodes_.back();
    nd.first = first;
    nd.count = count;
    nd.child[0] = nd.child[1] = nd.child[2] = nd.child[3] = -1;
    nd.leaf = true;
    nd.x0 = nd.x1 = pts_[first].x;
    nd.y0 = nd.y1 = pts_[first].y;
    for (int k = first + 1; k < first + count; ++k) {
      nd.x0 = std::min(nd.x0, pts_[k].x);
      nd.x1 = std::max(nd.x1, pts_[k].x);
      nd.y0 = std::min(nd.y0, pts_[k].y);
      nd.y1 = std::max(nd.y1, pts_[k].y);
    }
  }
  if (count <= leaf_capacity_) return id;

  const double mx = (nodes_[id].x0 + nodes_[id].x1) / 2;
  const double my = (nodes_[id].y0 + nodes_[id].y1) / 2;
  auto quadrant = [&](const Point& p) {
    return (p.x >= mx ? 1 : 0) + (p.y >= my ? 2 : 0);
  };

  int cnt[4] = {0, 0, 0, 0};
  for (int k = first; k < first + count; ++k) ++cnt[quadrant(pts_[k])];
  // Numerically coincident points can defeat the midpoint split; keep an
  // oversized leaf rather than recurse without progress.
  for (int q = 0; q < 4; ++q)
    if (cnt[q] == count) return id;

  int start[4], fill[4];
  start[0] = first;
  for (int q = 1; q < 4; ++q) start[q] = start[q - 1] + cnt[q - 1];
  for (int q = 0; q < 4; ++q) fill[q] = start[q];

  Points tmp_p(pts_.begin() + first, pts_.begin() + first + count);
  std::vector<int> tmp_i(ids_.begin() + first, ids_.begin() + first + count);
  for (int k = 0; k < count; ++k) {
    int q = quadrant(tmp_p[k]);
    pts_[fill[q]] = tmp_p[k];
    ids_[fill[q]] = tmp_i[k];
    ++fill[q];
  }

  nodes_[id].leaf = false;
  for (int q = 0; q < 4; ++q) {
    if (cnt[q] == 0) continue;
    int c = build(start[q], cnt[q]);  // may reallocate nodes_
    nodes_[id].child[q] = c;
  }
  return id;
}

}  // namespace mdt
