#include "mdt/convex_hull.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "mdt/predicates.hpp"

namespace mdt {

std::vector<int> convex_hull(const Points& pts) {
  const int n = static_cast<int>(pts.size());
  if (n < 3) throw std::invalid_argument("convex_hull: need at least 3 points");
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int i, int j) {
    return pts[i].x < pts[j].x || (pts[i].x == pts[j].x && pts[i].y < pts[j].y);
  });

  // Monotone chain, dropping collinear points (strict turns only).
  auto build = [&](auto begin, auto end) {
    std::vector<int> chain;
    for (auto it = begin; it != end; ++it) {
      while (chain.size() >= 2 &&
             orientation(pts[chain[chain.size() - 2]], pts[chain.back()],
                         pts[*it]) <= 0)
        chain.pop_back();
      chain.push_back(*it);
    }
    return chain;
  };
  std::vector<int> lower = build(idx.begin(), idx.end());
  std::vector<int> upper = build(idx.rbegin(), idx.rend());
  if (lower.size() < 2 || (lower.size() == 2 && upper.size() == 2 &&
                           lower[0] == upper[1] && lower[1] == upper[0])) {
    // Both chains degenerate to the two lexicographic extremes.
    throw std::invalid_argument("convex_hull: all points collinear");
  }
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  if (lower.size() < 3) throw std::invalid_argument("convex_hull: all points collinear");
  return lower;
}

int hull_boundary_count(const Points& pts, const std::vector<int>& hull) {
  std::unordered_set<int> corners(hull.begin(), hull.end());
  int count = static_cast<int>(hull.size());
  const int h = static_cast<int>(hull.size());
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    if (corners.count(i)) continue;
    for (int k = 0; k < h; ++k) {
      const Point& a = pts[hull[k]];
      const Point& b = pts[hull[(k + 1) % h]];
      if (point_on_segment(pts[i], a, b)) {
        ++count;
        break;
      }
    }
  }
  return count;
}

int hull_boundary_count(const Points& pts) {
  return hull_boundary_count(pts, convex_hull(pts));
}

}  // namespace mdt
