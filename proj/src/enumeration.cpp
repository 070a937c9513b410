#include "mdt/enumeration.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "mdt/convex_hull.hpp"
#include "mdt/dead_sector.hpp"
#include "mdt/delaunay.hpp"
#include "mdt/ellipse.hpp"
#include "mdt/predicates.hpp"
#include "mdt/pseudo_angle.hpp"
#include "mdt/search.hpp"
#include "mdt/triangulation.hpp"

namespace mdt {

namespace {

std::uint64_t pair_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

// k nearest neighbors of every point, by exact distance order.
std::vector<std::vector<int>> nearest_lists(const Points& pts,
                                            const Quadtree& tree, int k) {
  const int n = static_cast<int>(pts.size());
  std::vector<std::vector<int>> out(n);
  for (int p = 0; p < n; ++p) {
    IncrementalSearch s(tree, pts[p]);
    while (auto ev = s.next()) {
      if (ev->kind != EventKind::PointReached) continue;
      if (ev->id == p) continue;
      out[p].push_back(ev->id);
      if (static_cast<int>(out[p].size()) >= k) {
        s.halt();
        break;
      }
    }
  }
  return out;
}

// Reported points of the running source search, ordered by their angle
// around the source, supporting closest-in-angle queries.
class AngleBook {
 public:
  void insert(const Rational& angle, int id) { by_angle_.emplace(angle, id); }

  void closest(const Rational& angle, int want, std::vector<int>* out) const {
    if (by_angle_.empty() || want <= 0) return;
    auto up = by_angle_.lower_bound({angle, -1});
    auto down = up;
    int half = (want + 1) / 2;
    for (int i = 0; i < half; ++i) {
      if (up == by_angle_.end()) up = by_angle_.begin();  // wrap
      out->push_back(up->second);
      ++up;
    }
    for (int i = 0; i < half; ++i) {
      if (down == by_angle_.begin()) down = by_angle_.end();  // wrap
      --down;
      out->push_back(down->second);
    }
  }

 private:
  std::set<std::pair<Rational, int>> by_angle_;
};

}  // namespace

EnumerationResult enumerate_candidates(const Points& pts, const Quadtree& tree,
                                       const Rational& rho,
                                       const NeighborHeuristic& heur) {
  const int n = static_cast<int>(pts.size());
  if (n < 3) throw std::invalid_argument("enumerate_candidates: need 3+ points");

  std::vector<std::vector<int>> nearest = nearest_lists(pts, tree, heur.nearest);
  Triangulation::Adjacency del = delaunay(pts).adjacency(n);

  EnumerationResult res;
  res.per_source.resize(n);
  std::unordered_map<std::uint64_t, int> sides;  // canonical pair -> report count

  for (int sp = 0; sp < n; ++sp) {
    SourceStats& st = res.per_source[sp];
    IncrementalSearch search(tree, pts[sp]);
    SectorCover cover;
    std::vector<char> popped(n, 0);
    std::vector<DeadSector> sectors;
    std::unordered_set<std::uint64_t> sector_pairs;
    AngleBook book;
    const Rational spx = rational_of(pts[sp].x), spy = rational_of(pts[sp].y);

    while (auto ev = search.next()) {
      if (ev->kind == EventKind::SectorActivated) {
        cover.insert(sectors[ev->id], popped);
      } else if (ev->kind == EventKind::NodeReached) {
        ++st.nodes_visited;
        // Prune only with no witness pending: an unseen witness could sit
        // anywhere at the current radius, including inside this node.
        if (cover.all_witnesses_popped()) {
          auto span = node_angular_span(pts[sp], tree.node(ev->id));
          bool covered = span ? cover.covers_arc(span->first, span->second)
                              : cover.full();
          if (covered) {
            const auto& nd = tree.node(ev->id);
            for (int i = nd.first; i < nd.first + nd.count; ++i)
              popped[tree.ids()[i]] = 1;
            search.prune_last_node();
            ++st.nodes_pruned;
            continue;
          }
        }
      } else {
        ++st.points_visited;
        const int t = ev->id;
        if (t == sp) {
          popped[t] = 1;
          continue;
        }
        Rational angle = pseudo_angle(rational_of(pts[t].x) - spx,
                                      rational_of(pts[t].y) - spy);
        bool excl = cover.excluded(t, angle);
        popped[t] = 1;
        cover.mark_popped(t);
        if (excl) continue;

        ++st.reported;
        ++sides[pair_key(sp, t)];

        // New sectors from the reported point paired with its interesting
        // neighbors: nearby points, Delaunay neighbors, and points this
        // search already reported at a similar angle.
        std::vector<int> qs = nearest[t];
        for (int i = del.offsets[t]; i < del.offsets[t + 1]; ++i)
          qs.push_back(del.targets[i]);
        book.closest(angle, heur.angular, &qs);
        for (int q : qs) {
          if (q == sp || q == t) continue;
          if (!sector_pairs.insert(pair_key(t, q)).second) continue;
          auto sec = make_dead_sector(pts[sp], t, pts[t], q, pts[q], rho);
          if (!sec) continue;
          int idx = static_cast<int>(sectors.size());
          sectors.push_back(*sec);
          search.add_activation(idx, sectors[idx].activation_key);
          ++st.sectors_created;
        }
        book.insert(angle, t);
      }
      if (cover.full() && cover.all_witnesses_popped()) search.halt();
    }
    res.k = std::max(res.k, static_cast<int>(st.reported));
  }

  for (const auto& [key, cnt] : sides) {
    assert(cnt <= 2);
    if (cnt == 2)
      res.candidates.emplace_back(static_cast<int>(key >> 32),
                                  static_cast<int>(key & 0xffffffffu));
  }
  std::sort(res.candidates.begin(), res.candidates.end());
  return res;
}

namespace {

// Exact certificate test with the cheap interval filter in front.
bool certifies(const Points& pts, const Edge& lr, const Edge& st,
               const Rational& rho, const Interval& irho) {
  auto fast = violates_ellipse_property_filter(pts[lr.a], pts[lr.b], pts[st.a],
                                               pts[st.b], irho);
  if (fast) return *fast;
  return violates_ellipse_property(pts[lr.a], pts[lr.b], pts[st.a], pts[st.b],
                                   rho);
}

bool boxes_overlap(const Points& pts, const Edge& e, const Edge& f) {
  double ex0 = std::min(pts[e.a].x, pts[e.b].x), ex1 = std::max(pts[e.a].x, pts[e.b].x);
  double ey0 = std::min(pts[e.a].y, pts[e.b].y), ey1 = std::max(pts[e.a].y, pts[e.b].y);
  double fx0 = std::min(pts[f.a].x, pts[f.b].x), fx1 = std::max(pts[f.a].x, pts[f.b].x);
  double fy0 = std::min(pts[f.a].y, pts[f.b].y), fy1 = std::max(pts[f.a].y, pts[f.b].y);
  return ex0 <= fx1 && fx0 <= ex1 && ey0 <= fy1 && fy0 <= ey1;
}

}  // namespace

std::vector<Edge> brute_force_candidates(const Points& pts, const Rational& rho,
                                         int cap) {
  const int n = static_cast<int>(pts.size());
  if (n > cap) throw std::invalid_argument("brute_force_candidates: over cap");
  const Interval irho = to_interval(rho);
  std::vector<Edge> out;
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (!edge_avoids_points(pts, s, t)) continue;
      bool excluded = false;
      for (int l = 0; l < n && !excluded; ++l) {
        for (int r = l + 1; r < n && !excluded; ++r) {
          if (l == s || l == t || r == s || r == t) continue;
          if (!segments_cross(pts[s], pts[t], pts[l], pts[r])) continue;
          excluded = certifies(pts, Edge(l, r), Edge(s, t), rho, irho);
        }
      }
      if (!excluded) out.emplace_back(s, t);
    }
  }
  return out;
}

std::vector<CandidateEdge> postprocess(const Points& pts,
                                       const std::vector<Edge>& candidates,
                                       const Rational& rho) {
  const Interval irho = to_interval(rho);
  std::vector<Edge> es;
  for (const Edge& e : candidates)
    if (edge_avoids_points(pts, e.a, e.b)) es.push_back(e);

  const int m = static_cast<int>(es.size());
  std::vector<std::vector<int>> cross(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (!boxes_overlap(pts, es[i], es[j])) continue;
      if (!segments_cross(pts[es[i].a], pts[es[i].b], pts[es[j].a], pts[es[j].b]))
        continue;
      cross[i].push_back(j);
      cross[j].push_back(i);
    }

  // One sweep suffices: a certificate stays valid whether or not the
  // certifying pair survives as a candidate itself, so later kills can
  // never enable or disable earlier ones.
  std::vector<char> dead(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j : cross[i]) {
      if (j > i) break;  // each unordered pair once; cross lists are sorted
      if (!dead[i] && certifies(pts, es[j], es[i], rho, irho)) dead[i] = 1;
      if (!dead[j] && certifies(pts, es[i], es[j], rho, irho)) dead[j] = 1;
    }

  std::vector<int> remap(m, -1);
  std::vector<CandidateEdge> out;
  for (int i = 0; i < m; ++i) {
    if (dead[i]) continue;
    remap[i] = static_cast<int>(out.size());
    out.push_back({es[i], {}, Interval(1.0, 1.0), false});
  }
  for (int i = 0; i < m; ++i) {
    if (dead[i]) continue;
    auto& ce = out[remap[i]];
    for (int j : cross[i])
      if (!dead[j]) ce.crossing.push_back(remap[j]);
    ce.certain = ce.crossing.empty();
  }
  return out;
}

void compute_thresholds(const Points& pts, std::vector<CandidateEdge>& edges) {
  for (auto& ce : edges) {
    if (ce.crossing.empty()) {
      ce.threshold = Interval(1.0, 1.0);
      ce.certain = true;
      continue;
    }
    const Point& s = pts[ce.edge.a];
    const Point& t = pts[ce.edge.b];
    Interval best(1.0, 1.0);
    for (std::size_t k = 0; k < ce.crossing.size(); ++k) {
      const Edge& lr = edges[ce.crossing[k]].edge;
      const Point& l = pts[lr.a];
      const Point& r = pts[lr.b];
      Interval via_s = dist_interval(l, s) + dist_interval(s, r);
      Interval via_t = dist_interval(l, t) + dist_interval(t, r);
      Interval ratio = min(via_s, via_t) / dist_interval(l, r);
      best = k == 0 ? ratio : max(best, ratio);
    }
    ce.threshold = max(best, Interval(1.0, 1.0));
  }
}

namespace {

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) {
    for (int i = 0; i < n; ++i) up[i] = i;
  }
  int find(int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    up[a] = b;
    return true;
  }
};

}  // namespace

Interval lower_bound(const Points& pts, const std::vector<CandidateEdge>& edges,
                     const Rational& rho) {
  const int n = static_cast<int>(pts.size());
  const double rho_lo = to_interval(rho).lo;
  const int g = triangulation_edge_count(n, hull_boundary_count(pts));
  if (static_cast<int>(edges.size()) < g) return Interval(rho_lo, rho_lo);

  double per_edge = 1.0;
  for (const auto& ce : edges) {
    double v = ce.threshold.lo;
    for (int j : ce.crossing) v = std::min(v, edges[j].threshold.lo);
    per_edge = std::max(per_edge, v);
  }

  std::vector<int> order(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    return edges[i].threshold.lo < edges[j].threshold.lo;
  });

  double counting = edges[order[g - 1]].threshold.lo;

  UnionFind uf(n);
  int parts = n;
  double connectivity = rho_lo;  // stays there if the candidates cannot connect
  for (int i : order) {
    if (uf.unite(edges[i].edge.a, edges[i].edge.b) && --parts == 1) {
      connectivity = edges[i].threshold.lo;
      break;
    }
  }

  double lb = std::max({1.0, per_edge, counting, connectivity});
  return Interval(lb, lb);
}

}  // namespace mdt
