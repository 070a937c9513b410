#include "mdt/separation.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace mdt {

namespace {

Triangulation::Adjacency adjacency_of(int n, const std::vector<Edge>& edges) {
  Triangulation t;
  t.edges = edges;
  sort_edges(t.edges);
  return t.adjacency(n);
}

// dist_a(u) + dist_b(v) < bound, intervals first, exact on overlap.
bool sum_below(const SourceLabels& a, int u, const SourceLabels& b, int v,
               const SqrtSum& bound, const Interval& bound_iv,
               DilationStats* stats) {
  Interval sum = a.dist[u] + b.dist[v];
  if (sum.certainly_lt(bound_iv)) return true;
  if (sum.certainly_ge(bound_iv)) return false;
  if (stats) ++stats->exact_label_compares;
  SqrtSum exact = a.exact_dist(u);
  exact.add(b.exact_dist(v));
  return compare_sqrt_sums(exact, bound) == Ordering::Less;
}

}  // namespace

SeparationResult separate_dilation_path(const Points& pts, const Supergraph& g,
                                        const Triangulation& tri, int s, int t,
                                        const DilationBound& rho,
                                        DilationStats* stats) {
  int n = static_cast<int>(pts.size());
  if (s < 0 || s >= n || t < 0 || t >= n || s == t)
    throw std::invalid_argument("separation: bad pair");
  if (compare_bounds(rho, DilationBound(g.bound())) == Ordering::Greater)
    throw std::invalid_argument(
        "separation: bound exceeds the supergraph bound");
  if (!confirm_violation(pts, tri.adjacency(n), s, t, rho, stats))
    throw std::invalid_argument(
        "separation: pair does not provably violate the bound");

  Rational d2 = sq_dist_rational(pts[s], pts[t]);
  SqrtSum bound = rho.times_dist(d2);
  Interval bound_iv = bound.to_interval();

  std::vector<Edge> live;
  live.reserve(g.size());
  for (int i = 0; i < g.size(); ++i)
    if (g.status(i) != EdgeStatus::Impossible) live.push_back(g.candidate(i).edge);

  DijkstraOptions bopt;
  bopt.length_bound = &bound;

  SeparationResult out;
  Triangulation::Adjacency full = adjacency_of(n, live);
  SourceLabels from_s = bounded_dijkstra(pts, full, s, bopt, stats);
  if (!from_s.reached[t]) return out;  // empty clause: nothing short exists
  SourceLabels from_t = bounded_dijkstra(pts, full, t, bopt, stats);

  // A vertex can lie on a path shorter than the bound only if its two
  // one-sided distances sum below it.
  std::vector<char> in_q(n, 0);
  for (int v = 0; v < n; ++v) {
    if (!from_s.reached[v] || !from_t.reached[v]) continue;
    if (sum_below(from_s, v, from_t, v, bound, bound_iv, stats)) in_q[v] = 1;
  }
  out.restricted_nodes =
      static_cast<int>(std::count(in_q.begin(), in_q.end(), 1));

  // Composition filter over surviving edges, both endpoint orderings.  It
  // deliberately omits the edge's own length, so it only ever keeps extra
  // edges; the path searches below stay exact either way.
  std::vector<Edge> kept;
  for (const Edge& e : live) {
    if (!in_q[e.a] || !in_q[e.b]) continue;
    if (sum_below(from_s, e.a, from_t, e.b, bound, bound_iv, stats) ||
        sum_below(from_s, e.b, from_t, e.a, bound, bound_iv, stats))
      kept.push_back(e);
  }
  out.restricted_edges = static_cast<int>(kept.size());

  // Ban loop: as long as a too-short s-t path survives, remove its first
  // edge outside the triangulation and remember it for the clause.
  std::unordered_set<Edge, EdgeHash> banned;
  while (true) {
    std::vector<Edge> active;
    active.reserve(kept.size());
    for (const Edge& e : kept)
      if (!banned.count(e)) active.push_back(e);
    SourceLabels run =
        bounded_dijkstra(pts, adjacency_of(n, active), s, bopt, stats);
    if (!run.reached[t]) break;
    std::vector<int> path = run.path_to(t);
    ++out.paths_banned;
    bool cut = false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      Edge e{path[i], path[i + 1]};
      if (tri.contains(e)) continue;
      banned.insert(e);
      out.clause.push_back(e);
      cut = true;
      break;
    }
    // The precondition rules out a short path made purely of tri edges.
    if (!cut)
      throw std::logic_error("separation: short path inside the triangulation");
  }
  std::sort(out.clause.begin(), out.clause.end());
  return out;
}

}  // namespace mdt
