#include "mdt/dilation.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <thread>

namespace mdt {

namespace {

struct QueueEntry {
  double key;  // lower endpoint of the label interval
  long gen;
  int node;
};

struct QueueOrder {
  bool operator()(const QueueEntry& a, const QueueEntry& b) const {
    if (a.key != b.key) return a.key > b.key;
    if (a.node != b.node) return a.node > b.node;
    return a.gen > b.gen;
  }
};

// Label-correcting relaxation: the queue is ordered by approximate keys, so
// a node may be expanded before its label is final; adoptions use the exact
// comparator, re-queue the node, and therefore converge to exact labels once
// the queue drains.  Ties in length fall back to lexicographic path order,
// which both makes the routing deterministic and picks the smallest witness.
class Engine {
 public:
  Engine(const Points& pts, const Triangulation::Adjacency& adj, int source,
         const DijkstraOptions& opt, DilationStats* stats)
      : pts_(pts), adj_(adj), opt_(opt), stats_(stats) {
    int n = static_cast<int>(pts.size());
    if (source < 0 || source >= n)
      throw std::out_of_range("dijkstra: source id");
    labels_.pts = &pts;
    labels_.source = source;
    labels_.parent.assign(n, -1);
    labels_.dist.assign(n, Interval());
    labels_.reached.assign(n, 0);
    gen_.assign(n, 0);
    if (opt.length_bound) bound_iv_ = opt.length_bound->to_interval();
  }

  SourceLabels run() {
    labels_.reached[labels_.source] = 1;
    pq_.push({0.0, 0, labels_.source});
    long pops = 0;
    bool budget_hit = false;
    while (!pq_.empty()) {
      QueueEntry e = pq_.top();
      pq_.pop();
      if (e.gen != gen_[e.node]) continue;
      if (opt_.pop_budget >= 0 && pops >= opt_.pop_budget) {
        budget_hit = true;
        break;
      }
      ++pops;
      expand(e.node);
    }
    if (stats_) stats_->pops += pops;
    labels_.complete = !budget_hit;
    return std::move(labels_);
  }

 private:
  const Points& pts_;
  const Triangulation::Adjacency& adj_;
  DijkstraOptions opt_;
  DilationStats* stats_;
  SourceLabels labels_;
  std::vector<long> gen_;
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, QueueOrder> pq_;
  Interval bound_iv_;

  SqrtSum exact_via(int u, int v) const {
    SqrtSum s = labels_.exact_dist(u);
    s.add_sqrt(sq_dist_rational(pts_[u], pts_[v]), Rational(1));
    return s;
  }

  bool below_bound(int u, int v, const Interval& cand) const {
    if (cand.certainly_lt(bound_iv_)) return true;
    if (cand.certainly_ge(bound_iv_)) return false;
    if (stats_) ++stats_->exact_label_compares;
    return compare_sqrt_sums(exact_via(u, v), *opt_.length_bound) ==
           Ordering::Less;
  }

  bool adopts(int u, int v, const Interval& cand) {
    if (!labels_.reached[v]) return true;
    const Interval& cur = labels_.dist[v];
    if (cand.certainly_lt(cur)) return true;
    if (cur.certainly_lt(cand)) return false;
    if (stats_) ++stats_->exact_label_compares;
    switch (compare_sqrt_sums(exact_via(u, v), labels_.exact_dist(v))) {
      case Ordering::Less:
        return true;
      case Ordering::Greater:
        return false;
      case Ordering::Equal:
        break;
    }
    std::vector<int> alt = labels_.path_to(u);
    alt.push_back(v);
    std::vector<int> cur_path = labels_.path_to(v);
    return std::lexicographical_compare(alt.begin(), alt.end(),
                                        cur_path.begin(), cur_path.end());
  }

  void expand(int u) {
    for (int k = adj_.offsets[u]; k < adj_.offsets[u + 1]; ++k) {
      int v = adj_.targets[k];
      Interval cand = labels_.dist[u] + dist_interval(pts_[u], pts_[v]);
      if (opt_.length_bound && !below_bound(u, v, cand)) continue;
      if (!adopts(u, v, cand)) continue;
      labels_.dist[v] = cand;
      labels_.parent[v] = u;
      labels_.reached[v] = 1;
      ++gen_[v];
      if (stats_) ++stats_->relaxations;
      pq_.push({cand.lo, gen_[v], v});
    }
  }
};

// One candidate for the dilation maximum with everything needed to compare
// it exactly against another candidate.
struct BestPair {
  bool set = false;
  int s = -1, t = -1;
  std::vector<int> path;
  Interval ratio;
  SqrtSum len;
  Rational d2;
};

// "Larger ratio wins, ties broken by lexicographically smallest (s, t,
// path)".  Ratios are compared cross-multiplied: |P1|*sqrt(d2_2) against
// |P2|*sqrt(d2_1), both plain radical sums.  The comparator is a total
// order, so folding in any sequence yields the same winner.
void fold(BestPair& best, BestPair cand, DilationStats* stats) {
  if (!best.set) {
    best = std::move(cand);
    return;
  }
  if (cand.ratio.certainly_gt(best.ratio)) {
    best = std::move(cand);
    return;
  }
  if (cand.ratio.certainly_lt(best.ratio)) return;
  ++stats->exact_ratio_compares;
  Ordering cmp = compare_sqrt_sums(cand.len.times_sqrt(best.d2),
                                   best.len.times_sqrt(cand.d2));
  bool adopt;
  if (cmp == Ordering::Greater) {
    adopt = true;
  } else if (cmp == Ordering::Less) {
    adopt = false;
  } else {
    auto key = [](const BestPair& b) {
      return std::tuple<int, int, const std::vector<int>&>(b.s, b.t, b.path);
    };
    adopt = key(cand) < key(best);
  }
  if (adopt) best = std::move(cand);
}

void fold_source(const Points& pts, const SourceLabels& labels, BestPair& best,
                 DilationStats* stats) {
  int n = static_cast<int>(pts.size());
  int s = labels.source;
  for (int t = s + 1; t < n; ++t) {
    if (!labels.reached[t])
      throw std::logic_error("dilation: triangulation is not connected");
    Interval ratio = labels.dist[t] / dist_interval(pts[s], pts[t]);
    if (best.set && ratio.certainly_lt(best.ratio)) continue;
    BestPair cand;
    cand.set = true;
    cand.s = s;
    cand.t = t;
    cand.path = labels.path_to(t);
    cand.ratio = ratio;
    cand.len = labels.exact_dist(t);
    cand.d2 = sq_dist_rational(pts[s], pts[t]);
    fold(best, std::move(cand), stats);
  }
}

}  // namespace

std::vector<int> SourceLabels::path_to(int t) const {
  if (t < 0 || t >= static_cast<int>(reached.size()) || !reached[t])
    throw std::invalid_argument("labels: node not reached");
  std::vector<int> p;
  for (int v = t; v != -1; v = parent[v]) p.push_back(v);
  std::reverse(p.begin(), p.end());
  return p;
}

SqrtSum SourceLabels::exact_dist(int t) const {
  return path_length(*pts, path_to(t));
}

SqrtSum path_length(const Points& pts, const std::vector<int>& path) {
  SqrtSum s;
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    s.add_sqrt(sq_dist_rational(pts[path[i]], pts[path[i + 1]]), Rational(1));
  return s;
}

DilationBound::DilationBound(SqrtSum path_len, Rational dist2)
    : len(std::move(path_len)), d2(std::move(dist2)) {
  if (sign(d2) <= 0)
    throw std::invalid_argument("dilation bound: nonpositive distance");
}

SqrtSum DilationBound::times_dist(const Rational& pair_d2) const {
  // len/sqrt(d2) * sqrt(pair_d2) = len*sqrt(d2*pair_d2) / d2
  return len.times_sqrt(d2 * pair_d2).scaled(Rational(1) / d2);
}

Interval DilationBound::to_interval() const { return times_dist(1).to_interval(); }

Ordering compare_bounds(const DilationBound& a, const DilationBound& b) {
  // a.len/sqrt(a.d2) vs b.len/sqrt(b.d2), both sides times sqrt(a.d2*b.d2)
  return compare_sqrt_sums(a.len.times_sqrt(b.d2), b.len.times_sqrt(a.d2));
}

DilationBound witness_bound(const Points& pts, const DilationValue& v) {
  if (v.s < 0 || v.t < 0) throw std::invalid_argument("witness bound: no pair");
  return DilationBound(path_length(pts, v.path),
                       sq_dist_rational(pts[v.s], pts[v.t]));
}

SourceLabels bounded_dijkstra(const Points& pts,
                              const Triangulation::Adjacency& adj, int source,
                              const DijkstraOptions& opt,
                              DilationStats* stats) {
  return Engine(pts, adj, source, opt, stats).run();
}

DilationValue exact_dilation(const Points& pts, const Triangulation& tri,
                             int threads, DilationStats* stats) {
  int n = static_cast<int>(pts.size());
  DilationValue out;
  if (n < 2) return out;
  Triangulation::Adjacency adj = tri.adjacency(n);

  BestPair best;
  DilationStats own;
  int T = std::max(1, threads);
  if (T == 1) {
    for (int s = 0; s + 1 < n; ++s)
      fold_source(pts, bounded_dijkstra(pts, adj, s, {}, &own), best, &own);
  } else {
    std::vector<BestPair> local(T);
    std::vector<DilationStats> lstats(T);
    std::vector<std::thread> pool;
    for (int k = 0; k < T; ++k) {
      pool.emplace_back([&, k] {
        for (int s = k; s + 1 < n; s += T)
          fold_source(pts, bounded_dijkstra(pts, adj, s, {}, &lstats[k]),
                      local[k], &lstats[k]);
      });
    }
    for (auto& th : pool) th.join();
    for (int k = 0; k < T; ++k) {
      if (local[k].set) fold(best, std::move(local[k]), &own);
      own.pops += lstats[k].pops;
      own.relaxations += lstats[k].relaxations;
      own.exact_label_compares += lstats[k].exact_label_compares;
      own.exact_ratio_compares += lstats[k].exact_ratio_compares;
    }
  }
  if (stats) {
    stats->pops += own.pops;
    stats->relaxations += own.relaxations;
    stats->exact_label_compares += own.exact_label_compares;
    stats->exact_ratio_compares += own.exact_ratio_compares;
  }

  if (!best.set) {  // n == 2: one pair, one edge
    out.value = Interval(1.0, 1.0);
    return out;
  }
  out.s = best.s;
  out.t = best.t;
  out.path = std::move(best.path);
  // |path|/d = |path|*sqrt(d2)/d2, an exact radical sum; evaluate it at high
  // precision for a tight final enclosure.
  SqrtSum ratio = best.len.times_sqrt(best.d2).scaled(Rational(1) / best.d2);
  out.value = ratio.to_big_interval(512).to_interval();
  out.stage = own.exact_ratio_compares > 0 ? DecisionStage::ExactDecided
                                           : DecisionStage::IntervalDecided;
  return out;
}

bool confirm_violation(const Points& pts, const Triangulation::Adjacency& adj,
                       int s, int t, const DilationBound& rho,
                       DilationStats* stats) {
  if (s == t) throw std::invalid_argument("violation: identical endpoints");
  Rational d2 = sq_dist_rational(pts[s], pts[t]);
  if (sign(d2) == 0) throw std::invalid_argument("violation: coincident pair");
  SqrtSum bound = rho.times_dist(d2);
  DijkstraOptions opt;
  opt.length_bound = &bound;
  SourceLabels labels = bounded_dijkstra(pts, adj, s, opt, stats);
  // Pruning removes exactly the labels of length >= rho*d(s,t), so t is
  // reached iff some strictly shorter path exists.
  return !labels.reached[t];
}

std::vector<Violation> sample_violations(const Points& pts,
                                         const Triangulation& tri,
                                         const DilationBound& rho,
                                         int expansions_per_source,
                                         int max_violations,
                                         DilationStats* stats) {
  int n = static_cast<int>(pts.size());
  std::vector<Violation> out;
  if (n < 2 || max_violations <= 0) return out;
  Triangulation::Adjacency adj = tri.adjacency(n);
  Interval rho_iv = rho.to_interval();
  long confirm_budget = 4L * max_violations;
  std::vector<char> taken(static_cast<std::size_t>(n) * n, 0);

  for (int s = 0; s < n; ++s) {
    if (static_cast<int>(out.size()) >= max_violations || confirm_budget <= 0)
      break;
    DijkstraOptions opt;
    opt.pop_budget = expansions_per_source;
    SourceLabels labels = bounded_dijkstra(pts, adj, s, opt, stats);
    // Truncated labels overestimate distances, so an apparent ratio below
    // rho clears the pair; the rest are nominations, confirmed exactly.
    std::vector<std::pair<double, int>> noms;
    for (int t = 0; t < n; ++t) {
      if (t == s || !labels.reached[t]) continue;
      Interval ratio = labels.dist[t] / dist_interval(pts[s], pts[t]);
      if (ratio.certainly_lt(rho_iv)) continue;
      noms.push_back({ratio.lo, t});
    }
    std::sort(noms.begin(), noms.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });
    for (auto [key, t] : noms) {
      if (static_cast<int>(out.size()) >= max_violations) break;
      if (confirm_budget-- <= 0) break;
      int a = std::min(s, t), b = std::max(s, t);
      if (taken[static_cast<std::size_t>(a) * n + b]) continue;
      taken[static_cast<std::size_t>(a) * n + b] = 1;
      if (!confirm_violation(pts, adj, s, t, rho, stats)) continue;
      Violation v;
      v.s = s;
      v.t = t;
      v.observed = labels.dist[t] / dist_interval(pts[s], pts[t]);
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace mdt
