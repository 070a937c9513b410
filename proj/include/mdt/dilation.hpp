#pragma once

#include <optional>
#include <vector>

#include "mdt/interval.hpp"
#include "mdt/point.hpp"
#include "mdt/rational.hpp"
#include "mdt/sqrt_sum.hpp"
#include "mdt/triangulation.hpp"

namespace mdt {

// How the winning pair of a dilation computation was separated from the
// runner-ups: machine intervals alone, or the exact comparator stages.
enum class DecisionStage : char { IntervalDecided, ExactDecided };

struct DilationValue {
  int s = -1, t = -1;
  std::vector<int> path;       // witness s .. t along triangulation edges
  Interval value{1.0, 1.0};    // tight enclosure of |path| / d(s,t)
  DecisionStage stage = DecisionStage::IntervalDecided;
};

// Evidence that the triangulation's s-t detour reaches rho: no path shorter
// than rho*d(s,t) exists (established by a bounded run that prunes at the
// target length).  `observed` encloses the best path ratio found before
// confirmation, +infinity when the pair was disconnected below the bound.
struct Violation {
  int s = -1, t = -1;
  Interval observed{1.0, std::numeric_limits<double>::infinity()};
};

struct DilationStats {
  long pops = 0;
  long relaxations = 0;
  long exact_label_compares = 0;
  long exact_ratio_compares = 0;
};

// A dilation bound len / sqrt(d2), exactly representable both for plain
// rationals (d2 = 1) and for witness ratios |path| / d(s,t).  Scaling by a
// pair distance stays inside square-root-sum arithmetic, so bounded searches
// and confirmations at this bound are exact even when the bound itself is
// irrational.
struct DilationBound {
  SqrtSum len;
  Rational d2{1};

  DilationBound(const Rational& rho) : len(rho) {}  // implicit on purpose
  DilationBound(SqrtSum path_len, Rational dist2);

  SqrtSum times_dist(const Rational& pair_d2) const;  // bound * sqrt(pair_d2)
  Interval to_interval() const;
};

// Exact three-way comparison of two bounds (cross-multiplied).
Ordering compare_bounds(const DilationBound& a, const DilationBound& b);

// Exact Euclidean length of a node path (consecutive edge lengths summed).
SqrtSum path_length(const Points& pts, const std::vector<int>& path);

// The witness ratio of a computed dilation as an exact bound.
DilationBound witness_bound(const Points& pts, const DilationValue& v);

// Single-source shortest paths over the triangulation's edges.  Lengths are
// Euclidean; labels carry interval enclosures, with exact square-root-sum
// comparison (then lexicographic path order) deciding overlaps, so the
// routing and the witness are deterministic.
struct SourceLabels {
  const Points* pts = nullptr;
  int source = -1;
  bool complete = false;  // queue drained: labels of reached nodes are exact
  std::vector<int> parent;
  std::vector<Interval> dist;
  std::vector<char> reached;

  std::vector<int> path_to(int t) const;
  SqrtSum exact_dist(int t) const;  // walks the parent chain
};

struct DijkstraOptions {
  // Prune any label provably at or beyond this length; the source keeps its
  // zero label regardless.
  const SqrtSum* length_bound = nullptr;
  long pop_budget = -1;  // stop after this many pops; -1 = unlimited
};

SourceLabels bounded_dijkstra(const Points& pts,
                              const Triangulation::Adjacency& adj, int source,
                              const DijkstraOptions& opt = {},
                              DilationStats* stats = nullptr);

// Maximum detour ratio over all point pairs, with a witness path.  The value
// interval comes from an extended-precision evaluation of the witness ratio.
// `threads` splits the per-source runs; the fold order is fixed, so the
// result does not depend on scheduling.
DilationValue exact_dilation(const Points& pts, const Triangulation& tri,
                             int threads = 1, DilationStats* stats = nullptr);

// True iff no s-t path in the triangulation is shorter than rho*d(s,t).
bool confirm_violation(const Points& pts, const Triangulation::Adjacency& adj,
                       int s, int t, const DilationBound& rho,
                       DilationStats* stats = nullptr);

// Cheap truncated searches nominate suspicious pairs; every returned pair is
// then confirmed, so the list never contains false positives.  May miss
// violations (by design); returns at most max_violations.
std::vector<Violation> sample_violations(const Points& pts,
                                         const Triangulation& tri,
                                         const DilationBound& rho,
                                         int expansions_per_source = 32,
                                         int max_violations = 8,
                                         DilationStats* stats = nullptr);

}  // namespace mdt
