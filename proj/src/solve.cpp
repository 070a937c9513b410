#include "mdt/solve.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mdt/convex_hull.hpp"
#include "mdt/delaunay.hpp"
#include "mdt/enumeration.hpp"
#include "mdt/predicates.hpp"
#include "mdt/quadtree.hpp"
#include "mdt/sat_model.hpp"
#include "mdt/separation.hpp"

namespace mdt {
namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  Clock::time_point start = Clock::now();
  double limit = 0;  // seconds; <= 0 disables

  bool expired() const {
    return limit > 0 &&
           std::chrono::duration<double>(Clock::now() - start).count() >= limit;
  }
  double elapsed() const {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }
};

// The incumbent with the exact artifacts every comparison needs.
struct Best {
  Triangulation tri;
  DilationValue value;
  DilationBound bound;

  Best(Triangulation t, DilationValue v, const Points& pts)
      : tri(std::move(t)), value(std::move(v)), bound(witness_bound(pts, value)) {}
};

class Run {
 public:
  Run(const Points& pts, const SolveOptions& opt)
      : pts_(pts), opt_(opt), prep_(make_prepared(pts, opt, stats_)),
        g_(std::move(prep_.graph)),
        best_(std::move(prep_.initial), std::move(prep_.initial_dilation), pts),
        lb_(prep_.lower_bound) {
    deadline_.limit = opt.time_limit_seconds;
    stats_.candidate_edges = prep_.candidate_edges;
    full_edges_ = triangulation_edge_count(static_cast<int>(pts.size()),
                                           hull_boundary_count(pts));
  }

  SolveResult incremental() { return finish(improve_to_optimal(false)); }

  SolveResult bisection() {
    double lb_d = lb_.lo;
    double ub_d = best_.value.value.hi;
    while (ub_d - lb_d >= opt_.sigma) {
      if (deadline_.expired()) return finish(SolveStatus::BoundedGap);
      double mid_d = 0.5 * (lb_d + ub_d);
      if (!(mid_d > lb_d && mid_d < ub_d)) break;
      ++stats_.probes;
      ProbeOutcome out = probe(rational_of(mid_d));
      ub_d = std::min(ub_d, best_.value.value.hi);
      if (out == ProbeOutcome::Timeout) return finish(SolveStatus::BoundedGap);
      if (out == ProbeOutcome::ProvedOptimal)
        return finish(SolveStatus::Optimal);
      if (out == ProbeOutcome::Infeasible) {
        // The probe certified that no triangulation stays below mid.
        lb_d = mid_d;
        lb_ = Interval(mid_d, mid_d);
        stats_.infeasible_probe_bounds.push_back(mid_d);
      }
    }
    return finish(improve_to_optimal(true));
  }

 private:
  enum class ProbeOutcome : char { Improved, Infeasible, Timeout, ProvedOptimal };

  static PreparedInstance make_prepared(const Points& pts,
                                        const SolveOptions& opt,
                                        SolveStats& stats) {
    return prepare_instance(pts, opt.improve_initial, opt.threads, &stats);
  }

  SolveResult finish(SolveStatus status) {
    SolveResult r;
    r.triangulation = best_.tri;
    r.dilation = best_.value;
    r.status = status;
    r.lower_bound = status == SolveStatus::Optimal ? best_.value.value : lb_;
    stats_.wall_seconds = deadline_.elapsed();
    r.stats = stats_;
    r.pooled_clauses = pool_.clauses;
    return r;
  }

  // Installs a strictly better incumbent and cuts the persistent graph at
  // its confirmed value; mirrors status flips into `model` when given.
  // False on an edge conflict: nothing can beat the new incumbent.
  bool adopt(Triangulation tri, DilationValue dv, SatModel* model) {
    best_ = Best(std::move(tri), std::move(dv), pts_);
    Rational cut = rational_of(best_.value.value.hi);
    if (cut > g_.bound()) cut = g_.bound();
    std::vector<int> imp, cert;
    if (!g_.apply_threshold_cut(cut, &imp, &cert)) return false;
    if (model) {
      for (int i : imp) model->assert_impossible(g_.candidate(i).edge);
      for (int i : cert) model->add_edge_clause({g_.candidate(i).edge});
    }
    return true;
  }

  // A decoded model is maximal over the candidate edges, which in
  // degenerate geometry (bounds at or below the optimum on symmetric sets)
  // can still fall short of a full triangulation: some excluded segment
  // fits into a hole.  That segment's exclusion certificate guarantees a
  // pair at or beyond every bound this loop separates at, so the set can
  // be banned like any other violator.  Returns false when the bound is
  // certifiably unreachable.
  bool ban_defective_model(SatModel& model, const Supergraph& graph,
                           const Triangulation& defect,
                           const DilationBound& bound,
                           std::vector<std::vector<Edge>>* staged) {
    ++stats_.sampled_rounds;
    std::vector<Violation> vs =
        sample_violations(pts_, defect, bound, opt_.sample_expansions,
                          opt_.sample_max_violations, &stats_.dijkstra);
    if (vs.empty()) {
      int n = static_cast<int>(pts_.size());
      Triangulation::Adjacency adj = defect.adjacency(n);
      for (int s = 0; s < n && vs.empty(); ++s)
        for (int t = s + 1; t < n && vs.empty(); ++t)
          if (confirm_violation(pts_, adj, s, t, bound, &stats_.dijkstra)) {
            Violation v;
            v.s = s;
            v.t = t;
            vs.push_back(v);
          }
    }
    if (vs.empty())
      throw std::logic_error("solver: defective model has no violating pair");
    return ban_all(model, graph, defect, vs, bound, staged);
  }

  // Turns violating pairs of `trigger` into clauses at `bound`.  False when
  // a clause comes back empty or loses all variables: the bound is
  // unreachable over `graph` and the model space it still represents.
  bool ban_all(SatModel& model, const Supergraph& graph,
               const Triangulation& trigger, const std::vector<Violation>& vs,
               const DilationBound& bound,
               std::vector<std::vector<Edge>>* staged) {
    for (const Violation& v : vs) {
      SeparationResult sep = separate_dilation_path(pts_, graph, trigger, v.s,
                                                    v.t, bound, &stats_.dijkstra);
      if (sep.clause.empty()) return false;
      for (const Edge& e : sep.clause)
        if (trigger.contains(e))
          throw std::logic_error("solver: clause not violated by its trigger");
      ++stats_.clauses_added;
      if (staged) staged->push_back(sep.clause);
      if (!model.add_edge_clause(sep.clause)) return false;
    }
    return true;
  }

  // Improvement loop on the persistent graph: certifies optimality of the
  // incumbent unless the deadline strikes first.
  SolveStatus improve_to_optimal(bool sample_first) {
    SatModel model(g_, opt_.use_clause_pool ? &pool_ : nullptr);
    for (;;) {
      if (deadline_.expired()) return SolveStatus::BoundedGap;
      ++stats_.sat_calls;
      if (model.solve() != SatResult::Sat) return SolveStatus::Optimal;
      ++stats_.iterations;
      Triangulation cand{model.decode()};
      sort_edges(cand.edges);
      if (static_cast<int>(cand.edges.size()) < full_edges_) {
        if (!ban_defective_model(model, g_, cand, best_.bound, nullptr))
          return SolveStatus::Optimal;
        continue;
      }
      verify_triangulation(pts_, cand.edges);

      if (sample_first) {
        ++stats_.sampled_rounds;
        auto vs = sample_violations(pts_, cand, best_.bound,
                                    opt_.sample_expansions,
                                    opt_.sample_max_violations, &stats_.dijkstra);
        if (!vs.empty()) {
          if (!ban_all(model, g_, cand, vs, best_.bound, nullptr))
            return SolveStatus::Optimal;
          continue;
        }
      }

      ++stats_.full_dilations;
      DilationValue dv = exact_dilation(pts_, cand, opt_.threads, &stats_.dijkstra);
      Violation w;
      w.s = dv.s;
      w.t = dv.t;
      const Triangulation* trigger = &cand;
      if (compare_bounds(witness_bound(pts_, dv), best_.bound) ==
          Ordering::Less) {
        if (!adopt(std::move(cand), std::move(dv), &model))
          return SolveStatus::Optimal;
        trigger = &best_.tri;
      }
      // The witness pair realizes a ratio at or above the incumbent's value
      // whether or not the incumbent just changed.
      if (!ban_all(model, g_, *trigger, {w}, best_.bound, nullptr))
        return SolveStatus::Optimal;
    }
  }

  // Feasibility probe: is there a triangulation with dilation below mid?
  // Improved adopts one; Infeasible certifies there is none.  Clauses are
  // staged and only pooled once the bound is confirmed.
  ProbeOutcome probe(const Rational& mid) {
    Supergraph trial = g_;
    Rational cut = mid > trial.bound() ? trial.bound() : mid;
    if (!trial.apply_threshold_cut(cut)) return ProbeOutcome::Infeasible;
    SatModel model(trial, opt_.use_clause_pool ? &pool_ : nullptr);
    std::vector<std::vector<Edge>> staged;
    const DilationBound mid_bound(mid);
    for (;;) {
      if (deadline_.expired()) return ProbeOutcome::Timeout;
      ++stats_.sat_calls;
      if (model.solve() != SatResult::Sat) return ProbeOutcome::Infeasible;
      ++stats_.iterations;
      Triangulation cand{model.decode()};
      sort_edges(cand.edges);
      if (static_cast<int>(cand.edges.size()) < full_edges_) {
        if (!ban_defective_model(model, trial, cand, mid_bound, &staged))
          return ProbeOutcome::Infeasible;
        continue;
      }
      verify_triangulation(pts_, cand.edges);

      ++stats_.sampled_rounds;
      auto vs = sample_violations(pts_, cand, mid_bound, opt_.sample_expansions,
                                  opt_.sample_max_violations, &stats_.dijkstra);
      if (!vs.empty()) {
        if (!ban_all(model, trial, cand, vs, mid_bound, &staged))
          return ProbeOutcome::Infeasible;
        continue;
      }

      ++stats_.full_dilations;
      DilationValue dv = exact_dilation(pts_, cand, opt_.threads, &stats_.dijkstra);
      Violation w;
      w.s = dv.s;
      w.t = dv.t;
      DilationBound cand_bound = witness_bound(pts_, dv);
      if (compare_bounds(cand_bound, mid_bound) == Ordering::Less) {
        if (opt_.use_clause_pool)
          for (auto& c : staged) pool_.clauses.push_back(std::move(c));
        return adopt(std::move(cand), std::move(dv), nullptr)
                   ? ProbeOutcome::Improved
                   : ProbeOutcome::ProvedOptimal;
      }
      // Screening missed the violation; ban the exact witness.  Keep the
      // triangulation when it beats the incumbent even though it missed mid.
      bool banned = ban_all(model, trial, cand, {w}, mid_bound, &staged);
      if (compare_bounds(cand_bound, best_.bound) == Ordering::Less &&
          !adopt(std::move(cand), std::move(dv), nullptr))
        return ProbeOutcome::ProvedOptimal;
      if (!banned) return ProbeOutcome::Infeasible;
    }
  }

  const Points& pts_;
  const SolveOptions& opt_;
  SolveStats stats_;
  Deadline deadline_;
  PreparedInstance prep_;
  Supergraph g_;
  ClausePool pool_;
  Best best_;
  Interval lb_;
  int full_edges_ = 0;
};

}  // namespace

std::pair<Triangulation, DilationValue> initial_solution(const Points& pts,
                                                         bool improve,
                                                         int threads,
                                                         SolveStats* stats) {
  DilationStats scratch;
  DilationStats* ds = stats ? &stats->dijkstra : &scratch;
  Triangulation tri = delaunay(pts);
  DilationValue dv = exact_dilation(pts, tri, threads, ds);
  if (stats) ++stats->full_dilations;
  if (!improve) return {std::move(tri), std::move(dv)};

  std::vector<Edge> constraints;
  for (int round = 0; round < 64; ++round) {
    if (dv.s < 0) break;
    Edge want(dv.s, dv.t);
    if (tri.contains(want)) break;  // the worst pair is already direct
    if (!edge_avoids_points(pts, want.a, want.b)) break;
    bool crosses = false;
    for (const Edge& c : constraints)
      if (segments_cross(pts[want.a], pts[want.b], pts[c.a], pts[c.b])) {
        crosses = true;
        break;
      }
    if (crosses) break;
    constraints.push_back(want);
    Triangulation next = constrained_delaunay(pts, constraints);
    DilationValue ndv = exact_dilation(pts, next, threads, ds);
    if (stats) ++stats->full_dilations;
    if (compare_bounds(witness_bound(pts, ndv), witness_bound(pts, dv)) !=
        Ordering::Less) {
      constraints.pop_back();  // not strictly better: revert and stop
      break;
    }
    tri = std::move(next);
    dv = std::move(ndv);
  }
  return {std::move(tri), std::move(dv)};
}

PreparedInstance prepare_instance(const Points& pts, bool improve_initial,
                                  int threads, SolveStats* stats) {
  auto [tri, dv] = initial_solution(pts, improve_initial, threads, stats);
  // Any rational at or above the initial dilation is a sound enumeration
  // bound; the upper end of its enclosure is the tightest double at hand.
  Rational rho0 = rational_of(dv.value.hi);
  Quadtree tree(pts);
  EnumerationResult er = enumerate_candidates(pts, tree, rho0);
  std::vector<CandidateEdge> cands = postprocess(pts, er.candidates, rho0);
  compute_thresholds(pts, cands);
  Interval lb = lower_bound(pts, cands, rho0);
  long m = static_cast<long>(cands.size());
  return PreparedInstance{Supergraph(pts, std::move(cands), rho0), lb,
                          std::move(tri), std::move(dv), m};
}

SolveResult solve_mdt(const Points& pts, const SolveOptions& opt) {
  Run run(pts, opt);
  return opt.algorithm == Algorithm::Incremental ? run.incremental()
                                                 : run.bisection();
}

SolveResult incremental_mdt(const Points& pts, const SolveOptions& opt) {
  SolveOptions o = opt;
  o.algorithm = Algorithm::Incremental;
  return solve_mdt(pts, o);
}

SolveResult bisection_mdt(const Points& pts, const SolveOptions& opt) {
  SolveOptions o = opt;
  o.algorithm = Algorithm::BinarySearch;
  return solve_mdt(pts, o);
}

}  // namespace mdt
