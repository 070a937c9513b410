#pragma once

#include <utility>

#include "mdt/dilation.hpp"
#include "mdt/interval.hpp"
#include "mdt/point.hpp"
#include "mdt/supergraph.hpp"
#include "mdt/triangulation.hpp"

namespace mdt {

enum class Algorithm : char { Incremental, BinarySearch };

// Optimal: the returned triangulation provably minimizes the dilation.
// BoundedGap: the time limit struck first; the result still carries a valid
// triangulation and a certified lower bound.
enum class SolveStatus : char { Optimal, BoundedGap };

struct SolveOptions {
  Algorithm algorithm = Algorithm::BinarySearch;
  // Bisection stops once the bracket is narrower than this and hands the
  // remaining gap to the improvement loop.
  double sigma = 0.005;
  bool improve_initial = true;
  int sample_expansions = 32;      // pop budget per source when sampling
  int sample_max_violations = 8;   // violations turned into clauses per round
  int threads = 1;
  unsigned long seed = 0;          // recorded only; the solver is deterministic
  double time_limit_seconds = 0;   // <= 0: no limit
  // Ablation switch: carry confirmed probe clauses across model rebuilds.
  bool use_clause_pool = true;
};

struct SolveStats {
  long iterations = 0;       // model extractions across all phases
  long full_dilations = 0;   // exact whole-triangulation measurements
  long sampled_rounds = 0;   // truncated-search screening rounds
  long sat_calls = 0;
  long clauses_added = 0;    // separation clauses handed to the engine
  long probes = 0;           // bisection feasibility probes
  long candidate_edges = 0;  // candidates surviving enumeration
  double wall_seconds = 0;
  DilationStats dijkstra;
  // Midpoints whose probes certified "no triangulation below this value";
  // each is a valid lower bound in its own right.
  std::vector<double> infeasible_probe_bounds;
};

struct SolveResult {
  Triangulation triangulation;
  DilationValue dilation;
  Interval lower_bound{1.0, 1.0};  // certified; meets `dilation` when Optimal
  SolveStatus status = SolveStatus::BoundedGap;
  SolveStats stats;
  // Separation clauses confirmed during bound probes, kept for audit: each
  // was generated at a bound strictly above the final value, so the
  // returned triangulation satisfies every one of them.
  std::vector<std::vector<Edge>> pooled_clauses;
};

// Delaunay triangulation, optionally improved by repeatedly constraining a
// shortcut edge for the pair currently defining the dilation and
// retriangulating around it.  The improved triangulation is never worse
// than the plain Delaunay start; improvement stops at the first round that
// does not strictly lower the dilation.
std::pair<Triangulation, DilationValue> initial_solution(
    const Points& pts, bool improve, int threads = 1,
    SolveStats* stats = nullptr);

// Candidate edges, thresholds and the instance lower bound at the initial
// triangulation's dilation, packaged for the solver loops.
struct PreparedInstance {
  Supergraph graph;
  Interval lower_bound{1.0, 1.0};
  Triangulation initial;
  DilationValue initial_dilation;
  long candidate_edges = 0;
};
PreparedInstance prepare_instance(const Points& pts, bool improve_initial,
                                  int threads = 1,
                                  SolveStats* stats = nullptr);

// Improvement loop: extract a candidate triangulation from the model,
// measure it exactly, cut edges the new bound excludes, and ban the witness
// path; an unsatisfiable model, an empty clause or an edge conflict
// certifies optimality.
SolveResult incremental_mdt(const Points& pts, const SolveOptions& opt = {});

// Bisection on the dilation with feasibility probes at the midpoint, kept
// cheap by screening candidates with truncated searches before any exact
// measurement; once the bracket is below sigma, a seeded improvement phase
// closes the gap exactly.
SolveResult bisection_mdt(const Points& pts, const SolveOptions& opt = {});

// Dispatches on opt.algorithm.
SolveResult solve_mdt(const Points& pts, const SolveOptions& opt = {});

}  // namespace mdt
