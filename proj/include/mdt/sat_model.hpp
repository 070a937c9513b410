#pragma once

#include <iosfwd>
#include <memory>
#include <unordered_map>
#include <vector>

#include "mdt/cdcl.hpp"
#include "mdt/supergraph.hpp"

namespace mdt {

// Clauses kept across solver rebuilds, stored as positive disjunctions over
// edges by endpoints: variable numbers change between bounds, endpoints don't.
// Pool invariant: every stored clause holds for all triangulations whose
// dilation stays below the best confirmed bound.
struct ClausePool {
  std::vector<std::vector<Edge>> clauses;
};

// Propositional model of "maximal crossing-free subsets of the possible
// edges": one variable per non-Impossible candidate, a mutual-exclusion
// clause per crossing pair, and a cover clause per edge (the edge or one of
// its crossers is present).  Certain edges yield unit cover clauses.
class SatModel {
 public:
  explicit SatModel(const Supergraph& g, const ClausePool* pool = nullptr);

  SatResult solve();
  bool has_model() const { return has_model_; }
  std::vector<Edge> decode() const;

  // Adds the disjunction of the given edges; edges without a variable are
  // dropped.  Returns false when the clause collapsed to empty (model Unsat).
  bool add_edge_clause(const std::vector<Edge>& edges);
  // Mirrors a status change into the model: a unit clause forbidding the
  // edge.  No-op for edges that never had a variable.
  void assert_impossible(const Edge& e);
  // Forbids the exact current assignment; used to enumerate distinct models.
  void block_current_model();

  int variable_count() const { return solver_->num_vars(); }
  long clause_count() const { return static_cast<long>(stored_.size()); }
  long conflicts() const { return solver_->conflicts(); }
  int var_of(const Edge& e) const;  // 0 when the edge has no variable
  void write_dimacs(std::ostream& out) const;

 private:
  const Supergraph* g_;
  std::unique_ptr<SatSolver> solver_;
  std::vector<int> var_of_edge_;     // candidate id -> var (0 = none)
  std::vector<int> edge_id_of_var_;  // var-1 -> candidate id
  std::unordered_map<Edge, int, EdgeHash> id_of_;
  std::vector<std::vector<Lit>> stored_;
  bool has_model_ = false;

  void add(std::vector<Lit> c);
};

}  // namespace mdt
