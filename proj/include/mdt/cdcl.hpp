#pragma once

#include <memory>
#include <vector>

namespace mdt {

// Literals use the text-format convention: +v asserts variable v, -v its
// negation, v >= 1.
using Lit = int;

enum class SatResult { Sat, Unsat };

// Incremental propositional interface: create variables, add clauses between
// solve calls (monotonically strengthening), read the model after Sat.
class SatSolver {
 public:
  virtual ~SatSolver() = default;
  virtual int new_var() = 0;
  virtual void add_clause(const std::vector<Lit>& lits) = 0;
  virtual SatResult solve() = 0;
  virtual bool model_value(int var) const = 0;
  virtual int num_vars() const = 0;
  virtual long conflicts() const = 0;
};

// Bundled conflict-driven engine: two-watched-literal propagation, first-UIP
// learning with recursive minimization, activity-driven decisions with phase
// saving, Luby restarts, and activity-based learnt-clause reduction.
std::unique_ptr<SatSolver> make_cdcl_solver();

}  // namespace mdt
