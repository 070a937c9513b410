#pragma once

#include <vector>

#include "mdt/dilation.hpp"
#include "mdt/supergraph.hpp"

namespace mdt {

// Outcome of the clause search for one violating pair (s, t): removing all
// edges in `clause` from the supergraph kills every s-t path shorter than
// rho*d(s,t), so any triangulation below the bound must keep at least one
// of them.  An empty clause means no sufficiently short path existed in the
// supergraph at all; no triangulation drawn from it can beat the bound.
struct SeparationResult {
  std::vector<Edge> clause;  // sorted; every edge lies outside the input T
  int paths_banned = 0;      // iterations of the ban loop
  int restricted_nodes = 0;  // vertices surviving both bounded searches
  int restricted_edges = 0;  // edges surviving the composition filter
};

// Requires that the pair provably violates rho in tri (checked, rejected
// with an exception otherwise) and that rho does not exceed the supergraph
// bound.  The bound may be a plain rational or an exact witness ratio.
// From each too-short path the first edge outside tri is banned; the policy
// is deliberately simple and can be swapped without affecting correctness,
// since any covering edge set yields a valid clause.
SeparationResult separate_dilation_path(const Points& pts, const Supergraph& g,
                                        const Triangulation& tri, int s, int t,
                                        const DilationBound& rho,
                                        DilationStats* stats = nullptr);

}  // namespace mdt
