#pragma once

#include <vector>

#include "mdt/enumeration.hpp"
#include "mdt/point.hpp"
#include "mdt/rational.hpp"

namespace mdt {

enum class EdgeStatus : char { Possible, Impossible, Certain };

// Candidate edges with three-state status and eager certainty propagation:
// once every edge crossing e is Impossible, e is Certain (every maximal
// crossing-free set over the remaining edges must contain it).  Marking a
// Certain edge Impossible is a conflict: no triangulation is left under the
// current constraints.  Copy the whole object to probe a tentative bound.
class Supergraph {
 public:
  // Candidates as produced by postprocess/compute_thresholds; crossing lists
  // index the same vector.  Edges without crossers start out Certain.
  Supergraph(Points pts, std::vector<CandidateEdge> candidates, Rational rho);

  int size() const { return static_cast<int>(cands_.size()); }
  const Points& points() const { return pts_; }
  const CandidateEdge& candidate(int i) const { return cands_.at(i); }
  const std::vector<CandidateEdge>& candidates() const { return cands_; }
  EdgeStatus status(int i) const { return status_.at(i); }
  const Rational& bound() const { return rho_; }
  bool conflict() const { return conflict_; }

  int possible_count() const { return counts_[0]; }
  int impossible_count() const { return counts_[1]; }
  int certain_count() const { return counts_[2]; }

  // False on conflict (edge was Certain).  Already-Impossible edges are a
  // no-op.  Ids of edges that became Certain by cascade are appended to
  // newly_certain when given.
  bool mark_impossible(int i, std::vector<int>* newly_certain = nullptr);

  // Marks every edge whose threshold provably reaches rho_new as Impossible
  // and lowers the stored bound.  Requires rho_new <= bound().  False on
  // conflict.
  bool apply_threshold_cut(const Rational& rho_new,
                           std::vector<int>* newly_impossible = nullptr,
                           std::vector<int>* newly_certain = nullptr);

 private:
  Points pts_;
  std::vector<CandidateEdge> cands_;
  std::vector<EdgeStatus> status_;
  std::vector<int> remaining_;  // non-Impossible crossers per edge
  int counts_[3];               // Possible, Impossible, Certain
  Rational rho_;
  bool conflict_ = false;

  void set_status(int i, EdgeStatus s);
};

}  // namespace mdt
