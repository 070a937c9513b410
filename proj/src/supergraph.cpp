#include "mdt/supergraph.hpp"

#include <stdexcept>
#include <utility>

namespace mdt {

Supergraph::Supergraph(Points pts, std::vector<CandidateEdge> candidates,
                       Rational rho)
    : pts_(std::move(pts)),
      cands_(std::move(candidates)),
      status_(cands_.size(), EdgeStatus::Possible),
      remaining_(cands_.size(), 0),
      counts_{static_cast<int>(cands_.size()), 0, 0},
      rho_(std::move(rho)) {
  for (std::size_t i = 0; i < cands_.size(); ++i) {
    for (int j : cands_[i].crossing) {
      if (j < 0 || j >= size() || j == static_cast<int>(i))
        throw std::invalid_argument("supergraph: bad crossing index");
    }
    remaining_[i] = static_cast<int>(cands_[i].crossing.size());
    if (remaining_[i] == 0) set_status(static_cast<int>(i), EdgeStatus::Certain);
  }
}

void Supergraph::set_status(int i, EdgeStatus s) {
  --counts_[static_cast<int>(status_[i])];
  status_[i] = s;
  ++counts_[static_cast<int>(s)];
}

bool Supergraph::mark_impossible(int i, std::vector<int>* newly_certain) {
  if (conflict_) throw std::logic_error("supergraph: mutated after conflict");
  if (i < 0 || i >= size()) throw std::out_of_range("supergraph: edge id");
  switch (status_[i]) {
    case EdgeStatus::Impossible:
      return true;
    case EdgeStatus::Certain:
      conflict_ = true;
      return false;
    case EdgeStatus::Possible:
      break;
  }
  set_status(i, EdgeStatus::Impossible);
  // Two crossing edges can't both reach zero here: each would keep the
  // other's counter positive.  So the flips below never conflict.
  for (int j : cands_[i].crossing) {
    if (--remaining_[j] == 0 && status_[j] == EdgeStatus::Possible) {
      set_status(j, EdgeStatus::Certain);
      if (newly_certain) newly_certain->push_back(j);
    }
  }
  return true;
}

bool Supergraph::apply_threshold_cut(const Rational& rho_new,
                                     std::vector<int>* newly_impossible,
                                     std::vector<int>* newly_certain) {
  if (conflict_) throw std::logic_error("supergraph: mutated after conflict");
  if (rho_new > rho_)
    throw std::invalid_argument("supergraph: threshold cut must lower the bound");
  // Collect first: an edge scheduled for cutting may turn Certain while
  // earlier cuts cascade, and that contradiction must surface as a conflict.
  std::vector<int> to_cut;
  for (int i = 0; i < size(); ++i) {
    if (status_[i] == EdgeStatus::Impossible) continue;
    if (rational_of(cands_[i].threshold.lo) >= rho_new) to_cut.push_back(i);
  }
  for (int i : to_cut) {
    bool was_possible = status_[i] == EdgeStatus::Possible;
    if (!mark_impossible(i, newly_certain)) return false;
    if (was_possible && newly_impossible) newly_impossible->push_back(i);
  }
  rho_ = rho_new;
  return true;
}

}  // namespace mdt
