#include "mdt/sat_model.hpp"

#include <ostream>
#include <stdexcept>

namespace mdt {

SatModel::SatModel(const Supergraph& g, const ClausePool* pool)
    : g_(&g), solver_(make_cdcl_solver()), var_of_edge_(g.size(), 0) {
  if (g.conflict())
    throw std::invalid_argument("sat model: supergraph already in conflict");
  for (int i = 0; i < g.size(); ++i) {
    id_of_.emplace(g.candidate(i).edge, i);
    if (g.status(i) == EdgeStatus::Impossible) continue;
    var_of_edge_[i] = solver_->new_var();
    edge_id_of_var_.push_back(i);
  }
  for (int i = 0; i < g.size(); ++i) {
    if (!var_of_edge_[i]) continue;
    std::vector<Lit> cover = {var_of_edge_[i]};
    for (int j : g.candidate(i).crossing) {
      if (!var_of_edge_[j]) continue;
      cover.push_back(var_of_edge_[j]);
      if (j > i) add({-var_of_edge_[i], -var_of_edge_[j]});
    }
    add(std::move(cover));
  }
  if (pool)
    for (const auto& c : pool->clauses) add_edge_clause(c);
}

void SatModel::add(std::vector<Lit> c) {
  solver_->add_clause(c);
  stored_.push_back(std::move(c));
}

SatResult SatModel::solve() {
  SatResult r = solver_->solve();
  has_model_ = r == SatResult::Sat;
  return r;
}

std::vector<Edge> SatModel::decode() const {
  if (!has_model_) throw std::logic_error("sat model: no model to decode");
  std::vector<Edge> out;
  for (std::size_t k = 0; k < edge_id_of_var_.size(); ++k)
    if (solver_->model_value(static_cast<int>(k) + 1))
      out.push_back(g_->candidate(edge_id_of_var_[k]).edge);
  return out;
}

bool SatModel::add_edge_clause(const std::vector<Edge>& edges) {
  has_model_ = false;
  std::vector<Lit> c;
  for (const Edge& e : edges) {
    int v = var_of(e);
    if (v) c.push_back(v);
  }
  bool nonempty = !c.empty();
  add(std::move(c));
  return nonempty;
}

void SatModel::assert_impossible(const Edge& e) {
  int v = var_of(e);
  if (!v) return;
  has_model_ = false;
  add({-v});
}

void SatModel::block_current_model() {
  if (!has_model_) throw std::logic_error("sat model: no model to block");
  std::vector<Lit> c(solver_->num_vars());
  for (int v = 1; v <= solver_->num_vars(); ++v)
    c[v - 1] = solver_->model_value(v) ? -v : v;
  has_model_ = false;
  add(std::move(c));
}

int SatModel::var_of(const Edge& e) const {
  auto it = id_of_.find(e);
  return it == id_of_.end() ? 0 : var_of_edge_[it->second];
}

void SatModel::write_dimacs(std::ostream& out) const {
  out << "p cnf " << solver_->num_vars() << ' ' << stored_.size() << '\n';
  for (const auto& c : stored_) {
    for (Lit l : c) out << l << ' ';
    out << "0\n";
  }
}

}  // namespace mdt
