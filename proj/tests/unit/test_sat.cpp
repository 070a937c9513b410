#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "mdt/cdcl.hpp"
#include "mdt/quadtree.hpp"
#include "mdt/sat_model.hpp"
#include "mdt/triangulation.hpp"
#include "oracles.hpp"

using namespace mdt;

namespace {

Rational frac(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

// Plain recursive DPLL over literal-vector clauses, independent of the engine.
bool dpll_sat(std::vector<std::vector<int>> cls, std::vector<int>& assign) {
  for (;;) {
    bool changed = false;
    for (const auto& c : cls) {
      int unassigned = 0, last = 0;
      bool sat = false;
      for (int l : c) {
        int v = assign[std::abs(l)];
        if (v == 0) {
          ++unassigned;
          last = l;
        } else if ((v > 0) == (l > 0)) {
          sat = true;
        }
      }
      if (sat) continue;
      if (unassigned == 0) return false;
      if (unassigned == 1) {
        assign[std::abs(last)] = last > 0 ? 1 : -1;
        changed = true;
      }
    }
    if (!changed) break;
  }
  int pick = 0;
  for (std::size_t v = 1; v < assign.size(); ++v)
    if (assign[v] == 0) pick = static_cast<int>(v);
  if (!pick) return true;
  for (int val : {1, -1}) {
    std::vector<int> saved = assign;
    assign[pick] = val;
    if (dpll_sat(cls, assign)) return true;
    assign = saved;
  }
  return false;
}

bool model_satisfies(const SatSolver& s, const std::vector<std::vector<int>>& cls) {
  for (const auto& c : cls) {
    bool sat = false;
    for (int l : c)
      if (s.model_value(std::abs(l)) == (l > 0)) sat = true;
    if (!sat) return false;
  }
  return true;
}

// Pigeonhole principle with p pigeons and p-1 holes; unsatisfiable.
std::vector<std::vector<int>> pigeonhole(int p) {
  int holes = p - 1;
  auto var = [&](int pig, int hole) { return pig * holes + hole + 1; };
  std::vector<std::vector<int>> cls;
  for (int i = 0; i < p; ++i) {
    std::vector<int> c;
    for (int h = 0; h < holes; ++h) c.push_back(var(i, h));
    cls.push_back(c);
  }
  for (int h = 0; h < holes; ++h)
    for (int i = 0; i < p; ++i)
      for (int j = i + 1; j < p; ++j)
        cls.push_back({-var(i, h), -var(j, h)});
  return cls;
}

Supergraph make_square_graph(const Rational& rho) {
  Points pts = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  auto post = postprocess(pts, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}, {1, 3}},
                          rho);
  compute_thresholds(pts, post);
  return Supergraph(std::move(pts), std::move(post), rho);
}

int count_models(SatModel& m, int limit, std::vector<std::vector<Edge>>* out = nullptr) {
  int count = 0;
  while (count < limit && m.solve() == SatResult::Sat) {
    if (out) out->push_back(m.decode());
    m.block_current_model();
    ++count;
  }
  return count;
}

int find_candidate(const Supergraph& g, Edge e) {
  for (int i = 0; i < g.size(); ++i)
    if (g.candidate(i).edge == e) return i;
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_SUITE("sat") {

TEST_CASE("engine basics: units, implications, contradictions") {
  auto s = make_cdcl_solver();
  int a = s->new_var(), b = s->new_var(), c = s->new_var();
  s->add_clause({a});
  s->add_clause({-a, b});
  REQUIRE(s->solve() == SatResult::Sat);
  CHECK(s->model_value(a));
  CHECK(s->model_value(b));
  s->add_clause({-b, c});
  REQUIRE(s->solve() == SatResult::Sat);
  CHECK(s->model_value(c));
  s->add_clause({-c});
  CHECK(s->solve() == SatResult::Unsat);
  CHECK(s->solve() == SatResult::Unsat);  // stays unsat
}

TEST_CASE("tautologies and duplicate literals are harmless") {
  auto s = make_cdcl_solver();
  int a = s->new_var(), b = s->new_var();
  s->add_clause({a, -a});
  s->add_clause({b, b, b});
  REQUIRE(s->solve() == SatResult::Sat);
  CHECK(s->model_value(b));
  CHECK_THROWS_AS(s->add_clause({0}), std::invalid_argument);
  CHECK_THROWS_AS(s->add_clause({7}), std::invalid_argument);
}

TEST_CASE("empty clause set and empty clause") {
  auto s = make_cdcl_solver();
  CHECK(s->solve() == SatResult::Sat);  // no variables, vacuous
  s->new_var();
  s->add_clause({});
  CHECK(s->solve() == SatResult::Unsat);
}

TEST_CASE("pigeonhole instances are refuted") {
  for (int p : {3, 4, 5, 6}) {
    auto cls = pigeonhole(p);
    auto s = make_cdcl_solver();
    for (int v = 0; v < p * (p - 1); ++v) s->new_var();
    for (const auto& c : cls) s->add_clause(c);
    CHECK(s->solve() == SatResult::Unsat);
    CHECK(s->conflicts() > 0);
  }
}

TEST_CASE("random 3-sat agrees with the reference search across the phase transition") {
  std::mt19937_64 rng(51);
  int n = 16;
  int sat_seen = 0, unsat_seen = 0;
  for (int rep = 0; rep < 60; ++rep) {
    int m = 40 + static_cast<int>(rng() % 60);  // spans ratio 2.5 .. 6.2
    std::vector<std::vector<int>> cls;
    for (int i = 0; i < m; ++i) {
      std::set<int> vars;
      while (vars.size() < 3) vars.insert(1 + static_cast<int>(rng() % n));
      std::vector<int> c;
      for (int v : vars) c.push_back(rng() % 2 ? v : -v);
      cls.push_back(c);
    }
    auto s = make_cdcl_solver();
    for (int v = 0; v < n; ++v) s->new_var();
    for (const auto& c : cls) s->add_clause(c);
    bool got = s->solve() == SatResult::Sat;
    std::vector<int> assign(n + 1, 0);
    bool want = dpll_sat(cls, assign);
    CHECK(got == want);
    if (got) {
      CHECK(model_satisfies(*s, cls));
      ++sat_seen;
    } else {
      ++unsat_seen;
    }
  }
  CHECK(sat_seen > 5);
  CHECK(unsat_seen > 5);
}

TEST_CASE("larger satisfiable instances produce checkable models") {
  std::mt19937_64 rng(52);
  int solved = 0;
  for (int rep = 0; rep < 6; ++rep) {
    int n = 150, m = 550;  // below the threshold: nearly always satisfiable
    std::vector<std::vector<int>> cls;
    for (int i = 0; i < m; ++i) {
      std::set<int> vars;
      while (vars.size() < 3) vars.insert(1 + static_cast<int>(rng() % n));
      std::vector<int> c;
      for (int v : vars) c.push_back(rng() % 2 ? v : -v);
      cls.push_back(c);
    }
    auto s = make_cdcl_solver();
    for (int v = 0; v < n; ++v) s->new_var();
    for (const auto& c : cls) s->add_clause(c);
    if (s->solve() == SatResult::Sat) {
      CHECK(model_satisfies(*s, cls));
      ++solved;
    }
  }
  CHECK(solved >= 4);
}

TEST_CASE("square model has exactly two triangulations") {
  Supergraph g = make_square_graph(frac(3, 2));
  SatModel m(g);
  CHECK(m.variable_count() == 6);
  std::vector<std::vector<Edge>> models;
  CHECK(count_models(m, 10, &models) == 2);
  std::set<std::set<Edge>> got;
  for (auto& t : models) {
    verify_triangulation(g.points(), t);
    got.insert(std::set<Edge>(t.begin(), t.end()));
  }
  CHECK(got.size() == 2);  // one per diagonal
}

TEST_CASE("triangle model has one model: all edges") {
  Points pts = {{0, 0}, {4, 0}, {1, 3}};
  auto post = postprocess(pts, {{0, 1}, {1, 2}, {0, 2}}, Rational(2));
  compute_thresholds(pts, post);
  Supergraph g(pts, post, Rational(2));
  SatModel m(g);
  std::vector<std::vector<Edge>> models;
  CHECK(count_models(m, 5, &models) == 1);
  CHECK(models[0].size() == 3);
}

TEST_CASE("impossible diagonal forces the other one") {
  Supergraph g = make_square_graph(frac(3, 2));
  REQUIRE(g.mark_impossible(find_candidate(g, Edge(0, 2))));
  SatModel m(g);
  CHECK(m.variable_count() == 5);
  REQUIRE(m.solve() == SatResult::Sat);
  auto t = m.decode();
  CHECK(std::count(t.begin(), t.end(), Edge(1, 3)) == 1);
  verify_triangulation(g.points(), t);
  CHECK(count_models(m, 5) == 1);  // only that one remains
}

TEST_CASE("model count equals exhaustive triangulation count on small instances") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> c(0.0, 10.0);
  for (int rep = 0; rep < 10; ++rep) {
    int n = 5 + static_cast<int>(rng() % 4);  // 5..8
    Points pts(n);
    for (auto& p : pts) p = {c(rng), c(rng)};
    Quadtree tree(pts, 4);
    auto post = postprocess(
        pts, enumerate_candidates(pts, tree, Rational(50)).candidates,
        Rational(50));
    compute_thresholds(pts, post);
    Supergraph g(pts, post, Rational(50));
    SatModel m(g);
    oracle::TriangulationEnum all(pts);
    int expect = static_cast<int>(all.out.size());
    REQUIRE(expect > 0);
    std::vector<std::vector<Edge>> models;
    CHECK(count_models(m, expect + 5, &models) == expect);
    int h = hull_boundary_count(pts);
    for (auto& t : models)
      CHECK(static_cast<int>(t.size()) == triangulation_edge_count(n, h));
  }
}

TEST_CASE("pooled clauses survive a rebuild and constrain it") {
  Supergraph g = make_square_graph(frac(3, 2));
  ClausePool pool;
  pool.clauses.push_back({Edge(0, 2)});  // keep the 0-2 diagonal
  SatModel m(g, &pool);
  std::vector<std::vector<Edge>> models;
  CHECK(count_models(m, 5, &models) == 1);
  CHECK(std::count(models[0].begin(), models[0].end(), Edge(0, 2)) == 1);

  // A clause whose edges all lost their variables collapses to empty.
  Supergraph h = make_square_graph(frac(3, 2));
  REQUIRE(h.mark_impossible(find_candidate(h, Edge(0, 2))));
  SatModel m2(h);
  CHECK(!m2.add_edge_clause({Edge(0, 2)}));
  CHECK(m2.solve() == SatResult::Unsat);
}

TEST_CASE("text export round-trips structurally") {
  Supergraph g = make_square_graph(frac(3, 2));
  SatModel m(g);
  std::ostringstream out;
  m.write_dimacs(out);
  std::istringstream in(out.str());
  std::string p, cnf;
  long nv, nc;
  REQUIRE((in >> p >> cnf >> nv >> nc));
  CHECK(p == "p");
  CHECK(cnf == "cnf");
  CHECK(nv == 6);
  CHECK(nc == m.clause_count());
  long clauses = 0, lit;
  std::vector<int> cur;
  while (in >> lit) {
    if (lit == 0) {
      ++clauses;
      CHECK(!cur.empty());
      cur.clear();
    } else {
      CHECK(std::abs(lit) <= nv);
      cur.push_back(static_cast<int>(lit));
    }
  }
  CHECK(clauses == nc);
}

}  // TEST_SUITE
