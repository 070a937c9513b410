#include "mdt/supergraph.hpp"

#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "mdt/predicates.hpp"
#include "mdt/quadtree.hpp"

using namespace mdt;

namespace {

Rational frac(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

const Points kSquare = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};

std::vector<CandidateEdge> square_candidates(const Rational& rho) {
  auto post = postprocess(
      kSquare, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}, {1, 3}}, rho);
  compute_thresholds(kSquare, post);
  return post;
}

int find_edge(const Supergraph& g, Edge e) {
  for (int i = 0; i < g.size(); ++i)
    if (g.candidate(i).edge == e) return i;
  REQUIRE(false);
  return -1;
}

// Every invariant the statuses must satisfy at any point in time.
void check_consistent(const Supergraph& g) {
  REQUIRE(!g.conflict());
  CHECK(g.possible_count() + g.impossible_count() + g.certain_count() ==
        g.size());
  for (int i = 0; i < g.size(); ++i) {
    if (g.status(i) != EdgeStatus::Certain) continue;
    for (int j : g.candidate(i).crossing)
      CHECK(g.status(j) == EdgeStatus::Impossible);
    for (int j = 0; j < g.size(); ++j) {
      if (g.status(j) != EdgeStatus::Certain) continue;
      const Edge a = g.candidate(i).edge, b = g.candidate(j).edge;
      CHECK(!segments_cross(g.points()[a.a], g.points()[a.b],
                            g.points()[b.a], g.points()[b.b]));
    }
  }
  for (int i = 0; i < g.size(); ++i) {
    bool all_crossers_dead = true;
    for (int j : g.candidate(i).crossing)
      if (g.status(j) != EdgeStatus::Impossible) all_crossers_dead = false;
    if (g.status(i) == EdgeStatus::Possible) CHECK(!all_crossers_dead);
    if (g.status(i) == EdgeStatus::Certain) CHECK(all_crossers_dead);
  }
}

Supergraph random_instance(std::mt19937_64& rng, int n, const Rational& rho) {
  std::uniform_real_distribution<double> c(0.0, 100.0);
  Points pts(n);
  for (auto& p : pts) p = {c(rng), c(rng)};
  Quadtree tree(pts, 8);
  auto post = postprocess(pts, enumerate_candidates(pts, tree, rho).candidates,
                          rho);
  compute_thresholds(pts, post);
  return Supergraph(std::move(pts), std::move(post), rho);
}

}  // namespace

TEST_SUITE("supergraph") {

TEST_CASE("square: killing one diagonal certifies the other") {
  Supergraph g(kSquare, square_candidates(frac(3, 2)), frac(3, 2));
  CHECK(g.certain_count() == 4);  // the sides have no crossers
  CHECK(g.possible_count() == 2);
  int d1 = find_edge(g, Edge(0, 2)), d2 = find_edge(g, Edge(1, 3));
  CHECK(g.status(d1) == EdgeStatus::Possible);

  std::vector<int> certain;
  CHECK(g.mark_impossible(d1, &certain));
  CHECK(certain == std::vector<int>{d2});
  CHECK(g.status(d2) == EdgeStatus::Certain);
  check_consistent(g);

  CHECK(!g.mark_impossible(d2));
  CHECK(g.conflict());
  CHECK_THROWS_AS(g.mark_impossible(d1), std::logic_error);
}

TEST_CASE("marking is idempotent and certain sides conflict immediately") {
  Supergraph g(kSquare, square_candidates(frac(3, 2)), frac(3, 2));
  int d1 = find_edge(g, Edge(0, 2));
  CHECK(g.mark_impossible(d1));
  CHECK(g.mark_impossible(d1));  // no-op
  CHECK(g.impossible_count() == 1);

  Supergraph h(kSquare, square_candidates(frac(3, 2)), frac(3, 2));
  CHECK(!h.mark_impossible(find_edge(h, Edge(0, 1))));
  CHECK(h.conflict());
}

TEST_CASE("threshold cut above every threshold changes nothing") {
  Supergraph g(kSquare, square_candidates(frac(3, 2)), frac(3, 2));
  std::vector<int> imp, cert;
  CHECK(g.apply_threshold_cut(frac(29, 20), &imp, &cert));
  CHECK(imp.empty());
  CHECK(cert.empty());
  CHECK(g.bound() == frac(29, 20));
  check_consistent(g);
}

TEST_CASE("square cut below sqrt(2) conflicts via the diagonal pair") {
  Supergraph g(kSquare, square_candidates(frac(3, 2)), frac(3, 2));
  std::vector<int> imp, cert;
  CHECK(!g.apply_threshold_cut(frac(6, 5), &imp, &cert));
  CHECK(g.conflict());
  CHECK(imp.size() == 1);   // first diagonal went down
  CHECK(cert.size() == 1);  // flipping the second one Certain, then conflict
}

TEST_CASE("cut must lower the bound") {
  Supergraph g(kSquare, square_candidates(frac(3, 2)), frac(3, 2));
  CHECK_THROWS_AS(g.apply_threshold_cut(Rational(2)), std::invalid_argument);
}

TEST_CASE("cuts are provable: only edges with threshold at or above the bound fall") {
  std::mt19937_64 rng(41);
  for (int rep = 0; rep < 4; ++rep) {
    Supergraph g = random_instance(rng, 40, frac(13, 10));
    check_consistent(g);
    Rational cut = frac(5, 4);
    std::vector<int> imp;
    if (!g.apply_threshold_cut(cut, &imp)) continue;  // conflict is legal here
    std::set<int> dropped(imp.begin(), imp.end());
    for (int i = 0; i < g.size(); ++i) {
      Rational lo = rational_of(g.candidate(i).threshold.lo);
      if (dropped.count(i)) CHECK(lo >= cut);
      if (g.status(i) != EdgeStatus::Impossible) CHECK(lo < cut);
    }
    check_consistent(g);
  }
}

TEST_CASE("random kill sequences keep every invariant") {
  std::mt19937_64 rng(42);
  for (int rep = 0; rep < 6; ++rep) {
    Supergraph g = random_instance(rng, 30, frac(5, 4));
    int initial[3] = {g.possible_count(), g.impossible_count(),
                      g.certain_count()};
    for (int step = 0; step < 40 && !g.conflict(); ++step) {
      int i = static_cast<int>(rng() % g.size());
      if (g.status(i) == EdgeStatus::Certain) break;  // would conflict
      g.mark_impossible(i);
      check_consistent(g);
      CHECK(g.possible_count() + g.impossible_count() + g.certain_count() ==
            initial[0] + initial[1] + initial[2]);
    }
  }
}

TEST_CASE("probing works on an independent copy") {
  Supergraph g(kSquare, square_candidates(frac(3, 2)), frac(3, 2));
  int d1 = find_edge(g, Edge(0, 2));
  Supergraph probe = g;
  CHECK(probe.mark_impossible(d1));
  CHECK(!probe.apply_threshold_cut(frac(6, 5)));
  CHECK(probe.conflict());
  CHECK(!g.conflict());
  CHECK(g.status(d1) == EdgeStatus::Possible);
  CHECK(g.bound() == frac(3, 2));
}

}  // TEST_SUITE
