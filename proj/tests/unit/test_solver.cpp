#include "mdt/solve.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "doctest.h"
#include "mdt/delaunay.hpp"
#include "oracles.hpp"

using namespace mdt;

namespace {

Points random_points(std::mt19937_64& rng, int n, double extent = 100.0) {
  std::uniform_real_distribution<double> c(0.0, extent);
  Points pts(n);
  for (auto& p : pts) p = {c(rng), c(rng)};
  return pts;
}

const Points kSquare = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};

Points regular_ngon(int n) {
  Points pts(n);
  for (int k = 0; k < n; ++k) {
    double a = 2.0 * M_PI * k / n;
    pts[k] = {std::cos(a), std::sin(a)};
  }
  return pts;
}

// Exhaustive optimum over all triangulations with exact tie resolution,
// plus the exact ratio of every triangulation; n <= 9 territory.
struct ExhaustiveScan {
  std::vector<Edge> best_edges;
  DilationValue best_value;
  std::vector<DilationBound> all;
};

ExhaustiveScan scan_all_triangulations(const Points& pts) {
  oracle::TriangulationEnum en(pts);
  REQUIRE(!en.out.empty());
  ExhaustiveScan scan;
  std::optional<DilationBound> best;
  for (const auto& edges : en.out) {
    Triangulation t{edges};
    DilationValue dv = exact_dilation(pts, t);
    DilationBound b = witness_bound(pts, dv);
    if (!best || compare_bounds(b, *best) == Ordering::Less) {
      best = b;
      scan.best_edges = edges;
      scan.best_value = dv;
    }
    scan.all.push_back(std::move(b));
  }
  return scan;
}

// Cross-cutting checks every solver result must satisfy.
void check_result_integrity(const Points& pts, const SolveResult& r) {
  verify_triangulation(pts, r.triangulation.edges);
  DilationValue re = exact_dilation(pts, r.triangulation);
  CHECK(compare_bounds(witness_bound(pts, re), witness_bound(pts, r.dilation)) ==
        Ordering::Equal);
  REQUIRE(r.dilation.path.size() >= 2);
  CHECK(r.dilation.path.front() == r.dilation.s);
  CHECK(r.dilation.path.back() == r.dilation.t);
  for (std::size_t i = 0; i + 1 < r.dilation.path.size(); ++i)
    CHECK(r.triangulation.contains(Edge(r.dilation.path[i], r.dilation.path[i + 1])));
  CHECK(r.lower_bound.lo <= r.dilation.value.hi);
  if (r.status == SolveStatus::Optimal) {
    CHECK(r.lower_bound.lo == r.dilation.value.lo);
    CHECK(r.lower_bound.hi == r.dilation.value.hi);
  }
  // Pooled clauses were confirmed at bounds strictly above the final value,
  // so the returned triangulation satisfies each of them.
  for (const auto& clause : r.pooled_clauses) {
    bool satisfied = std::any_of(
        clause.begin(), clause.end(),
        [&](const Edge& e) { return r.triangulation.contains(e); });
    CHECK(satisfied);
  }
  // Every certified-infeasible probe bound stays below the final value.
  for (double b : r.stats.infeasible_probe_bounds)
    CHECK(b <= r.dilation.value.hi);
}

}  // namespace

TEST_SUITE("solver") {

TEST_CASE("triangle is optimal immediately with dilation one") {
  Points pts = {{0, 0}, {4, 0}, {1, 3}};
  for (Algorithm a : {Algorithm::Incremental, Algorithm::BinarySearch}) {
    SolveOptions opt;
    opt.algorithm = a;
    SolveResult r = solve_mdt(pts, opt);
    REQUIRE(r.status == SolveStatus::Optimal);
    check_result_integrity(pts, r);
    CHECK(r.triangulation.edges.size() == 3);
    CHECK(r.dilation.value.lo == 1.0);
    CHECK(r.dilation.value.hi == 1.0);
    CHECK(r.stats.iterations <= 2);
    CHECK(r.stats.sat_calls >= 1);
  }
}

TEST_CASE("square optimum keeps one diagonal at sqrt two") {
  double root2 = std::sqrt(2.0);
  for (Algorithm a : {Algorithm::Incremental, Algorithm::BinarySearch}) {
    SolveOptions opt;
    opt.algorithm = a;
    opt.sigma = 1e-9;  // drive the bisection variant through many probes
    SolveResult r = solve_mdt(kSquare, opt);
    REQUIRE(r.status == SolveStatus::Optimal);
    check_result_integrity(kSquare, r);
    REQUIRE(r.triangulation.edges.size() == 5);
    int diagonals = r.triangulation.contains(Edge(0, 2)) +
                    r.triangulation.contains(Edge(1, 3));
    CHECK(diagonals == 1);
    CHECK(r.dilation.value.lo <= root2 + 1e-12);
    CHECK(r.dilation.value.hi >= root2 - 1e-12);
    CHECK(r.dilation.value.hi - r.dilation.value.lo <= 1e-12);
  }
}

TEST_CASE("collinear base with apex has dilation exactly one") {
  Points pts = {{0, 0}, {1, 0}, {2, 0}, {1, 1}};
  for (Algorithm a : {Algorithm::Incremental, Algorithm::BinarySearch}) {
    SolveOptions opt;
    opt.algorithm = a;
    SolveResult r = solve_mdt(pts, opt);
    REQUIRE(r.status == SolveStatus::Optimal);
    check_result_integrity(pts, r);
    CHECK(r.triangulation.edges.size() == 5);
    CHECK(r.dilation.value.lo == 1.0);
    CHECK(r.dilation.value.hi == 1.0);
  }
}

TEST_CASE("initial solution: improvement is never worse than Delaunay") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 5; ++rep) {
    Points pts = random_points(rng, 30 + static_cast<int>(rng() % 20));
    auto [t0, d0] = initial_solution(pts, false);
    CHECK(t0.edges == delaunay(pts).edges);
    verify_triangulation(pts, t0.edges);
    double ref = oracle::double_dilation(pts, t0.edges);
    CHECK(std::abs(0.5 * (d0.value.lo + d0.value.hi) - ref) <= 1e-9);

    auto [t1, d1] = initial_solution(pts, true);
    verify_triangulation(pts, t1.edges);
    CHECK(compare_bounds(witness_bound(pts, d1), witness_bound(pts, d0)) !=
          Ordering::Greater);
    DilationValue re = exact_dilation(pts, t1);
    CHECK(compare_bounds(witness_bound(pts, re), witness_bound(pts, d1)) ==
          Ordering::Equal);
  }
}

TEST_CASE("small random instances match exhaustive enumeration") {
  std::mt19937_64 rng(97);
  long total_probes = 0;
  long checked_infeasible = 0;
  for (int rep = 0; rep < 8; ++rep) {
    int n = 5 + static_cast<int>(rng() % 4);  // 5..8
    Points pts = random_points(rng, n);
    ExhaustiveScan scan = scan_all_triangulations(pts);
    DilationBound opt_bound = witness_bound(pts, scan.best_value);

    SolveOptions inc;
    inc.algorithm = Algorithm::Incremental;
    SolveResult ri = solve_mdt(pts, inc);
    REQUIRE(ri.status == SolveStatus::Optimal);
    check_result_integrity(pts, ri);
    CHECK(compare_bounds(witness_bound(pts, ri.dilation), opt_bound) ==
          Ordering::Equal);

    SolveOptions bin;
    bin.sigma = 1e-9;  // bisect aggressively so probes are exercised
    SolveResult rb = solve_mdt(pts, bin);
    REQUIRE(rb.status == SolveStatus::Optimal);
    check_result_integrity(pts, rb);
    CHECK(compare_bounds(witness_bound(pts, rb.dilation), opt_bound) ==
          Ordering::Equal);
    total_probes += rb.stats.probes;

    // An infeasible probe at b certifies that no triangulation dips below
    // b; enumeration must agree.
    for (double b : rb.stats.infeasible_probe_bounds) {
      DilationBound probe_bound{rational_of(b)};
      for (const DilationBound& tb : scan.all)
        CHECK(compare_bounds(tb, probe_bound) != Ordering::Less);
      ++checked_infeasible;
    }
  }
  CHECK(total_probes >= 20);
  CHECK(checked_infeasible >= 20);
}

TEST_CASE("algorithms and pooling ablation agree on a mid-size instance") {
  std::mt19937_64 rng(1234);
  Points pts = random_points(rng, 26);

  SolveOptions bin;
  bin.sigma = 1e-4;
  bin.improve_initial = false;  // leave room for the probes to improve
  SolveResult a = solve_mdt(pts, bin);
  REQUIRE(a.status == SolveStatus::Optimal);
  check_result_integrity(pts, a);

  SolveOptions nopool = bin;
  nopool.use_clause_pool = false;
  SolveResult b = solve_mdt(pts, nopool);
  REQUIRE(b.status == SolveStatus::Optimal);
  check_result_integrity(pts, b);
  CHECK(b.pooled_clauses.empty());

  SolveOptions inc;
  inc.algorithm = Algorithm::Incremental;
  SolveResult c = solve_mdt(pts, inc);
  REQUIRE(c.status == SolveStatus::Optimal);
  check_result_integrity(pts, c);
  CHECK(c.stats.sampled_rounds == 0);

  DilationBound va = witness_bound(pts, a.dilation);
  CHECK(compare_bounds(va, witness_bound(pts, b.dilation)) == Ordering::Equal);
  CHECK(compare_bounds(va, witness_bound(pts, c.dilation)) == Ordering::Equal);
  CHECK(a.stats.probes >= 3);
  CHECK(a.stats.full_dilations >= 1);
  CHECK(c.stats.full_dilations >= 1);
}

TEST_CASE("bisection is deterministic") {
  std::mt19937_64 rng(5150);
  Points pts = random_points(rng, 18);
  SolveOptions opt;
  opt.sigma = 1e-6;
  SolveResult a = solve_mdt(pts, opt);
  SolveResult b = solve_mdt(pts, opt);
  CHECK(a.triangulation.edges == b.triangulation.edges);
  CHECK(a.dilation.value.lo == b.dilation.value.lo);
  CHECK(a.dilation.value.hi == b.dilation.value.hi);
  CHECK(a.dilation.path == b.dilation.path);
  CHECK(a.stats.iterations == b.stats.iterations);
  CHECK(a.stats.sat_calls == b.stats.sat_calls);
  CHECK(a.stats.probes == b.stats.probes);
}

TEST_CASE("regular polygon approximations hit the known optima") {
  struct Row {
    int n;
    double rho;
  };
  // Reference optima for small regular polygons, truncated (not rounded)
  // to 5 decimals, e.g. sqrt(5)-1 = 1.23606797... prints as 1.23606.
  const Row rows[] = {{5, 1.23606}, {6, 1.36602}, {8, 1.41421}};
  for (const Row& row : rows) {
    Points pts = regular_ngon(row.n);
    SolveResult r = solve_mdt(pts, {});
    REQUIRE(r.status == SolveStatus::Optimal);
    check_result_integrity(pts, r);
    double mid = 0.5 * (r.dilation.value.lo + r.dilation.value.hi);
    CHECK(std::abs(mid - row.rho) <= 1e-5);
  }
}

TEST_CASE("expired time limit yields a sound bounded-gap result") {
  std::mt19937_64 rng(42);
  Points pts = random_points(rng, 40);
  SolveOptions opt;
  opt.time_limit_seconds = 1e-9;  // expires before the first model solve
  for (Algorithm a : {Algorithm::Incremental, Algorithm::BinarySearch}) {
    opt.algorithm = a;
    SolveResult r = solve_mdt(pts, opt);
    REQUIRE(r.status == SolveStatus::BoundedGap);
    check_result_integrity(pts, r);
    CHECK(r.stats.sat_calls == 0);
    CHECK(r.lower_bound.lo >= 1.0);
  }
}

}  // TEST_SUITE
