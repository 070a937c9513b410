#include "mdt/delaunay.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "mdt/convex_hull.hpp"
#include "mdt/predicates.hpp"
#include "mdt/pseudo_angle.hpp"
#include "support/oracles.hpp"

using namespace mdt;

namespace {

Rational rx(const Point& p) { return rational_of(p.x); }
Rational ry(const Point& p) { return rational_of(p.y); }

int in_circle_oracle(const Point& a, const Point& b, const Point& c,
                     const Point& d) {
  // Explicit return type: without it the lambda would deduce a gmpxx
  // expression template referencing dead temporaries.
  auto lift = [](const Point& p) -> Rational {
    return rx(p) * rx(p) + ry(p) * ry(p);
  };
  Rational m[3][3] = {
      {rx(a) - rx(d), ry(a) - ry(d), lift(a) - lift(d)},
      {rx(b) - rx(d), ry(b) - ry(d), lift(b) - lift(d)},
      {rx(c) - rx(d), ry(c) - ry(d), lift(c) - lift(d)},
  };
  Rational det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                 m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                 m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return sign(det);
}

// Reconstructs the interior faces of a crossing-free edge set by walking
// the planar graph counterclockwise; for a triangulation every interior
// face must be a triangle.
std::vector<std::array<int, 3>> extract_triangles(const Points& pts,
                                                  const std::vector<Edge>& edges) {
  const int n = static_cast<int>(pts.size());
  std::vector<std::vector<int>> ring(n);
  for (const Edge& e : edges) {
    ring[e.a].push_back(e.b);
    ring[e.b].push_back(e.a);
  }
  for (int v = 0; v < n; ++v) {
    std::sort(ring[v].begin(), ring[v].end(), [&](int i, int j) {
      return pseudo_angle(rx(pts[i]) - rx(pts[v]), ry(pts[i]) - ry(pts[v])) <
             pseudo_angle(rx(pts[j]) - rx(pts[v]), ry(pts[j]) - ry(pts[v]));
    });
  }
  std::map<std::pair<int, int>, int> pos;
  for (int v = 0; v < n; ++v)
    for (int k = 0; k < static_cast<int>(ring[v].size()); ++k)
      pos[{v, ring[v][k]}] = k;

  std::set<std::pair<int, int>> used;
  std::vector<std::array<int, 3>> tris;
  int outer_faces = 0;
  for (const Edge& e : edges) {
    for (auto [su, sv] : {std::pair(e.a, e.b), std::pair(e.b, e.a)}) {
      if (used.count({su, sv})) continue;
      std::vector<int> face;
      int u = su, v = sv;
      do {
        used.insert({u, v});
        face.push_back(u);
        int k = pos.at({v, u});
        int deg = static_cast<int>(ring[v].size());
        int w = ring[v][(k - 1 + deg) % deg];  // clockwise from u around v
        u = v;
        v = w;
      } while (!(u == su && v == sv) && face.size() <= edges.size() + 2);
      Rational area(0);
      for (std::size_t k = 0; k < face.size(); ++k) {
        const Point& p = pts[face[k]];
        const Point& q = pts[face[(k + 1) % face.size()]];
        area += rx(p) * ry(q) - rx(q) * ry(p);
      }
      if (sign(area) < 0) {
        ++outer_faces;  // hull cycle, traversed clockwise
        continue;
      }
      REQUIRE(face.size() == 3);
      tris.push_back({face[0], face[1], face[2]});
    }
  }
  REQUIRE(outer_faces == 1);
  return tris;
}

// Global empty-circumcircle check over the reconstructed triangles;
// strict unless cocircular groups exist (allow_cocircular).
void check_delaunay_property(const Points& pts, const Triangulation& t,
                             bool allow_cocircular) {
  auto tris = extract_triangles(pts, t.edges);
  int expect =
      2 * static_cast<int>(pts.size()) - hull_boundary_count(pts) - 2;
  REQUIRE(static_cast<int>(tris.size()) == expect);
  for (auto& tri : tris) {
    Point a = pts[tri[0]], b = pts[tri[1]], c = pts[tri[2]];
    REQUIRE(orientation(a, b, c) > 0);
    for (int d = 0; d < static_cast<int>(pts.size()); ++d) {
      if (d == tri[0] || d == tri[1] || d == tri[2]) continue;
      int s = in_circle_oracle(a, b, c, pts[d]);
      if (allow_cocircular)
        CHECK(s <= 0);
      else
        CHECK(s < 0);
    }
  }
}

Points random_points(std::mt19937_64& rng, int n, double lim) {
  std::uniform_real_distribution<double> d(0.0, lim);
  Points pts;
  for (int i = 0; i < n; ++i) pts.push_back({d(rng), d(rng)});
  return pts;
}

}  // namespace

TEST_SUITE("delaunay") {

TEST_CASE("unit square: four sides and one diagonal, deterministic") {
  Points pts = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  Triangulation t = delaunay(pts);
  REQUIRE(t.edges.size() == 5);
  verify_triangulation(pts, t.edges);
  CHECK(t.contains(Edge(0, 1)));
  CHECK(t.contains(Edge(1, 2)));
  CHECK(t.contains(Edge(2, 3)));
  CHECK(t.contains(Edge(0, 3)));
  bool diag02 = t.contains(Edge(0, 2));
  bool diag13 = t.contains(Edge(1, 3));
  CHECK(diag02 != diag13);
  // The cocircular tie resolves by the id perturbation: flipping the
  // present diagonal must look illegal to the perturbed predicate.
  Triangulation again = delaunay(pts);
  CHECK(t.edges == again.edges);
  if (diag02) {
    CHECK(in_circle_perturbed(pts[0], 0, pts[1], 1, pts[2], 2, pts[3], 3) <= 0);
  } else {
    CHECK(in_circle_perturbed(pts[1], 1, pts[2], 2, pts[3], 3, pts[0], 0) <= 0);
  }
}

TEST_CASE("random points: valid triangulation with the empty-circle property") {
  std::mt19937_64 rng(31);
  for (int n : {3, 4, 5, 8, 16, 40, 120}) {
    for (int rep = 0; rep < (n <= 16 ? 12 : 3); ++rep) {
      Points pts = random_points(rng, n, 100.0);
      Triangulation t = delaunay(pts);
      verify_triangulation(pts, t.edges);
      check_delaunay_property(pts, t, /*allow_cocircular=*/false);
    }
  }
}

TEST_CASE("matches exhaustive empty-circle edge oracle on small generic sets") {
  std::mt19937_64 rng(32);
  for (int rep = 0; rep < 6; ++rep) {
    const int n = 11;
    Points pts = random_points(rng, n, 50.0);
    Triangulation t = delaunay(pts);
    // Edge (i,j) is Delaunay iff some circle through i and j is empty,
    // i.e. some circumcircle with a third point excludes everything else.
    std::vector<Edge> want;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        bool found = false;
        for (int k = 0; k < n && !found; ++k) {
          if (k == i || k == j) continue;
          Point a = pts[i], b = pts[j], c = pts[k];
          if (orientation(a, b, c) <= 0) std::swap(a, b);
          if (orientation(a, b, c) <= 0) continue;
          bool empty = true;
          for (int l = 0; l < n && empty; ++l) {
            if (l == i || l == j || l == k) continue;
            if (in_circle_oracle(a, b, c, pts[l]) >= 0) empty = false;
          }
          found = empty;
        }
        if (found) want.push_back(Edge(i, j));
      }
    }
    sort_edges(want);
    CHECK(t.edges == want);
  }
}

TEST_CASE("grids: heavy cocircularity handled consistently") {
  for (int k : {3, 4, 6}) {
    Points pts;
    for (int x = 0; x < k; ++x)
      for (int y = 0; y < k; ++y)
        pts.push_back({static_cast<double>(x), static_cast<double>(y)});
    Triangulation t = delaunay(pts);
    verify_triangulation(pts, t.edges);
    check_delaunay_property(pts, t, /*allow_cocircular=*/true);
    Triangulation again = delaunay(pts);
    CHECK(t.edges == again.edges);
  }
}

TEST_CASE("near-cocircular ring") {
  // Doubles rounded from a circle: no four points exactly cocircular, but
  // every incircle test is a near tie.
  Points pts;
  const int n = 48;
  for (int i = 0; i < n; ++i) {
    double a = 2.0 * 3.14159265358979323846 * i / n;
    pts.push_back({std::cos(a), std::sin(a)});
  }
  pts.push_back({0.0, 0.0});
  Triangulation t = delaunay(pts);
  verify_triangulation(pts, t.edges);
  check_delaunay_property(pts, t, /*allow_cocircular=*/true);
}

TEST_CASE("collinear runs inside the input") {
  Points pts;
  for (int x = 0; x < 7; ++x) pts.push_back({static_cast<double>(x), 0.0});
  pts.push_back({3.0, 5.0});
  pts.push_back({2.0, -4.0});
  Triangulation t = delaunay(pts);
  verify_triangulation(pts, t.edges);
  check_delaunay_property(pts, t, /*allow_cocircular=*/true);
}

TEST_CASE("degenerate inputs rejected") {
  CHECK_THROWS_AS(delaunay(Points{{0, 0}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(delaunay(Points{{0, 0}, {1, 1}, {2, 2}, {7, 7}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(delaunay(Points{{0, 0}, {1, 1}, {1, 1}, {2, 0}}),
                  std::invalid_argument);
}

TEST_CASE("larger instance smoke") {
  std::mt19937_64 rng(33);
  Points pts = random_points(rng, 1000, 1000.0);
  Triangulation t = delaunay(pts);
  verify_triangulation(pts, t.edges);
}

TEST_CASE("constrained: no constraints or present constraints change nothing") {
  std::mt19937_64 rng(34);
  Points pts = random_points(rng, 60, 100.0);
  Triangulation base = delaunay(pts);
  CHECK(constrained_delaunay(pts, {}).edges == base.edges);
  std::vector<Edge> some = {base.edges[0], base.edges[base.edges.size() / 2],
                            base.edges.back()};
  CHECK(constrained_delaunay(pts, some).edges == base.edges);
}

TEST_CASE("constrained: forced edges appear and the result stays valid") {
  std::mt19937_64 rng(35);
  int forced_total = 0;
  for (int rep = 0; rep < 40; ++rep) {
    Points pts = random_points(rng, 24, 100.0);
    Triangulation base = delaunay(pts);
    // Collect valid candidate edges not in the Delaunay result, greedily
    // keeping a pairwise non-crossing subset.
    std::vector<Edge> forced;
    std::uniform_int_distribution<int> pick(0, 23);
    for (int tries = 0; tries < 60 && forced.size() < 4; ++tries) {
      int a = pick(rng), b = pick(rng);
      if (a == b) continue;
      Edge e(a, b);
      if (base.contains(e)) continue;
      if (!edge_avoids_points(pts, e.a, e.b)) continue;
      bool ok = true;
      for (const Edge& f : forced) {
        if (e == f || segments_cross(pts[e.a], pts[e.b], pts[f.a], pts[f.b]))
          ok = false;
        if (f.a == e.a && f.b == e.b) ok = false;
      }
      if (ok) forced.push_back(e);
    }
    Triangulation t = constrained_delaunay(pts, forced);
    verify_triangulation(pts, t.edges);
    for (const Edge& e : forced) CHECK(t.contains(e));
    forced_total += static_cast<int>(forced.size());
    Triangulation again = constrained_delaunay(pts, forced);
    CHECK(t.edges == again.edges);
  }
  CHECK(forced_total > 80);
}

TEST_CASE("constrained: crossing constraints rejected") {
  Points pts = {{0, 0}, {10, 0}, {10, 10}, {0, 10}, {5, 1}, {5, 9}, {1, 5}, {9, 5}};
  std::vector<Edge> crossing = {Edge(4, 5), Edge(6, 7)};
  CHECK_THROWS_AS(constrained_delaunay(pts, crossing), std::logic_error);
}

}  // TEST_SUITE
