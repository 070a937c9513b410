#pragma once

#include <cstdint>
#include <vector>

#include "mdt/interval.hpp"
#include "mdt/rational.hpp"
#include "mdt/sqrt_sum.hpp"

namespace mdt {

// Input coordinates are doubles (integers and decimal fractions from
// instance files convert exactly), so every derived quantity is rational.
struct Point {
  double x = 0.0;
  double y = 0.0;
};

using Points = std::vector<Point>;

struct Segment {
  int a = -1;
  int b = -1;
};

// Undirected edge with canonical endpoint order.
struct Edge {
  int a = -1;
  int b = -1;

  Edge() = default;
  Edge(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {}
  bool operator==(const Edge& o) const { return a == o.a && b == o.b; }
  bool operator<(const Edge& o) const { return a < o.a || (a == o.a && b < o.b); }
};

struct EdgeHash {
  std::size_t operator()(const Edge& e) const {
    return std::hash<std::uint64_t>()(
        (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.a)) << 32) |
        static_cast<std::uint32_t>(e.b));
  }
};

inline Interval sq_dist_interval(const Point& p, const Point& q) {
  Interval dx = Interval::exact(p.x) - Interval::exact(q.x);
  Interval dy = Interval::exact(p.y) - Interval::exact(q.y);
  return square(dx) + square(dy);
}

inline Interval dist_interval(const Point& p, const Point& q) {
  return sqrt(sq_dist_interval(p, q));
}

inline Rational sq_dist_rational(const Point& p, const Point& q) {
  Rational dx = rational_of(p.x) - rational_of(q.x);
  Rational dy = rational_of(p.y) - rational_of(q.y);
  return dx * dx + dy * dy;
}

// Exact distance as a one-term radical sum.
inline SqrtSum dist_sum(const Point& p, const Point& q) {
  return SqrtSum::sqrt_term(sq_dist_rational(p, q));
}

}  // namespace mdt
