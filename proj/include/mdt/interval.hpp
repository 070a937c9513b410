#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mdt {

// Closed interval over double with outward widening after every operation.
// Operations are evaluated in round-to-nearest (error <= 0.5 ulp) and the
// result endpoints are pushed outward by more than one ulp, so the enclosure
// property survives any compiler rounding-mode assumptions.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  Interval(double l, double h) : lo(l), hi(h) {}

  static Interval exact(double v) { return {v, v}; }

  bool finite() const { return std::isfinite(lo) && std::isfinite(hi); }
  bool contains(double v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return lo <= 0.0 && 0.0 <= hi; }
  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }

  // Definite comparisons; false means "not provable at this precision".
  bool certainly_lt(const Interval& o) const { return hi < o.lo; }
  bool certainly_le(const Interval& o) const { return hi <= o.lo; }
  bool certainly_gt(const Interval& o) const { return lo > o.hi; }
  bool certainly_ge(const Interval& o) const { return lo >= o.hi; }
  bool certainly_positive() const { return lo > 0.0; }
  bool certainly_negative() const { return hi < 0.0; }
  bool is_zero() const { return lo == 0.0 && hi == 0.0; }
  bool overlaps(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
};

namespace detail {
// One-directional widening by a hair more than an ulp. 2^-51 doubles the
// relative 0.5-ulp error margin; the absolute term covers subnormals and zero.
inline constexpr double kRelSlack = 0x1p-51;
inline constexpr double kAbsSlack = 0x1p-1000;

inline double widen_up(double x) {
  if (!std::isfinite(x)) return x;
  return x + (std::fabs(x) * kRelSlack + kAbsSlack);
}
inline double widen_down(double x) {
  if (!std::isfinite(x)) return x;
  return x - (std::fabs(x) * kRelSlack + kAbsSlack);
}
}  // namespace detail

inline Interval widened(double lo, double hi) {
  return {detail::widen_down(lo), detail::widen_up(hi)};
}

inline Interval operator+(const Interval& a, const Interval& b) {
  return widened(a.lo + b.lo, a.hi + b.hi);
}
inline Interval operator-(const Interval& a, const Interval& b) {
  return widened(a.lo - b.hi, a.hi - b.lo);
}
inline Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

inline Interval operator*(const Interval& a, const Interval& b) {
  double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return widened(std::min(std::min(p1, p2), std::min(p3, p4)),
                 std::max(std::max(p1, p2), std::max(p3, p4)));
}

inline Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero())
    return {-std::numeric_limits<double>::infinity(),
            std::numeric_limits<double>::infinity()};
  double q1 = a.lo / b.lo, q2 = a.lo / b.hi, q3 = a.hi / b.lo, q4 = a.hi / b.hi;
  return widened(std::min(std::min(q1, q2), std::min(q3, q4)),
                 std::max(std::max(q1, q2), std::max(q3, q4)));
}

// Square root of a nonnegative quantity; a slightly negative lower endpoint
//.appearing from outward rounding is clamped to zero.
inline Interval sqrt(const Interval& a) {
  double lo = a.lo <= 0.0 ? 0.0 : detail::widen_down(std::sqrt(a.lo));
  if (lo < 0.0) lo = 0.0;
  double hi = a.hi <= 0.0 ? 0.0 : detail::widen_up(std::sqrt(a.hi));
  return {lo, hi};
}

inline Interval square(const Interval& a) {
  if (a.lo >= 0.0) return widened(a.lo * a.lo, a.hi * a.hi);
  if (a.hi <= 0.0) return widened(a.hi * a.hi, a.lo * a.lo);
  double m = std::max(-a.lo, a.hi);
  return widened(0.0, m * m);
}

inline Interval abs(const Interval& a) {
  if (a.lo >= 0.0) return a;
  if (a.hi <= 0.0) return {-a.hi, -a.lo};
  return {0.0, std::max(-a.lo, a.hi)};
}

inline Interval hull(const Interval& a, const Interval& b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

inline Interval min(const Interval& a, const Interval& b) {
  return {std::min(a.lo, b.lo), std::min(a.hi, b.hi)};
}
inline Interval max(const Interval& a, const Interval& b) {
  return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
}

}  // namespace mdt
