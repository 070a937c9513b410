#pragma once

#include <optional>

#include "mdt/interval.hpp"
#include "mdt/rational.hpp"

namespace mdt {

// Pseudo-angle of a nonzero vector: position along the L1 unit circle,
// rational-valued in [0,4), 0 at direction (1,0), increasing
// counterclockwise. Quadrant boundaries land exactly on 0, 1, 2, 3. The
// total order of pseudo-angles equals the true angular order.
struct PseudoAngle {
  Rational value;
  int witness = -1;  // input point realizing this direction, when known

  bool operator<(const PseudoAngle& o) const { return value < o.value; }
  bool operator==(const PseudoAngle& o) const { return value == o.value; }
};

Rational pseudo_angle(const Rational& dx, const Rational& dy);

// Filtered variant over interval coordinates; nullopt when the quadrant or
// the value cannot be pinned down at machine precision.
std::optional<Interval> pseudo_angle_interval(const Interval& dx, const Interval& dy);

}  // namespace mdt
