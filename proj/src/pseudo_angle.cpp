#include "mdt/pseudo_angle.hpp"

#include <stdexcept>

namespace mdt {

Rational pseudo_angle(const Rational& dx, const Rational& dy) {
  int sx = sign(dx), sy = sign(dy);
  if (sx == 0 && sy == 0) throw std::invalid_argument("zero vector");
  Rational s = abs(dx) + abs(dy);
  Rational p = dy / s;
  if (sx < 0) return Rational(2) - p;
  if (sy < 0) return Rational(4) + p;
  return p;
}

std::optional<Interval> pseudo_angle_interval(const Interval& dx, const Interval& dy) {
  // Quadrant split must be unambiguous: each coordinate either provably
  // nonzero or exactly zero.
  auto sign_of = [](const Interval& v) -> std::optional<int> {
    if (v.certainly_positive()) return 1;
    if (v.certainly_negative()) return -1;
    if (v.is_zero()) return 0;
    return std::nullopt;
  };
  auto sx = sign_of(dx), sy = sign_of(dy);
  if (!sx || !sy) return std::nullopt;
  if (*sx == 0 && *sy == 0) return std::nullopt;
  Interval s = abs(dx) + abs(dy);
  Interval p = dy / s;
  if (*sx < 0) return Interval::exact(2.0) - p;
  if (*sy < 0) return Interval::exact(4.0) + p;
  return p;
}

}  // namespace mdt
