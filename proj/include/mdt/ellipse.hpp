#pragma once

#include <optional>
#include <utility>

#include "mdt/interval.hpp"
#include "mdt/point.hpp"
#include "mdt/rational.hpp"

namespace mdt {

// Minimal rectangle containing the detour ellipse with foci l, r and
// major diameter kappa = rho * |lr|: semi axes a = kappa/2 along lr and
// b = sqrt(kappa^2 - |lr|^2)/2 across. All entries are outward-rounded
// enclosures, so the rectangle contains the ellipse for every value of
// rho represented by the input interval.
struct EllipseRect {
  Interval cx, cy;  // center (midpoint of lr)
  Interval ux, uy;  // unit direction of the major axis
  Interval a, b;    // semi axes, a >= b

  // Corner k (0..3): center + (+-a)u + (+-b)u_perp.
  std::pair<Interval, Interval> corner(int k) const;
};

// Requires rho >= 1 and l != r.
EllipseRect ellipse_rect(const Point& l, const Point& r, const Interval& rho);

// True iff both detours l-s-r and l-t-r have length >= rho * |lr|, i.e.
// the crossing pair (l,r) certifies that the pair (s,t) cannot be an edge
// of any triangulation with dilation below rho. Exact.
bool violates_ellipse_property(const Point& l, const Point& r, const Point& s,
                               const Point& t, const Rational& rho);

// Interval-only fast path; nullopt if inconclusive.
std::optional<bool> violates_ellipse_property_filter(const Point& l,
                                                     const Point& r,
                                                     const Point& s,
                                                     const Point& t,
                                                     const Interval& rho);

// True iff the detour l-p-r is provably longer than kappa = rho * |lr|,
// i.e. p lies provably strictly outside the closed ellipse. Interval
// filter with exact fallback; rho is rational.
bool outside_ellipse(const Point& l, const Point& r, const Point& p,
                     const Rational& rho);

}  // namespace mdt
