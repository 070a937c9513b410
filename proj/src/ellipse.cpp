#include "mdt/ellipse.hpp"

#include <cassert>

#include "mdt/sqrt_sum.hpp"

namespace mdt {

std::pair<Interval, Interval> EllipseRect::corner(int k) const {
  Interval sa = (k & 1) ? a : -a;
  Interval sb = (k & 2) ? b : -b;
  // u_perp = (-uy, ux)
  return {cx + sa * ux - sb * uy, cy + sa * uy + sb * ux};
}

EllipseRect ellipse_rect(const Point& l, const Point& r, const Interval& rho) {
  Interval d2 = sq_dist_interval(l, r);
  Interval d = sqrt(d2);
  Interval kappa = rho * d;
  EllipseRect er;
  er.cx = (Interval::exact(l.x) + Interval::exact(r.x)) * Interval::exact(0.5);
  er.cy = (Interval::exact(l.y) + Interval::exact(r.y)) * Interval::exact(0.5);
  er.ux = (Interval::exact(r.x) - Interval::exact(l.x)) / d;
  er.uy = (Interval::exact(r.y) - Interval::exact(l.y)) / d;
  er.a = kappa * Interval::exact(0.5);
  // For rho barely above 1 the radicand may dip below zero in the
  // enclosure; sqrt clamps, which only widens the rectangle downward.
  er.b = sqrt(square(kappa) - d2) * Interval::exact(0.5);
  return er;
}

namespace {

// Compares detour |lp| + |pr| against rho * |lr| exactly.
Ordering detour_vs_bound(const Point& l, const Point& r, const Point& p,
                         const Rational& rho) {
  SqrtSum detour = dist_sum(l, p);
  detour.add(dist_sum(p, r));
  SqrtSum bound = SqrtSum::sqrt_term(sq_dist_rational(l, r), rho);
  return compare_sqrt_sums(detour, bound);
}

}  // namespace

bool violates_ellipse_property(const Point& l, const Point& r, const Point& s,
                               const Point& t, const Rational& rho) {
  return detour_vs_bound(l, r, s, rho) != Ordering::Less &&
         detour_vs_bound(l, r, t, rho) != Ordering::Less;
}

std::optional<bool> violates_ellipse_property_filter(const Point& l,
                                                     const Point& r,
                                                     const Point& s,
                                                     const Point& t,
                                                     const Interval& rho) {
  Interval bound = rho * dist_interval(l, r);
  Interval ds = dist_interval(l, s) + dist_interval(s, r);
  Interval dt = dist_interval(l, t) + dist_interval(t, r);
  if (ds.certainly_lt(bound) || dt.certainly_lt(bound)) return false;
  if (ds.certainly_ge(bound) && dt.certainly_ge(bound)) return true;
  return std::nullopt;
}

bool outside_ellipse(const Point& l, const Point& r, const Point& p,
                     const Rational& rho) {
  Interval bound = to_interval(rho) * dist_interval(l, r);
  Interval detour = dist_interval(l, p) + dist_interval(p, r);
  if (detour.certainly_gt(bound)) return true;
  if (detour.certainly_le(bound)) return false;
  return detour_vs_bound(l, r, p, rho) == Ordering::Greater;
}

}  // namespace mdt
