#include "mdt/predicates.hpp"

#include <cassert>
#include <stdexcept>

namespace mdt {
namespace {

int orientation_exact(const Point& a, const Point& b, const Point& c) {
  Rational det = (rational_of(b.x) - rational_of(a.x)) *
                     (rational_of(c.y) - rational_of(a.y)) -
                 (rational_of(b.y) - rational_of(a.y)) *
                     (rational_of(c.x) - rational_of(a.x));
  return sign(det);
}

int in_circle_exact(const Point& a, const Point& b, const Point& c,
                    const Point& d) {
  Rational adx = rational_of(a.x) - rational_of(d.x);
  Rational ady = rational_of(a.y) - rational_of(d.y);
  Rational bdx = rational_of(b.x) - rational_of(d.x);
  Rational bdy = rational_of(b.y) - rational_of(d.y);
  Rational cdx = rational_of(c.x) - rational_of(d.x);
  Rational cdy = rational_of(c.y) - rational_of(d.y);
  Rational ad2 = adx * adx + ady * ady;
  Rational bd2 = bdx * bdx + bdy * bdy;
  Rational cd2 = cdx * cdx + cdy * cdy;
  Rational det = adx * (bdy * cd2 - cdy * bd2) -
                 ady * (bdx * cd2 - cdx * bd2) +
                 ad2 * (bdx * cdy - cdx * bdy);
  return sign(det);
}

}  // namespace

int orientation(const Point& a, const Point& b, const Point& c) {
  Interval det = (Interval::exact(b.x) - Interval::exact(a.x)) *
                     (Interval::exact(c.y) - Interval::exact(a.y)) -
                 (Interval::exact(b.y) - Interval::exact(a.y)) *
                     (Interval::exact(c.x) - Interval::exact(a.x));
  if (det.certainly_positive()) return 1;
  if (det.certainly_negative()) return -1;
  return orientation_exact(a, b, c);
}

int in_circle(const Point& a, const Point& b, const Point& c, const Point& d) {
  Interval adx = Interval::exact(a.x) - Interval::exact(d.x);
  Interval ady = Interval::exact(a.y) - Interval::exact(d.y);
  Interval bdx = Interval::exact(b.x) - Interval::exact(d.x);
  Interval bdy = Interval::exact(b.y) - Interval::exact(d.y);
  Interval cdx = Interval::exact(c.x) - Interval::exact(d.x);
  Interval cdy = Interval::exact(c.y) - Interval::exact(d.y);
  Interval ad2 = square(adx) + square(ady);
  Interval bd2 = square(bdx) + square(bdy);
  Interval cd2 = square(cdx) + square(cdy);
  Interval det = adx * (bdy * cd2 - cdy * bd2) -
                 ady * (bdx * cd2 - cdx * bd2) +
                 ad2 * (bdx * cdy - cdx * bdy);
  if (det.certainly_positive()) return 1;
  if (det.certainly_negative()) return -1;
  return in_circle_exact(a, b, c, d);
}

int in_circle_perturbed(const Point& a, int ia, const Point& b, int ib,
                        const Point& c, int ic, const Point& d, int id) {
  int s = in_circle(a, b, c, d);
  if (s != 0) return s;
  // Perturb the lifted z coordinates by eps^(id+1). Expanding the 4x4
  // lifted determinant along the z column, the cofactor of row p is the
  // signed orientation of the other three rows in order; the smallest id
  // has the largest perturbation and dominates.
  struct Row {
    int id;
    int cofactor_sign;
  };
  Row rows[4] = {
      {ia, orientation(b, c, d)},
      {ib, -orientation(a, c, d)},
      {ic, orientation(a, b, d)},
      {id, -orientation(a, b, c)},
  };
  assert(ia != ib && ia != ic && ia != id && ib != ic && ib != id && ic != id);
  Row* best = nullptr;
  for (Row& r : rows) {
    if (r.cofactor_sign == 0) continue;
    if (best == nullptr || r.id < best->id) best = &r;
  }
  if (best == nullptr)
    throw std::invalid_argument("in_circle_perturbed: all four points collinear");
  return best->cofactor_sign;
}

bool segments_cross(const Point& a, const Point& b, const Point& c,
                    const Point& d) {
  int o1 = orientation(a, b, c);
  int o2 = orientation(a, b, d);
  if (o1 == 0 || o2 == 0 || o1 == o2) return false;
  int o3 = orientation(c, d, a);
  int o4 = orientation(c, d, b);
  return o3 != 0 && o4 != 0 && o3 != o4;
}

bool point_on_segment(const Point& p, const Point& a, const Point& b) {
  if (orientation(a, b, p) != 0) return false;
  Rational px = rational_of(p.x), py = rational_of(p.y);
  Rational ax = rational_of(a.x), ay = rational_of(a.y);
  Rational bx = rational_of(b.x), by = rational_of(b.y);
  // p collinear with ab; strictly between iff the projections onto the
  // dominant axis are strictly ordered.
  Rational dot = (px - ax) * (bx - ax) + (py - ay) * (by - ay);
  if (sign(dot) <= 0) return false;
  Rational len2 = (bx - ax) * (bx - ax) + (by - ay) * (by - ay);
  return dot < len2;
}

}  // namespace mdt
