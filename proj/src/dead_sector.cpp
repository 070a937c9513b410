#include "mdt/dead_sector.hpp"

#include <algorithm>
#include <cassert>

#include "mdt/ellipse.hpp"
#include "mdt/pseudo_angle.hpp"

namespace mdt {

std::optional<DeadSector> make_dead_sector(const Point& p, int l_id,
                                           const Point& l, int r_id,
                                           const Point& r, const Rational& rho) {
  if (!outside_ellipse(l, r, p, rho)) return std::nullopt;

  Rational tl = pseudo_angle(rational_of(l.x) - rational_of(p.x),
                             rational_of(l.y) - rational_of(p.y));
  Rational tr = pseudo_angle(rational_of(r.x) - rational_of(p.x),
                             rational_of(r.y) - rational_of(p.y));

  // The directions from p to the segment lr sweep the short arc between
  // the two boundary rays. A span of exactly a half turn would put p on
  // the open segment, which the ellipse test already ruled out.
  Rational span = tr - tl;
  if (span < 0) span += 4;
  assert(span != 2);

  DeadSector s;
  if (span < 2) {
    s.lo = tl;
    s.hi = tr;
    s.wit_lo = l_id;
    s.wit_hi = r_id;
    s.wit_lo_key = sq_dist_rational(p, l);
    s.wit_hi_key = sq_dist_rational(p, r);
  } else {
    s.lo = tr;
    s.hi = tl;
    s.wit_lo = r_id;
    s.wit_hi = l_id;
    s.wit_lo_key = sq_dist_rational(p, r);
    s.wit_hi_key = sq_dist_rational(p, l);
  }

  // Upper bound on the distance from p to any ellipse point: the enclosing
  // rectangle is convex, so its corner distances dominate every point of
  // it, in particular every point of ellipse-inside-the-wedge.
  EllipseRect rect = ellipse_rect(l, r, to_interval(rho));
  Interval px = Interval::exact(p.x), py = Interval::exact(p.y);
  Interval far2(0, 0);
  for (int k = 0; k < 4; ++k) {
    auto [cx, cy] = rect.corner(k);
    Interval d2 = square(cx - px) + square(cy - py);
    far2 = k == 0 ? d2 : max(far2, d2);
  }
  s.activation_key = rational_of(far2.hi);
  s.activation_key = std::max(s.activation_key, s.wit_lo_key);
  s.activation_key = std::max(s.activation_key, s.wit_hi_key);
  s.activation = sqrt(to_interval(s.activation_key));
  return s;
}

void SectorCover::add_piece(const Rational& a, const Rational& b) {
  Rational lo = a, hi = b;
  // Absorb every stored piece that overlaps or touches [lo, hi].
  auto it = pieces_.lower_bound(lo);
  if (it != pieces_.begin()) {
    auto prev = std::prev(it);
    if (prev->second >= lo) it = prev;
  }
  while (it != pieces_.end() && it->first <= hi) {
    lo = std::min(lo, it->first);
    hi = std::max(hi, it->second);
    it = pieces_.erase(it);
  }
  pieces_.emplace(lo, hi);
}

void SectorCover::insert(const DeadSector& s, const std::vector<char>& popped) {
  if (s.lo <= s.hi) {
    add_piece(s.lo, s.hi);
  } else {
    add_piece(s.lo, Rational(4));
    add_piece(Rational(0), s.hi);
  }
  if (s.wit_lo >= 0 && !popped[s.wit_lo]) unpopped_[s.wit_lo] = s.wit_lo_key;
  if (s.wit_hi >= 0 && !popped[s.wit_hi]) unpopped_[s.wit_hi] = s.wit_hi_key;
}

bool SectorCover::covers(const Rational& angle) const {
  auto it = pieces_.upper_bound(angle);
  if (it == pieces_.begin()) return false;
  return std::prev(it)->second >= angle;
}

bool SectorCover::covers_arc(const Rational& a, const Rational& b) const {
  if (a > b) {
    // Wraps through 0; pieces never straddle 0, so check both halves.
    return covers_arc(a, Rational(4)) && covers_arc(Rational(0), b);
  }
  auto it = pieces_.upper_bound(a);
  if (it == pieces_.begin()) return false;
  --it;
  // Stored pieces are maximal and pairwise non-touching, so a closed arc
  // is covered iff a single piece contains it.
  return it->first <= a && it->second >= b;
}

bool SectorCover::full() const {
  if (pieces_.size() != 1) return false;
  const auto& p = *pieces_.begin();
  return sign(p.first) == 0 && p.second >= 4;
}

std::optional<std::pair<Rational, Rational>> node_angular_span(
    const Point& source, const Quadtree::Node& node) {
  if (source.x >= node.x0 && source.x <= node.x1 && source.y >= node.y0 &&
      source.y <= node.y1)
    return std::nullopt;

  Rational sx = rational_of(source.x), sy = rational_of(source.y);
  const double cx[4] = {node.x0, node.x1, node.x1, node.x0};
  const double cy[4] = {node.y0, node.y0, node.y1, node.y1};
  std::vector<Rational> ang;
  for (int k = 0; k < 4; ++k)
    ang.push_back(pseudo_angle(rational_of(cx[k]) - sx, rational_of(cy[k]) - sy));
  std::sort(ang.begin(), ang.end());
  ang.erase(std::unique(ang.begin(), ang.end()), ang.end());
  if (ang.size() == 1) return std::make_pair(ang[0], ang[0]);

  // The subtended directions form the arc complementary to the widest gap
  // between consecutive corner angles.
  std::size_t widest = 0;
  Rational widest_gap = ang.front() + 4 - ang.back();  // wrap gap: last -> first
  std::size_t nang = ang.size();
  for (std::size_t k = 0; k + 1 < nang; ++k) {
    Rational gap = ang[k + 1] - ang[k];
    if (gap > widest_gap) {
      widest_gap = gap;
      widest = k + 1;  // arc starts at ang[k+1]
    }
  }
  if (widest == 0) return std::make_pair(ang.front(), ang.back());
  return std::make_pair(ang[widest], ang[widest - 1]);
}

}  // namespace mdt
