#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mdt/point.hpp"
#include "mdt/quadtree.hpp"
#include "mdt/rational.hpp"

namespace mdt {

// Angular exclusion region around a source point p, generated by a point
// pair (l, r) whose detour through p is already at least rho * |lr|. Every
// further point t whose direction from p falls inside the closed arc and
// whose distance reaches the activation bound forms a pair (p, t) that is
// certified non-usable: either (l, r) crosses it with both detours at
// least rho * |lr|, or the segment p-t passes through l or r itself.
//
// The arc runs counterclockwise from lo to hi in pseudo-angle units [0,4)
// and may wrap through 0. Its boundary rays pass through the generating
// points, which are recorded as witnesses: a witness is never excluded by
// its own sector, only points strictly beyond it on the boundary ray are.
struct DeadSector {
  Rational lo, hi;
  int wit_lo = -1, wit_hi = -1;       // generating point ids on each boundary ray
  Rational wit_lo_key, wit_hi_key;    // their exact squared distances from p
  Rational activation_key;            // squared activation distance (upper bound)
  Interval activation;                // enclosure of the activation distance
};

// Builds the sector for source p and generating pair (l, r) at dilation
// bound rho, or nothing when p is not provably outside the detour ellipse.
// The activation bound is the largest corner distance of the rectangle
// enclosing the ellipse, rounded upward, then clamped to the witness
// distances so witnesses always reach the search frontier no later than
// the sector activates.
std::optional<DeadSector> make_dead_sector(const Point& p, int l_id,
                                           const Point& l, int r_id,
                                           const Point& r, const Rational& rho);

// Union of activated sectors around one source. Arcs are kept merged
// (closed touching arcs coalesce); wrap-around arcs are stored split at 0.
// Witness bookkeeping makes closed-boundary exclusion sound: a point id
// registered as a not-yet-seen witness is reported even inside the cover.
class SectorCover {
 public:
  // popped[id] != 0 marks points whose search event already fired (or was
  // pruned away); such witnesses need no protection.
  void insert(const DeadSector& s, const std::vector<char>& popped);

  void mark_popped(int point_id) { unpopped_.erase(point_id); }
  bool all_witnesses_popped() const { return unpopped_.empty(); }

  bool covers(const Rational& angle) const;
  bool covers_arc(const Rational& a, const Rational& b) const;  // closed ccw arc
  bool full() const;
  bool excluded(int point_id, const Rational& angle) const {
    return unpopped_.find(point_id) == unpopped_.end() && covers(angle);
  }

  int arc_count() const { return static_cast<int>(pieces_.size()); }

 private:
  void add_piece(const Rational& a, const Rational& b);

  std::map<Rational, Rational> pieces_;  // start -> end; disjoint, non-touching
  std::map<int, Rational> unpopped_;     // witness id -> squared distance
};

// Closed arc of directions from source to any point of the node's box, or
// nullopt when the source lies in the closed box (full circle). Exact.
std::optional<std::pair<Rational, Rational>> node_angular_span(
    const Point& source, const Quadtree::Node& node);

}  // namespace mdt
