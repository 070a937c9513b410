#pragma once

#include <optional>
#include <queue>
#include <vector>

#include "mdt/point.hpp"
#include "mdt/quadtree.hpp"
#include "mdt/rational.hpp"

namespace mdt {

// Event kinds in tie-break order: at equal keys an activation fires before
// the node or point at that radius is handed out, and nodes open before
// their points are reported.
enum class EventKind : int { SectorActivated = 0, NodeReached = 1, PointReached = 2 };

struct SearchEvent {
  EventKind kind;
  int id;        // original point id, tree node id, or caller's sector id
  Interval key;  // enclosure of the squared-distance key
};

// Pull-based best-first traversal of a quadtree from a source point,
// modelling a disk growing around the source. Events come out in exact
// nondecreasing squared-distance order (rational comparisons break interval
// overlaps), with ties resolved by (kind, id).
//
// Protocol per event:
//   NodeReached    -> caller may prune_last_node() to suppress the subtree;
//                     otherwise the node is expanded on the next pull.
//   PointReached   -> the point (original id) entered the disk.
//   SectorActivated-> an activation previously registered by the caller via
//                     add_activation() reached its key.
// add_activation keys are squared upper bounds and must not lie below the
// key of the last delivered event, or delivery order is no longer sorted.
class IncrementalSearch {
 public:
  IncrementalSearch(const Quadtree& tree, Point source);

  std::optional<SearchEvent> next();
  void prune_last_node();
  void add_activation(int sector_id, const Rational& squared_key);
  void halt() { halted_ = true; }

 private:
  struct Entry {
    EventKind kind;
    int id;         // payload id as in SearchEvent
    int node = -1;  // tree node for NodeReached
    Point pt{};     // point for PointReached
    Interval ikey;
    mutable std::optional<Rational> exact;
  };
  struct Later {
    IncrementalSearch* s;
    bool operator()(const Entry& a, const Entry& b) const { return s->before(b, a); }
  };

  bool before(const Entry& a, const Entry& b) const;
  const Rational& exact_key(const Entry& e) const;
  void expand(int node);

  const Quadtree& tree_;
  Point src_;
  Rational sx_, sy_;
  std::priority_queue<Entry, std::vector<Entry>, Later> queue_;
  int pending_expand_ = -1;
  bool halted_ = false;
};

}  // namespace mdt
