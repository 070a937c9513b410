#include "mdt/search.hpp"

#include <cassert>
#include <stdexcept>

namespace mdt {

namespace {

Interval box_sq_dist_interval(const Quadtree::Node& nd, const Point& s) {
  Interval dx(0, 0), dy(0, 0);
  if (s.x < nd.x0)
    dx = Interval::exact(nd.x0) - Interval::exact(s.x);
  else if (s.x > nd.x1)
    dx = Interval::exact(s.x) - Interval::exact(nd.x1);
  if (s.y < nd.y0)
    dy = Interval::exact(nd.y0) - Interval::exact(s.y);
  else if (s.y > nd.y1)
    dy = Interval::exact(s.y) - Interval::exact(nd.y1);
  return square(dx) + square(dy);
}

Rational box_sq_dist_rational(const Quadtree::Node& nd, const Rational& sx,
                              const Rational& sy, const Point& s) {
  Rational dx(0), dy(0);
  if (s.x < nd.x0)
    dx = rational_of(nd.x0) - sx;
  else if (s.x > nd.x1)
    dx = sx - rational_of(nd.x1);
  if (s.y < nd.y0)
    dy = rational_of(nd.y0) - sy;
  else if (s.y > nd.y1)
    dy = sy - rational_of(nd.y1);
  return dx * dx + dy * dy;
}

}  // namespace

IncrementalSearch::IncrementalSearch(const Quadtree& tree, Point source)
    : tree_(tree),
      src_(source),
      sx_(rational_of(source.x)),
      sy_(rational_of(source.y)),
      queue_(Later{this}) {
  Entry root;
  root.kind = EventKind::NodeReached;
  root.id = tree.root();
  root.node = tree.root();
  root.ikey = box_sq_dist_interval(tree.node(root.node), src_);
  queue_.push(std::move(root));
}

const Rational& IncrementalSearch::exact_key(const Entry& e) const {
  if (!e.exact) {
    switch (e.kind) {
      case EventKind::NodeReached:
        e.exact = box_sq_dist_rational(tree_.node(e.node), sx_, sy_, src_);
        break;
      case EventKind::PointReached:
        e.exact = sq_dist_rational(src_, e.pt);
        break;
      case EventKind::SectorActivated:
        assert(false);  // activations always carry their exact key
        break;
    }
  }
  return *e.exact;
}

bool IncrementalSearch::before(const Entry& a, const Entry& b) const {
  if (a.ikey.certainly_lt(b.ikey)) return true;
  if (b.ikey.certainly_lt(a.ikey)) return false;
  int c = cmp(exact_key(a), exact_key(b));
  if (c != 0) return c < 0;
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  return a.id < b.id;
}

void IncrementalSearch::expand(int node) {
  const Quadtree::Node& nd = tree_.node(node);
  if (nd.leaf) {
    for (int k = nd.first; k < nd.first + nd.count; ++k) {
      Entry e;
      e.kind = EventKind::PointReached;
      e.id = tree_.ids()[k];
      e.pt = tree_.points()[k];
      e.ikey = sq_dist_interval(src_, e.pt);
      queue_.push(std::move(e));
    }
    return;
  }
  for (int q = 0; q < 4; ++q) {
    if (nd.child[q] < 0) continue;
    Entry e;
    e.kind = EventKind::NodeReached;
    e.id = nd.child[q];
    e.node = nd.child[q];
    e.ikey = box_sq_dist_interval(tree_.node(e.node), src_);
    queue_.push(std::move(e));
  }
}

std::optional<SearchEvent> IncrementalSearch::next() {
  if (halted_) return std::nullopt;
  if (pending_expand_ >= 0) {
    int node = pending_expand_;
    pending_expand_ = -1;
    expand(node);
  }
  if (queue_.empty()) return std::nullopt;
  Entry top = queue_.top();
  queue_.pop();
  if (top.kind == EventKind::NodeReached) pending_expand_ = top.node;
  return SearchEvent{top.kind, top.id, top.ikey};
}

void IncrementalSearch::prune_last_node() {
  if (pending_expand_ < 0)
    throw std::logic_error("prune_last_node: last event was not an open node");
  pending_expand_ = -1;
}

void IncrementalSearch::add_activation(int sector_id, const Rational& squared_key) {
  Entry e;
  e.kind = EventKind::SectorActivated;
  e.id = sector_id;
  e.ikey = to_interval(squared_key);
  e.exact = squared_key;
  queue_.push(std::move(e));
}

}  // namespace mdt
