#pragma once

#include <vector>

#include "mdt/point.hpp"

namespace mdt {

// Static quadtree over a point set. Points are reordered at build time so
// that every node owns a contiguous subrange of the storage array; each
// node keeps a tight bounding box recomputed from its subrange (not the
// quadrant cell), which gives strictly better pruning during searches.
//
// The tree is immutable after construction and can be shared between any
// number of concurrent search cursors.
class Quadtree {
 public:
  struct Node {
    double x0, y0, x1, y1;  // tight bounding box of the subrange
    int first, count;       // subrange [first, first+count) of points()
    int child[4];           // node ids by quadrant, -1 when empty
    bool leaf;
  };

  explicit Quadtree(const Points& pts, int leaf_capacity = 8);

  int root() const { return 0; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(int i) const { return nodes_[i]; }

  // Reordered storage. ids()[k] is the original index of points()[k].
  const Points& points() const { return pts_; }
  const std::vector<int>& ids() const { return ids_; }

  int size() const { return static_cast<int>(pts_.size()); }
  int leaf_capacity() const { return leaf_capacity_; }

 private:
  int build(int first, int count);

  Points pts_;
  std::vector<int> ids_;
  std::vector<Node> nodes_;
  int leaf_capacity_;
};

}  // namespace mdt
