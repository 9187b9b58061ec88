#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "ymmst/geometry.hpp"

namespace ymmst {

using VertexId = std::size_t;
inline constexpr VertexId kNoParent = std::numeric_limits<VertexId>::max();

// A set of grid points with a distinguished root.
//
// Construction enforces what the nearest-below characterisation needs:
// pairwise distinct y coordinates and a root that is strictly the lowest
// point. Violations throw ValidationError naming the offending pair.
class RootedPointSet {
 public:
  explicit RootedPointSet(std::vector<Point> points, VertexId root = 0);

  std::size_t size() const { return points_.size(); }
  VertexId root() const { return root_; }
  const Point& operator[](VertexId v) const { return points_[v]; }
  std::span<const Point> points() const { return points_; }

  friend bool operator==(const RootedPointSet&, const RootedPointSet&) = default;

 private:
  std::vector<Point> points_;
  VertexId root_;
};

using Edge = std::pair<VertexId, VertexId>;

// Geometric tree on a rooted point set, stored as a parent map. parent[root]
// is kNoParent. `unique` is false when the builder had to break a tie between
// equidistant nearest-below candidates.
//
// The parent map is not required to be a valid y-MMST: drawings read from
// disk land here before they are verified.
struct GeomTree {
  RootedPointSet pointset;
  std::vector<VertexId> parent;
  bool unique = true;

  std::size_t size() const { return pointset.size(); }

  // Undirected edges as (min, max) pairs, sorted.
  std::vector<Edge> edges() const;

  // Throws ValidationError unless parent has one entry per vertex, only the
  // root lacks a parent, and every parent index is in range.
  void validate_shape() const;

  friend bool operator==(const GeomTree&, const GeomTree&) = default;
};

struct NearestBelow {
  VertexId vertex;
  bool unique;
};

// Nearest vertex strictly below v. Ties go to the smallest index and clear
// `unique`. Throws UsageError for v == root or v out of range.
NearestBelow nearest_below(const RootedPointSet& points, VertexId v);

// Rooted y-MMST by linking every non-root vertex to its nearest-below vertex.
// O(n^2) exact scan, parallel over vertices.
GeomTree build_ymmst(const RootedPointSet& points);

// Single-threaded reference for build_ymmst; identical output.
GeomTree build_ymmst_serial(const RootedPointSet& points);

// True iff every non-root vertex has a neighbour strictly below it and the
// root is reachable from every vertex, i.e. every vertex reaches the lowest
// vertex along a y-monotone path.
bool check_y_monotone_connectivity(const RootedPointSet& points, std::span<const Edge> edges);
bool check_y_monotone_connectivity(const GeomTree& tree);

}  // namespace ymmst
