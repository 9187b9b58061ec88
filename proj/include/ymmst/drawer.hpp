#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ymmst/bigint.hpp"
#include "ymmst/mmst.hpp"

namespace ymmst {

using NodeId = std::size_t;
inline constexpr NodeId kNoNode = kNoParent;

// Combinatorial rooted tree with ordered children.
class RootedTree {
 public:
  // Builds from a parent array; parent[root] must be kNoNode and be the only
  // such entry. Children keep increasing-id order. Throws ValidationError on
  // cycles, several roots or out-of-range parents, UsageError when empty.
  static RootedTree from_parents(std::span<const NodeId> parent);

  // Builds from explicit ordered child lists. Same validation as above.
  RootedTree(NodeId root, std::vector<std::vector<NodeId>> children);

  static RootedTree star(std::size_t leaves);
  static RootedTree path(std::size_t nodes);

  std::size_t size() const { return children_.size(); }
  NodeId root() const { return root_; }
  std::span<const NodeId> children(NodeId u) const { return children_[u]; }
  NodeId parent(NodeId u) const { return parent_[u]; }
  std::span<const NodeId> parents() const { return parent_; }

  // Maximum number of edges on a root-to-node path.
  std::size_t depth() const;
  std::size_t max_fanout() const;

  // Nodes in breadth-first order from the root.
  std::vector<NodeId> bfs_order() const;

  friend bool operator==(const RootedTree& a, const RootedTree& b) {
    return a.root_ == b.root_ && a.children_ == b.children_;
  }

 private:
  NodeId root_;
  std::vector<std::vector<NodeId>> children_;
  std::vector<NodeId> parent_;
};

// Displacement from a node's parent to the node.
struct Vec2 {
  BigInt dx;
  BigInt dy;
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

// Drawing of a rooted tree as per-edge vectors plus the bounding box of every
// subtree. vec[root] is (0,0). All other vectors have dx >= 1 and dy >= 1.
struct DrawnTree {
  RootedTree tree;
  std::vector<Vec2> vec;
  std::vector<BigInt> width;
  std::vector<BigInt> height;

  friend bool operator==(const DrawnTree&, const DrawnTree&) = default;
};

// Arithmetic-operation counter for the drawer: one unit per stacked y value,
// per x-recurrence step, and per integer square root.
struct OpCounter {
  std::uint64_t stack_terms = 0;
  std::uint64_t x_steps = 0;
  std::uint64_t isqrt_calls = 0;

  std::uint64_t total() const { return stack_terms + x_steps + isqrt_calls; }
};

// y offsets of M stacked child subtrees: y_M = 1 and
// y_{i-1} = y_i + height(p_i) + 1. Throws UsageError for M = 0.
std::vector<BigInt> stack_y(std::span<const BigInt> child_heights, OpCounter* ops = nullptr);

// Next child's x offset:
//   max{ x + 1 + isqrt(x^2 + y^2 - 1),  x + w + 1 + isqrt(w^2 + h^2 - 1) }
// where the second term is x + 1 for a leaf child (w = h = 0).
BigInt step_x(const BigInt& x, const BigInt& y, const BigInt& w, const BigInt& h,
              OpCounter* ops = nullptr);

// Star K_{1,M} laid out with the unbounded-degree construction.
DrawnTree draw_depth1(std::size_t leaves);

// Recursive drawing, evaluated bottom-up without recursion so deep paths do
// not exhaust the stack. Linear in the number of arithmetic operations.
DrawnTree draw_tree(const RootedTree& tree, OpCounter* ops = nullptr);

// Same drawing, with the nodes of each depth level combined in parallel.
DrawnTree draw_tree_parallel(const RootedTree& tree);

// Absolute coordinates: root at the origin, every node at its parent plus its
// vector. The parent map is the tree's.
GeomTree resolve_coordinates(const DrawnTree& drawing);

}  // namespace ymmst
