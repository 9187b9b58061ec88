#include "ymmst/drawer.hpp"

#include <algorithm>
#include <string>

#include "ymmst/errors.hpp"
#include "ymmst/geometry.hpp"

namespace ymmst {

RootedTree::RootedTree(NodeId root, std::vector<std::vector<NodeId>> children)
    : root_(root), children_(std::move(children)) {
  const std::size_t n = children_.size();
  if (n == 0) throw UsageError("tree is empty");
  if (root_ >= n) throw ValidationError("root " + std::to_string(root_) + " out of range");

  parent_.assign(n, kNoNode);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId c : children_[u]) {
      if (c >= n) throw ValidationError("child " + std::to_string(c) + " out of range");
      if (c == root_) throw ValidationError("root " + std::to_string(c) + " listed as a child");
      if (parent_[c] != kNoNode) {
        throw ValidationError("node " + std::to_string(c) + " has two parents");
      }
      parent_[c] = u;
    }
  }
  for (NodeId u = 0; u < n; ++u) {
    if (u != root_ && parent_[u] == kNoNode) {
      throw ValidationError("node " + std::to_string(u) + " is a second root");
    }
  }
  // One parent per non-root node: the tree is connected iff BFS reaches all.
  if (bfs_order().size() != n) throw ValidationError("parent map contains a cycle");
}

RootedTree RootedTree::from_parents(std::span<const NodeId> parent) {
  const std::size_t n = parent.size();
  if (n == 0) throw UsageError("tree is empty");
  NodeId root = kNoNode;
  std::vector<std::vector<NodeId>> children(n);
  for (NodeId u = 0; u < n; ++u) {
    if (parent[u] == kNoNode) {
      if (root != kNoNode) {
        throw ValidationError("nodes " + std::to_string(root) + " and " + std::to_string(u) +
                              " are both roots");
      }
      root = u;
    } else {
      if (parent[u] >= n) {
        throw ValidationError("node " + std::to_string(u) + " has out-of-range parent");
      }
      children[parent[u]].push_back(u);
    }
  }
  if (root == kNoNode) throw ValidationError("no root");
  return RootedTree(root, std::move(children));
}

RootedTree RootedTree::star(std::size_t leaves) {
  std::vector<std::vector<NodeId>> children(leaves + 1);
  for (NodeId u = 1; u <= leaves; ++u) children[0].push_back(u);
  return RootedTree(0, std::move(children));
}

RootedTree RootedTree::path(std::size_t nodes) {
  std::vector<std::vector<NodeId>> children(nodes);
  for (NodeId u = 0; u + 1 < nodes; ++u) children[u].push_back(u + 1);
  return RootedTree(0, std::move(children));
}

std::vector<NodeId> RootedTree::bfs_order() const {
  std::vector<NodeId> order;
  order.reserve(size());
  order.push_back(root_);
  for (std::size_t head = 0; head < order.size() && order.size() <= size(); ++head) {
    for (NodeId c : children_[order[head]]) order.push_back(c);
  }
  return order;
}

std::size_t RootedTree::depth() const {
  std::vector<std::size_t> level(size(), 0);
  std::size_t deepest = 0;
  for (NodeId u : bfs_order()) {
    for (NodeId c : children_[u]) {
      level[c] = level[u] + 1;
      deepest = std::max(deepest, level[c]);
    }
  }
  return deepest;
}

std::size_t RootedTree::max_fanout() const {
  std::size_t best = 0;
  for (const auto& c : children_) best = std::max(best, c.size());
  return best;
}

std::vector<BigInt> stack_y(std::span<const BigInt> child_heights, OpCounter* ops) {
  const std::size_t m = child_heights.size();
  if (m == 0) throw UsageError("stack_y needs at least one child");
  std::vector<BigInt> y(m);
  y[m - 1] = BigInt(1);
  for (std::size_t i = m - 1; i > 0; --i) {
    if (child_heights[i].sign() < 0) throw UsageError("negative subtree height");
    y[i - 1] = y[i] + child_heights[i] + BigInt(1);
  }
  if (ops) ops->stack_terms += m;
  return y;
}

BigInt step_x(const BigInt& x, const BigInt& y, const BigInt& w, const BigInt& h,
              OpCounter* ops) {
  if (x.sign() <= 0 || y.sign() <= 0) throw UsageError("step_x needs x >= 1 and y >= 1");
  if (w.sign() < 0 || h.sign() < 0) throw UsageError("step_x needs w >= 0 and h >= 0");

  const BigInt one(1);
  BigInt clear_root = x + one + isqrt(square(x) + square(y) - one);
  std::uint64_t roots = 1;

  BigInt clear_subtree = x + one;
  if (!w.is_zero() || !h.is_zero()) {
    clear_subtree = x + w + one + isqrt(square(w) + square(h) - one);
    ++roots;
  }
  if (ops) {
    ops->x_steps += 1;
    ops->isqrt_calls += roots;
  }
  return std::max(clear_root, clear_subtree);
}

DrawnTree draw_depth1(std::size_t leaves) {
  if (leaves == 0) throw UsageError("draw_depth1 needs at least one leaf");
  RootedTree tree = RootedTree::star(leaves);
  const std::size_t n = leaves + 1;
  std::vector<Vec2> vec(n, Vec2{BigInt(0), BigInt(0)});
  std::vector<BigInt> width(n, BigInt(0));
  std::vector<BigInt> height(n, BigInt(0));

  const BigInt one(1);
  BigInt x(1);
  for (std::size_t i = 1; i <= leaves; ++i) {
    const BigInt y(leaves + 1 - i);
    vec[i] = Vec2{x, y};
    if (i < leaves) x = x + one + isqrt(square(x) + square(y) - one);
  }
  width[0] = x;
  height[0] = BigInt(leaves);
  return DrawnTree{std::move(tree), std::move(vec), std::move(width), std::move(height)};
}

namespace {

// Lays out u's children, whose boxes are already final.
void combine_children(const RootedTree& tree, NodeId u, std::vector<Vec2>& vec,
                      std::vector<BigInt>& width, std::vector<BigInt>& height, OpCounter* ops) {
  const auto kids = tree.children(u);
  if (kids.empty()) return;

  std::vector<BigInt> heights;
  heights.reserve(kids.size());
  for (NodeId c : kids) heights.push_back(height[c]);
  std::vector<BigInt> y = stack_y(heights, ops);

  BigInt x(1);
  for (std::size_t i = 0; i < kids.size(); ++i) {
    const NodeId c = kids[i];
    vec[c] = Vec2{x, y[i]};
    if (i + 1 < kids.size()) x = step_x(x, y[i], width[c], height[c], ops);
  }
  width[u] = vec[kids.back()].dx + width[kids.back()];
  height[u] = vec[kids.front()].dy + height[kids.front()];
}

DrawnTree blank_drawing(const RootedTree& tree) {
  const std::size_t n = tree.size();
  return DrawnTree{tree, std::vector<Vec2>(n, Vec2{BigInt(0), BigInt(0)}),
                   std::vector<BigInt>(n, BigInt(0)), std::vector<BigInt>(n, BigInt(0))};
}

}  // namespace

DrawnTree draw_tree(const RootedTree& tree, OpCounter* ops) {
  DrawnTree out = blank_drawing(tree);
  const std::vector<NodeId> order = tree.bfs_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    combine_children(tree, *it, out.vec, out.width, out.height, ops);
  }
  return out;
}

DrawnTree draw_tree_parallel(const RootedTree& tree) {
  DrawnTree out = blank_drawing(tree);

  // Group nodes by depth; a level only depends on the one below it.
  std::vector<std::vector<NodeId>> levels;
  std::vector<std::size_t> level_of(tree.size(), 0);
  for (NodeId u : tree.bfs_order()) {
    if (u != tree.root()) level_of[u] = level_of[tree.parent(u)] + 1;
    if (levels.size() <= level_of[u]) levels.resize(level_of[u] + 1);
    levels[level_of[u]].push_back(u);
  }

  for (auto level = levels.rbegin(); level != levels.rend(); ++level) {
    const auto& nodes = *level;
    const auto count = static_cast<std::ptrdiff_t>(nodes.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      combine_children(tree, nodes[i], out.vec, out.width, out.height, nullptr);
    }
  }
  return out;
}

GeomTree resolve_coordinates(const DrawnTree& drawing) {
  const RootedTree& tree = drawing.tree;
  std::vector<Point> pos(tree.size(), Point{BigInt(0), BigInt(0)});
  for (NodeId u : tree.bfs_order()) {
    if (u == tree.root()) continue;
    const Point& base = pos[tree.parent(u)];
    pos[u] = Point{base.x + drawing.vec[u].dx, base.y + drawing.vec[u].dy};
  }
  std::vector<VertexId> parent(tree.parents().begin(), tree.parents().end());
  return GeomTree{RootedPointSet(std::move(pos), tree.root()), std::move(parent), true};
}

}  // namespace ymmst
