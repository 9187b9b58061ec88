#pragma once

// Test-only reference computations. Nothing here may call into the code path
// it is used to check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ymmst/drawer.hpp"
#include "ymmst/mmst.hpp"

namespace ymmst::testing {

// floor(sqrt(n)) by walking s upward; only for small n.
inline std::uint64_t naive_isqrt(std::uint64_t n) {
  std::uint64_t s = 0;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

// Bounding box of every subtree, measured on resolved coordinates relative
// to the subtree root.
struct Box {
  BigInt width;
  BigInt height;
};

inline std::vector<Box> measured_boxes(const RootedTree& tree, const GeomTree& geom) {
  const std::size_t n = tree.size();
  std::vector<BigInt> min_x(n), max_x(n), min_y(n), max_y(n);
  for (NodeId u = 0; u < n; ++u) {
    min_x[u] = max_x[u] = geom.pointset[u].x;
    min_y[u] = max_y[u] = geom.pointset[u].y;
  }
  const auto order = tree.bfs_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId u = *it;
    if (u == tree.root()) continue;
    const NodeId p = tree.parent(u);
    min_x[p] = std::min(min_x[p], min_x[u]);
    max_x[p] = std::max(max_x[p], max_x[u]);
    min_y[p] = std::min(min_y[p], min_y[u]);
    max_y[p] = std::max(max_y[p], max_y[u]);
  }
  std::vector<Box> boxes(n);
  for (NodeId u = 0; u < n; ++u) boxes[u] = {max_x[u] - min_x[u], max_y[u] - min_y[u]};
  return boxes;
}

// Random valid rooted point set: distinct y drawn from [lo, hi], x from
// [lo, hi], root placed at index 0 on the lowest y.
inline RootedPointSet random_pointset(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::vector<long> ys;
  std::uniform_int_distribution<long> coord(lo, hi);
  std::set<long> used;
  while (ys.size() < n) {
    const long y = coord(rng);
    if (used.insert(y).second) ys.push_back(y);
  }
  std::iter_swap(ys.begin(), std::min_element(ys.begin(), ys.end()));
  std::vector<Point> pts;
  for (long y : ys) pts.push_back(Point{BigInt(coord(rng)), BigInt(y)});
  return RootedPointSet(std::move(pts), 0);
}

// Edge set in coordinates, independent of vertex numbering.
inline std::set<std::pair<std::string, std::string>> geometric_edges(const GeomTree& t) {
  auto key = [&](VertexId v) {
    return t.pointset[v].x.to_string() + "," + t.pointset[v].y.to_string();
  };
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [a, b] : t.edges()) out.emplace(std::minmax(key(a), key(b)));
  return out;
}

// Star drawings that certify by construction margin but are not drawer
// output: random extra spacing, random heights, leaves split across the two
// upper quadrants.
inline GeomTree random_star_drawing(std::mt19937_64& rng, std::size_t leaves) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<long> extra(0, 5);
  std::vector<int> side(leaves);
  for (auto& s : side) s = coin(rng);

  std::vector<BigInt> y(leaves);
  BigInt level(1 + extra(rng));
  for (std::size_t i = leaves; i-- > 0;) {
    y[i] = level;
    level = level + BigInt(1 + extra(rng));
  }
  // Leaves are placed from the top down; each new |x| is at least
  // 2(|x_prev| + y_prev), so the previous (higher) leaf keeps the root as its
  // nearest point below whichever side the new leaf lands on.
  std::vector<Point> pts{Point{BigInt(0), BigInt(0)}};
  BigInt last_x(0);
  BigInt last_y(0);
  for (std::size_t i = 0; i < leaves; ++i) {
    const BigInt x = BigInt(1 + extra(rng)) + last_x + last_x + last_y + last_y;
    last_x = x;
    last_y = y[i];
    pts.push_back(Point{side[i] == 0 ? x : -x, y[i]});
  }
  std::vector<VertexId> parent(leaves + 1, 0);
  parent[0] = kNoParent;
  return GeomTree{RootedPointSet(std::move(pts), 0), std::move(parent), true};
}

}  // namespace ymmst::testing
