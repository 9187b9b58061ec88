#include "ymmst/mmst.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "ymmst/errors.hpp"

namespace ymmst {

RootedPointSet::RootedPointSet(std::vector<Point> points, VertexId root)
    : points_(std::move(points)), root_(root) {
  if (points_.empty()) throw ValidationError("point set is empty");
  if (root_ >= points_.size()) {
    throw ValidationError("root index " + std::to_string(root_) + " out of range");
  }

  std::vector<VertexId> by_y(points_.size());
  std::iota(by_y.begin(), by_y.end(), VertexId{0});
  std::sort(by_y.begin(), by_y.end(), [&](VertexId a, VertexId b) {
    const auto c = points_[a].y <=> points_[b].y;
    return c != 0 ? c < 0 : a < b;
  });
  for (std::size_t i = 1; i < by_y.size(); ++i) {
    const VertexId a = by_y[i - 1];
    const VertexId b = by_y[i];
    if (points_[a].y == points_[b].y) {
      throw ValidationError("points " + std::to_string(a) + " and " + std::to_string(b) +
                            " share y = " + points_[a].y.to_string());
    }
  }
  if (by_y.front() != root_) {
    throw ValidationError("point " + std::to_string(by_y.front()) + " (y = " +
                          points_[by_y.front()].y.to_string() + ") is not above root " +
                          std::to_string(root_) + " (y = " + points_[root_].y.to_string() +
                          ")");
  }
}

std::vector<Edge> GeomTree::edges() const {
  std::vector<Edge> out;
  out.reserve(parent.size());
  for (VertexId v = 0; v < parent.size(); ++v) {
    if (parent[v] == kNoParent) continue;
    out.emplace_back(std::min(v, parent[v]), std::max(v, parent[v]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void GeomTree::validate_shape() const {
  if (parent.size() != pointset.size()) {
    throw ValidationError("parent map has " + std::to_string(parent.size()) +
                          " entries for " + std::to_string(pointset.size()) + " points");
  }
  for (VertexId v = 0; v < parent.size(); ++v) {
    const bool is_root = v == pointset.root();
    if (is_root && parent[v] != kNoParent) {
      throw ValidationError("root " + std::to_string(v) + " has a parent");
    }
    if (!is_root && parent[v] == kNoParent) {
      throw ValidationError("vertex " + std::to_string(v) + " has no parent");
    }
    if (!is_root && parent[v] >= parent.size()) {
      throw ValidationError("vertex " + std::to_string(v) + " has out-of-range parent " +
                            std::to_string(parent[v]));
    }
  }
}

NearestBelow nearest_below(const RootedPointSet& points, VertexId v) {
  if (v >= points.size()) throw UsageError("vertex " + std::to_string(v) + " out of range");
  if (v == points.root()) throw UsageError("the root has no vertex below it");

  const Point& p = points[v];
  VertexId best = kNoParent;
  BigInt best_d;
  bool unique = true;
  for (VertexId u = 0; u < points.size(); ++u) {
    if (!(points[u].y < p.y)) continue;
    BigInt d = sq_dist(p, points[u]);
    if (best == kNoParent || d < best_d) {
      best = u;
      best_d = std::move(d);
      unique = true;
    } else if (d == best_d) {
      unique = false;
    }
  }
  // The root is strictly lowest, so the below-set is never empty.
  return {best, unique};
}

namespace {

GeomTree assemble(const RootedPointSet& points, std::vector<VertexId> parent,
                  const std::vector<char>& unique) {
  const bool all_unique = std::all_of(unique.begin(), unique.end(), [](char c) { return c; });
  return GeomTree{points, std::move(parent), all_unique};
}

}  // namespace

GeomTree build_ymmst(const RootedPointSet& points) {
  const auto n = static_cast<std::ptrdiff_t>(points.size());
  std::vector<VertexId> parent(points.size(), kNoParent);
  std::vector<char> unique(points.size(), 1);
  const VertexId root = points.root();

#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto v = static_cast<VertexId>(i);
    if (v == root) continue;
    const NearestBelow nb = nearest_below(points, v);
    parent[v] = nb.vertex;
    unique[v] = nb.unique;
  }
  return assemble(points, std::move(parent), unique);
}

GeomTree build_ymmst_serial(const RootedPointSet& points) {
  std::vector<VertexId> parent(points.size(), kNoParent);
  std::vector<char> unique(points.size(), 1);
  for (VertexId v = 0; v < points.size(); ++v) {
    if (v == points.root()) continue;
    const NearestBelow nb = nearest_below(points, v);
    parent[v] = nb.vertex;
    unique[v] = nb.unique;
  }
  return assemble(points, std::move(parent), unique);
}

bool check_y_monotone_connectivity(const RootedPointSet& points, std::span<const Edge> edges) {
  const std::size_t n = points.size();
  std::vector<std::vector<VertexId>> adj(n);
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) throw ValidationError("edge endpoint out of range");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }

  for (VertexId v = 0; v < n; ++v) {
    if (v == points.root()) continue;
    const bool has_lower = std::any_of(adj[v].begin(), adj[v].end(),
                                       [&](VertexId u) { return points[u].y < points[v].y; });
    if (!has_lower) return false;
  }

  std::vector<char> seen(n, 0);
  std::queue<VertexId> queue;
  queue.push(points.root());
  seen[points.root()] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop();
    for (VertexId u : adj[v]) {
      if (seen[u]) continue;
      seen[u] = 1;
      ++reached;
      queue.push(u);
    }
  }
  return reached == n;
}

bool check_y_monotone_connectivity(const GeomTree& tree) {
  const auto edges = tree.edges();
  return check_y_monotone_connectivity(tree.pointset, edges);
}

}  // namespace ymmst
