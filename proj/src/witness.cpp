#include "ymmst/analysis.hpp"

#include <algorithm>

#include "ymmst/errors.hpp"

namespace ymmst {

RootedPointSet gen_star_pointset(std::size_t m) {
  if (m == 0) throw UsageError("star point set needs M >= 1");
  std::vector<Point> pts;
  pts.reserve(m + 1);
  pts.push_back(Point{BigInt(0), BigInt(0)});
  BigInt x(1);
  for (std::size_t i = 1; i <= m; ++i) {
    const BigInt y(m + 1 - i);
    pts.push_back(Point{x, y});
    x = x + BigInt(1) + isqrt(x * x + y * y - BigInt(1));
  }
  return RootedPointSet(std::move(pts), 0);
}

std::size_t max_degree(const GeomTree& tree) {
  std::vector<std::size_t> degree(tree.size(), 0);
  for (const auto& [a, b] : tree.edges()) {
    ++degree[a];
    ++degree[b];
  }
  return degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
}

}  // namespace ymmst
