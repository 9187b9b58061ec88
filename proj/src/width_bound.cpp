#include "ymmst/analysis.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "ymmst/errors.hpp"

namespace ymmst {

std::string_view to_string(Quadrant q) {
  switch (q) {
    case Quadrant::I: return "I";
    case Quadrant::II: return "II";
    case Quadrant::III: return "III";
    case Quadrant::IV: return "IV";
  }
  return "?";
}

WidthBoundReport certify_width_lower_bound(const GeomTree& tree) {
  tree.validate_shape();
  const RootedPointSet& pts = tree.pointset;
  const VertexId root = pts.root();
  for (VertexId v = 0; v < tree.size(); ++v) {
    if (v != root && tree.parent[v] != root) {
      throw UsageError("drawing is not a star: vertex " + std::to_string(v) +
                       " is not adjacent to the root");
    }
  }
  if (verify_ymmst_drawing(tree).status != CertStatus::certified) {
    throw UsageError("drawing is not a certified rooted y-MMST");
  }

  WidthBoundReport report;
  report.leaves = tree.size() - 1;
  report.pigeonhole_min = (report.leaves + 3) / 4;

  std::array<std::vector<Point>, 4> buckets;
  for (VertexId v = 0; v < tree.size(); ++v) {
    if (v == root) continue;
    Point p = pts[v] - pts[root];
    const int sx = p.x.sign();
    const int sy = p.y.sign();
    if (sx == 0 || sy == 0) continue;
    const std::size_t q = sy > 0 ? (sx > 0 ? 0 : 1) : (sx < 0 ? 2 : 3);
    buckets[q].push_back(std::move(p));
  }
  std::size_t pick = 0;
  for (std::size_t q = 1; q < 4; ++q) {
    if (buckets[q].size() > buckets[pick].size()) pick = q;
  }
  report.quadrant = static_cast<Quadrant>(pick);
  report.chain = std::move(buckets[pick]);
  std::sort(report.chain.begin(), report.chain.end(),
            [](const Point& a, const Point& b) { return abs(a.x) < abs(b.x); });

  const std::size_t k = report.chain.size();
  const int sign_x = pick == 0 || pick == 3 ? 1 : -1;
  const int sign_y = pick <= 1 ? 1 : -1;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const Point& a = report.chain[i];
    const Point& b = report.chain[i + 1];
    if (!(abs(a.x) < abs(b.x)) || !(abs(a.y) > abs(b.y))) {
      throw std::logic_error("certified star has chain points " + std::to_string(i) + " and " +
                             std::to_string(i + 1) + " out of order");
    }
  }

  // Folded into quadrant I for the translated chain's own certificate.
  std::vector<Point> folded{Point{BigInt(0), BigInt(0)}};
  for (std::size_t i = 0; i < k; ++i) {
    const BigInt ax = abs(report.chain[i].x);
    const BigInt height(k - i);
    folded.push_back(Point{ax, height});
    report.translated_chain.push_back(
        Point{sign_x > 0 ? ax : -ax, sign_y > 0 ? height : -height});
  }
  GeomTree folded_star{RootedPointSet(folded, 0), std::vector<VertexId>(k + 1, 0), true};
  folded_star.parent[0] = kNoParent;
  report.translated_chain_certified =
      verify_ymmst_drawing(folded_star).status == CertStatus::certified;

  report.doubling_holds = true;
  for (std::size_t i = 1; i < k; ++i) {
    if (folded[i + 1].x < folded[i].x + folded[i].x) report.doubling_holds = false;
  }

  report.certified_width_lower_bound = k == 0 ? BigInt(0) : folded[k].x;
  report.predicted_bound = k == 0 ? BigInt(0) : BigInt::pow2(k - 1) * folded[1].x;
  return report;
}

}  // namespace ymmst
