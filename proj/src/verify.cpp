#include "ymmst/analysis.hpp"

#include <algorithm>

namespace ymmst {

std::string_view to_string(CertStatus status) {
  switch (status) {
    case CertStatus::certified: return "certified";
    case CertStatus::refuted: return "refuted";
    case CertStatus::ambiguous: return "ambiguous";
  }
  return "unknown";
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::parent_not_below: return "parent_not_below";
    case ViolationKind::closer_vertex: return "closer_vertex";
    case ViolationKind::tie: return "tie";
  }
  return "unknown";
}

namespace {

void check_vertex(const GeomTree& tree, VertexId v, std::vector<Violation>& out) {
  const RootedPointSet& pts = tree.pointset;
  const VertexId p = tree.parent[v];
  if (!(pts[p].y < pts[v].y)) {
    out.push_back({v, p, ViolationKind::parent_not_below});
    return;
  }
  const BigInt parent_d = sq_dist(pts[v], pts[p]);
  for (VertexId u = 0; u < pts.size(); ++u) {
    if (u == p || !(pts[u].y < pts[v].y)) continue;
    const auto c = sq_dist(pts[v], pts[u]) <=> parent_d;
    if (c < 0) {
      out.push_back({v, u, ViolationKind::closer_vertex});
    } else if (c == 0) {
      out.push_back({v, u, ViolationKind::tie});
    }
  }
}

Certificate summarize(std::vector<Violation> violations) {
  Certificate cert;
  const bool strict = std::any_of(violations.begin(), violations.end(), [](const Violation& x) {
    return x.kind != ViolationKind::tie;
  });
  const bool ties = std::any_of(violations.begin(), violations.end(), [](const Violation& x) {
    return x.kind == ViolationKind::tie;
  });
  cert.unique = !ties;
  cert.status = strict ? CertStatus::refuted : ties ? CertStatus::ambiguous : CertStatus::certified;
  cert.violations = std::move(violations);
  return cert;
}

}  // namespace

Certificate verify_ymmst_drawing(const GeomTree& tree) {
  tree.validate_shape();
  const auto n = static_cast<std::ptrdiff_t>(tree.size());
  std::vector<std::vector<Violation>> per_vertex(tree.size());

#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto v = static_cast<VertexId>(i);
    if (v != tree.pointset.root()) check_vertex(tree, v, per_vertex[v]);
  }

  std::vector<Violation> all;
  for (auto& vs : per_vertex) all.insert(all.end(), vs.begin(), vs.end());
  return summarize(std::move(all));
}

Certificate verify_ymmst_drawing_serial(const GeomTree& tree) {
  tree.validate_shape();
  std::vector<Violation> all;
  for (VertexId v = 0; v < tree.size(); ++v) {
    if (v != tree.pointset.root()) check_vertex(tree, v, all);
  }
  return summarize(std::move(all));
}

}  // namespace ymmst
