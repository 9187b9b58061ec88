#include "ymmst/io.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace ymmst {
namespace {

// value / extent in [0,1], computed on the top bits so that neither operand
// has to fit a double.
double ratio(const BigInt& value, const BigInt& extent) {
  const std::size_t bits = extent.bit_length();
  const std::size_t shift = bits > 62 ? bits - 62 : 0;
  return (value >> shift).to_double() / (extent >> shift).to_double();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string emit_svg(const GeomTree& tree, const SvgOptions& options) {
  const auto pts = tree.pointset.points();
  BigInt min_x = pts[0].x, max_x = pts[0].x, min_y = pts[0].y, max_y = pts[0].y;
  bool lossy = false;
  const BigInt exact_limit = BigInt::pow2(53);
  for (const Point& p : pts) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
    if (abs(p.x) > exact_limit || abs(p.y) > exact_limit) lossy = true;
  }
  BigInt extent = std::max(max_x - min_x, max_y - min_y);
  if (extent.is_zero()) extent = BigInt(1);

  const double span = options.size - 2.0 * options.margin;
  std::vector<std::pair<double, double>> screen;
  screen.reserve(pts.size());
  for (const Point& p : pts) {
    const double sx = options.margin + span * ratio(p.x - min_x, extent);
    const double sy = options.size - options.margin - span * ratio(p.y - min_y, extent);
    screen.emplace_back(sx, sy);
  }

  std::ostringstream out;
  const std::string size = fmt(options.size);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << size << ' ' << size
      << "\" width=\"" << size << "\" height=\"" << size << "\">\n";
  if (lossy) {
    out << "<!-- coordinates exceed 2^53: positions are double-precision approximations; "
           "the JSON drawing holds the exact values -->\n";
  }
  out << "<g stroke=\"#333\" stroke-width=\"1\">\n";
  for (VertexId v = 0; v < tree.size(); ++v) {
    const VertexId p = tree.parent[v];
    if (p == kNoParent) continue;
    out << "<line x1=\"" << fmt(screen[p].first) << "\" y1=\"" << fmt(screen[p].second)
        << "\" x2=\"" << fmt(screen[v].first) << "\" y2=\"" << fmt(screen[v].second)
        << "\"/>\n";
  }
  out << "</g>\n<g>\n";
  for (VertexId v = 0; v < tree.size(); ++v) {
    const bool root = v == tree.pointset.root();
    out << "<circle cx=\"" << fmt(screen[v].first) << "\" cy=\"" << fmt(screen[v].second)
        << "\" r=\"" << fmt(root ? 1.5 * options.vertex_radius : options.vertex_radius)
        << "\" fill=\"" << (root ? "#c0392b" : "#2c3e50") << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace ymmst
