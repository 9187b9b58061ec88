#pragma once

#include <string>
#include <string_view>

#include "ymmst/drawer.hpp"
#include "ymmst/mmst.hpp"

namespace ymmst {

// Tree file: one "parent child" edge per line, node 0 is the root, children
// ordered by line. A line holding the single id 0 declares a one-node tree.
// Blank lines and '#' comments are ignored.
RootedTree parse_tree_file(std::string_view text);
std::string emit_tree_file(const RootedTree& tree);

// Point-set file: one "x y" line per point, the first point is the root.
RootedPointSet parse_pointset_file(std::string_view text);
std::string emit_pointset_file(const RootedPointSet& points);

// Drawing file (JSON):
//   {"version": 1, "vertices": [{"id": 0, "x": "0", "y": "0", "parent": null}, ...]}
// Coordinates are decimal strings of any length.
inline constexpr int kDrawingFormatVersion = 1;
GeomTree parse_drawing_file(std::string_view text);
std::string emit_drawing_file(const GeomTree& tree);

struct SvgOptions {
  double size = 800.0;
  double margin = 24.0;
  double vertex_radius = 4.0;
};

// Lossy preview: coordinates are scaled into a fixed viewBox in double
// precision. Carries a comment when any coordinate exceeds 2^53.
std::string emit_svg(const GeomTree& tree, const SvgOptions& options = {});

}  // namespace ymmst
