#include "ymmst/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "ymmst/errors.hpp"

namespace ymmst {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> fields;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    Line parsed{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      const std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) parsed.fields.push_back(line.substr(start, i - start));
    }
    if (!parsed.fields.empty()) lines.push_back(std::move(parsed));
  }
  return lines;
}

NodeId parse_id(std::string_view s, std::size_t line) {
  NodeId id = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), id);
  if (ec != std::errc{} || end != s.data() + s.size()) {
    throw ParseError(line, "invalid node id '" + std::string(s) + "'");
  }
  return id;
}

BigInt parse_coord(std::string_view s, std::size_t line) {
  try {
    return BigInt::from_string(s);
  } catch (const ParseError& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace

RootedTree parse_tree_file(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "tree file has no nodes");

  std::vector<std::pair<NodeId, NodeId>> edges;
  std::vector<std::size_t> edge_line;
  bool single = false;
  NodeId max_id = 0;
  for (const auto& l : lines) {
    if (l.fields.size() == 1) {
      if (parse_id(l.fields[0], l.number) != 0) {
        throw ParseError(l.number, "a lone id may only declare the root 0");
      }
      single = true;
      continue;
    }
    if (l.fields.size() != 2) throw ParseError(l.number, "expected 'parent child'");
    const NodeId p = parse_id(l.fields[0], l.number);
    const NodeId c = parse_id(l.fields[1], l.number);
    if (c == 0) throw ParseError(l.number, "node 0 is the root and cannot be a child");
    if (p == c) throw ParseError(l.number, "self loop on node " + std::to_string(p));
    edges.emplace_back(p, c);
    edge_line.push_back(l.number);
    max_id = std::max({max_id, p, c});
  }
  if (single && !edges.empty()) {
    throw ParseError(0, "lone root declaration mixed with edges");
  }

  if (max_id > edges.size()) {
    throw ParseError(0, "ids must be 0..n-1: found id " + std::to_string(max_id) + " but only " +
                            std::to_string(edges.size()) + " edges");
  }
  const std::size_t n = max_id + 1;
  std::vector<std::vector<NodeId>> children(n);
  std::vector<std::size_t> parent_line(n, 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [p, c] = edges[i];
    if (parent_line[c] != 0) {
      throw ParseError(edge_line[i], "duplicate id: node " + std::to_string(c) +
                                         " already has a parent (line " +
                                         std::to_string(parent_line[c]) + ")");
    }
    parent_line[c] = edge_line[i];
    children[p].push_back(c);
  }
  for (NodeId u = 1; u < n; ++u) {
    if (parent_line[u] == 0) {
      throw ParseError(0, "multiple roots: node " + std::to_string(u) + " has no parent");
    }
  }
  try {
    return RootedTree(0, std::move(children));
  } catch (const ValidationError& e) {
    throw ParseError(0, e.what());
  }
}

std::string emit_tree_file(const RootedTree& tree) {
  if (tree.root() != 0) throw UsageError("tree files require the root to be node 0");
  if (tree.size() == 1) return "0\n";
  std::ostringstream out;
  for (NodeId u = 0; u < tree.size(); ++u) {
    for (NodeId c : tree.children(u)) out << u << ' ' << c << '\n';
  }
  return out.str();
}

RootedPointSet parse_pointset_file(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "point set file has no points");
  std::vector<Point> pts;
  pts.reserve(lines.size());
  for (const auto& l : lines) {
    if (l.fields.size() != 2) throw ParseError(l.number, "expected 'x y'");
    pts.push_back(Point{parse_coord(l.fields[0], l.number), parse_coord(l.fields[1], l.number)});
  }
  return RootedPointSet(std::move(pts), 0);
}

std::string emit_pointset_file(const RootedPointSet& points) {
  if (points.root() != 0) throw UsageError("point set files require the root first");
  std::string out;
  for (const Point& p : points.points()) {
    out += p.x.to_string();
    out += ' ';
    out += p.y.to_string();
    out += '\n';
  }
  return out;
}

GeomTree parse_drawing_file(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError(0, "drawing must be a JSON object");
  if (!doc.contains("version") || !doc["version"].is_number_integer() ||
      doc["version"].get<int>() != kDrawingFormatVersion) {
    throw ParseError(0, "unsupported or missing drawing version");
  }
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw ParseError(0, "drawing has no vertices array");
  }
  const auto& vs = doc["vertices"];
  const std::size_t n = vs.size();
  if (n == 0) throw ParseError(0, "drawing has no vertices");

  std::vector<Point> pts(n);
  std::vector<VertexId> parent(n, kNoParent);
  std::vector<char> seen(n, 0);
  VertexId root = kNoParent;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& v = vs[i];
    const std::string where = "vertex entry " + std::to_string(i) + ": ";
    if (!v.is_object() || !v.contains("id") || !v["id"].is_number_unsigned()) {
      throw ParseError(0, where + "missing or invalid id");
    }
    const auto id = v["id"].get<std::size_t>();
    if (id >= n) throw ParseError(0, where + "id " + std::to_string(id) + " out of range");
    if (seen[id]) throw ParseError(0, where + "duplicate id " + std::to_string(id));
    seen[id] = 1;
    for (const char* key : {"x", "y"}) {
      if (!v.contains(key) || !v[key].is_string()) {
        throw ParseError(0, where + "coordinate " + key + " must be a decimal string");
      }
    }
    try {
      pts[id] = Point{BigInt::from_string(v["x"].get<std::string>()),
                      BigInt::from_string(v["y"].get<std::string>())};
    } catch (const ParseError& e) {
      throw ParseError(0, where + e.what());
    }
    if (!v.contains("parent")) throw ParseError(0, where + "missing parent");
    if (v["parent"].is_null()) {
      if (root != kNoParent) {
        throw ParseError(0, "multiple roots: " + std::to_string(root) + " and " +
                                std::to_string(id));
      }
      root = id;
    } else if (v["parent"].is_number_unsigned()) {
      const auto p = v["parent"].get<std::size_t>();
      if (p >= n) throw ParseError(0, where + "parent " + std::to_string(p) + " out of range");
      if (p == id) throw ParseError(0, where + "vertex is its own parent");
      parent[id] = p;
    } else {
      throw ParseError(0, where + "parent must be an id or null");
    }
  }
  if (root == kNoParent) throw ParseError(0, "drawing has no root (null parent)");

  GeomTree tree{RootedPointSet(std::move(pts), root), std::move(parent), true};
  tree.validate_shape();
  return tree;
}

std::string emit_drawing_file(const GeomTree& tree) {
  using nlohmann::ordered_json;
  ordered_json vertices = ordered_json::array();
  for (VertexId v = 0; v < tree.size(); ++v) {
    ordered_json entry;
    entry["id"] = v;
    entry["x"] = tree.pointset[v].x.to_string();
    entry["y"] = tree.pointset[v].y.to_string();
    if (tree.parent[v] == kNoParent) {
      entry["parent"] = nullptr;
    } else {
      entry["parent"] = tree.parent[v];
    }
    vertices.push_back(std::move(entry));
  }
  ordered_json doc;
  doc["version"] = kDrawingFormatVersion;
  doc["vertices"] = std::move(vertices);
  return doc.dump(2) + "\n";
}

}  // namespace ymmst
