#include "ymmst/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ymmst/analysis.hpp"
#include "ymmst/drawer.hpp"
#include "ymmst/errors.hpp"
#include "ymmst/io.hpp"
#include "ymmst/tree_gen.hpp"

namespace ymmst {
namespace {

using nlohmann::ordered_json;

constexpr int kExitRefuted = 1;
constexpr int kExitAmbiguous = 2;
constexpr int kExitError = 3;

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
}

void write_output(const std::string& path, const std::string& data, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << data;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << data;
}

ordered_json point_json(const Point& p) {
  return ordered_json::array({p.x.to_string(), p.y.to_string()});
}

ordered_json certificate_json(const Certificate& cert) {
  ordered_json j;
  j["status"] = std::string(to_string(cert.status));
  j["unique"] = cert.unique;
  j["violations"] = ordered_json::array();
  for (const auto& v : cert.violations) {
    j["violations"].push_back(
        {{"vertex", v.vertex}, {"witness", v.witness}, {"kind", std::string(to_string(v.kind))}});
  }
  return j;
}

ordered_json report_json(const WidthBoundReport& r) {
  ordered_json j;
  j["quadrant"] = std::string(to_string(r.quadrant));
  j["leaves"] = r.leaves;
  j["pigeonhole_min"] = r.pigeonhole_min;
  j["chain"] = ordered_json::array();
  for (const auto& p : r.chain) j["chain"].push_back(point_json(p));
  j["translated_chain"] = ordered_json::array();
  for (const auto& p : r.translated_chain) j["translated_chain"].push_back(point_json(p));
  j["translated_chain_certified"] = r.translated_chain_certified;
  j["doubling_holds"] = r.doubling_holds;
  j["certified_width_lower_bound"] = r.certified_width_lower_bound.to_string();
  j["certified_width_bits"] = r.certified_width_lower_bound.bit_length();
  j["predicted_bound"] = r.predicted_bound.to_string();
  return j;
}

std::size_t default_precision_bits() {
  if (const char* env = std::getenv("YMMST_PRECISION_BITS")) {
    try {
      const long v = std::stol(env);
      if (v > 1) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("invalid YMMST_PRECISION_BITS '") + env + "'");
  }
  return OracleOptions{}.precision_bits;
}

}  // namespace

std::vector<BenchRow> bench_family(const std::string& family, std::size_t max_size,
                                   std::size_t fanout, std::uint64_t seed) {
  if (family != "star" && family != "path" && family != "random") {
    throw UsageError("unknown family '" + family + "'");
  }
  if (max_size == 0) throw UsageError("max size must be positive");

  std::vector<std::size_t> sizes;
  if (family == "star") {
    for (std::size_t m = 1; m <= max_size; ++m) sizes.push_back(m);
  } else {
    for (std::size_t s = 1; s <= max_size; s *= 2) sizes.push_back(s);
    if (sizes.back() != max_size) sizes.push_back(max_size);
  }

  std::vector<BenchRow> rows(sizes.size());
  const auto count = static_cast<std::ptrdiff_t>(sizes.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const std::size_t size = sizes[i];
    const RootedTree tree = family == "star" ? RootedTree::star(size)
                            : family == "path"
                                ? RootedTree::path(size)
                                : random_tree(size, fanout, seed + size);
    OpCounter ops;
    const DrawnTree d = draw_tree(tree, &ops);
    BenchRow& row = rows[i];
    row.family = family;
    row.size = size;
    row.nodes = tree.size();
    row.depth = tree.depth();
    row.max_fanout = tree.max_fanout();
    row.width = d.width[tree.root()];
    row.height = d.height[tree.root()];
    row.ops = ops.total();
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "family,size,nodes,depth,max_fanout,width,height,width_bits,height_bits,ops\n";
  for (const auto& r : rows) {
    out << r.family << ',' << r.size << ',' << r.nodes << ',' << r.depth << ','
        << r.max_fanout << ',' << r.width << ',' << r.height << ',' << r.width.bit_length()
        << ',' << r.height.bit_length() << ',' << r.ops << '\n';
  }
  return out.str();
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Rooted y-monotone minimum spanning trees: build, draw, verify, certify"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  std::string svg_path;
  bool self_check = false;

  auto* draw = app.add_subcommand("draw", "Draw a rooted tree as a rooted y-MMST");
  draw->add_option("tree-file", input, "Tree file ('-' for stdin)")->required();
  draw->add_option("-o,--output", output, "Drawing JSON output (default stdout)");
  draw->add_option("--svg", svg_path, "Also write an SVG preview");
  draw->add_flag("--verify", self_check, "Verify the drawing before writing it");

  auto* mmst = app.add_subcommand("mmst", "Build the rooted y-MMST of a point set");
  mmst->add_option("points-file", input, "Point-set file ('-' for stdin)")->required();
  mmst->add_option("-o,--output", output, "Drawing JSON output (default stdout)");

  auto* verify = app.add_subcommand("verify", "Certify a drawing as a rooted y-MMST");
  verify->add_option("drawing-file", input, "Drawing JSON ('-' for stdin)")->required();

  std::size_t precision_bits = 0;
  std::size_t max_n = OracleOptions{}.max_points;
  auto* oracle = app.add_subcommand("oracle", "Compare the builder with brute force");
  oracle->add_option("points-file", input, "Point-set file ('-' for stdin)")->required();
  oracle->add_option("--precision-bits", precision_bits, "Working precision of the oracle");
  oracle->add_option("--max-n", max_n, "Largest point set the oracle accepts");

  std::size_t star_m = 0;
  bool star_points = false;
  bool star_draw = false;
  auto* star = app.add_subcommand("star", "Unbounded-degree witness K_{1,M}");
  star->add_option("M", star_m, "Number of leaves")->required()->check(CLI::PositiveNumber);
  auto* points_flag = star->add_flag("--points", star_points, "Emit the point-set file");
  star->add_flag("--draw", star_draw, "Emit the drawing JSON (default)")->excludes(points_flag);

  auto* widthbound = app.add_subcommand("widthbound", "Exponential-width certificate of a star");
  widthbound->add_option("drawing-file", input, "Drawing JSON ('-' for stdin)")->required();

  std::string family = "star";
  std::size_t max_size = 32;
  std::size_t fanout = 3;
  std::string csv_path;
  auto* bench = app.add_subcommand("bench", "Size sweep of drawing width/height/op count");
  bench->add_option("--family", family, "star | path | random")
      ->check(CLI::IsMember({"star", "path", "random"}));
  bench->add_option("--max-size", max_size, "Largest instance")->check(CLI::PositiveNumber);
  bench->add_option("--fanout", fanout, "Fan-out cap for the random family");
  bench->add_option("--csv", csv_path, "Also write the table to this CSV file");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (draw->parsed()) {
      const RootedTree tree = parse_tree_file(read_input(input, in));
      const DrawnTree drawing = draw_tree(tree);
      const GeomTree geom = resolve_coordinates(drawing);
      if (self_check) {
        const Certificate cert = verify_ymmst_drawing(geom);
        if (cert.status != CertStatus::certified) {
          err << "drawing failed verification: " << to_string(cert.status) << '\n';
          return kExitRefuted;
        }
      }
      write_output(output, emit_drawing_file(geom), out);
      if (!svg_path.empty()) write_output(svg_path, emit_svg(geom), out);
      err << "drew " << tree.size() << " nodes; width " << drawing.width[tree.root()].bit_length()
          << " bits, height " << drawing.height[tree.root()].bit_length() << " bits\n";
      return 0;
    }

    if (mmst->parsed()) {
      const GeomTree tree = build_ymmst(parse_pointset_file(read_input(input, in)));
      if (!tree.unique) err << "warning: nearest-below tie broken by smallest index\n";
      write_output(output, emit_drawing_file(tree), out);
      return 0;
    }

    if (verify->parsed()) {
      const Certificate cert = verify_ymmst_drawing(parse_drawing_file(read_input(input, in)));
      out << certificate_json(cert).dump(2) << '\n';
      switch (cert.status) {
        case CertStatus::certified: return 0;
        case CertStatus::refuted: return kExitRefuted;
        case CertStatus::ambiguous: return kExitAmbiguous;
      }
    }

    if (oracle->parsed()) {
      const RootedPointSet points = parse_pointset_file(read_input(input, in));
      OracleOptions opts;
      opts.precision_bits = precision_bits != 0 ? precision_bits : default_precision_bits();
      opts.max_points = max_n;
      const OracleResult brute = brute_force_ymmst(points, opts);
      const GeomTree built = build_ymmst(points);
      const bool agree = built.edges() == brute.tree.edges();

      ordered_json j;
      j["points"] = points.size();
      j["assignments"] = brute.assignments;
      j["precision_bits"] = opts.precision_bits;
      j["min_length"] = brute.min_length;
      j["margin"] = brute.margin;
      j["indeterminate"] = brute.indeterminate;
      j["builder_unique"] = built.unique;
      j["agree"] = agree;
      out << j.dump(2) << '\n';
      if (brute.indeterminate) return kExitAmbiguous;
      return agree ? 0 : kExitRefuted;
    }

    if (star->parsed()) {
      if (star_points) {
        out << emit_pointset_file(gen_star_pointset(star_m));
      } else {
        out << emit_drawing_file(resolve_coordinates(draw_depth1(star_m)));
      }
      return 0;
    }

    if (widthbound->parsed()) {
      const WidthBoundReport report =
          certify_width_lower_bound(parse_drawing_file(read_input(input, in)));
      out << report_json(report).dump(2) << '\n';
      if (!report.translated_chain_certified) {
        err << "translated chain failed verification; the width argument does not hold here\n";
      }
      return report.doubling_holds && report.translated_chain_certified ? 0 : kExitRefuted;
    }

    if (bench->parsed()) {
      const std::string csv = bench_csv(bench_family(family, max_size, fanout));
      out << csv;
      if (!csv_path.empty()) write_output(csv_path, csv, out);
      return 0;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::logic_error& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace ymmst
