#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ymmst/mmst.hpp"

namespace ymmst {

enum class CertStatus { certified, refuted, ambiguous };

std::string_view to_string(CertStatus status);

enum class ViolationKind {
  parent_not_below,  // the stored parent is not strictly below the vertex
  closer_vertex,     // witness is strictly below and strictly nearer than the parent
  tie,               // witness is strictly below and exactly as near as the parent
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  VertexId vertex;
  VertexId witness;
  ViolationKind kind;
  friend bool operator==(const Violation&, const Violation&) = default;
};

// Outcome of checking a drawing against the nearest-below characterisation.
// Ties are listed as violations of kind `tie` and make the result ambiguous
// unless a strict violation refutes it outright.
struct Certificate {
  CertStatus status = CertStatus::certified;
  std::vector<Violation> violations;
  bool unique = true;
};

// A geometric tree is the rooted y-MMST of its points iff every non-root
// vertex is linked to its strictly nearest vertex below. Parallel over
// vertices; throws ValidationError when the parent map is malformed.
Certificate verify_ymmst_drawing(const GeomTree& tree);
Certificate verify_ymmst_drawing_serial(const GeomTree& tree);

struct OracleOptions {
  std::size_t precision_bits = 128;
  std::size_t max_points = 10;
};

struct OracleResult {
  GeomTree tree;
  // Enclosure of the minimum total Euclidean length.
  double min_length_lo = 0.0;
  double min_length_hi = 0.0;
  std::string min_length;  // decimal, ~precision_bits significant bits
  // Lower bound of the second-best total minus upper bound of the best.
  // +inf when only one assignment exists.
  double margin = 0.0;
  bool indeterminate = false;
  std::uint64_t assignments = 0;
};

// Brute force over every choice of one strictly-lower parent per non-root
// vertex. Each such choice is y-monotonically connected to the root, so the
// cheapest one is the rooted y-MMST. Lengths are bracketed with directed
// rounding at `precision_bits`; the result is indeterminate when the best and
// runner-up brackets overlap. Throws UsageError when the point set exceeds
// max_points.
OracleResult brute_force_ymmst(const RootedPointSet& points, const OracleOptions& options = {});

// Root (0,0) and p_i = (x_i, M+1-i) with x_1 = 1 and
// x_{i+1} = x_i + 1 + isqrt(x_i^2 + (M+1-i)^2 - 1); every p_i's nearest
// point below is the root.
RootedPointSet gen_star_pointset(std::size_t m);

std::size_t max_degree(const GeomTree& tree);

enum class Quadrant { I, II, III, IV };

std::string_view to_string(Quadrant q);

// Exponential-width certificate for a star drawing.
//
// The leaves in the most populated open quadrant (axis points excluded) form
// `chain`, sorted by |x| and translated so the root is the origin. The
// translated chain keeps every |x| and pushes the i-th point down to height
// k+1-i (k = chain length); it is itself checked with the verifier.
struct WidthBoundReport {
  Quadrant quadrant = Quadrant::I;
  std::size_t leaves = 0;
  std::size_t pigeonhole_min = 0;  // ceil(leaves / 4)
  std::vector<Point> chain;
  std::vector<Point> translated_chain;
  bool translated_chain_certified = false;
  bool doubling_holds = false;          // |x'_{i+1}| >= 2 |x'_i| for all i
  BigInt certified_width_lower_bound;   // max |x| over the chain
  BigInt predicted_bound;               // 2^{k-1} |x_1|
};

// Throws UsageError unless the tree is a star whose drawing certifies.
// Throws std::logic_error if the chain contradicts the characterisation
// (y not strictly decreasing along it), which a certified star cannot do.
WidthBoundReport certify_width_lower_bound(const GeomTree& tree);

}  // namespace ymmst
