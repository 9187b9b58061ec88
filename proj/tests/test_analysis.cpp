#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "support/oracles.hpp"
#include "ymmst/analysis.hpp"
#include "ymmst/drawer.hpp"
#include "ymmst/errors.hpp"

using namespace ymmst;

namespace {

Point P(long x, long y) { return Point{BigInt(x), BigInt(y)}; }

GeomTree with_parents(RootedPointSet pts, std::vector<VertexId> parent) {
  return GeomTree{std::move(pts), std::move(parent), true};
}

GeomTree translated(const GeomTree& g, const Point& t) {
  std::vector<Point> pts;
  for (const Point& p : g.pointset.points()) pts.push_back(p + t);
  return GeomTree{RootedPointSet(std::move(pts), g.pointset.root()), g.parent, g.unique};
}

}  // namespace

TEST_CASE("verify_ymmst_drawing examples") {
  const Certificate star = verify_ymmst_drawing(resolve_coordinates(draw_depth1(3)));
  CHECK(star.status == CertStatus::certified);
  CHECK(star.violations.empty());
  CHECK(star.unique);

  const GeomTree bad =
      with_parents(RootedPointSet({P(0, 0), P(0, 2), P(1, 1)}), {kNoParent, 0, 0});
  const Certificate refuted = verify_ymmst_drawing(bad);
  CHECK(refuted.status == CertStatus::refuted);
  REQUIRE(refuted.violations.size() == 1);
  CHECK(refuted.violations[0] == Violation{1, 2, ViolationKind::closer_vertex});

  const Certificate single = verify_ymmst_drawing(with_parents(RootedPointSet({P(0, 0)}), {kNoParent}));
  CHECK(single.status == CertStatus::certified);
}

TEST_CASE("verifier flags a parent that is not below") {
  const GeomTree g =
      with_parents(RootedPointSet({P(0, 0), P(0, 2), P(1, 5)}), {kNoParent, 2, 0});
  const Certificate c = verify_ymmst_drawing(g);
  CHECK(c.status == CertStatus::refuted);
  CHECK(c.violations[0] == Violation{1, 2, ViolationKind::parent_not_below});
}

TEST_CASE("verifier rejects malformed parent maps") {
  const RootedPointSet pts({P(0, 0), P(0, 2)});
  CHECK_THROWS_AS(verify_ymmst_drawing(with_parents(pts, {kNoParent})), ValidationError);
  CHECK_THROWS_AS(verify_ymmst_drawing(with_parents(pts, {1, 0})), ValidationError);
  CHECK_THROWS_AS(verify_ymmst_drawing(with_parents(pts, {kNoParent, 7})), ValidationError);
  CHECK_THROWS_AS(verify_ymmst_drawing(with_parents(pts, {kNoParent, kNoParent})),
                  ValidationError);
}

TEST_CASE("verifier certifies exactly the tie-free builder output") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> coin(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto pts = testing::random_pointset(rng, 1 + trial % 12, 0, 12);
    const GeomTree built = build_ymmst(pts);

    // Perturb the parent map sometimes, keeping parents strictly below.
    GeomTree g = built;
    for (VertexId v = 0; v < pts.size(); ++v) {
      if (v == pts.root() || coin(rng) != 0) continue;
      std::vector<VertexId> below;
      for (VertexId u = 0; u < pts.size(); ++u) {
        if (pts[u].y < pts[v].y) below.push_back(u);
      }
      g.parent[v] = below[rng() % below.size()];
    }
    const bool same = g.edges() == built.edges();
    const Certificate c = verify_ymmst_drawing(g);
    CHECK((c.status == CertStatus::certified) == (same && built.unique));
    CHECK(verify_ymmst_drawing_serial(g).violations == c.violations);
  }
}

TEST_CASE("certificates are translation invariant") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> big(-1000000000000L, 1000000000000L);
  for (int trial = 0; trial < 100; ++trial) {
    const auto pts = testing::random_pointset(rng, 1 + trial % 15, -20, 20);
    GeomTree g = build_ymmst(pts);
    if (trial % 2 == 1 && pts.size() > 2) {
      for (VertexId v = 0; v < pts.size(); ++v) {
        if (v != pts.root()) g.parent[v] = pts.root();
      }
    }
    const Point t{BigInt(big(rng)) * BigInt(big(rng)), BigInt(big(rng))};
    const Certificate a = verify_ymmst_drawing(g);
    const Certificate b = verify_ymmst_drawing(translated(g, t));
    CHECK(a.status == b.status);
    CHECK(a.violations == b.violations);
  }
}

TEST_CASE("brute force oracle examples") {
  const OracleResult tri = brute_force_ymmst(RootedPointSet({P(0, 0), P(0, 2), P(1, 1)}));
  CHECK(tri.tree.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
  CHECK(tri.assignments == 2);
  CHECK_FALSE(tri.indeterminate);
  CHECK(tri.min_length_lo <= 2 * std::sqrt(2.0));
  CHECK(tri.min_length_hi >= 2 * std::sqrt(2.0));
  CHECK(tri.margin == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-12));

  const OracleResult single = brute_force_ymmst(RootedPointSet({P(0, 0)}));
  CHECK(single.tree.edges().empty());
  CHECK(single.min_length_hi == 0.0);
  CHECK(single.assignments == 1);

  const OracleResult star = brute_force_ymmst(gen_star_pointset(3));
  CHECK(star.assignments == 6);
  CHECK(star.tree.parent == std::vector<VertexId>{kNoParent, 0, 0, 0});
}

TEST_CASE("oracle reports ties as indeterminate and refuses large inputs") {
  const OracleResult tie = brute_force_ymmst(RootedPointSet({P(0, -10), P(3, 1), P(-4, 2), P(0, 5)}));
  CHECK(tie.indeterminate);
  CHECK_FALSE(tie.tree.unique);

  std::vector<Point> many;
  for (long i = 0; i < 11; ++i) many.push_back(P(i * 3 % 7, i));
  CHECK_THROWS_AS(brute_force_ymmst(RootedPointSet(many)), UsageError);
  OracleOptions small;
  small.max_points = 3;
  CHECK_THROWS_AS(brute_force_ymmst(gen_star_pointset(3), small), UsageError);
}

TEST_CASE("builder agrees with the oracle on small random instances") {
  std::mt19937_64 rng(43);
  int agreed = 0;
  while (agreed < 60) {
    const auto pts = testing::random_pointset(rng, 1 + rng() % 7, 0, 30);
    const OracleResult brute = brute_force_ymmst(pts);
    if (brute.indeterminate) continue;
    const GeomTree built = build_ymmst(pts);
    CHECK(built.unique);
    CHECK(built.edges() == brute.tree.edges());
    ++agreed;
  }
}

TEST_CASE("gen_star_pointset examples") {
  CHECK(gen_star_pointset(1) == RootedPointSet({P(0, 0), P(1, 1)}));
  CHECK(gen_star_pointset(2) == RootedPointSet({P(0, 0), P(1, 2), P(4, 1)}));
  const auto five = gen_star_pointset(5);
  const long xs[] = {1, 7, 16, 33, 67};
  for (std::size_t i = 0; i < 5; ++i) CHECK(five[i + 1] == P(xs[i], 5 - static_cast<long>(i)));
  CHECK(max_degree(build_ymmst(five)) == 5);
  CHECK_THROWS_AS(gen_star_pointset(0), UsageError);
}

TEST_CASE("star witness has root degree M") {
  for (std::size_t m = 1; m <= 50; ++m) {
    const GeomTree t = build_ymmst(gen_star_pointset(m));
    CHECK(t.unique);
    CHECK(max_degree(t) == m);
  }
}

TEST_CASE("max_degree examples") {
  CHECK(max_degree(with_parents(RootedPointSet({P(0, 0)}), {kNoParent})) == 0);
  CHECK(max_degree(resolve_coordinates(draw_depth1(3))) == 3);
  CHECK(max_degree(resolve_coordinates(draw_tree(RootedTree::path(3)))) == 2);
}

TEST_CASE("width bound on drawer stars") {
  const WidthBoundReport five = certify_width_lower_bound(resolve_coordinates(draw_depth1(5)));
  CHECK(five.quadrant == Quadrant::I);
  REQUIRE(five.chain.size() == 5);
  const long xs[] = {1, 7, 16, 33, 67};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(five.chain[i].x == BigInt(xs[i]));
    CHECK(five.translated_chain[i] == P(xs[i], 5 - static_cast<long>(i)));
  }
  CHECK(five.doubling_holds);
  CHECK(five.translated_chain_certified);
  CHECK(five.certified_width_lower_bound == BigInt(67));
  CHECK(five.predicted_bound == BigInt(16));

  const WidthBoundReport one = certify_width_lower_bound(resolve_coordinates(draw_depth1(1)));
  CHECK(one.chain.size() == 1);
  CHECK(one.doubling_holds);
  CHECK(one.certified_width_lower_bound == BigInt(1));

  const WidthBoundReport twelve = certify_width_lower_bound(resolve_coordinates(draw_depth1(12)));
  CHECK(twelve.doubling_holds);
  CHECK(twelve.pigeonhole_min == 3);
  CHECK(twelve.certified_width_lower_bound >= BigInt::pow2(11));
}

TEST_CASE("width bound mechanism holds on arbitrary certified star drawings") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + rng() % 20;
    GeomTree g = testing::random_star_drawing(rng, m);
    REQUIRE(verify_ymmst_drawing(g).status == CertStatus::certified);
    if (trial % 3 == 0) {
      std::uniform_int_distribution<long> big(-1000000, 1000000);
      g = translated(g, Point{BigInt(big(rng)), BigInt(big(rng))});
    }
    const WidthBoundReport r = certify_width_lower_bound(g);
    CHECK(r.chain.size() >= r.pigeonhole_min);
    CHECK(r.translated_chain_certified);
    CHECK(r.doubling_holds);
    CHECK(r.certified_width_lower_bound >= r.predicted_bound);
    for (std::size_t i = 0; i < r.translated_chain.size(); ++i) {
      CHECK(abs(r.translated_chain[i].y) == BigInt(r.translated_chain.size() - i));
    }
  }
}

TEST_CASE("width bound uses the second quadrant when it holds more leaves") {
  // Mirror a drawer star to the left of the root.
  const GeomTree right = resolve_coordinates(draw_depth1(4));
  std::vector<Point> pts;
  for (const Point& p : right.pointset.points()) pts.push_back(Point{-p.x, p.y});
  const GeomTree left{RootedPointSet(pts, 0), right.parent, true};
  const WidthBoundReport r = certify_width_lower_bound(left);
  CHECK(r.quadrant == Quadrant::II);
  CHECK(r.chain.front() == P(-1, 4));
  CHECK(r.translated_chain.back() == P(-27, 1));
  CHECK(r.doubling_holds);
  CHECK(r.certified_width_lower_bound == BigInt(27));
}

TEST_CASE("width bound excludes axis leaves and refuses non-star or uncertified input") {
  const GeomTree axis = with_parents(RootedPointSet({P(0, 0), P(0, 1)}), {kNoParent, 0});
  const WidthBoundReport r = certify_width_lower_bound(axis);
  CHECK(r.chain.empty());
  CHECK(r.certified_width_lower_bound.is_zero());

  CHECK_THROWS_AS(certify_width_lower_bound(resolve_coordinates(draw_tree(RootedTree::path(3)))),
                  UsageError);
  const GeomTree bad =
      with_parents(RootedPointSet({P(0, 0), P(0, 2), P(1, 1)}), {kNoParent, 0, 0});
  CHECK_THROWS_AS(certify_width_lower_bound(bad), UsageError);
}
