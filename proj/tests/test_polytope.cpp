#include <gtest/gtest.h>

#include "support/oracles.hpp"

namespace np {
namespace {

Support kloosterman2() { return Support::make(2, {make_point({1, 0}), make_point({0, 1}), make_point({-1, -1})}); }
Support five_dim() { return build_counterexample({CounterexampleKind::FiveDim}); }
Support segment(long d) { return Support::make(1, {make_point({d})}); }
Support unit_simplex(std::size_t n) { return Support::from_columns(IntMatrix::identity(n)); }

Rational q(long a, long b = 1) { return Rational(Integer(a), Integer(b)); }

TEST(Build, Examples) {
  const auto seg = build(segment(7));
  ASSERT_EQ(seg.facets_away_from_origin.size(), 1u);
  EXPECT_EQ(seg.facets_away_from_origin[0].normal, (RationalVector{q(1, 7)}));
  EXPECT_EQ(seg.denominator, 7);

  const auto kl = build(kloosterman2());
  EXPECT_EQ(kl.facets_away_from_origin.size(), 3u);
  EXPECT_EQ(kl.denominator, 1);
  EXPECT_TRUE(kl.cone_facets.empty());

  const auto bi = make_family("bi_kloosterman", {{"u", {1, 1}}, {"v", {1, 1}}});
  EXPECT_EQ(build(bi.support).facets_away_from_origin.size(), 6u);
}

TEST(Build, Errors) {
  EXPECT_THROW(build(Support::make(2, {make_point({1, 0}), make_point({2, 0})})), Error);
  EXPECT_THROW(Support::make(2, {make_point({1, 0}), make_point({1, 0})}), Error);
  EXPECT_THROW(Support::make(2, {make_point({0, 0})}), Error);
  EXPECT_THROW(Support::make(2, {make_point({1})}), Error);
}

TEST(Weight, Examples) {
  const auto kl = build(kloosterman2());
  EXPECT_EQ(weight(kl, make_point({0, 0})), Rational(0));
  const auto fd = build(five_dim());
  EXPECT_EQ(weight(fd, make_point({2, 1, 1, 1, 1})), Rational(2));
  EXPECT_EQ(weight(fd, make_point({3, 2, 2, 2, 2})), Rational(3));
  EXPECT_FALSE(weight(build(segment(4)), make_point({-1})).has_value());
  EXPECT_EQ(weight(build(segment(4)), make_point({3})), q(3, 4));
}

// Facet formula against the linear program, and D * w(u) integral.
TEST(Weight, FacetFormulaMatchesLinearProgram) {
  oracle::Rng rng(31);
  int checked = 0;
  while (checked < 60) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 3));
    std::set<LatticePoint> pts;
    const std::size_t k = static_cast<std::size_t>(oracle::uniform(rng, 1, 6));
    while (pts.size() < k) {
      LatticePoint p(n);
      for (auto& x : p) x = oracle::uniform(rng, -3, 3);
      if (std::any_of(p.begin(), p.end(), [](const Integer& x) { return x != 0; })) pts.insert(p);
    }
    NewtonPolyhedron delta;
    try {
      delta = build(Support::make(n, {pts.begin(), pts.end()}));
    } catch (const Error&) {
      continue;
    }
    ++checked;
    for (int s = 0; s < 25; ++s) {
      LatticePoint u(n);
      for (auto& x : u) x = oracle::uniform(rng, -5, 5);
      const auto w = weight(delta, u);
      ASSERT_EQ(w, weight_lp(delta, u));
      if (w) EXPECT_TRUE((*w * Rational(delta.denominator)).is_integer());
    }
  }
}

TEST(Weight, Homogeneity) {
  const auto kl = build(kloosterman2());
  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b)
      for (long t = 1; t <= 3; ++t)
        EXPECT_EQ(*weight(kl, make_point({t * a, t * b})), Rational(t) * *weight(kl, make_point({a, b})));
}

TEST(Hodge, Examples) {
  const auto unit = hodge_numbers(build(unit_simplex(3)));
  EXPECT_EQ(unit.H[0], 1);
  for (std::size_t k = 1; k < unit.H.size(); ++k) EXPECT_EQ(unit.H[k], 0);
  EXPECT_EQ(unit.polygon.vertices(), (std::vector<Vertex>{{0, 0}, {1, 0}}));

  const auto fd = hodge_numbers(build(five_dim()));
  std::vector<std::int64_t> expected(fd.H.size(), 0);
  expected[0] = expected[2] = expected[3] = 1;
  EXPECT_EQ(fd.H, expected);
  EXPECT_EQ(fd.polygon.vertices(), (std::vector<Vertex>{{0, 0}, {1, 0}, {2, 2}, {3, 5}}));

  const long d = 5;
  const auto seg = hodge_numbers(build(segment(d)));
  for (long k = 0; k < d; ++k) EXPECT_EQ(seg.H[static_cast<std::size_t>(k)], 1);
  EXPECT_EQ(hodge_polygon(build(segment(3))).slope_multiset(), (std::vector<Rational>{0, q(1, 3), q(2, 3)}));
}

// sum H(k) = n! V, and the polygon ends at (n! V, (n/2) n! V).
TEST(Hodge, TotalsAndSymmetry) {
  for (const auto& [name, params] : std::vector<std::pair<std::string, Parameters>>{
           {"kloosterman", {{"n", {3}}}},
           {"generalized_kloosterman", {{"v", {2, 3}}}},
           {"two_sided", {{"u", {2, 3}}, {"v", {1, 2}}}},
           {"bi_kloosterman", {{"u", {1, 2}}, {"v", {1, 1}}}},
           {"fermat_deformation", {{"n", {2}}, {"d", {4}}}},
           {"box", {{"d", {2}}}}}) {
    const auto fam = make_family(name, params);
    const auto delta = build(fam.support);
    const auto h = hodge_numbers(delta);
    std::int64_t total = 0;
    for (auto x : h.H) {
      EXPECT_GE(x, 0) << name;
      total += x;
    }
    EXPECT_EQ(Integer(total), delta.normalized_volume) << name;
    EXPECT_EQ(h.polygon.length(), static_cast<std::uint64_t>(total)) << name;
    if (delta.cone_facets.empty())
      EXPECT_EQ(h.polygon.height() * 2, Rational(static_cast<long>(delta.dim())) * Rational(total)) << name;
  }
}

TEST(Cofacial, Examples) {
  const auto kl = build(kloosterman2());
  EXPECT_TRUE(cofacial(kl, make_point({2, 3}), make_point({2, 3})));
  EXPECT_TRUE(cofacial(kl, make_point({1, 0}), make_point({-1, -1})));
  EXPECT_FALSE(cofacial(kl, make_point({1, 0}), make_point({-1, 0})));
  EXPECT_FALSE(cofacial(kl, make_point({2, 1}), make_point({-1, -2})));
  EXPECT_TRUE(cofacial(kl, make_point({1, 0}), make_point({0, 1})));
  EXPECT_THROW(cofacial(kl, make_point({0, 0}), make_point({1, 0})), Error);
  EXPECT_THROW(cofacial(build(unit_simplex(2)), make_point({-1, 0}), make_point({1, 0})), Error);
}

TEST(Polygon, Comparison) {
  const auto hp = LowerPolygon::from_slope_list(std::vector<Rational>{0, 2, 3});
  const auto np = LowerPolygon::from_slope_list(std::vector<Rational>{0, q(5, 2), q(5, 2)});
  auto c = lies_above(hp, hp);
  EXPECT_EQ(c.relation, Relation::Above);
  EXPECT_TRUE(c.endpoints_coincide);
  c = lies_above(np, hp);
  EXPECT_EQ(c.relation, Relation::AboveStrictSomewhere);
  EXPECT_TRUE(c.endpoints_coincide);
  EXPECT_EQ(c.witness_x, Integer(2));
  EXPECT_EQ(lies_above(hp, np).relation, Relation::Violation);
  EXPECT_THROW(lies_above(hp, LowerPolygon::from_slope_list(std::vector<Rational>{0})), Error);
}

TEST(Polygon, CanonicalAndVertexRoundTrip) {
  oracle::Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> slopes;
    const int k = static_cast<int>(oracle::uniform(rng, 1, 8));
    for (int i = 0; i < k; ++i) slopes.push_back(q(oracle::uniform(rng, 0, 12), oracle::uniform(rng, 1, 4)));
    const auto p = LowerPolygon::from_slope_list(slopes);
    EXPECT_EQ(LowerPolygon::from_vertices(p.vertices()), p);
    std::vector<Vertex> expected;
    for (const auto& [x, y] : oracle::polygon_from_slopes(slopes)) expected.push_back({x, y});
    for (const auto& v : expected) EXPECT_EQ(p.value_at(v.x), v.y);
    EXPECT_EQ(p.length(), static_cast<std::uint64_t>(k));
  }
  const std::vector<Vertex> concave{{0, 0}, {1, 2}, {2, 3}};
  EXPECT_THROW(LowerPolygon::from_vertices(concave), Error);
}

TEST(Lattice, NormalizedVolumeAndHull) {
  const std::vector<LatticePoint> sq{make_point({0, 0}), make_point({2, 0}), make_point({0, 2}), make_point({2, 2}),
                                     make_point({1, 1})};
  EXPECT_EQ(normalized_volume(sq), 8);
  EXPECT_EQ(hull_vertices(sq), (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(hull_facets(sq).size(), 4u);
  EXPECT_EQ(affine_dimension(std::vector<LatticePoint>{make_point({1, 1}), make_point({2, 2})}), 1);
}

TEST(Lattice, HyperplaneFrameIsBijective) {
  const HyperplaneFrame frame(make_point({2, 3, 5}), Integer(7));
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) {
      const auto x = frame.lift(make_point({a, b}));
      EXPECT_EQ(dot(make_point({2, 3, 5}), x), 7);
      EXPECT_EQ(frame.project(x), make_point({a, b}));
    }
}

}  // namespace
}  // namespace np
