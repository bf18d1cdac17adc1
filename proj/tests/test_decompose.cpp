#include <gtest/gtest.h>

#include "support/oracles.hpp"

namespace np {
namespace {

Support generalized_kloosterman() { return make_family("generalized_kloosterman", {{"v", {2, 3}}}).support; }

std::vector<std::vector<Integer>> face_factors(const Support& s) {
  std::vector<std::vector<Integer>> out;
  for (const auto& f : facial_decompose(s)) out.push_back(snf(IntMatrix::from_columns(f.restricted_support.points)).diag);
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Facial, Examples) {
  const auto fermat = make_family("fermat_deformation", {{"n", {2}}, {"d", {3}}});
  const auto faces = facial_decompose(fermat.support);
  ASSERT_EQ(faces.size(), 1u);
  EXPECT_TRUE(faces[0].is_diagonal);
  EXPECT_EQ(faces[0].restricted_support.points, (std::vector<LatticePoint>{make_point({3, 0}), make_point({0, 3})}));

  EXPECT_EQ(face_factors(generalized_kloosterman()),
            (std::vector<std::vector<Integer>>{{1, 1}, {1, 2}, {1, 3}}));

  const auto bi = facial_decompose(make_family("bi_kloosterman", {{"u", {1, 1}}, {"v", {1, 1}}}).support);
  EXPECT_EQ(bi.size(), 6u);
  for (const auto& f : bi) EXPECT_EQ(snf(IntMatrix::from_columns(f.restricted_support.points)).largest(), 1);
}

// Every support point lies on some face; face points satisfy e . u == 1.
TEST(Facial, FacesCoverTheBoundarySupport) {
  const auto s = make_family("two_sided", {{"u", {2, 3}}, {"v", {1, 2}}}).support;
  std::set<std::size_t> covered;
  for (const auto& f : facial_decompose(s)) {
    for (std::size_t i : f.support_indices) {
      covered.insert(i);
      EXPECT_EQ(f.facet.evaluate(s.points[i]), 1);
    }
    EXPECT_EQ(f.is_diagonal, f.restricted_support.size() == s.dim);
  }
  EXPECT_EQ(covered.size(), s.size());
}

TEST(Facial, Verdicts) {
  EXPECT_EQ(ordinary_via_faces(generalized_kloosterman(), Integer(7)).status, FacialStatus::Ordinary);
  const auto kl = make_family("kloosterman", {{"n", {3}}}).support;
  for (long p : oracle::sieve(60)) EXPECT_EQ(ordinary_via_faces(kl, Integer(p)).status, FacialStatus::Ordinary);

  const auto fermat = make_family("fermat_deformation", {{"n", {2}}, {"d", {3}}}).support;
  const auto v = ordinary_via_faces(fermat, Integer(5));
  EXPECT_EQ(v.status, FacialStatus::NonOrdinary);
  EXPECT_EQ(v.witness_face, std::size_t{0});
  ASSERT_TRUE(v.witness);

  try {
    ordinary_via_faces(generalized_kloosterman(), Integer(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCoprime);
  }
  const auto box = make_family("box", {{"d", {1, 1}}}).support;
  EXPECT_EQ(ordinary_via_faces(box, Integer(5)).status, FacialStatus::Unknown);
  EXPECT_THROW(facial_ordinary_residues(box), Error);
}

TEST(Facial, NewtonPolygonWhenOrdinary) {
  const auto s = generalized_kloosterman();
  const auto np7 = newton_polygon_via_faces(s, Integer(7));
  ASSERT_TRUE(np7);
  EXPECT_EQ(*np7, hodge_polygon(build(s)));
  const auto fermat = make_family("fermat_deformation", {{"n", {2}}, {"d", {3}}}).support;
  EXPECT_FALSE(newton_polygon_via_faces(fermat, Integer(5)));
}

TEST(Collapse, StepExamples) {
  const std::vector<LatticePoint> two{make_point({0, 1}), make_point({1, 0})};
  EXPECT_EQ(collapse_step(two, two[1]), (std::vector<PointSet>{two}));

  const LatticePoint a = make_point({2, 0}), b = make_point({1, 1}), c = make_point({0, 2});
  const std::vector<LatticePoint> line{a, b, c};
  EXPECT_EQ(collapse_step(line, a), (std::vector<PointSet>{{c, b}, {b, a}}));
  EXPECT_THROW(collapse_step(line, b), Error);

  const LatticePoint x = make_point({2, 0, 0}), y = make_point({0, 2, 0}), z = make_point({0, 0, 2}),
                     m = make_point({1, 1, 0});
  const std::vector<LatticePoint> tri{x, y, z, m};
  const auto pieces = collapse_step(tri, x);
  EXPECT_EQ(pieces, (std::vector<PointSet>{{z, y, m}, {z, m, x}}));
  EXPECT_THROW(collapse_step(tri, z), Error);
  EXPECT_EQ(collapsible_vertices(tri), (PointSet{y, x}));
}

TEST(Collapse, CompleteExamples) {
  const auto unit = complete_collapse(Support::from_columns(IntMatrix::identity(3)).points, Strategy::FirstLex);
  EXPECT_EQ(unit.pieces.size(), 1u);
  EXPECT_EQ(unit.dstar, 1);

  const auto tri = make_family("dilated_simplex", {{"n", {2}}, {"d", {2}}, {"D", {1}}}).support.points;
  for (auto s : {Strategy::FirstLex, Strategy::MaxInvariantFactor, Strategy::ExhaustiveMinDstar}) {
    const auto r = complete_collapse(tri, s);
    EXPECT_EQ(r.dstar, 1) << to_string(s);
    EXPECT_EQ(r.pieces.size(), 4u) << to_string(s);
  }

  const auto fd = complete_collapse(build_counterexample({CounterexampleKind::FiveDim}).points, Strategy::FirstLex);
  EXPECT_EQ(fd.pieces.size(), 1u);
  EXPECT_EQ(fd.dstar, 3);
}

// Pieces are n-point simplices covering the set, and dstar is the lcm of their factors.
TEST(Collapse, InvariantsOnRandomFaces) {
  oracle::Rng rng(61);
  int checked = 0;
  while (checked < 40) {
    const long level = oracle::uniform(rng, 1, 3);
    std::set<LatticePoint> pts;
    const std::size_t k = static_cast<std::size_t>(oracle::uniform(rng, 3, 7));
    while (pts.size() < k) {
      const long a = oracle::uniform(rng, -2, 4), b = oracle::uniform(rng, -2, 4);
      pts.insert(make_point({a, b, level - a - b}));
    }
    const std::vector<LatticePoint> vset(pts.begin(), pts.end());
    if (affine_dimension(vset) != 2) continue;
    ++checked;
    Integer best;
    for (auto s : {Strategy::FirstLex, Strategy::MaxInvariantFactor, Strategy::ExhaustiveMinDstar}) {
      const auto r = complete_collapse(vset, s);
      Integer l = 1;
      std::set<LatticePoint> covered;
      ASSERT_EQ(r.pieces.size(), r.piece_invariant_factors.size());
      for (std::size_t i = 0; i < r.pieces.size(); ++i) {
        ASSERT_EQ(r.pieces[i].size(), 3u);
        EXPECT_NE(determinant(IntMatrix::from_columns(r.pieces[i])), 0);
        EXPECT_EQ(r.piece_invariant_factors[i], oracle::invariant_factors(IntMatrix::from_columns(r.pieces[i])).back());
        l = lcm(l, r.piece_invariant_factors[i]);
        covered.insert(r.pieces[i].begin(), r.pieces[i].end());
      }
      EXPECT_EQ(l, r.dstar);
      const HyperplaneFrame frame(make_point({1, 1, 1}), Integer(level));
      std::vector<LatticePoint> flat;
      for (const auto& v : vset) flat.push_back(frame.project(v));
      for (const auto& v : hull_vertices(flat)) EXPECT_TRUE(covered.count(vset[v]));
      if (s == Strategy::ExhaustiveMinDstar) best = r.dstar;
    }
    for (auto s : {Strategy::FirstLex, Strategy::MaxInvariantFactor})
      EXPECT_LE(best, complete_collapse(vset, s).dstar);
  }
}

TEST(Strategy, Names) {
  for (auto s : {Strategy::FirstLex, Strategy::MaxInvariantFactor, Strategy::ExhaustiveMinDstar})
    EXPECT_EQ(parse_strategy(to_string(s)), s);
  EXPECT_FALSE(parse_strategy("best"));
}

TEST(Hyperplane, AdmissibleExamples) {
  const auto unit = Support::from_columns(IntMatrix::identity(3)).points;
  const auto empty = admissible_check(unit, {});
  EXPECT_TRUE(empty.admissible) << empty.reason;
  EXPECT_EQ(empty.pieces.size(), 1u);

  const long d = 4;
  std::vector<LatticePoint> seg;
  for (long y = 0; y <= d; ++y) seg.push_back(make_point({1, y}));
  std::vector<Hyperplane> cuts;
  for (long k = 0; k <= d; ++k) cuts.push_back({make_point({0, 1}), Integer(k)});
  const auto unit_cuts = admissible_check(seg, cuts);
  EXPECT_TRUE(unit_cuts.admissible) << unit_cuts.reason;
  EXPECT_EQ(unit_cuts.pieces.size(), static_cast<std::size_t>(d));

  const std::vector<Hyperplane> interior{{make_point({0, 1}), Integer(2)}};
  const auto through = admissible_check(seg, interior);
  EXPECT_FALSE(through.admissible);
  EXPECT_FALSE(through.reason.empty());

  const std::vector<LatticePoint> short_seg{make_point({1, 0}), make_point({1, 3})};
  const std::vector<Hyperplane> half{{make_point({0, 2}), Integer(0)}, {make_point({0, 2}), Integer(3)}};
  const auto bad = admissible_check(short_seg, half);
  EXPECT_FALSE(bad.admissible);
  EXPECT_FALSE(bad.reason.empty());

  const std::vector<Hyperplane> crossing{{make_point({1, 0, 0}), Integer(1)}, {make_point({0, 1, 0}), Integer(1)}};
  const auto tri = make_family("dilated_simplex", {{"n", {2}}, {"d", {2}}, {"D", {1}}}).support.points;
  EXPECT_THROW(admissible_check(tri, crossing), Error);
}

TEST(Hyperplane, RegularSubdivision) {
  EXPECT_EQ(regular_subdivision(3, 1).size(), 1u);
  for (auto [n, d] : {std::pair<std::size_t, std::size_t>{2, 2}, {3, 2}, {2, 3}}) {
    const auto pieces = regular_subdivision(n, d);
    std::size_t expected = 1;
    for (std::size_t i = 0; i < n; ++i) expected *= d;
    ASSERT_EQ(pieces.size(), expected);
    for (const auto& p : pieces) {
      ASSERT_EQ(p.size(), n + 1);
      IntMatrix edges(n, n);
      for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t i = 0; i < n; ++i) edges(i, j - 1) = p[j][i] - p[0][i];
      EXPECT_EQ(abs(oracle::det_cofactor(edges)), 1);
    }
  }
}

TEST(Certificate, Examples) {
  const auto gk = generalized_kloosterman();
  const auto ok = generic_ordinary_certificate(gk, Integer(7));
  EXPECT_TRUE(ok.certified) << ok.reason;
  EXPECT_EQ(ok.faces.size(), 3u);

  const auto dil = make_family("dilated_simplex", {{"n", {2}}, {"d", {3}}, {"D", {1}}}).support;
  for (long p : {2L, 3L, 5L, 7L}) EXPECT_TRUE(generic_ordinary_certificate(dil, Integer(p)).certified) << p;

  const auto fd = build_counterexample({CounterexampleKind::FiveDim});
  const auto no = generic_ordinary_certificate(fd, Integer(5));
  EXPECT_FALSE(no.certified);
  EXPECT_FALSE(no.reason.empty());
  EXPECT_FALSE(is_ordinary(DiagonalSimplex::from_support(fd), Integer(5)).ordinary);
  EXPECT_TRUE(generic_ordinary_certificate(fd, Integer(7)).certified);
}

TEST(Certificate, NeverContradictsDiagonalVerdict) {
  oracle::Rng rng(67);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 2, 3));
    const auto m = oracle::random_nonsingular(rng, n, 3, 30);
    const auto ds = DiagonalSimplex::from_matrix(m);
    const Support s = Support::from_columns(m);
    for (long p : oracle::sieve(40)) {
      if (gcd(Integer(p), ds.determinant()) != 1) continue;
      if (generic_ordinary_certificate(s, Integer(p)).certified) EXPECT_TRUE(is_ordinary(ds, Integer(p)).ordinary);
    }
  }
}

TEST(Counterexamples, Examples) {
  const auto fd = DiagonalSimplex::from_matrix(counterexample_matrix({CounterexampleKind::FiveDim}));
  EXPECT_EQ(fd.group_order(), 3);
  EXPECT_EQ(fd.polyhedron().denominator, 1);

  const auto fo = DiagonalSimplex::from_matrix(counterexample_matrix({CounterexampleKind::FourDim, 5, 2, 2}));
  EXPECT_EQ(fo.polyhedron().denominator, 2);
  EXPECT_EQ(fo.largest_invariant_factor(), 4);
  EXPECT_EQ(weight(fo.polyhedron(), make_point({3, 1, 0, 1})), Rational(Integer(3), Integer(2)));

  const auto ext = build_counterexample({CounterexampleKind::ExtendDim, 6});
  EXPECT_EQ(ext.dim, 6u);
  const auto ed = DiagonalSimplex::from_support(ext);
  EXPECT_EQ(ed.polyhedron().denominator, 1);
  EXPECT_FALSE(is_ordinary(ed, Integer(5)).ordinary);
  EXPECT_FALSE(is_ordinary(ed, Integer(11)).ordinary);
  EXPECT_TRUE(is_ordinary(ed, Integer(7)).ordinary);

  EXPECT_THROW(counterexample_matrix({CounterexampleKind::ExtendDim, 4}), Error);
  EXPECT_THROW(counterexample_matrix({CounterexampleKind::FourDim, 5, 1, 2}), Error);
  EXPECT_THROW(counterexample_matrix({CounterexampleKind::FourDim, 5, 2, 1}), Error);
}

}  // namespace
}  // namespace np
