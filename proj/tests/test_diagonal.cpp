#include <gtest/gtest.h>

#include "support/oracles.hpp"

namespace np {
namespace {

Rational q(long a, long b = 1) { return Rational(Integer(a), Integer(b)); }

DiagonalSimplex five_dim() { return DiagonalSimplex::from_matrix(counterexample_matrix({CounterexampleKind::FiveDim})); }
DiagonalSimplex four_dim(long D, unsigned k) {
  return DiagonalSimplex::from_matrix(counterexample_matrix({CounterexampleKind::FourDim, 5, Integer(D), k}));
}
DiagonalSimplex segment(long d) { return DiagonalSimplex::from_matrix(IntMatrix{{d}}); }

const RationalVector kWitness{q(2, 3), q(1, 3), q(1, 3), q(1, 3), q(1, 3)};
const RationalVector kPartner{q(1, 3), q(2, 3), q(2, 3), q(2, 3), q(2, 3)};

TEST(DiagonalSimplex, Construction) {
  EXPECT_THROW(DiagonalSimplex::from_matrix(IntMatrix{{1, 2}, {2, 4}}), Error);
  EXPECT_THROW(DiagonalSimplex::from_matrix(IntMatrix(2, 3)), Error);
  try {
    DiagonalSimplex::from_support(Support::make(2, {make_point({1, 0}), make_point({0, 1}), make_point({1, 1})}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotDiagonal);
  }
  const auto fd = five_dim();
  EXPECT_EQ(fd.group_order(), 3);
  EXPECT_EQ(fd.polyhedron().denominator, 1);
}

TEST(GroupElements, Examples) {
  const auto unit = group_elements(DiagonalSimplex::from_matrix(IntMatrix::identity(3)));
  ASSERT_EQ(unit.size(), 1u);
  EXPECT_EQ(unit[0].r, RationalVector(3, Rational(0)));

  const auto fd = group_elements(five_dim());
  ASSERT_EQ(fd.size(), 3u);
  EXPECT_EQ(fd[0].r, RationalVector(5, Rational(0)));
  EXPECT_EQ(fd[1].r, kPartner);
  EXPECT_EQ(fd[2].r, kWitness);
  EXPECT_EQ(fd[1].norm, 3);
  EXPECT_EQ(fd[2].norm, 2);

  const auto fo = four_dim(2, 2);
  EXPECT_EQ(group_elements(fo).size(), 8u);
}

// Elements agree with a grid scan; each has norm equal to the weight of M r.
TEST(GroupElements, MatchGridScan) {
  oracle::Rng rng(3);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 3));
    const auto m = oracle::random_nonsingular(rng, n, 4, 24);
    const auto ds = DiagonalSimplex::from_matrix(m);
    const auto elements = group_elements(ds);
    std::set<RationalVector> got;
    for (const auto& g : elements) {
      got.insert(g.r);
      LatticePoint u;
      for (const auto& x : m * std::span<const Rational>(g.r)) {
        ASSERT_TRUE(x.is_integer());
        u.push_back(x.numerator());
      }
      EXPECT_EQ(*weight(ds.polyhedron(), u), g.norm);
    }
    EXPECT_EQ(got, oracle::group_by_grid(m));
    EXPECT_EQ(Integer(static_cast<unsigned long>(elements.size())), ds.group_order());
  }
}

TEST(MAction, Examples) {
  const auto zero = GroupElement::from_vector(RationalVector(5, Rational(0)));
  EXPECT_EQ(m_action(zero, Integer(7)).r, zero.r);
  const auto w = GroupElement::from_vector(kWitness);
  EXPECT_EQ(m_action(w, Integer(5)).r, kPartner);
  EXPECT_EQ(m_action(w, Integer(7)).r, kWitness);
  EXPECT_THROW(m_action(w, Integer(6)), Error);
  EXPECT_EQ(m_degree(zero, Integer(4)), 1u);
  EXPECT_EQ(m_degree(w, Integer(2)), 2u);
  EXPECT_EQ(m_degree(w, Integer(13)), 1u);
}

TEST(Orbits, Examples) {
  ASSERT_EQ(orbits(DiagonalSimplex::from_matrix(IntMatrix::identity(2)), Integer(5)).size(), 1u);
  const auto split = orbits(five_dim(), Integer(5));
  ASSERT_EQ(split.size(), 2u);
  EXPECT_EQ(split[1].degree(), 2u);
  EXPECT_EQ(split[1].slope, q(5, 2));
  EXPECT_EQ(split[1].representative.r, kPartner);
  EXPECT_EQ(orbits(five_dim(), Integer(7)).size(), 3u);
  EXPECT_EQ(orbit_slope(split[0], Integer(5)), 0);
  for (const auto& o : orbits(segment(6), Integer(7))) EXPECT_EQ(o.slope, o.representative.r[0]);
}

TEST(Orbits, Errors) {
  try {
    orbits(five_dim(), Integer(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCoprime);
  }
  try {
    orbits(five_dim(), Integer(25));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPrime);
  }
}

TEST(Stickelberger, Examples) {
  EXPECT_EQ(stickelberger_ord(Integer(0), Integer(7)), 0);
  EXPECT_EQ(stickelberger_ord(Integer(6), Integer(7)), 1);
  EXPECT_EQ(stickelberger_ord(Integer(16), Integer(5), 2u), 1);
  EXPECT_THROW(stickelberger_ord(Integer(24), Integer(5), 2u), Error);
  EXPECT_THROW(stickelberger_ord(Integer(-1), Integer(5)), Error);
}

TEST(Stickelberger, DigitSumMatchesOracle) {
  for (long p : {2L, 3L, 5L, 7L, 31L})
    for (long k = 0; k < 2000; k += 7) EXPECT_EQ(digit_sum(Integer(k), Integer(p)), oracle::digit_sum(Integer(k), Integer(p)));
}

TEST(NewtonPolygon, Examples) {
  EXPECT_EQ(newton_polygon_diag(DiagonalSimplex::from_matrix(IntMatrix::identity(3)), Integer(2)).slope_multiset(),
            (std::vector<Rational>{0}));
  EXPECT_EQ(newton_polygon_diag(five_dim(), Integer(5)).slope_multiset(), (std::vector<Rational>{0, q(5, 2), q(5, 2)}));
  EXPECT_EQ(newton_polygon_diag(five_dim(), Integer(7)), hodge_polygon(five_dim().polyhedron()));
  EXPECT_EQ(newton_polygon_diag(segment(4), Integer(5)).slope_multiset(),
            (std::vector<Rational>{0, q(1, 4), q(1, 2), q(3, 4)}));
}

// Norm-based Hodge polygon and the lattice enumeration agree.
TEST(HodgePolygon, NormsMatchEnumeration) {
  oracle::Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 3));
    const auto ds = DiagonalSimplex::from_matrix(oracle::random_nonsingular(rng, n, 4, 30));
    EXPECT_EQ(hodge_polygon_diag(ds), hodge_polygon(ds.polyhedron()));
  }
}

TEST(Ordinary, Examples) {
  const auto v = is_ordinary(five_dim(), Integer(5));
  EXPECT_FALSE(v.ordinary);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->r, kWitness);
  EXPECT_TRUE(is_ordinary(five_dim(), Integer(7)).ordinary);
  EXPECT_FALSE(is_ordinary(five_dim(), Integer(7)).witness);
}

// Verdict agrees with the polygon comparison.
TEST(Ordinary, VerdictMatchesPolygons) {
  oracle::Rng rng(43);
  const auto primes = oracle::sieve(60);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 3));
    const auto ds = DiagonalSimplex::from_matrix(oracle::random_nonsingular(rng, n, 4, 30));
    for (long p : primes) {
      if (gcd(Integer(p), ds.determinant()) != 1) continue;
      EXPECT_EQ(is_ordinary(ds, Integer(p)).ordinary,
                newton_polygon_diag(ds, Integer(p)) == hodge_polygon(ds.polyhedron()));
    }
  }
}

TEST(Residues, Examples) {
  const auto unit = ordinary_residues(DiagonalSimplex::from_matrix(IntMatrix::identity(2)));
  EXPECT_EQ(unit.modulus, 1);
  EXPECT_EQ(unit.mu, 1);
  EXPECT_EQ(unit.density, 1);
  const auto seg = ordinary_residues(segment(6));
  EXPECT_EQ(seg.classes, (std::vector<Integer>{1}));
  EXPECT_EQ(seg.density, q(1, 2));
  const auto fd = ordinary_residues(five_dim());
  EXPECT_EQ(fd.modulus, 3);
  EXPECT_EQ(fd.classes, (std::vector<Integer>{1}));
}

TEST(Residues, ClassesAreASubgroupContainingOne) {
  oracle::Rng rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 3));
    const auto ds = DiagonalSimplex::from_matrix(oracle::random_nonsingular(rng, n, 4, 40));
    const auto r = ordinary_residues(ds);
    const std::set<Integer> cls(r.classes.begin(), r.classes.end());
    EXPECT_TRUE(cls.count(mod(Integer(1), r.modulus)));
    for (const auto& a : cls)
      for (const auto& b : cls) EXPECT_TRUE(cls.count(mod(a * b, r.modulus)));
    EXPECT_EQ(euler_phi(r.modulus) % r.mu, 0);
  }
}

TEST(Denominator, Examples) {
  const auto unit = denominator_divides(DiagonalSimplex::from_matrix(IntMatrix::identity(3)));
  EXPECT_EQ(unit.denominator, 1);
  EXPECT_EQ(unit.largest_invariant_factor, 1);
  for (long d : {2L, 5L}) {
    const auto rel = denominator_divides(DiagonalSimplex::from_matrix(IntMatrix{{d, 0}, {1 - d, 1}}));
    EXPECT_EQ(rel.denominator, 1);
    EXPECT_EQ(rel.largest_invariant_factor, d);
  }
  const auto fo = denominator_divides(four_dim(3, 2));
  EXPECT_EQ(fo.denominator, 3);
  EXPECT_EQ(fo.largest_invariant_factor, 9);
}

TEST(Denominator, AlwaysDivides) {
  oracle::Rng rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 4));
    EXPECT_TRUE(denominator_divides(DiagonalSimplex::from_matrix(oracle::random_nonsingular(rng, n, 4, 60))).divides);
  }
}

TEST(Indecomposable, Examples) {
  EXPECT_TRUE(check_indecomposable_equality(segment(7)));
  EXPECT_EQ(segment(7).polyhedron().denominator, 7);
  for (long D : {2L, 3L, 5L})
    for (long v : {0L, 1L, 4L}) {
      const auto ds = DiagonalSimplex::from_matrix(IntMatrix{{D, D}, {v, v + 1}});
      EXPECT_EQ(abs(ds.determinant()), D);
      EXPECT_TRUE(check_indecomposable_equality(ds));
    }
  try {
    check_indecomposable_equality(DiagonalSimplex::from_matrix(IntMatrix{{1, 1}, {0, 2}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotIndecomposable);
  }
  EXPECT_THROW(check_indecomposable_equality(four_dim(2, 2)), Error);
}

}  // namespace
}  // namespace np
