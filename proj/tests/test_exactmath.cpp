#include <gtest/gtest.h>

#include "support/oracles.hpp"

namespace np {
namespace {

IntMatrix five_dim() { return counterexample_matrix({CounterexampleKind::FiveDim}); }

IntMatrix four_dim(long D, unsigned k) {
  return counterexample_matrix({CounterexampleKind::FourDim, 5, Integer(D), k});
}

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(Integer(4), Integer(-6)).to_string(), "-2/3");
  EXPECT_EQ(Rational(Integer(0), Integer(-5)).to_string(), "0");
  EXPECT_EQ(Rational(Integer(10), Integer(5)).to_string(), "2");
  EXPECT_EQ(Rational(Integer(-7), Integer(3)).floor(), -3);
  EXPECT_EQ(Rational(Integer(-7), Integer(3)).ceil(), -2);
  EXPECT_EQ(Rational(Integer(-7), Integer(3)).frac(), Rational(Integer(2), Integer(3)));
}

TEST(Rational, ZeroDenominatorThrows) {
  EXPECT_THROW(Rational(Integer(1), Integer(0)), Error);
  EXPECT_THROW(Rational(1) / Rational(0), Error);
}

TEST(Rational, ParseRoundTrip) {
  oracle::Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const Rational r(Integer(oracle::uniform(rng, -1000, 1000)), Integer(oracle::uniform(rng, 1, 97)));
    EXPECT_EQ(Rational::parse(r.to_string()), r);
  }
  EXPECT_EQ(Rational::parse("123456789012345678901234567890/3").to_string(), "41152263004115226300411522630");
  for (const char* bad : {"", "1/", "/2", "1.5", "a", "1/0", "1//2", " 1"}) EXPECT_THROW(Rational::parse(bad), Error) << bad;
}

TEST(Integers, FloorDivAndMod) {
  EXPECT_EQ(floor_div(Integer(-7), Integer(2)), -4);
  EXPECT_EQ(mod(Integer(-7), Integer(3)), 2);
  EXPECT_EQ(lcm(Integer(4), Integer(6)), 12);
  EXPECT_EQ(gcd(Integer(0), Integer(-9)), 9);
}

TEST(Snf, Examples) {
  EXPECT_EQ(snf(IntMatrix::identity(5)).diag, std::vector<Integer>(5, Integer(1)));
  EXPECT_EQ(snf(five_dim()).diag, (std::vector<Integer>{1, 1, 1, 1, 3}));
  const auto s = snf(four_dim(2, 2));
  EXPECT_EQ(s.largest(), 4);
  EXPECT_EQ(abs(determinant(four_dim(2, 2))), 8);
}

TEST(Snf, Errors) {
  EXPECT_THROW(snf(IntMatrix(2, 3)), Error);
  EXPECT_THROW(snf(IntMatrix{{1, 2}, {2, 4}}), Error);
  try {
    snf(IntMatrix{{1, 2}, {2, 4}});
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateMatrix);
  }
}

// Unimodular transforms, divisibility chain and the determinantal-divisor oracle.
TEST(Snf, PropertiesOnRandomMatrices) {
  oracle::Rng rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 4));
    const IntMatrix m = oracle::random_nonsingular(rng, n, 6, 100000);
    const auto s = snf(m);
    IntMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = s.diag[i];
    EXPECT_EQ(s.p * m * s.q, d);
    EXPECT_EQ(abs(determinant(s.p)), 1);
    EXPECT_EQ(abs(determinant(s.q)), 1);
    for (std::size_t i = 0; i + 1 < n; ++i) EXPECT_EQ(s.diag[i + 1] % s.diag[i], 0);
    EXPECT_EQ(s.diag, oracle::invariant_factors(m));
  }
}

TEST(Determinant, Examples) {
  EXPECT_EQ(determinant(IntMatrix::identity(4)), 1);
  EXPECT_EQ(abs(determinant(five_dim())), 3);
  EXPECT_EQ(abs(determinant(four_dim(3, 2))), 27);
  EXPECT_THROW(determinant(IntMatrix(2, 3)), Error);
}

TEST(Determinant, MatchesCofactorExpansion) {
  oracle::Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 5));
    IntMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = oracle::uniform(rng, -9, 9);
    EXPECT_EQ(determinant(m), oracle::det_cofactor(m));
    EXPECT_EQ(rank(m) == n, determinant(m) != 0);
  }
}

TEST(SolveUnique, Examples) {
  EXPECT_EQ(solve_unique(IntMatrix::identity(2), std::vector<Integer>{2, 5}), to_rational(make_point({2, 5})));
  const Rational third(Integer(1), Integer(3));
  EXPECT_EQ(solve_unique(five_dim(), make_point({2, 1, 1, 1, 1})),
            (RationalVector{third * 2, third, third, third, third}));
  EXPECT_EQ(solve_unique(five_dim(), make_point({3, 2, 2, 2, 2})),
            (RationalVector{third, third * 2, third * 2, third * 2, third * 2}));
  EXPECT_THROW(solve_unique(IntMatrix{{1, 1}, {1, 1}}, make_point({1, 1})), Error);
}

TEST(SolveUnique, ResidualIsZero) {
  oracle::Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 5));
    const IntMatrix m = oracle::random_nonsingular(rng, n, 5, 1000000);
    LatticePoint u(n);
    for (auto& x : u) x = oracle::uniform(rng, -20, 20);
    EXPECT_EQ(m * std::span<const Rational>(solve_unique(m, u)), to_rational(u));
  }
}

TEST(LinearProgram, Examples) {
  const std::vector<LatticePoint> kl{make_point({1, 0}), make_point({0, 1}), make_point({-1, -1})};
  EXPECT_EQ(lp_min_sum(kl, make_point({0, 0})), Rational(0));
  EXPECT_EQ(lp_min_sum(kl, make_point({-1, -1})), Rational(1));
  EXPECT_EQ(lp_min_sum(kl, make_point({1, 1})), Rational(2));
  const std::vector<LatticePoint> quadrant{make_point({1, 0}), make_point({0, 1})};
  EXPECT_FALSE(lp_min_sum(quadrant, make_point({-1, 0})).has_value());
  EXPECT_THROW(lp_min_sum({}, make_point({1})), Error);
}

// The two solvers share no code beyond the data types.
TEST(LinearProgram, EnumerationAgreesWithSimplex) {
  oracle::Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 3));
    const std::size_t k = static_cast<std::size_t>(oracle::uniform(rng, 1, 6));
    std::vector<LatticePoint> gens(k, LatticePoint(n));
    for (auto& g : gens)
      for (auto& x : g) x = oracle::uniform(rng, -4, 4);
    LatticePoint u(n);
    for (auto& x : u) x = oracle::uniform(rng, -6, 6);
    if (rank(IntMatrix::from_columns(gens)) < n) {
      EXPECT_THROW(lp_min_sum_enumerate(gens, u), Error);
      EXPECT_THROW(lp_min_sum_simplex(gens, u), Error);
      continue;
    }
    EXPECT_EQ(lp_min_sum_enumerate(gens, u), lp_min_sum_simplex(gens, u));
  }
}

TEST(Primes, MatchSieve) {
  std::vector<long> got;
  for (auto p : primes_in_range(0, 5000)) got.push_back(static_cast<long>(p));
  EXPECT_EQ(got, oracle::sieve(5000));
  EXPECT_TRUE(is_prime(parse_integer("170141183460469231731687303715884105727")));
  // Strong pseudoprimes to the first twelve and thirteen prime bases.
  EXPECT_FALSE(is_prime(parse_integer("318665857834031151167461")));
  EXPECT_FALSE(is_prime(parse_integer("3317044064679887385961981")));
}

TEST(Primes, EulerPhiAndOrder) {
  for (long n = 1; n < 300; ++n) {
    long count = 0;
    for (long a = 1; a <= n; ++a) count += std::gcd(a, n) == 1;
    EXPECT_EQ(euler_phi(Integer(n)), count) << n;
    for (long m = 1; m < n; ++m) {
      if (std::gcd(m, n) != 1) continue;
      long d = 1, x = m % n;
      while (x != 1 % n) {
        x = x * m % n;
        ++d;
      }
      ASSERT_EQ(multiplicative_order(Integer(m), Integer(n)), static_cast<std::uint64_t>(d));
    }
  }
  EXPECT_THROW(multiplicative_order(Integer(2), Integer(4)), Error);
}

}  // namespace
}  // namespace np
