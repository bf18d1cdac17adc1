#pragma once

#include <optional>
#include <span>
#include <vector>

#include "np/matrix.hpp"

namespace np {

/// Smith normal form: p * m * q == diag(invariant_factors).
struct SnfResult {
  IntMatrix p;
  IntMatrix q;
  std::vector<Integer> diag;  // d_1 | d_2 | ... | d_n, all positive

  const Integer& largest() const { return diag.back(); }
};

/// Throws DegenerateMatrix for non-square or singular input.
SnfResult snf(const IntMatrix& m);

/// Signed determinant (Bareiss elimination).
Integer determinant(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// The unique rational r with m * r == u.
RationalVector solve_unique(const IntMatrix& m, std::span<const Integer> u);
RationalVector solve_unique(const IntMatrix& m, std::span<const Rational> u);

// Minimum of sum(t_j) subject to sum(t_j * generators[j]) == u, t >= 0.
// std::nullopt means infeasible, i.e. u lies outside the cone spanned by the
// generators. lp_min_sum picks a method by size; the two named variants are
// exposed so that each can check the other. The generators must span the
// ambient space (DegenerateInput otherwise).
std::optional<Rational> lp_min_sum(std::span<const LatticePoint> generators,
                                   std::span<const Integer> u);
std::optional<Rational> lp_min_sum_enumerate(std::span<const LatticePoint> generators,
                                             std::span<const Integer> u);
std::optional<Rational> lp_min_sum_simplex(std::span<const LatticePoint> generators,
                                           std::span<const Integer> u);

/// Generator count up to which lp_min_sum enumerates basic feasible solutions.
inline constexpr std::size_t kLpEnumerationLimit = 20;

}  // namespace np
