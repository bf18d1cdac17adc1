#include <algorithm>
#include <numeric>

#include "np/error.hpp"
#include "np/exactmath.hpp"

namespace np {

namespace {

std::size_t check_lp_input(std::span<const LatticePoint> generators, std::span<const Integer> u) {
  if (generators.empty()) fail(ErrorKind::DegenerateInput, "lp_min_sum: empty generator set");
  const std::size_t n = u.size();
  for (const auto& g : generators)
    if (g.size() != n) fail(ErrorKind::DegenerateInput, "lp_min_sum: generator dimension mismatch");
  if (rank(IntMatrix::from_columns(generators)) != n)
    fail(ErrorKind::DegenerateInput, "lp_min_sum: generators do not span the ambient space");
  return n;
}

bool is_zero_vector(std::span<const Integer> u) {
  return std::all_of(u.begin(), u.end(), [](const Integer& x) { return x == 0; });
}

// Dense tableau for: minimize cost . x  subject to  rows . x == rhs, x >= 0.
struct Tableau {
  std::vector<RationalVector> rows;  // each row: columns..., rhs
  std::vector<std::size_t> basis;    // basic column per row
  std::size_t columns = 0;

  const Rational& rhs(std::size_t r) const { return rows[r][columns]; }

  void pivot(std::size_t pr, std::size_t pc) {
    const Rational inv = Rational(1) / rows[pr][pc];
    for (auto& v : rows[pr]) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pr || rows[r][pc].is_zero()) continue;
      const Rational f = rows[r][pc];
      for (std::size_t j = 0; j <= columns; ++j) rows[r][j] -= f * rows[pr][j];
    }
    basis[pr] = pc;
  }

  // Bland's rule; `allowed` masks columns that may enter the basis.
  void optimize(const RationalVector& cost, const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t enter = columns;
      for (std::size_t j = 0; j < columns && enter == columns; ++j) {
        if (!allowed[j]) continue;
        if (std::find(basis.begin(), basis.end(), j) != basis.end()) continue;
        Rational reduced = cost[j];
        for (std::size_t r = 0; r < rows.size(); ++r) reduced -= cost[basis[r]] * rows[r][j];
        if (reduced.sign() < 0) enter = j;
      }
      if (enter == columns) return;

      std::size_t leave = rows.size();
      Rational best;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r][enter].sign() <= 0) continue;
        const Rational ratio = rhs(r) / rows[r][enter];
        if (leave == rows.size() || ratio < best ||
            (ratio == best && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
      // Unbounded cannot happen: the objective is bounded below by zero.
      if (leave == rows.size()) fail(ErrorKind::DegenerateInput, "lp_min_sum: unbounded program");
      pivot(leave, enter);
    }
  }

  Rational objective(const RationalVector& cost) const {
    Rational z;
    for (std::size_t r = 0; r < rows.size(); ++r) z += cost[basis[r]] * rhs(r);
    return z;
  }
};

template <typename Visit>
void for_each_subset(std::size_t total, std::size_t size, Visit&& visit) {
  std::vector<std::size_t> idx(size);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (;;) {
    visit(idx);
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == total - size + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::optional<Rational> lp_min_sum_enumerate(std::span<const LatticePoint> generators,
                                             std::span<const Integer> u) {
  const std::size_t n = check_lp_input(generators, u);
  if (is_zero_vector(u)) return Rational(0);

  std::optional<Rational> best;
  for_each_subset(generators.size(), n, [&](const std::vector<std::size_t>& idx) {
    std::vector<LatticePoint> cols;
    cols.reserve(n);
    for (std::size_t i : idx) cols.push_back(generators[i]);
    const IntMatrix basis = IntMatrix::from_columns(cols);
    if (determinant(basis) == 0) return;
    const RationalVector t = solve_unique(basis, u);
    if (std::any_of(t.begin(), t.end(), [](const Rational& x) { return x.sign() < 0; })) return;
    Rational sum;
    for (const auto& x : t) sum += x;
    if (!best || sum < *best) best = sum;
  });
  return best;
}

std::optional<Rational> lp_min_sum_simplex(std::span<const LatticePoint> generators,
                                           std::span<const Integer> u) {
  const std::size_t n = check_lp_input(generators, u);
  if (is_zero_vector(u)) return Rational(0);

  const std::size_t j_count = generators.size();
  Tableau tab;
  tab.columns = j_count + n;  // originals, then one artificial per row
  tab.rows.assign(n, RationalVector(tab.columns + 1));
  tab.basis.resize(n);
  for (std::size_t r = 0; r < n; ++r) {
    const bool flip = u[r] < 0;
    for (std::size_t j = 0; j < j_count; ++j)
      tab.rows[r][j] = Rational(flip ? Integer(-generators[j][r]) : generators[j][r]);
    tab.rows[r][j_count + r] = Rational(1);
    tab.rows[r][tab.columns] = Rational(flip ? Integer(-u[r]) : u[r]);
    tab.basis[r] = j_count + r;
  }

  RationalVector phase1(tab.columns);
  for (std::size_t r = 0; r < n; ++r) phase1[j_count + r] = Rational(1);
  tab.optimize(phase1, std::vector<bool>(tab.columns, true));
  if (!tab.objective(phase1).is_zero()) return std::nullopt;

  // Drive zero-valued artificials out of the basis. The generators span,
  // so a non-artificial pivot always exists.
  for (std::size_t r = 0; r < n; ++r) {
    if (tab.basis[r] < j_count) continue;
    std::size_t pc = j_count;
    for (std::size_t j = 0; j < j_count && pc == j_count; ++j)
      if (!tab.rows[r][j].is_zero() &&
          std::find(tab.basis.begin(), tab.basis.end(), j) == tab.basis.end())
        pc = j;
    if (pc == j_count) fail(ErrorKind::DegenerateInput, "lp_min_sum: redundant constraint row");
    tab.pivot(r, pc);
  }

  RationalVector phase2(tab.columns);
  std::vector<bool> allowed(tab.columns, false);
  for (std::size_t j = 0; j < j_count; ++j) {
    phase2[j] = Rational(1);
    allowed[j] = true;
  }
  tab.optimize(phase2, allowed);
  return tab.objective(phase2);
}

std::optional<Rational> lp_min_sum(std::span<const LatticePoint> generators,
                                   std::span<const Integer> u) {
  if (generators.size() <= kLpEnumerationLimit) return lp_min_sum_enumerate(generators, u);
  return lp_min_sum_simplex(generators, u);
}

}  // namespace np
