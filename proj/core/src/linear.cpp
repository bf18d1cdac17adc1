#include <algorithm>

#include "np/error.hpp"
#include "np/exactmath.hpp"

namespace np {

namespace {

void require_square(const IntMatrix& m, const char* op) {
  if (!m.square() || m.rows() == 0)
    fail(ErrorKind::DegenerateMatrix, std::string(op) + ": matrix must be square and non-empty, got " +
                                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

// Smallest nonzero |entry| in the trailing submatrix starting at (t, t).
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pr, std::size_t& pc) {
  const Integer* best = nullptr;
  Integer best_abs;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Integer v = abs(a(i, j));
      if (!best || v < best_abs) {
        best = &a(i, j);
        best_abs = v;
        pr = i;
        pc = j;
      }
    }
  return best != nullptr;
}

}  // namespace

SnfResult snf(const IntMatrix& m) {
  require_square(m, "snf");
  const std::size_t n = m.rows();
  IntMatrix a = m;
  IntMatrix p = IntMatrix::identity(n);
  IntMatrix q = IntMatrix::identity(n);

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      std::size_t pr = 0, pc = 0;
      if (!find_pivot(a, t, pr, pc)) fail(ErrorKind::DegenerateMatrix, "snf: matrix is singular");
      a.swap_rows(t, pr);
      p.swap_rows(t, pr);
      a.swap_cols(t, pc);
      q.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a(i, t) == 0) continue;
        const Integer f = -floor_div(a(i, t), a(t, t));
        a.add_row_multiple(i, t, f);
        p.add_row_multiple(i, t, f);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        const Integer f = -floor_div(a(t, j), a(t, t));
        a.add_col_multiple(j, t, f);
        q.add_col_multiple(j, t, f);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce d_t | every remaining entry; otherwise pull the offending
      // row into row t and eliminate again with a smaller pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < n && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (mod(a(i, j), a(t, t)) != 0) {
            a.add_row_multiple(t, i, 1);
            p.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      p.negate_row(t);
    }
  }

  SnfResult out{std::move(p), std::move(q), {}};
  out.diag.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.diag.push_back(a(i, i));
  return out;
}

Integer determinant(const IntMatrix& m) {
  require_square(m, "determinant");
  const std::size_t n = m.rows();
  IntMatrix a = m;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      a.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) {
  std::vector<RationalVector> rows(m.rows(), RationalVector(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = Rational(m(r, c));
  std::size_t rk = 0;
  for (std::size_t c = 0; c < m.cols() && rk < rows.size(); ++c) {
    std::size_t piv = rk;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rk], rows[piv]);
    for (std::size_t r = rk + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      const Rational f = rows[r][c] / rows[rk][c];
      for (std::size_t j = c; j < m.cols(); ++j) rows[r][j] -= f * rows[rk][j];
    }
    ++rk;
  }
  return rk;
}

RationalVector solve_unique(const IntMatrix& m, std::span<const Rational> u) {
  require_square(m, "solve_unique");
  const std::size_t n = m.rows();
  if (u.size() != n) fail(ErrorKind::DegenerateInput, "solve_unique: right-hand side has wrong length");
  std::vector<RationalVector> aug(n, RationalVector(n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = Rational(m(r, c));
    aug[r][n] = u[r];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && aug[piv][c].is_zero()) ++piv;
    if (piv == n) fail(ErrorKind::DegenerateMatrix, "solve_unique: matrix is singular");
    std::swap(aug[c], aug[piv]);
    const Rational inv = Rational(1) / aug[c][c];
    for (std::size_t j = c; j <= n; ++j) aug[c][j] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || aug[r][c].is_zero()) continue;
      const Rational f = aug[r][c];
      for (std::size_t j = c; j <= n; ++j) aug[r][j] -= f * aug[c][j];
    }
  }
  RationalVector x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = aug[r][n];
  return x;
}

RationalVector solve_unique(const IntMatrix& m, std::span<const Integer> u) {
  const RationalVector ur(u.begin(), u.end());
  return solve_unique(m, std::span<const Rational>(ur));
}

}  // namespace np
