#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "np/rational.hpp"

namespace np {

using LatticePoint = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

LatticePoint make_point(std::initializer_list<long> coords);
std::string to_string(const LatticePoint& p);
std::string to_string(const RationalVector& r);
RationalVector to_rational(const LatticePoint& p);

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
Rational dot(std::span<const Rational> a, std::span<const Integer> b);
/// Content of a vector: gcd of its entries (0 for the zero vector).
Integer content(std::span<const Integer> v);

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  /// Matrix whose j-th column is columns[j].
  static IntMatrix from_columns(std::span<const LatticePoint> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  LatticePoint column(std::size_t c) const;
  LatticePoint row(std::size_t r) const;
  IntMatrix transpose() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  LatticePoint operator*(std::span<const Integer> v) const;
  RationalVector operator*(std::span<const Rational> v) const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

}  // namespace np
