#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "np/rational.hpp"

namespace np {

struct Slope {
  Rational value;
  std::uint64_t multiplicity = 0;

  friend bool operator==(const Slope&, const Slope&) = default;
};

struct Vertex {
  Integer x;
  Rational y;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// A polygon convex from below, starting at (0,0), with integral abscissas.
/// Stored canonically as strictly increasing slopes with multiplicities, so
/// collinear vertices are always merged and equality is structural.
class LowerPolygon {
 public:
  LowerPolygon() = default;

  static LowerPolygon from_slopes(std::vector<Slope> slopes);
  static LowerPolygon from_slope_list(std::span<const Rational> slopes);
  /// Throws DegenerateInput unless the list starts at (0,0), has strictly
  /// increasing abscissas and non-decreasing segment slopes.
  static LowerPolygon from_vertices(std::span<const Vertex> vertices);

  const std::vector<Slope>& slopes() const { return slopes_; }
  std::vector<Rational> slope_multiset() const;
  std::vector<Vertex> vertices() const;

  std::uint64_t length() const;
  Rational height() const;
  Rational value_at(const Integer& x) const;

  std::string to_string() const;

  friend bool operator==(const LowerPolygon&, const LowerPolygon&) = default;

 private:
  std::vector<Slope> slopes_;
};

enum class Relation {
  Above,                 // on or above everywhere, touching at every vertex
  AboveStrictSomewhere,  // on or above everywhere, strictly above somewhere
  Violation,             // strictly below somewhere
};

std::string_view to_string(Relation r) noexcept;

struct Comparison {
  Relation relation = Relation::Above;
  bool endpoints_coincide = false;
  /// First vertex abscissa where the relation is decided (strict or violated).
  std::optional<Integer> witness_x;
};

/// Compares `upper` against `lower` at every vertex abscissa of either.
/// Throws IncomparablePolygons if their lengths differ.
Comparison lies_above(const LowerPolygon& upper, const LowerPolygon& lower);

}  // namespace np
