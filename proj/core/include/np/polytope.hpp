#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "np/lattice.hpp"
#include "np/matrix.hpp"
#include "np/polygon.hpp"

namespace np {

/// Exponent vectors of a Laurent polynomial: distinct, nonzero, all of length dim.
struct Support {
  std::size_t dim = 0;
  std::vector<LatticePoint> points;

  /// Validates shape (DegenerateInput). Full dimensionality is checked by build().
  static Support make(std::size_t dim, std::vector<LatticePoint> points);
  static Support from_columns(const IntMatrix& m);

  std::size_t size() const { return points.size(); }
  friend bool operator==(const Support&, const Support&) = default;
};

/// A codimension-1 face of the Newton polyhedron not containing the origin,
/// described by its equation normal . x == 1.
struct Facet {
  RationalVector normal;
  Integer local_denominator;                // lcm of the denominators of normal
  std::vector<std::size_t> vertex_indices;  // support points lying on the facet
  LatticePoint primitive_normal;            // normal == primitive_normal / level
  Integer level;

  Rational evaluate(std::span<const Integer> u) const { return dot(normal, u); }
};

/// Convex hull of the origin and the support.
struct NewtonPolyhedron {
  Support support;
  std::vector<Facet> facets_away_from_origin;
  std::vector<HalfSpace> cone_facets;  // facets through the origin: normal . x <= 0
  Integer denominator;
  Integer normalized_volume;  // n! V(Delta)

  std::size_t dim() const { return support.dim; }
  bool in_cone(std::span<const Integer> u) const;
};

/// Throws NotFullDimensional when the hull is lower dimensional.
NewtonPolyhedron build(const Support& support);

/// std::nullopt encodes an infinite weight (u outside the cone).
using Weight = std::optional<Rational>;

/// Smallest c >= 0 with u in c * Delta, via the facet formula. Debug builds
/// also solve the linear program and assert agreement.
Weight weight(const NewtonPolyhedron& delta, std::span<const Integer> u);
/// The same quantity from the linear program over the support.
Weight weight_lp(const NewtonPolyhedron& delta, std::span<const Integer> u);

struct HodgeData {
  Integer denominator;
  std::vector<std::uint64_t> W;  // W[k] = #{u : w(u) = k / D}, 0 <= k <= nD
  std::vector<std::int64_t> H;   // alternating sum of W, 0 <= k <= nD
  LowerPolygon polygon;
};

/// Lattice-point enumeration over the box of n * Delta.
HodgeData hodge_numbers(const NewtonPolyhedron& delta);
LowerPolygon hodge_polygon(const NewtonPolyhedron& delta);
/// Polygon with slope k / denominator of multiplicity H[k].
LowerPolygon hodge_polygon_from_counts(std::span<const std::int64_t> H, const Integer& denominator);

/// True iff w(u + u2) == w(u) + w(u2), i.e. the normalized points share a
/// closed facet away from the origin. Both points must be nonzero cone points.
bool cofacial(const NewtonPolyhedron& delta, std::span<const Integer> u, std::span<const Integer> u2);

}  // namespace np
