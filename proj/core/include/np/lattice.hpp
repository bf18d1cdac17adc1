#pragma once

#include <span>
#include <vector>

#include "np/matrix.hpp"

namespace np {

/// Closed half-space {x : normal . x <= offset} with a primitive integer normal.
struct HalfSpace {
  LatticePoint normal;
  Integer offset;
  /// Indices of the input points lying on the bounding hyperplane, ascending.
  std::vector<std::size_t> incident;

  bool contains(std::span<const Integer> x) const { return dot(normal, x) <= offset; }
  bool on_boundary(std::span<const Integer> x) const { return dot(normal, x) == offset; }
};

/// Dimension of the affine hull of the points (-1 for an empty set).
long affine_dimension(std::span<const LatticePoint> points);

/// All facets of conv(points). The points must affinely span their ambient
/// space (NotFullDimensional otherwise). Facets are found by brute force over
/// dim-subsets of the points and deduplicated; result is sorted by incident set.
std::vector<HalfSpace> hull_facets(std::span<const LatticePoint> points);

/// Indices of the points that are vertices of conv(points).
std::vector<std::size_t> hull_vertices(std::span<const LatticePoint> points);

/// Unimodular matrix whose first row is the given primitive vector.
IntMatrix unimodular_completion(std::span<const Integer> primitive_row);

/// Lattice coordinates on the affine hyperplane {x : normal . x == level}.
/// project() maps lattice points of the hyperplane bijectively onto Z^(n-1).
class HyperplaneFrame {
 public:
  HyperplaneFrame(LatticePoint primitive_normal, Integer level);

  std::size_t ambient_dim() const { return normal_.size(); }
  LatticePoint project(std::span<const Integer> x) const;
  LatticePoint lift(std::span<const Integer> y) const;
  RationalVector lift(std::span<const Rational> y) const;
  /// Express an ambient linear form restricted to the hyperplane:
  /// form . lift(y) == restricted.first . y + restricted.second.
  std::pair<LatticePoint, Integer> restrict_form(std::span<const Integer> form) const;

 private:
  LatticePoint normal_;
  Integer level_;
  IntMatrix to_frame_;    // unimodular, first row = normal
  IntMatrix from_frame_;  // inverse of to_frame_
};

/// m! times the Euclidean volume of conv(points) for points spanning Z^m,
/// i.e. the normalized lattice volume. Pyramid decomposition from a vertex.
Integer normalized_volume(std::span<const LatticePoint> points);

}  // namespace np
