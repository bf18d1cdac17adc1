#pragma once

#include <optional>
#include <span>
#include <vector>

#include "np/decompose.hpp"
#include "np/lattice.hpp"

namespace np::detail {

struct FaceCoordinates {
  HyperplaneFrame frame;
  std::vector<LatticePoint> projected;  // same order as the input
};

/// Lattice coordinates on the hyperplane away from the origin spanned by the
/// points. Throws DegenerateInput if there is no such hyperplane.
FaceCoordinates face_coordinates(std::span<const LatticePoint> vset);

/// When vset is every lattice point of a dilated unimodular simplex in its
/// face, the regular subdivision pieces mapped back to ambient coordinates.
std::optional<std::vector<PointSet>> dilated_simplex_pieces(std::span<const LatticePoint> vset);

}  // namespace np::detail
