#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "np/diagonal.hpp"
#include "np/polytope.hpp"

namespace np {

/// Restriction of a support to one codimension-1 face away from the origin.
struct FacePiece {
  Facet facet;
  std::vector<std::size_t> support_indices;  // into the original support
  Support restricted_support;
  NewtonPolyhedron sub_polyhedron;  // cone from the origin over the face
  bool is_diagonal = false;         // exactly n support points on the face
};

/// One piece per face of build(support).facets_away_from_origin, same order.
std::vector<FacePiece> facial_decompose(const Support& support);

enum class FacialStatus { Ordinary, NonOrdinary, Unknown };
std::string_view to_string(FacialStatus s) noexcept;

struct FacialVerdict {
  FacialStatus status = FacialStatus::Unknown;
  std::optional<std::size_t> witness_face;
  std::optional<GroupElement> witness;
  std::vector<std::size_t> undecided_faces;  // non-diagonal faces
  /// lcm of d_n over the diagonal faces; p = 1 mod this settles them all.
  Integer diagonal_modulus;
};

/// Throws NotCoprime if p divides the determinant of a diagonal face.
FacialVerdict ordinary_via_faces(const Support& support, const Integer& p);

/// Residue classification for supports whose faces are all diagonal: classes
/// modulo the lcm of the face invariant factors. Throws NotDiagonal otherwise.
ResidueClasses facial_ordinary_residues(const Support& support);

/// Hodge polygon when the face verdict is Ordinary, std::nullopt otherwise.
std::optional<LowerPolygon> newton_polygon_via_faces(const Support& support, const Integer& p);

// ---------------------------------------------------------------------------
// Collapsing decomposition. Vertex sets are ambient lattice points lying on a
// common hyperplane away from the origin and spanning it.

using PointSet = std::vector<LatticePoint>;

enum class Strategy { FirstLex, MaxInvariantFactor, ExhaustiveMinDstar };
std::string_view to_string(Strategy s) noexcept;
/// "first-lex", "max-invariant-factor", "exhaustive-min-dstar".
std::optional<Strategy> parse_strategy(std::string_view name);

/// Pieces of vset after removing `chosen`: the rest of the set, then one set
/// per facet of its hull visible from `chosen`. Sets are sorted, and so is
/// the list. A set of exactly n points comes back unchanged. Throws
/// DegenerateInput if `chosen` is not a vertex, or if removing it drops the
/// dimension.
std::vector<PointSet> collapse_step(std::span<const LatticePoint> vset, const LatticePoint& chosen);

/// Vertices that collapse_step accepts, in lexicographic order.
PointSet collapsible_vertices(std::span<const LatticePoint> vset);

struct CollapseResult {
  std::vector<PointSet> pieces;  // each exactly n points
  std::vector<Integer> piece_invariant_factors;
  Integer dstar;
  PointSet choice_log;  // pre-order over the recursion
};

CollapseResult complete_collapse(std::span<const LatticePoint> vset, Strategy strategy);

/// Largest invariant factor of the matrix whose columns are the n points.
Integer piece_invariant_factor(std::span<const LatticePoint> piece);

// ---------------------------------------------------------------------------
// Hyperplane decomposition.

/// Ambient hyperplane normal . x == offset; cuts the face plane in an
/// (n-2)-plane.
struct Hyperplane {
  LatticePoint normal;
  Integer offset;
};

struct HyperplaneDecomp {
  std::vector<std::vector<RationalVector>> pieces;  // vertex lists, ambient coordinates
  std::vector<PointSet> piece_sets;                 // vset intersected with each piece
  std::vector<Hyperplane> hyperplanes;
  bool admissible = false;
  std::string reason;
};

/// Throws DegenerateInput for non-parallel, non-successive or degenerate cuts.
HyperplaneDecomp admissible_check(std::span<const LatticePoint> vset, std::span<const Hyperplane> hyperplanes);

/// Simplices (n + 1 vertices each) cutting d times the standard n-simplex
/// along the hyperplanes y_i - y_j = k in cumulative coordinates.
std::vector<PointSet> regular_subdivision(std::size_t n, std::size_t d);

// ---------------------------------------------------------------------------
// Certificates.

struct FaceCertificate {
  std::size_t face = 0;
  std::string route;  // "collapse" or "hyperplane"
  std::vector<PointSet> pieces;
  std::vector<Integer> piece_invariant_factors;
  PointSet choice_log;
  bool ordinary = false;
  std::optional<std::size_t> failing_piece;
};

struct Certificate {
  bool certified = false;
  std::vector<FaceCertificate> faces;
  std::string reason;  // empty when certified
};

/// Sufficient condition only: failure never claims non-ordinariness.
/// Throws NotCoprime naming the piece whose determinant p divides.
Certificate generic_ordinary_certificate(const Support& support, const Integer& p,
                                         Strategy strategy = Strategy::FirstLex);

// ---------------------------------------------------------------------------
// Counterexamples.

enum class CounterexampleKind { FiveDim, ExtendDim, FourDim };

struct CounterexampleSpec {
  CounterexampleKind kind = CounterexampleKind::FiveDim;
  std::size_t n = 5;   // ExtendDim
  Integer D = 2;       // FourDim
  unsigned k = 2;      // FourDim
};

IntMatrix counterexample_matrix(const CounterexampleSpec& spec);
Support build_counterexample(const CounterexampleSpec& spec);

}  // namespace np
