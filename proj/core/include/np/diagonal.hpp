#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "np/exactmath.hpp"
#include "np/polytope.hpp"

namespace np {

/// Simplex spanned by the origin and the columns of a nonsingular integer
/// matrix: the Newton polyhedron of a diagonal Laurent polynomial.
class DiagonalSimplex {
 public:
  /// Throws DegenerateMatrix if m is not square and nonsingular.
  static DiagonalSimplex from_matrix(IntMatrix m);
  /// Throws NotDiagonal unless the support has exactly dim points.
  static DiagonalSimplex from_support(const Support& support);

  std::size_t dim() const { return matrix_.rows(); }
  const IntMatrix& matrix() const { return matrix_; }
  const SnfResult& smith() const { return snf_; }
  const NewtonPolyhedron& polyhedron() const { return polyhedron_; }
  const Integer& determinant() const { return det_; }
  Integer group_order() const { return abs(det_); }
  const Integer& largest_invariant_factor() const { return snf_.largest(); }

 private:
  IntMatrix matrix_;
  SnfResult snf_;
  NewtonPolyhedron polyhedron_;
  Integer det_;
};

/// Element r of S(Delta): M r is integral, each r_i in [0, 1).
struct GroupElement {
  RationalVector r;
  Rational norm;  // r_1 + ... + r_n, equal to the weight of M r
  Integer order;  // smallest s >= 1 with s r integral

  static GroupElement from_vector(RationalVector r);

  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.r == b.r; }
  friend auto operator<=>(const GroupElement& a, const GroupElement& b) { return a.r <=> b.r; }
};

struct Orbit {
  GroupElement representative;       // lexicographically smallest member
  std::vector<GroupElement> members; // representative, {m r}, {m^2 r}, ...
  Rational slope;

  std::size_t degree() const { return members.size(); }
};

/// All |det M| elements, sorted lexicographically, built from the Smith form.
std::vector<GroupElement> group_elements(const DiagonalSimplex& ds);

/// {m r}; requires gcd(m, order(r)) == 1 (NotCoprime otherwise).
GroupElement m_action(const GroupElement& r, const Integer& m);
/// Smallest d >= 1 with (m^d - 1) r integral.
std::uint64_t m_degree(const GroupElement& r, const Integer& m);

/// Partition of S(Delta) into p-orbits, ordered by representative. Requires a
/// prime p coprime to det M.
std::vector<Orbit> orbits(const DiagonalSimplex& ds, const Integer& p);

/// (1/d) * sum_{j<d} |{p^j r}| over the orbit, recomputed from its representative.
Rational orbit_slope(const Orbit& orbit, const Integer& p);

/// Base-p digit sum of k >= 0.
Integer digit_sum(const Integer& k, const Integer& p);
/// ord_p of the Gauss sum G_k: digit_sum(k, p) / (p - 1). When `degree` is
/// given, k must lie in [0, p^degree - 2].
Rational stickelberger_ord(const Integer& k, const Integer& p, std::optional<unsigned> degree = {});

/// Slopes of the L-function over F_p: one slope per orbit, with multiplicity
/// equal to the orbit degree.
LowerPolygon newton_polygon_diag(const DiagonalSimplex& ds, const Integer& p);
/// Hodge polygon read off the norms of S(Delta).
LowerPolygon hodge_polygon_diag(const DiagonalSimplex& ds);

struct OrdinaryVerdict {
  bool ordinary = true;
  std::optional<GroupElement> witness;  // lightest element whose norm moves, ties by lex order
};

OrdinaryVerdict is_ordinary(const DiagonalSimplex& ds, const Integer& p);

struct ResidueClasses {
  Integer modulus;               // largest invariant factor d_n
  std::vector<Integer> classes;  // residues m mod d_n with stable norms
  Integer mu;                    // number of classes
  Rational density;              // mu / phi(d_n)
};

ResidueClasses ordinary_residues(const DiagonalSimplex& ds);

struct DenominatorRelation {
  RationalVector facet_normal;  // (1, ..., 1) M^{-1}
  Integer denominator;
  Integer largest_invariant_factor;
  bool divides = false;
};

DenominatorRelation denominator_divides(const DiagonalSimplex& ds);

/// True iff the away facet carries a lattice point other than the vertices;
/// such points are exactly the group elements of norm 1.
bool has_nonvertex_facet_points(const DiagonalSimplex& ds);

/// For n <= 3 and a facet without non-vertex lattice points, reports whether
/// D(Delta) == d_n. Throws NotIndecomposable or DegenerateInput when the
/// preconditions fail.
bool check_indecomposable_equality(const DiagonalSimplex& ds);

}  // namespace np
