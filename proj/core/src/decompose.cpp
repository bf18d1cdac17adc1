#include "np/decompose.hpp"

#include <algorithm>

#include "face_internal.hpp"
#include "np/error.hpp"
#include "np/primes.hpp"

namespace np {

std::vector<FacePiece> facial_decompose(const Support& support) {
  const NewtonPolyhedron delta = build(support);
  std::vector<FacePiece> out;
  for (const auto& f : delta.facets_away_from_origin) {
    FacePiece piece;
    piece.facet = f;
    piece.support_indices = f.vertex_indices;
    std::vector<LatticePoint> pts;
    for (std::size_t i : f.vertex_indices) pts.push_back(support.points[i]);
    piece.restricted_support = Support::make(support.dim, std::move(pts));
    piece.sub_polyhedron = build(piece.restricted_support);
    piece.is_diagonal = piece.restricted_support.size() == support.dim;
    out.push_back(std::move(piece));
  }
  return out;
}

std::string_view to_string(FacialStatus s) noexcept {
  switch (s) {
    case FacialStatus::Ordinary: return "ordinary";
    case FacialStatus::NonOrdinary: return "non-ordinary";
    case FacialStatus::Unknown: return "unknown";
  }
  return "unknown";
}

FacialVerdict ordinary_via_faces(const Support& support, const Integer& p) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, p.get_str() + " is not prime");
  const auto faces = facial_decompose(support);
  FacialVerdict v;
  v.diagonal_modulus = 1;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (!faces[i].is_diagonal) {
      v.undecided_faces.push_back(i);
      continue;
    }
    const auto ds = DiagonalSimplex::from_support(faces[i].restricted_support);
    v.diagonal_modulus = lcm(v.diagonal_modulus, ds.largest_invariant_factor());
    if (gcd(p, ds.determinant()) != 1)
      fail(ErrorKind::NotCoprime, "p = " + p.get_str() + " divides the determinant " +
                                      ds.determinant().get_str() + " of face " + std::to_string(i));
    const auto verdict = is_ordinary(ds, p);
    if (!verdict.ordinary && !v.witness_face) {
      v.witness_face = i;
      v.witness = verdict.witness;
    }
  }
  if (v.witness_face)
    v.status = FacialStatus::NonOrdinary;
  else if (v.undecided_faces.empty())
    v.status = FacialStatus::Ordinary;
  else
    v.status = FacialStatus::Unknown;
  return v;
}

ResidueClasses facial_ordinary_residues(const Support& support) {
  std::vector<DiagonalSimplex> faces;
  for (const auto& f : facial_decompose(support)) {
    if (!f.is_diagonal)
      fail(ErrorKind::NotDiagonal, "face " + std::to_string(faces.size()) + " carries " +
                                       std::to_string(f.restricted_support.size()) + " support points");
    faces.push_back(DiagonalSimplex::from_support(f.restricted_support));
  }
  ResidueClasses out;
  out.modulus = 1;
  std::vector<std::vector<GroupElement>> elements;
  for (const auto& ds : faces) {
    out.modulus = lcm(out.modulus, ds.largest_invariant_factor());
    elements.push_back(group_elements(ds));
  }
  auto stable = [&](const Integer& m) {
    for (const auto& group : elements)
      for (const auto& g : group)
        if (m_action(g, m).norm != g.norm) return false;
    return true;
  };
  if (out.modulus == 1) {
    out.classes.push_back(0);
  } else {
    for (Integer m = 1; m < out.modulus; ++m)
      if (gcd(m, out.modulus) == 1 && stable(m)) out.classes.push_back(m);
  }
  out.mu = static_cast<unsigned long>(out.classes.size());
  out.density = Rational(out.mu, euler_phi(out.modulus));
  return out;
}

std::optional<LowerPolygon> newton_polygon_via_faces(const Support& support, const Integer& p) {
  if (ordinary_via_faces(support, p).status != FacialStatus::Ordinary) return std::nullopt;
  return hodge_polygon(build(support));
}

namespace {

// Checks every piece with the diagonal criterion; returns the first failure.
std::optional<std::size_t> first_non_ordinary(const std::vector<PointSet>& pieces, const Integer& p,
                                              std::size_t face) {
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto ds = DiagonalSimplex::from_matrix(IntMatrix::from_columns(pieces[i]));
    if (gcd(p, ds.determinant()) != 1) {
      std::string names;
      for (const auto& v : pieces[i]) names += (names.empty() ? "" : " ") + to_string(v);
      fail(ErrorKind::NotCoprime, "p = " + p.get_str() + " divides the determinant " + ds.determinant().get_str() +
                                      " of piece {" + names + "} on face " + std::to_string(face));
    }
    if (!is_ordinary(ds, p).ordinary) return i;
  }
  return std::nullopt;
}

}  // namespace

Certificate generic_ordinary_certificate(const Support& support, const Integer& p, Strategy strategy) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, p.get_str() + " is not prime");
  Certificate cert;
  cert.certified = true;
  const auto faces = facial_decompose(support);
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const auto& pts = faces[i].restricted_support.points;
    FaceCertificate fc;
    fc.face = i;
    fc.route = "collapse";
    auto collapse = complete_collapse(pts, strategy);
    fc.pieces = std::move(collapse.pieces);
    fc.piece_invariant_factors = std::move(collapse.piece_invariant_factors);
    fc.choice_log = std::move(collapse.choice_log);
    fc.failing_piece = first_non_ordinary(fc.pieces, p, i);

    if (fc.failing_piece) {
      if (auto sub = detail::dilated_simplex_pieces(pts)) {
        const auto failing = first_non_ordinary(*sub, p, i);
        if (!failing) {
          fc.route = "hyperplane";
          fc.pieces = std::move(*sub);
          fc.piece_invariant_factors.clear();
          for (const auto& piece : fc.pieces) fc.piece_invariant_factors.push_back(piece_invariant_factor(piece));
          fc.choice_log.clear();
          fc.failing_piece.reset();
        }
      }
    }
    fc.ordinary = !fc.failing_piece;
    if (!fc.ordinary && cert.certified) {
      cert.certified = false;
      std::string names;
      for (const auto& v : fc.pieces[*fc.failing_piece]) names += (names.empty() ? "" : " ") + to_string(v);
      cert.reason = "face " + std::to_string(i) + ": piece {" + names + "} is not ordinary at p = " + p.get_str();
    }
    cert.faces.push_back(std::move(fc));
  }
  return cert;
}

IntMatrix counterexample_matrix(const CounterexampleSpec& spec) {
  const IntMatrix five{{1, 1, 1, 1, 1}, {0, 0, 1, 1, 1}, {0, 1, 0, 1, 1}, {0, 1, 1, 0, 1}, {0, 1, 1, 1, 0}};
  switch (spec.kind) {
    case CounterexampleKind::FiveDim:
      return five;
    case CounterexampleKind::ExtendDim: {
      if (spec.n < 5) fail(ErrorKind::DegenerateInput, "extend_dim needs n >= 5");
      IntMatrix m(spec.n, spec.n);
      for (std::size_t r = 0; r < 5; ++r)
        for (std::size_t c = 0; c < 5; ++c) m(r, c) = five(r, c);
      for (std::size_t c = 5; c < spec.n; ++c) {
        m(0, c) = 1;
        m(c, c) = 1;
      }
      return m;
    }
    case CounterexampleKind::FourDim: {
      if (spec.D < 2 || spec.k < 2) fail(ErrorKind::DegenerateInput, "four_dim needs D >= 2 and k >= 2");
      Integer dk;
      mpz_pow_ui(dk.get_mpz_t(), spec.D.get_mpz_t(), spec.k);
      IntMatrix m(4, 4);
      for (std::size_t c = 0; c < 4; ++c) m(0, c) = spec.D;
      m(1, 1) = 1;
      m(1, 2) = 1;
      m(2, 2) = 1;
      m(2, 3) = -1;
      m(3, 3) = dk;
      return m;
    }
  }
  fail(ErrorKind::DegenerateInput, "unknown counterexample");
}

Support build_counterexample(const CounterexampleSpec& spec) {
  return Support::from_columns(counterexample_matrix(spec));
}

}  // namespace np
