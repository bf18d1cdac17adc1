#include "np/diagonal.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "np/error.hpp"
#include "np/primes.hpp"

namespace np {

DiagonalSimplex DiagonalSimplex::from_matrix(IntMatrix m) {
  if (!m.square() || m.rows() == 0) fail(ErrorKind::DegenerateMatrix, "vertex matrix must be square");
  DiagonalSimplex ds;
  ds.det_ = np::determinant(m);
  if (ds.det_ == 0) fail(ErrorKind::DegenerateMatrix, "vertex matrix is singular");
  ds.snf_ = snf(m);
  ds.polyhedron_ = build(Support::from_columns(m));
  ds.matrix_ = std::move(m);
  assert(ds.snf_.largest() % ds.polyhedron_.denominator == 0);
  return ds;
}

DiagonalSimplex DiagonalSimplex::from_support(const Support& support) {
  if (support.size() != support.dim)
    fail(ErrorKind::NotDiagonal, "diagonal support needs exactly " + std::to_string(support.dim) +
                                     " points, got " + std::to_string(support.size()));
  IntMatrix m = IntMatrix::from_columns(support.points);
  if (np::determinant(m) == 0)
    fail(ErrorKind::NotFullDimensional, "support points are linearly dependent");
  return from_matrix(std::move(m));
}

GroupElement GroupElement::from_vector(RationalVector r) {
  GroupElement g;
  g.order = 1;
  for (auto& x : r) {
    x = x.frac();
    g.norm += x;
    g.order = lcm(g.order, x.denominator());
  }
  g.r = std::move(r);
  return g;
}

std::vector<GroupElement> group_elements(const DiagonalSimplex& ds) {
  // M^{-1} Z^n = Q diag(1/d_i) Z^n, so r = Q (j_i / d_i) mod 1 runs over S.
  // Everything is kept over the common denominator L = d_n.
  const std::size_t n = ds.dim();
  const auto& d = ds.smith().diag;
  const auto& q = ds.smith().q;
  const Integer& L = ds.largest_invariant_factor();
  IntMatrix qs(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) qs(k, i) = q(k, i) * (L / d[i]);

  std::vector<GroupElement> out;
  std::vector<Integer> j(n, Integer(0));
  std::vector<Integer> acc(n, Integer(0));  // Q (j_i L / d_i) mod L
  for (;;) {
    GroupElement g;
    g.r.reserve(n);
    Integer total = 0, g_all = L;
    for (std::size_t k = 0; k < n; ++k) {
      g.r.emplace_back(acc[k], L);
      total += acc[k];
      g_all = gcd(g_all, acc[k]);
    }
    g.norm = Rational(total, L);
    g.order = L / g_all;
    out.push_back(std::move(g));

    std::size_t i = 0;
    while (i < n && j[i] + 1 == d[i]) {
      for (std::size_t k = 0; k < n; ++k) acc[k] = mod(acc[k] - qs(k, i) * j[i], L);
      j[i++] = 0;
    }
    if (i == n) break;
    ++j[i];
    for (std::size_t k = 0; k < n; ++k) acc[k] = mod(acc[k] + qs(k, i), L);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GroupElement m_action(const GroupElement& r, const Integer& m) {
  if (gcd(m, r.order) != 1)
    fail(ErrorKind::NotCoprime, "m = " + m.get_str() + " is not coprime to the order " + r.order.get_str());
  RationalVector v;
  v.reserve(r.r.size());
  for (const auto& x : r.r) v.push_back(x * Rational(m));
  return GroupElement::from_vector(std::move(v));
}

std::uint64_t m_degree(const GroupElement& r, const Integer& m) {
  if (gcd(m, r.order) != 1)
    fail(ErrorKind::NotCoprime, "m = " + m.get_str() + " is not coprime to the order " + r.order.get_str());
  return multiplicative_order(m, r.order);
}

namespace {

void require_valid_prime(const DiagonalSimplex& ds, const Integer& p) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, p.get_str() + " is not prime");
  if (gcd(p, ds.determinant()) != 1)
    fail(ErrorKind::NotCoprime, "p = " + p.get_str() + " divides det M = " + ds.determinant().get_str());
}

}  // namespace

std::vector<Orbit> orbits(const DiagonalSimplex& ds, const Integer& p) {
  require_valid_prime(ds, p);
  std::set<RationalVector> seen;
  std::vector<Orbit> out;
  for (const auto& g : group_elements(ds)) {
    if (seen.count(g.r)) continue;
    Orbit o;
    o.representative = g;
    GroupElement cur = g;
    do {
      seen.insert(cur.r);
      o.members.push_back(cur);
      cur = m_action(cur, p);
    } while (cur.r != g.r);
    o.slope = orbit_slope(o, p);
    out.push_back(std::move(o));
  }
  return out;
}

Rational orbit_slope(const Orbit& orbit, const Integer& p) {
  const std::size_t d = orbit.degree();
  if (d == 0) fail(ErrorKind::DegenerateInput, "empty orbit");
  Rational total;
  GroupElement cur = orbit.representative;
  for (std::size_t j = 0; j < d; ++j) {
    total += cur.norm;
    cur = m_action(cur, p);
  }
  return total / Rational(static_cast<long>(d));
}

Integer digit_sum(const Integer& k, const Integer& p) {
  if (p < 2) fail(ErrorKind::DegenerateInput, "digit_sum: base must be at least 2");
  if (k < 0) fail(ErrorKind::DegenerateInput, "digit_sum: negative argument");
  Integer s = 0, x = k;
  while (x > 0) {
    s += x % p;
    x /= p;
  }
  return s;
}

Rational stickelberger_ord(const Integer& k, const Integer& p, std::optional<unsigned> degree) {
  if (k < 0) fail(ErrorKind::DegenerateInput, "stickelberger_ord: negative k");
  if (degree) {
    Integer q;
    mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), *degree);
    if (k > q - 2) fail(ErrorKind::DegenerateInput, "stickelberger_ord: k exceeds q - 2");
  }
  return Rational(digit_sum(k, p), p - 1);
}

LowerPolygon newton_polygon_diag(const DiagonalSimplex& ds, const Integer& p) {
  std::vector<Slope> slopes;
  for (const auto& o : orbits(ds, p)) slopes.push_back({o.slope, o.degree()});
  return LowerPolygon::from_slopes(std::move(slopes));
}

LowerPolygon hodge_polygon_diag(const DiagonalSimplex& ds) {
  std::vector<Rational> norms;
  for (const auto& g : group_elements(ds)) norms.push_back(g.norm);
  return LowerPolygon::from_slope_list(norms);
}

OrdinaryVerdict is_ordinary(const DiagonalSimplex& ds, const Integer& p) {
  require_valid_prime(ds, p);
  // Lightest violator first, then lexicographic.
  auto elements = group_elements(ds);
  std::stable_sort(elements.begin(), elements.end(),
                   [](const GroupElement& a, const GroupElement& b) { return a.norm < b.norm; });
  OrdinaryVerdict v;
  for (const auto& g : elements) {
    if (m_action(g, p).norm != g.norm) {
      v.ordinary = false;
      v.witness = g;
      break;
    }
  }
  return v;
}

ResidueClasses ordinary_residues(const DiagonalSimplex& ds) {
  ResidueClasses out;
  out.modulus = ds.largest_invariant_factor();
  const auto elements = group_elements(ds);
  if (out.modulus == 1) {
    out.classes.push_back(0);
  } else {
    for (Integer m = 1; m < out.modulus; ++m) {
      if (gcd(m, out.modulus) != 1) continue;
      bool stable = true;
      for (const auto& g : elements)
        if (m_action(g, m).norm != g.norm) {
          stable = false;
          break;
        }
      if (stable) out.classes.push_back(m);
    }
  }
  out.mu = static_cast<unsigned long>(out.classes.size());
  out.density = Rational(out.mu, euler_phi(out.modulus));
  return out;
}

DenominatorRelation denominator_divides(const DiagonalSimplex& ds) {
  DenominatorRelation rel;
  const std::size_t n = ds.dim();
  rel.facet_normal = solve_unique(ds.matrix().transpose(), LatticePoint(n, Integer(1)));
  rel.largest_invariant_factor = ds.largest_invariant_factor();
  rel.denominator = 1;
  for (const auto& e : rel.facet_normal) {
    rel.denominator = lcm(rel.denominator, e.denominator());
    if (!(e * Rational(rel.largest_invariant_factor)).is_integer())
      fail(ErrorKind::DegenerateMatrix, "facet normal not in (1/d_n) Z^n");
  }
  assert(rel.denominator == ds.polyhedron().denominator);
  rel.divides = rel.largest_invariant_factor % rel.denominator == 0;
  return rel;
}

bool has_nonvertex_facet_points(const DiagonalSimplex& ds) {
  for (const auto& g : group_elements(ds))
    if (g.norm == Rational(1)) return true;
  return false;
}

bool check_indecomposable_equality(const DiagonalSimplex& ds) {
  if (ds.dim() > 3) fail(ErrorKind::DegenerateInput, "indecomposable equality is only asserted for n <= 3");
  if (has_nonvertex_facet_points(ds))
    fail(ErrorKind::NotIndecomposable, "facet carries a lattice point other than its vertices");
  return ds.polyhedron().denominator == ds.largest_invariant_factor();
}

}  // namespace np
