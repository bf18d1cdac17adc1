#include <algorithm>
#include <numeric>

#include "face_internal.hpp"
#include "np/error.hpp"

namespace np {

std::vector<PointSet> regular_subdivision(std::size_t n, std::size_t d) {
  if (n == 0 || d == 0) fail(ErrorKind::DegenerateInput, "regular_subdivision needs n >= 1 and d >= 1");
  const long dd = static_cast<long>(d);
  std::vector<PointSet> out;
  std::vector<long> a(n, 0);
  std::vector<std::size_t> perm(n);

  // In cumulative coordinates y_i = x_1 + ... + x_i the simplex is
  // 0 <= y_1 <= ... <= y_n <= d; alcoves are a + conv of partial sums of e_perm.
  auto in_region = [&](const std::vector<long>& y) {
    long prev = 0;
    for (long v : y) {
      if (v < prev) return false;
      prev = v;
    }
    return prev <= dd;
  };
  auto to_x = [&](const std::vector<long>& y) {
    LatticePoint x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] - (i == 0 ? 0 : y[i - 1]);
    return x;
  };

  for (;;) {
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
      std::vector<long> y = a;
      PointSet simplex;
      bool ok = in_region(y);
      if (ok) simplex.push_back(to_x(y));
      for (std::size_t s = n; ok && s-- > 0;) {
        y[perm[s]] += 1;
        ok = in_region(y);
        if (ok) simplex.push_back(to_x(y));
      }
      if (ok) {
        std::sort(simplex.begin(), simplex.end());
        out.push_back(std::move(simplex));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::size_t i = 0;
    while (i < n && a[i] == dd) a[i++] = 0;
    if (i == n) break;
    ++a[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

std::optional<std::vector<PointSet>> dilated_simplex_pieces(std::span<const LatticePoint> vset) {
  const auto fc = face_coordinates(vset);
  const auto& y = fc.projected;
  const std::size_t m = y.front().size();
  if (m == 0) return std::nullopt;
  auto vertices = hull_vertices(y);
  if (vertices.size() != m + 1) return std::nullopt;
  std::vector<LatticePoint> corners;
  for (std::size_t v : vertices) corners.push_back(y[v]);
  std::sort(corners.begin(), corners.end());

  IntMatrix edges(m, m);
  Integer g = 0;
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < m; ++i) {
      edges(i, j) = corners[j + 1][i] - corners[0][i];
      g = gcd(g, edges(i, j));
    }
  if (g == 0) return std::nullopt;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) edges(i, j) /= g;
  if (abs(determinant(edges)) != 1) return std::nullopt;

  // A unimodular simplex dilated by d holds binomial(m + d, m) lattice points.
  Integer expected;
  mpz_bin_uiui(expected.get_mpz_t(), static_cast<unsigned long>(m) + g.get_ui(), m);
  if (Integer(static_cast<unsigned long>(vset.size())) != expected) return std::nullopt;

  std::vector<PointSet> out;
  for (const auto& piece : regular_subdivision(m, g.get_ui())) {
    PointSet lifted;
    for (const auto& x : piece) {
      LatticePoint z = edges * std::span<const Integer>(x);
      for (std::size_t i = 0; i < m; ++i) z[i] += corners[0][i];
      lifted.push_back(fc.frame.lift(z));
    }
    std::sort(lifted.begin(), lifted.end());
    out.push_back(std::move(lifted));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

namespace {

struct Constraint {
  LatticePoint normal;  // normal . y <= bound
  Rational bound;
};

template <typename Visit>
void for_each_subset(std::size_t total, std::size_t size, Visit&& visit) {
  if (size > total) return;
  std::vector<std::size_t> idx(size);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (;;) {
    visit(idx);
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == total - size + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool satisfies(const std::vector<Constraint>& cs, std::span<const Rational> y, bool strict) {
  for (const auto& c : cs) {
    Rational v;
    for (std::size_t i = 0; i < y.size(); ++i) v += y[i] * Rational(c.normal[i]);
    if (strict ? !(v < c.bound) : !(v <= c.bound)) return false;
  }
  return true;
}

std::vector<RationalVector> polytope_vertices(const std::vector<Constraint>& cs, std::size_t m) {
  std::vector<RationalVector> out;
  for_each_subset(cs.size(), m, [&](const std::vector<std::size_t>& idx) {
    IntMatrix a(m, m);
    RationalVector b(m);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c) a(r, c) = cs[idx[r]].normal[c];
      b[r] = cs[idx[r]].bound;
    }
    if (determinant(a) == 0) return;
    RationalVector y = solve_unique(a, std::span<const Rational>(b));
    if (!satisfies(cs, y, false)) return;
    if (std::find(out.begin(), out.end(), y) == out.end()) out.push_back(std::move(y));
  });
  std::sort(out.begin(), out.end());
  return out;
}

long rational_affine_dimension(const std::vector<RationalVector>& pts) {
  Integer den = 1;
  for (const auto& p : pts)
    for (const auto& x : p) den = lcm(den, x.denominator());
  std::vector<LatticePoint> scaled;
  for (const auto& p : pts) {
    LatticePoint q;
    for (const auto& x : p) q.push_back((x * Rational(den)).numerator());
    scaled.push_back(std::move(q));
  }
  return affine_dimension(scaled);
}

bool has_interior_lattice_point(const std::vector<Constraint>& cs, const std::vector<RationalVector>& verts) {
  const std::size_t m = verts.front().size();
  LatticePoint lo(m), hi(m);
  for (std::size_t i = 0; i < m; ++i) {
    lo[i] = verts.front()[i].ceil();
    hi[i] = verts.front()[i].floor();
    for (const auto& v : verts) {
      lo[i] = std::min(lo[i], v[i].ceil());
      hi[i] = std::max(hi[i], v[i].floor());
    }
    if (lo[i] > hi[i]) return false;
  }
  LatticePoint x = lo;
  for (;;) {
    if (satisfies(cs, to_rational(x), true)) return true;
    std::size_t i = 0;
    while (i < m && x[i] == hi[i]) x[i] = lo[i], ++i;
    if (i == m) return false;
    ++x[i];
  }
}

}  // namespace

HyperplaneDecomp admissible_check(std::span<const LatticePoint> vset, std::span<const Hyperplane> hyperplanes) {
  const auto fc = detail::face_coordinates(vset);
  const auto& y = fc.projected;
  const std::size_t m = y.front().size();
  if (m == 0) fail(ErrorKind::DegenerateInput, "a zero-dimensional face cannot be cut");

  HyperplaneDecomp out;
  out.hyperplanes.assign(hyperplanes.begin(), hyperplanes.end());

  // Restrict every cut to the face plane as g . y == t with one primitive g.
  LatticePoint g;
  std::vector<Rational> t;
  for (const auto& h : hyperplanes) {
    if (h.normal.size() != vset.front().size())
      fail(ErrorKind::DegenerateInput, "hyperplane normal has the wrong dimension");
    auto [a, b] = fc.frame.restrict_form(h.normal);
    const Integer c = content(a);
    if (c == 0) fail(ErrorKind::DegenerateInput, "hyperplane is parallel to the face plane");
    if (g.empty()) {
      g = a;
      for (auto& x : g) x /= c;
    }
    std::size_t j = 0;
    while (g[j] == 0) ++j;
    const Rational lambda(a[j], g[j]);
    for (std::size_t i = 0; i < m; ++i)
      if (Rational(a[i]) != lambda * Rational(g[i]))
        fail(ErrorKind::DegenerateInput, "hyperplanes are not parallel");
    t.push_back((Rational(h.offset) - Rational(b)) / lambda);
  }

  Integer lo = dot(g.empty() ? LatticePoint(m, Integer(0)) : g, y.front()), hi = lo;
  auto flip = [&] {
    for (auto& x : g) x = -x;
    for (auto& v : t) v = -v;
    std::swap(lo, hi);
    lo = -lo;
    hi = -hi;
  };
  if (!g.empty()) {
    for (const auto& p : y) {
      lo = std::min(lo, dot(g, p));
      hi = std::max(hi, dot(g, p));
    }
    if (t.size() >= 2 && t[1] < t[0]) flip();
    for (std::size_t i = 1; i < t.size(); ++i)
      if (!(t[i - 1] < t[i])) fail(ErrorKind::DegenerateInput, "hyperplanes are not successive");
    if (t.size() == 1 && t[0] >= Rational(hi)) flip();
    if (Rational(lo) < t[0] && t[0] < Rational(hi)) {
      out.reason = "initial hyperplane meets the interior of the face";
      return out;
    }
  }

  std::vector<Constraint> base;
  for (const auto& h : hull_facets(y)) base.push_back({h.normal, Rational(h.offset)});
  LatticePoint neg_g = g;
  for (auto& x : neg_g) x = -x;

  std::vector<std::vector<Constraint>> regions;
  if (t.empty()) regions.push_back(base);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const bool last = i + 1 == t.size();
    if (last && !(t[i] < Rational(hi))) break;
    auto cs = base;
    cs.push_back({neg_g, -t[i]});
    if (!last) cs.push_back({g, t[i + 1]});
    regions.push_back(std::move(cs));
  }

  auto reject = [&](std::size_t piece, const std::string& why) {
    if (out.reason.empty()) out.reason = "piece " + std::to_string(piece) + ": " + why;
  };
  for (std::size_t r = 0; r < regions.size(); ++r) {
    const auto verts = polytope_vertices(regions[r], m);
    std::vector<RationalVector> ambient;
    for (const auto& v : verts) ambient.push_back(fc.frame.lift(std::span<const Rational>(v)));
    out.pieces.push_back(ambient);

    PointSet w;
    std::vector<LatticePoint> w_y;
    for (std::size_t i = 0; i < y.size(); ++i)
      if (satisfies(regions[r], to_rational(y[i]), false)) {
        w.push_back(vset[i]);
        w_y.push_back(y[i]);
      }
    std::sort(w.begin(), w.end());
    out.piece_sets.push_back(std::move(w));

    if (verts.empty() || rational_affine_dimension(verts) != static_cast<long>(m)) {
      reject(r, "not full-dimensional in the face");
      continue;
    }
    bool integral = true;
    for (const auto& v : verts)
      for (const auto& x : v)
        if (!x.is_integer()) integral = false;
    if (!integral) {
      for (const auto& v : ambient)
        if (std::any_of(v.begin(), v.end(), [](const Rational& x) { return !x.is_integer(); })) {
          reject(r, "vertex " + to_string(v) + " is not integral");
          break;
        }
      continue;
    }
    if (has_interior_lattice_point(regions[r], verts)) {
      reject(r, "has an interior lattice point");
      continue;
    }
    for (const auto& v : verts) {
      LatticePoint iv;
      for (const auto& x : v) iv.push_back(x.numerator());
      if (std::find(w_y.begin(), w_y.end(), iv) == w_y.end()) {
        reject(r, "vertex " + to_string(fc.frame.lift(iv)) + " is missing from the point set");
        break;
      }
    }
  }
  out.admissible = out.reason.empty();
  return out;
}

}  // namespace np
