#include "np/polytope.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "np/error.hpp"
#include "np/exactmath.hpp"

namespace np {

Support Support::make(std::size_t dim, std::vector<LatticePoint> points) {
  if (dim == 0) fail(ErrorKind::DegenerateInput, "support dimension must be positive");
  if (points.empty()) fail(ErrorKind::DegenerateInput, "support is empty");
  std::set<LatticePoint> seen;
  for (const auto& p : points) {
    if (p.size() != dim)
      fail(ErrorKind::DegenerateInput, "support point " + to_string(p) + " is not of length " + std::to_string(dim));
    if (std::all_of(p.begin(), p.end(), [](const Integer& x) { return x == 0; }))
      fail(ErrorKind::DegenerateInput, "support may not contain the origin");
    if (!seen.insert(p).second) fail(ErrorKind::DegenerateInput, "duplicate support point " + to_string(p));
  }
  return Support{dim, std::move(points)};
}

Support Support::from_columns(const IntMatrix& m) {
  std::vector<LatticePoint> pts;
  for (std::size_t c = 0; c < m.cols(); ++c) pts.push_back(m.column(c));
  return make(m.rows(), std::move(pts));
}

bool NewtonPolyhedron::in_cone(std::span<const Integer> u) const {
  return std::all_of(cone_facets.begin(), cone_facets.end(),
                     [&](const HalfSpace& h) { return h.contains(u); });
}

NewtonPolyhedron build(const Support& support) {
  const std::size_t n = support.dim;
  std::vector<LatticePoint> pts = support.points;
  pts.emplace_back(n, Integer(0));
  const std::size_t origin = pts.size() - 1;
  if (affine_dimension(pts) != static_cast<long>(n))
    fail(ErrorKind::NotFullDimensional,
         "Newton polyhedron has dimension " + std::to_string(affine_dimension(pts)) + " < " + std::to_string(n));

  NewtonPolyhedron delta;
  delta.support = support;
  delta.denominator = 1;
  delta.normalized_volume = 0;
  for (auto& h : hull_facets(pts)) {
    if (h.offset == 0) {
      h.incident.erase(std::remove(h.incident.begin(), h.incident.end(), origin), h.incident.end());
      delta.cone_facets.push_back(std::move(h));
      continue;
    }
    Facet f;
    f.primitive_normal = h.normal;
    f.level = h.offset;
    f.vertex_indices = h.incident;
    f.local_denominator = 1;
    for (const auto& a : h.normal) {
      f.normal.emplace_back(a, h.offset);
      f.local_denominator = lcm(f.local_denominator, f.normal.back().denominator());
    }
    delta.denominator = lcm(delta.denominator, f.local_denominator);

    // Cone from the origin over this facet; its lattice height is the level.
    HyperplaneFrame frame(h.normal, h.offset);
    std::vector<LatticePoint> base;
    for (std::size_t i : h.incident) base.push_back(frame.project(pts[i]));
    delta.normalized_volume += h.offset * normalized_volume(base);
    delta.facets_away_from_origin.push_back(std::move(f));
  }
  return delta;
}

namespace {

Rational facet_weight(const NewtonPolyhedron& delta, std::span<const Integer> u) {
  Rational best;
  for (const auto& f : delta.facets_away_from_origin) best = std::max(best, f.evaluate(u));
  return best;
}

}  // namespace

Weight weight(const NewtonPolyhedron& delta, std::span<const Integer> u) {
  if (u.size() != delta.dim()) fail(ErrorKind::DegenerateInput, "weight: point has wrong dimension");
  Weight w;
  if (delta.in_cone(u)) w = facet_weight(delta, u);
  assert(w == weight_lp(delta, u));
  return w;
}

Weight weight_lp(const NewtonPolyhedron& delta, std::span<const Integer> u) {
  return lp_min_sum(delta.support.points, u);
}

namespace {

std::size_t to_index(std::int64_t v) { return static_cast<std::size_t>(v); }
std::size_t to_index(const Integer& v) { return v.get_ui(); }

// Scaled weight k(u) = D * w(u) = max over facets of g . u, where g is the
// primitive normal times D / level. Counts lattice points of the box by k.
template <typename T>
std::vector<std::uint64_t> count_weights(const std::vector<std::vector<T>>& scaled,
                                         const std::vector<std::vector<T>>& cone,
                                         const std::vector<T>& lo, const std::vector<T>& hi,
                                         T k_max) {
  const std::size_t n = lo.size();
  std::vector<std::uint64_t> counts(to_index(k_max) + 1, 0);
  std::vector<T> x = lo;
  auto dots = [&](const std::vector<std::vector<T>>& forms) {
    std::vector<T> out(forms.size(), T(0));
    for (std::size_t f = 0; f < forms.size(); ++f)
      for (std::size_t i = 0; i < n; ++i) out[f] += forms[f][i] * x[i];
    return out;
  };
  std::vector<T> sd = dots(scaled);
  std::vector<T> cd = dots(cone);
  for (;;) {
    bool inside = true;
    for (const auto& v : cd)
      if (v > 0) {
        inside = false;
        break;
      }
    if (inside) {
      T k = 0;
      for (const auto& v : sd)
        if (v > k) k = v;
      if (k <= k_max) ++counts[to_index(k)];
    }
    std::size_t i = 0;
    while (i < n && x[i] == hi[i]) {
      const T span = hi[i] - lo[i];
      for (std::size_t f = 0; f < sd.size(); ++f) sd[f] -= scaled[f][i] * span;
      for (std::size_t f = 0; f < cd.size(); ++f) cd[f] -= cone[f][i] * span;
      x[i] = lo[i];
      ++i;
    }
    if (i == n) break;
    x[i] += 1;
    for (std::size_t f = 0; f < sd.size(); ++f) sd[f] += scaled[f][i];
    for (std::size_t f = 0; f < cd.size(); ++f) cd[f] += cone[f][i];
  }
  return counts;
}

std::vector<std::int64_t> as_int64(const std::vector<Integer>& v) {
  std::vector<std::int64_t> out;
  for (const auto& x : v) out.push_back(to_int64(x));
  return out;
}

std::vector<std::vector<std::int64_t>> as_int64(const std::vector<LatticePoint>& m) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& v : m) out.push_back(as_int64(v));
  return out;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

HodgeData hodge_numbers(const NewtonPolyhedron& delta) {
  const std::size_t n = delta.dim();
  const Integer& D = delta.denominator;
  const Integer k_max = Integer(static_cast<unsigned long>(n)) * D;

  std::vector<LatticePoint> scaled;
  for (const auto& f : delta.facets_away_from_origin) {
    LatticePoint g = f.primitive_normal;
    const Integer factor = D / f.level;
    for (auto& x : g) x *= factor;
    scaled.push_back(std::move(g));
  }
  std::vector<LatticePoint> cone;
  for (const auto& h : delta.cone_facets) cone.push_back(h.normal);

  // Every point of weight <= n lies in n * Delta, inside n times the bounding
  // box of Delta (which contains the origin).
  LatticePoint lo(n, Integer(0)), hi(n, Integer(0));
  for (const auto& p : delta.support.points)
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  Integer extent = 0;
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] *= static_cast<unsigned long>(n);
    hi[i] *= static_cast<unsigned long>(n);
    extent = std::max(extent, std::max(abs(lo[i]), abs(hi[i])));
  }
  Integer form_bound = k_max;
  for (const auto& forms : {scaled, cone})
    for (const auto& g : forms) {
      Integer s = 0;
      for (const auto& x : g) s += abs(x);
      form_bound = std::max(form_bound, Integer(s * extent));
    }

  std::vector<std::uint64_t> W;
  const Integer int64_safe = Integer(1) << 62;
  if (form_bound < int64_safe) {
    W = count_weights<std::int64_t>(as_int64(scaled), as_int64(cone), as_int64(lo), as_int64(hi),
                                    to_int64(k_max));
  } else {
    W = count_weights<Integer>(scaled, cone, lo, hi, k_max);
  }

  HodgeData out;
  out.denominator = D;
  out.W = W;
  const std::int64_t d = to_int64(D);
  const auto nn = static_cast<std::int64_t>(n);
  out.H.assign(W.size(), 0);
  for (std::size_t k = 0; k < W.size(); ++k) {
    std::int64_t h = 0;
    for (std::int64_t i = 0; i <= nn; ++i) {
      const std::int64_t idx = static_cast<std::int64_t>(k) - i * d;
      if (idx < 0) break;
      const std::int64_t term = binomial(nn, i) * static_cast<std::int64_t>(W[static_cast<std::size_t>(idx)]);
      h += (i % 2 == 0) ? term : -term;
    }
    out.H[k] = h;
  }
  out.polygon = hodge_polygon_from_counts(out.H, D);
  return out;
}

LowerPolygon hodge_polygon_from_counts(std::span<const std::int64_t> H, const Integer& denominator) {
  std::vector<Slope> slopes;
  for (std::size_t k = 0; k < H.size(); ++k) {
    if (H[k] < 0) fail(ErrorKind::DegenerateInput, "negative Hodge number at k=" + std::to_string(k));
    slopes.push_back({Rational(Integer(static_cast<unsigned long>(k)), denominator),
                      static_cast<std::uint64_t>(H[k])});
  }
  return LowerPolygon::from_slopes(std::move(slopes));
}

LowerPolygon hodge_polygon(const NewtonPolyhedron& delta) { return hodge_numbers(delta).polygon; }

bool cofacial(const NewtonPolyhedron& delta, std::span<const Integer> u, std::span<const Integer> u2) {
  const Weight w1 = weight(delta, u);
  const Weight w2 = weight(delta, u2);
  if (!w1 || !w2) fail(ErrorKind::DegenerateInput, "cofacial: point outside the cone");
  if (w1->is_zero() || w2->is_zero()) fail(ErrorKind::DegenerateInput, "cofacial: origin has no facet");
  // Shared closed facet: some facet attains the maximum for both points.
  for (const auto& f : delta.facets_away_from_origin)
    if (f.evaluate(u) == *w1 && f.evaluate(u2) == *w2) return true;
  return false;
}

}  // namespace np
