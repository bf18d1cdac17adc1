#include "np/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "np/error.hpp"
#include "np/exactmath.hpp"

namespace np {

namespace {

std::vector<LatticePoint> differences(std::span<const LatticePoint> points,
                                      std::span<const std::size_t> idx) {
  std::vector<LatticePoint> out;
  for (std::size_t k = 1; k < idx.size(); ++k) {
    LatticePoint d(points[idx[0]].size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = points[idx[k]][i] - points[idx[0]][i];
    out.push_back(std::move(d));
  }
  return out;
}

// Normal of the hyperplane spanned by m-1 difference vectors in Z^m, via
// signed maximal minors. Zero when the vectors are dependent.
LatticePoint minors_normal(const std::vector<LatticePoint>& rows, std::size_t m) {
  LatticePoint normal(m, Integer(0));
  if (m == 1) {
    normal[0] = 1;
    return normal;
  }
  for (std::size_t skip = 0; skip < m; ++skip) {
    IntMatrix minor(m - 1, m - 1);
    for (std::size_t r = 0; r + 1 < m; ++r) {
      std::size_t c2 = 0;
      for (std::size_t c = 0; c < m; ++c) {
        if (c == skip) continue;
        minor(r, c2++) = rows[r][c];
      }
    }
    Integer d = determinant(minor);
    normal[skip] = (skip % 2 == 0) ? d : Integer(-d);
  }
  return normal;
}

template <typename Visit>
void for_each_subset(std::size_t total, std::size_t size, Visit&& visit) {
  if (size > total) return;
  std::vector<std::size_t> idx(size);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (;;) {
    visit(std::span<const std::size_t>(idx));
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == total - size + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

long affine_dimension(std::span<const LatticePoint> points) {
  if (points.empty()) return -1;
  if (points.size() == 1) return 0;
  std::vector<std::size_t> all(points.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  const auto diffs = differences(points, all);
  return static_cast<long>(rank(IntMatrix::from_columns(diffs)));
}

std::vector<HalfSpace> hull_facets(std::span<const LatticePoint> points) {
  if (points.empty()) fail(ErrorKind::NotFullDimensional, "hull of an empty point set");
  const std::size_t m = points.front().size();
  for (const auto& p : points)
    if (p.size() != m) fail(ErrorKind::DegenerateInput, "hull_facets: mixed dimensions");
  if (m == 0 || affine_dimension(points) != static_cast<long>(m))
    fail(ErrorKind::NotFullDimensional,
         "point set spans dimension " + std::to_string(affine_dimension(points)) + " in Z^" +
             std::to_string(m));

  std::map<std::pair<LatticePoint, Integer>, bool> seen;
  std::vector<HalfSpace> facets;
  for_each_subset(points.size(), m, [&](std::span<const std::size_t> idx) {
    LatticePoint normal = minors_normal(differences(points, idx), m);
    const Integer g = content(normal);
    if (g == 0) return;
    for (auto& x : normal) x /= g;
    Integer offset = dot(normal, points[idx[0]]);
    if (m == 1) {
      // In one dimension the "hyperplane" is a point; orient both ways.
      bool all_le = true, all_ge = true;
      for (const auto& p : points) {
        all_le = all_le && p[0] <= offset;
        all_ge = all_ge && p[0] >= offset;
      }
      if (!all_le && !all_ge) return;
      if (!all_le) {
        normal[0] = -1;
        offset = -offset;
      }
    } else {
      int side = 0;
      for (const auto& p : points) {
        const int s = sgn(Integer(dot(normal, p) - offset));
        if (s == 0) continue;
        if (side == 0) side = s;
        if (s != side) return;
      }
      if (side > 0) {
        for (auto& x : normal) x = -x;
        offset = -offset;
      }
    }
    auto key = std::make_pair(normal, offset);
    if (seen.count(key)) return;
    seen.emplace(key, true);
    HalfSpace h{std::move(normal), std::move(offset), {}};
    for (std::size_t i = 0; i < points.size(); ++i)
      if (h.on_boundary(points[i])) h.incident.push_back(i);
    facets.push_back(std::move(h));
  });
  std::sort(facets.begin(), facets.end(),
            [](const HalfSpace& a, const HalfSpace& b) { return a.incident < b.incident; });
  return facets;
}

std::vector<std::size_t> hull_vertices(std::span<const LatticePoint> points) {
  const auto facets = hull_facets(points);
  const std::size_t m = points.front().size();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<LatticePoint> normals;
    for (const auto& f : facets)
      if (std::binary_search(f.incident.begin(), f.incident.end(), i)) normals.push_back(f.normal);
    if (normals.size() >= m && rank(IntMatrix::from_columns(normals)) == m) out.push_back(i);
  }
  return out;
}

IntMatrix unimodular_completion(std::span<const Integer> primitive_row) {
  const std::size_t n = primitive_row.size();
  if (n == 0 || content(primitive_row) != 1)
    fail(ErrorKind::DegenerateInput, "unimodular_completion: vector is not primitive");
  LatticePoint v(primitive_row.begin(), primitive_row.end());
  // Column operations on v, recorded in q; their inverses as row operations
  // in q_inv. At the end v * q == e_1, so the first row of q_inv is v.
  IntMatrix q = IntMatrix::identity(n);
  IntMatrix q_inv = IntMatrix::identity(n);
  for (;;) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i)
      if (v[i] != 0 && (piv == n || abs(v[i]) < abs(v[piv]))) piv = i;
    bool single = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == piv || v[j] == 0) continue;
      const Integer f = floor_div(v[j], v[piv]);
      v[j] -= f * v[piv];
      q.add_col_multiple(j, piv, -f);
      q_inv.add_row_multiple(piv, j, f);
      if (v[j] != 0) single = false;
    }
    if (!single) continue;
    v[0].swap(v[piv]);
    q.swap_cols(0, piv);
    q_inv.swap_rows(0, piv);
    if (v[0] < 0) {
      v[0] = -v[0];
      q.negate_col(0);
      q_inv.negate_row(0);
    }
    return q_inv;
  }
}

HyperplaneFrame::HyperplaneFrame(LatticePoint primitive_normal, Integer level)
    : normal_(std::move(primitive_normal)), level_(std::move(level)) {
  to_frame_ = unimodular_completion(normal_);
  // Inverse of a unimodular matrix has integer entries; build it column by column.
  const std::size_t n = normal_.size();
  from_frame_ = IntMatrix(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    LatticePoint e(n, Integer(0));
    e[c] = 1;
    const RationalVector col = solve_unique(to_frame_, std::span<const Integer>(e));
    for (std::size_t r = 0; r < n; ++r) from_frame_(r, c) = col[r].numerator();
  }
}

LatticePoint HyperplaneFrame::project(std::span<const Integer> x) const {
  const LatticePoint full = to_frame_ * x;
  return LatticePoint(full.begin() + 1, full.end());
}

LatticePoint HyperplaneFrame::lift(std::span<const Integer> y) const {
  LatticePoint full(normal_.size());
  full[0] = level_;
  std::copy(y.begin(), y.end(), full.begin() + 1);
  return from_frame_ * std::span<const Integer>(full);
}

RationalVector HyperplaneFrame::lift(std::span<const Rational> y) const {
  RationalVector full(normal_.size());
  full[0] = Rational(level_);
  std::copy(y.begin(), y.end(), full.begin() + 1);
  return from_frame_ * std::span<const Rational>(full);
}

std::pair<LatticePoint, Integer> HyperplaneFrame::restrict_form(std::span<const Integer> form) const {
  const std::size_t n = normal_.size();
  LatticePoint coeffs(n - 1);
  Integer constant = 0;
  for (std::size_t c = 0; c < n; ++c) {
    Integer s = 0;
    for (std::size_t r = 0; r < n; ++r) s += form[r] * from_frame_(r, c);
    if (c == 0)
      constant = s * level_;
    else
      coeffs[c - 1] = s;
  }
  return {coeffs, constant};
}

Integer normalized_volume(std::span<const LatticePoint> points) {
  if (points.empty()) fail(ErrorKind::NotFullDimensional, "volume of an empty set");
  const std::size_t m = points.front().size();
  if (m == 0) return 1;
  if (m == 1) {
    auto [lo, hi] = std::minmax_element(points.begin(), points.end(),
                                        [](const LatticePoint& a, const LatticePoint& b) { return a[0] < b[0]; });
    if ((*hi)[0] == (*lo)[0]) fail(ErrorKind::NotFullDimensional, "degenerate segment");
    return (*hi)[0] - (*lo)[0];
  }
  const LatticePoint& apex = points.front();
  Integer total = 0;
  for (const auto& f : hull_facets(points)) {
    const Integer height = f.offset - dot(f.normal, apex);
    if (height == 0) continue;
    HyperplaneFrame frame(f.normal, f.offset);
    std::vector<LatticePoint> base;
    base.reserve(f.incident.size());
    for (std::size_t i : f.incident) base.push_back(frame.project(points[i]));
    total += height * normalized_volume(base);
  }
  return total;
}

}  // namespace np
