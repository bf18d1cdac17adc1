#include <algorithm>
#include <map>

#include "face_internal.hpp"
#include "np/error.hpp"

namespace np {

namespace detail {

FaceCoordinates face_coordinates(std::span<const LatticePoint> vset) {
  if (vset.empty()) fail(ErrorKind::DegenerateInput, "empty point set");
  const std::size_t n = vset.front().size();
  std::vector<LatticePoint> pts(vset.begin(), vset.end());
  pts.emplace_back(n, Integer(0));
  if (affine_dimension(pts) != static_cast<long>(n))
    fail(ErrorKind::DegenerateInput, "points do not span a hyperplane away from the origin");
  for (const auto& h : hull_facets(pts)) {
    if (h.offset == 0 || h.incident.size() != vset.size()) continue;
    HyperplaneFrame frame(h.normal, h.offset);
    std::vector<LatticePoint> projected;
    for (const auto& v : vset) projected.push_back(frame.project(v));
    return {std::move(frame), std::move(projected)};
  }
  fail(ErrorKind::DegenerateInput, "points do not lie on a common hyperplane away from the origin");
}

}  // namespace detail

namespace {

PointSet sorted(PointSet s) {
  std::sort(s.begin(), s.end());
  return s;
}

std::size_t index_of(std::span<const LatticePoint> vset, const LatticePoint& p) {
  const auto it = std::find(vset.begin(), vset.end(), p);
  if (it == vset.end()) fail(ErrorKind::DegenerateInput, "point " + to_string(p) + " is not in the set");
  return static_cast<std::size_t>(it - vset.begin());
}

// Indices of vset that are vertices whose removal keeps the full face dimension.
std::vector<std::size_t> collapsible_indices(const detail::FaceCoordinates& fc) {
  const auto& y = fc.projected;
  const long m = y.empty() ? 0 : static_cast<long>(y.front().size());
  std::vector<std::size_t> out;
  if (m == 0) return out;
  for (std::size_t v : hull_vertices(y)) {
    std::vector<LatticePoint> rest;
    for (std::size_t i = 0; i < y.size(); ++i)
      if (i != v) rest.push_back(y[i]);
    if (affine_dimension(rest) == m) out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<PointSet> collapse_step(std::span<const LatticePoint> vset, const LatticePoint& chosen) {
  const std::size_t c = index_of(vset, chosen);
  const std::size_t n = chosen.size();
  const auto fc = detail::face_coordinates(vset);
  if (vset.size() == n) return {sorted(PointSet(vset.begin(), vset.end()))};

  const auto& y = fc.projected;
  const auto vertices = hull_vertices(y);
  if (std::find(vertices.begin(), vertices.end(), c) == vertices.end())
    fail(ErrorKind::DegenerateInput, to_string(chosen) + " is not a vertex of the hull");

  std::vector<std::size_t> rest;
  std::vector<LatticePoint> rest_y;
  for (std::size_t i = 0; i < vset.size(); ++i)
    if (i != c) {
      rest.push_back(i);
      rest_y.push_back(y[i]);
    }
  if (affine_dimension(rest_y) != static_cast<long>(n) - 1)
    fail(ErrorKind::DegenerateInput, "removing " + to_string(chosen) + " leaves a lower-dimensional set");

  std::vector<PointSet> pieces;
  PointSet first;
  for (std::size_t i : rest) first.push_back(vset[i]);
  pieces.push_back(sorted(std::move(first)));
  for (const auto& h : hull_facets(rest_y)) {
    if (dot(h.normal, y[c]) <= h.offset) continue;
    PointSet piece{vset[c]};
    for (std::size_t i : h.incident) piece.push_back(vset[rest[i]]);
    pieces.push_back(sorted(std::move(piece)));
  }
  std::sort(pieces.begin(), pieces.end());
  return pieces;
}

PointSet collapsible_vertices(std::span<const LatticePoint> vset) {
  const std::size_t n = vset.empty() ? 0 : vset.front().size();
  if (vset.size() <= n) return {};
  const auto fc = detail::face_coordinates(vset);
  PointSet out;
  for (std::size_t i : collapsible_indices(fc)) out.push_back(vset[i]);
  std::sort(out.begin(), out.end());
  return out;
}

Integer piece_invariant_factor(std::span<const LatticePoint> piece) {
  return snf(IntMatrix::from_columns(piece)).largest();
}

namespace {

class Collapser {
 public:
  explicit Collapser(Strategy strategy) : strategy_(strategy) {}

  CollapseResult run(const PointSet& vset) {
    if (strategy_ == Strategy::ExhaustiveMinDstar) {
      const auto& options = achievable(vset);
      reconstruct(vset, options.begin()->first);
    } else {
      greedy(vset);
    }
    CollapseResult out;
    out.dstar = 1;
    for (auto& piece : pieces_) {
      if (std::find(out.pieces.begin(), out.pieces.end(), piece) != out.pieces.end()) continue;
      out.piece_invariant_factors.push_back(piece_invariant_factor(piece));
      out.dstar = lcm(out.dstar, out.piece_invariant_factors.back());
      out.pieces.push_back(std::move(piece));
    }
    out.choice_log = std::move(log_);
    return out;
  }

 private:
  struct Option {
    std::size_t vertex = 0;
    std::vector<Integer> piece_values;
  };
  using Options = std::map<Integer, Option>;

  static bool is_leaf(const PointSet& s) { return s.size() == s.front().size(); }

  void leaf(const PointSet& s) {
    detail::face_coordinates(s);
    pieces_.push_back(s);
  }

  LatticePoint choose(const PointSet& s) const {
    const PointSet candidates = collapsible_vertices(s);
    if (candidates.empty()) fail(ErrorKind::DegenerateInput, "no collapsible vertex");
    if (strategy_ == Strategy::FirstLex) return candidates.front();
    const LatticePoint* best = &candidates.front();
    Integer best_content = content(*best);
    for (const auto& v : candidates) {
      const Integer c = content(v);
      if (c > best_content) {
        best = &v;
        best_content = c;
      }
    }
    return *best;
  }

  void greedy(const PointSet& s) {
    if (s.size() < s.front().size()) fail(ErrorKind::DegenerateInput, "fewer than n points");
    if (is_leaf(s)) return leaf(s);
    const LatticePoint v = choose(s);
    log_.push_back(v);
    for (const auto& piece : collapse_step(s, v)) greedy(piece);
  }

  const Options& achievable(const PointSet& s) {
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    if (s.size() < s.front().size()) fail(ErrorKind::DegenerateInput, "fewer than n points");
    Options options;
    if (is_leaf(s)) {
      detail::face_coordinates(s);
      options.emplace(piece_invariant_factor(s), Option{});
    } else {
      const PointSet candidates = collapsible_vertices(s);
      for (std::size_t vi = 0; vi < candidates.size(); ++vi) {
        std::map<Integer, std::vector<Integer>> acc{{Integer(1), {}}};
        for (const auto& piece : collapse_step(s, candidates[vi])) {
          const Options& sub = achievable(piece);
          std::map<Integer, std::vector<Integer>> next;
          for (const auto& [value, choices] : acc)
            for (const auto& [sub_value, unused] : sub) {
              auto extended = choices;
              extended.push_back(sub_value);
              next.emplace(lcm(value, sub_value), std::move(extended));
            }
          acc = std::move(next);
        }
        for (auto& [value, choices] : acc) options.emplace(value, Option{vi, std::move(choices)});
      }
    }
    return memo_.emplace(s, std::move(options)).first->second;
  }

  void reconstruct(const PointSet& s, const Integer& target) {
    if (is_leaf(s)) return leaf(s);
    const Option& opt = memo_.at(s).at(target);
    const LatticePoint v = collapsible_vertices(s)[opt.vertex];
    log_.push_back(v);
    const auto pieces = collapse_step(s, v);
    for (std::size_t i = 0; i < pieces.size(); ++i) reconstruct(pieces[i], opt.piece_values[i]);
  }

  Strategy strategy_;
  std::map<PointSet, Options> memo_;
  std::vector<PointSet> pieces_;
  PointSet log_;
};

}  // namespace

CollapseResult complete_collapse(std::span<const LatticePoint> vset, Strategy strategy) {
  if (vset.empty()) fail(ErrorKind::DegenerateInput, "empty point set");
  PointSet s(vset.begin(), vset.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    fail(ErrorKind::DegenerateInput, "duplicate point in collapse input");
  detail::face_coordinates(s);
  return Collapser(strategy).run(s);
}

std::string_view to_string(Strategy s) noexcept {
  switch (s) {
    case Strategy::FirstLex: return "first-lex";
    case Strategy::MaxInvariantFactor: return "max-invariant-factor";
    case Strategy::ExhaustiveMinDstar: return "exhaustive-min-dstar";
  }
  return "first-lex";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  for (Strategy s : {Strategy::FirstLex, Strategy::MaxInvariantFactor, Strategy::ExhaustiveMinDstar})
    if (to_string(s) == name) return s;
  return std::nullopt;
}

}  // namespace np
