#include "np/polygon.hpp"

#include <algorithm>
#include <set>

#include "np/error.hpp"

namespace np {

LowerPolygon LowerPolygon::from_slopes(std::vector<Slope> slopes) {
  std::sort(slopes.begin(), slopes.end(),
            [](const Slope& a, const Slope& b) { return a.value < b.value; });
  LowerPolygon out;
  for (auto& s : slopes) {
    if (s.multiplicity == 0) continue;
    if (!out.slopes_.empty() && out.slopes_.back().value == s.value)
      out.slopes_.back().multiplicity += s.multiplicity;
    else
      out.slopes_.push_back(std::move(s));
  }
  return out;
}

LowerPolygon LowerPolygon::from_slope_list(std::span<const Rational> slopes) {
  std::vector<Slope> s;
  s.reserve(slopes.size());
  for (const auto& v : slopes) s.push_back({v, 1});
  return from_slopes(std::move(s));
}

LowerPolygon LowerPolygon::from_vertices(std::span<const Vertex> vertices) {
  if (vertices.empty() || vertices.front().x != 0 || !vertices.front().y.is_zero())
    fail(ErrorKind::DegenerateInput, "polygon must start at (0,0)");
  std::vector<Slope> slopes;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    const Integer dx = vertices[i].x - vertices[i - 1].x;
    if (dx <= 0) fail(ErrorKind::DegenerateInput, "polygon abscissas must strictly increase");
    const Rational s = (vertices[i].y - vertices[i - 1].y) / Rational(dx);
    if (!slopes.empty() && s < slopes.back().value)
      fail(ErrorKind::DegenerateInput, "polygon is not convex from below");
    slopes.push_back({s, static_cast<std::uint64_t>(to_int64(dx))});
  }
  return from_slopes(std::move(slopes));
}

std::vector<Rational> LowerPolygon::slope_multiset() const {
  std::vector<Rational> out;
  for (const auto& s : slopes_) out.insert(out.end(), s.multiplicity, s.value);
  return out;
}

std::vector<Vertex> LowerPolygon::vertices() const {
  std::vector<Vertex> out{{Integer(0), Rational(0)}};
  for (const auto& s : slopes_) {
    const Integer dx(static_cast<unsigned long>(s.multiplicity));
    out.push_back({out.back().x + dx, out.back().y + s.value * Rational(dx)});
  }
  return out;
}

std::uint64_t LowerPolygon::length() const {
  std::uint64_t n = 0;
  for (const auto& s : slopes_) n += s.multiplicity;
  return n;
}

Rational LowerPolygon::height() const { return vertices().back().y; }

Rational LowerPolygon::value_at(const Integer& x) const {
  if (x < 0 || x > Integer(static_cast<unsigned long>(length())))
    fail(ErrorKind::DegenerateInput, "abscissa outside the polygon");
  Integer cx = 0;
  Rational y;
  for (const auto& s : slopes_) {
    const Integer dx(static_cast<unsigned long>(s.multiplicity));
    if (cx + dx >= x) return y + s.value * Rational(Integer(x - cx));
    cx += dx;
    y += s.value * Rational(dx);
  }
  return y;
}

std::string LowerPolygon::to_string() const {
  std::string out;
  for (const auto& v : vertices()) {
    if (!out.empty()) out += ",";
    out += "(" + v.x.get_str() + "," + v.y.to_string() + ")";
  }
  return out;
}

std::string_view to_string(Relation r) noexcept {
  switch (r) {
    case Relation::Above: return "above";
    case Relation::AboveStrictSomewhere: return "above-strict-somewhere";
    case Relation::Violation: return "violation";
  }
  return "unknown";
}

Comparison lies_above(const LowerPolygon& upper, const LowerPolygon& lower) {
  if (upper.length() != lower.length())
    fail(ErrorKind::IncomparablePolygons,
         "polygons have lengths " + std::to_string(upper.length()) + " and " +
             std::to_string(lower.length()));
  std::set<Integer> xs;
  for (const auto& v : upper.vertices()) xs.insert(v.x);
  for (const auto& v : lower.vertices()) xs.insert(v.x);

  Comparison out;
  for (const auto& x : xs) {
    const Rational a = upper.value_at(x);
    const Rational b = lower.value_at(x);
    if (a < b) {
      out.relation = Relation::Violation;
      out.witness_x = x;
      break;
    }
    if (a > b && out.relation == Relation::Above) {
      out.relation = Relation::AboveStrictSomewhere;
      out.witness_x = x;
    }
  }
  out.endpoints_coincide = upper.height() == lower.height();
  return out;
}

}  // namespace np
