#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "np/decompose.hpp"

namespace np::cli {

/// A report is an ordered JSON document:
///   {"command": ..., "input": {...}, "summary": {...}, "table": [{...}, ...]}
/// Integers and rationals are strings ("num/den", lowest terms; "inf").
using Report = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };
std::optional<Format> parse_format(std::string_view name);

std::string render(const Report& report, Format format);
/// Inverse of render(report, Format::Json). Throws Error(Parse).
Report parse_report(std::string_view text);

Report to_json(const Integer& x);
Report to_json(const Rational& x);
Report to_json(const Weight& w);
Report to_json(const LatticePoint& v);
Report to_json(const RationalVector& v);
Report polygon_json(const LowerPolygon& p);
Report slopes_json(const LowerPolygon& p);

}  // namespace np::cli
