#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "np/catalog.hpp"

namespace np::cli {

/// Parsed input: either an explicit support or a named family.
struct InputDocument {
  std::size_t n = 0;
  Support support;
  std::vector<Integer> coefficients;  // one per support point
  std::optional<std::string> family;
  Parameters parameters;
};

/// Integers may be JSON integers or decimal strings. Throws Error(Parse).
Integer json_integer(const nlohmann::json& value, std::string_view where);

InputDocument parse_input(std::string_view text);
/// Unreadable files are reported as Error(Parse).
InputDocument load_input(const std::string& path);

}  // namespace np::cli
