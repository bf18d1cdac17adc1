#include "cli/input.hpp"

#include <fstream>
#include <sstream>

#include "np/error.hpp"

namespace np::cli {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string& msg) { fail(ErrorKind::Parse, msg); }

std::vector<Integer> integer_list(const json& value, std::string_view where) {
  if (!value.is_array()) parse_error(std::string(where) + " must be a list");
  std::vector<Integer> out;
  for (std::size_t i = 0; i < value.size(); ++i)
    out.push_back(json_integer(value[i], std::string(where) + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

Integer json_integer(const json& value, std::string_view where) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return Integer(std::to_string(value.get<std::uint64_t>()));
    return Integer(std::to_string(value.get<std::int64_t>()));
  }
  if (value.is_string()) {
    try {
      return parse_integer(value.get<std::string>());
    } catch (const Error&) {
      parse_error(std::string(where) + ": '" + value.get<std::string>() + "' is not a decimal integer");
    }
  }
  parse_error(std::string(where) + " must be an integer or a decimal string");
}

InputDocument parse_input(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) parse_error("input must be a JSON object");
  for (const auto& [key, unused] : doc.items())
    if (key != "n" && key != "support" && key != "coefficients" && key != "family")
      parse_error("unknown input key '" + key + "'");

  InputDocument in;
  const bool has_support = doc.contains("support");
  const bool has_family = doc.contains("family");
  if (has_support == has_family) parse_error("exactly one of 'support' and 'family' is required");

  std::optional<std::size_t> n;
  if (doc.contains("n")) {
    const Integer v = json_integer(doc["n"], "n");
    if (v < 1 || v > 64) parse_error("n must lie in [1, 64]");
    n = v.get_ui();
  }

  if (has_family) {
    const json& fam = doc["family"];
    if (!fam.is_object() || !fam.contains("name") || !fam["name"].is_string())
      parse_error("family must be an object with a string 'name'");
    for (const auto& [key, unused] : fam.items())
      if (key != "name" && key != "parameters") parse_error("unknown family key '" + key + "'");
    Parameters params;
    if (fam.contains("parameters")) {
      if (!fam["parameters"].is_object()) parse_error("family parameters must be an object");
      for (const auto& [key, value] : fam["parameters"].items()) {
        const std::string where = "family.parameters." + key;
        params[key] = value.is_array() ? integer_list(value, where) : std::vector<Integer>{json_integer(value, where)};
      }
    }
    const NamedFamily f = make_family(fam["name"].get<std::string>(), params);
    if (n && *n != f.support.dim)
      parse_error("n = " + std::to_string(*n) + " does not match the family dimension " + std::to_string(f.support.dim));
    in.n = f.support.dim;
    in.support = f.support;
    in.coefficients = f.coefficients;
    in.family = f.name;
    in.parameters = f.parameters;
  } else {
    if (!n) parse_error("'n' is required with an explicit support");
    const json& sup = doc["support"];
    if (!sup.is_array() || sup.empty()) parse_error("support must be a non-empty list of vectors");
    std::vector<LatticePoint> pts;
    for (std::size_t j = 0; j < sup.size(); ++j) {
      auto v = integer_list(sup[j], "support[" + std::to_string(j) + "]");
      if (v.size() != *n)
        parse_error("support[" + std::to_string(j) + "] has length " + std::to_string(v.size()) + ", expected " +
                    std::to_string(*n));
      pts.push_back(std::move(v));
    }
    in.n = *n;
    in.support = Support::make(*n, std::move(pts));
    in.coefficients.assign(in.support.size(), Integer(1));
  }

  if (doc.contains("coefficients")) {
    auto c = integer_list(doc["coefficients"], "coefficients");
    if (c.size() != in.support.size())
      parse_error("coefficients has " + std::to_string(c.size()) + " entries for " +
                  std::to_string(in.support.size()) + " support points");
    for (const auto& x : c)
      if (x == 0) parse_error("coefficients must be nonzero");
    in.coefficients = std::move(c);
  }
  return in;
}

InputDocument load_input(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) fail(ErrorKind::Parse, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return parse_input(buf.str());
}

}  // namespace np::cli
