#include "cli/report.hpp"

#include <algorithm>
#include <sstream>

#include "np/error.hpp"

namespace np::cli {

std::optional<Format> parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  return std::nullopt;
}

Report to_json(const Integer& x) { return x.get_str(); }
Report to_json(const Rational& x) { return x.to_string(); }
Report to_json(const Weight& w) { return w ? w->to_string() : std::string("inf"); }

Report to_json(const LatticePoint& v) {
  Report out = Report::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

Report to_json(const RationalVector& v) {
  Report out = Report::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}


Report polygon_json(const LowerPolygon& p) {
  Report out = Report::array();
  for (const auto& v : p.vertices()) out.push_back(Report::array({v.x.get_str(), v.y.to_string()}));
  return out;
}

Report slopes_json(const LowerPolygon& p) {
  Report out = Report::array();
  for (const auto& s : p.slopes())
    out.push_back(Report{{"slope", s.value.to_string()}, {"multiplicity", s.multiplicity}});
  return out;
}

namespace {

std::string scalar_text(const Report& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Report& x) { return x.is_primitive(); })) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ", ";
      out += scalar_text(v[i]);
    }
    return out + "]";
  }
  return v.dump();
}

std::string csv_cell(const Report& v) {
  std::string s = scalar_text(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::vector<std::string> table_columns(const Report& table) {
  std::vector<std::string> cols;
  for (const auto& row : table)
    for (const auto& [key, unused] : row.items())
      if (std::find(cols.begin(), cols.end(), key) == cols.end()) cols.push_back(key);
  return cols;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "command: " << scalar_text(r.value("command", Report())) << "\n";
  if (r.contains("input")) {
    for (const auto& [key, value] : r["input"].items()) out << "input." << key << ": " << scalar_text(value) << "\n";
  }
  if (r.contains("summary")) {
    for (const auto& [key, value] : r["summary"].items()) out << key << ": " << scalar_text(value) << "\n";
  }
  if (r.contains("table") && !r["table"].empty()) {
    const auto cols = table_columns(r["table"]);
    std::vector<std::size_t> width;
    for (const auto& c : cols) width.push_back(c.size());
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : r["table"]) {
      std::vector<std::string> line;
      for (std::size_t i = 0; i < cols.size(); ++i) {
        line.push_back(row.contains(cols[i]) ? scalar_text(row[cols[i]]) : "");
        width[i] = std::max(width[i], line.back().size());
      }
      cells.push_back(std::move(line));
    }
    out << "\n";
    auto emit = [&](const std::vector<std::string>& line) {
      std::string s;
      for (std::size_t i = 0; i < line.size(); ++i) {
        if (i) s += "  ";
        s += line[i] + std::string(width[i] - line[i].size(), ' ');
      }
      while (!s.empty() && s.back() == ' ') s.pop_back();
      out << s << "\n";
    };
    emit(cols);
    for (const auto& line : cells) emit(line);
  }
  return out.str();
}

std::string render_csv(const Report& r) {
  std::ostringstream out;
  if (!r.contains("table")) return "";
  const auto cols = table_columns(r["table"]);
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << "\n";
  for (const auto& row : r["table"]) {
    for (std::size_t i = 0; i < cols.size(); ++i)
      out << (i ? "," : "") << (row.contains(cols[i]) ? csv_cell(row[cols[i]]) : "");
    out << "\n";
  }
  return out.str();
}

}  // namespace

std::string render(const Report& report, Format format) {
  switch (format) {
    case Format::Json: return report.dump(2) + "\n";
    case Format::Csv: return render_csv(report);
    case Format::Text: return render_text(report);
  }
  return "";
}

Report parse_report(std::string_view text) {
  try {
    return Report::parse(text);
  } catch (const Report::parse_error& e) {
    fail(ErrorKind::Parse, std::string("malformed report: ") + e.what());
  }
}

}  // namespace np::cli
