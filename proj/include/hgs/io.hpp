#pragma once

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hgs/error.hpp"
#include "hgs/group.hpp"
#include "hgs/hopf_galois.hpp"

namespace hgs {

namespace detail {

inline void write_row(std::ostream& os, const std::vector<Element>& row) {
  os << '[';
  for (std::size_t i = 0; i < row.size(); ++i) os << (i ? ", " : "") << row[i];
  os << ']';
}

inline void write_table_rows(std::ostream& os, const FiniteGroup& g, const std::string& indent) {
  os << "[\n";
  for (Element a = 0; a < g.order(); ++a) {
    os << indent << "  ";
    auto r = g.row(a);
    write_row(os, std::vector<Element>(r.begin(), r.end()));
    os << (a + 1 < g.order() ? ",\n" : "\n");
  }
  os << indent << ']';
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  out << text;
  if (!out) fail(ErrorCode::IoError, "write to '" + path + "' failed");
}

// Byte offset to 1-based line and column.
inline std::pair<std::size_t, std::size_t> locate(const std::string& text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] inline void structure_error(const std::string& pointer, const std::string& what) {
  throw ParseError(0, 0, pointer + ": " + what);
}

}  // namespace detail

/// {"order": n, "table": [[...], ...]}, one row per line, trailing newline.
inline std::string format_group(const FiniteGroup& g) {
  std::ostringstream os;
  os << "{\n  \"order\": " << g.order() << ",\n  \"table\": ";
  detail::write_table_rows(os, g, "  ");
  os << "\n}\n";
  return os.str();
}

/// Structural problems raise ParseError; a well-formed table that is not a
/// group raises the make_group error (wrapped as ValidationError).
inline FiniteGroup parse_group(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = detail::locate(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(line, col, e.what());
  }
  if (!j.is_object()) detail::structure_error("", "expected an object");
  if (!j.contains("order") || !j["order"].is_number_unsigned()) detail::structure_error("/order", "expected a non-negative integer");
  if (!j.contains("table") || !j["table"].is_array()) detail::structure_error("/table", "expected an array of rows");
  const auto n = j["order"].get<std::size_t>();
  const auto& rows = j["table"];
  if (n == 0) detail::structure_error("/order", "order must be positive");
  if (rows.size() != n) detail::structure_error("/table", "expected " + std::to_string(n) + " rows, found " + std::to_string(rows.size()));
  Table t(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string ptr = "/table/" + std::to_string(i);
    if (!rows[i].is_array()) detail::structure_error(ptr, "expected an array");
    if (rows[i].size() != n) detail::structure_error(ptr, "row has length " + std::to_string(rows[i].size()) + ", expected " + std::to_string(n));
    for (std::size_t k = 0; k < n; ++k) {
      const auto& v = rows[i][k];
      if (!v.is_number_unsigned()) detail::structure_error(ptr + "/" + std::to_string(k), "expected a non-negative integer");
      t[i].push_back(static_cast<Element>(v.get<std::uint64_t>() > 0xffffffffu ? 0xffffffffu : v.get<std::uint64_t>()));
    }
  }
  try {
    return make_group(t);
  } catch (const Error& e) {
    throw Error(ErrorCode::ValidationError, e.what());
  }
}

inline FiniteGroup read_group(const std::string& path) { return parse_group(detail::read_file(path)); }

inline void write_group(const FiniteGroup& g, const std::string& path) { detail::write_file(path, format_group(g)); }

namespace detail {

inline void write_subgroup(std::ostream& os, const SubgroupSet& s) { write_row(os, s.elements()); }

inline void write_report(std::ostream& os, const HgsReport& r) {
  os << "  {\n    \"operation_table\": ";
  write_table_rows(os, r.operation, "    ");
  os << ",\n    \"type_name\": " << nlohmann::json(r.type_name).dump();
  os << ",\n    \"is_bi_skew\": " << (r.is_bi_skew ? "true" : "false");
  os << ",\n    \"image\": [";
  for (std::size_t i = 0; i < r.image.size(); ++i) {
    os << (i ? ", " : "");
    write_subgroup(os, r.image[i]);
  }
  os << "],\n    \"is_surjective\": " << (r.is_surjective ? "true" : "false");
  os << ",\n    \"gc_ratio\": {\"num\": " << r.gc_ratio.num << ", \"den\": " << r.gc_ratio.den << '}';
  os << ",\n    \"grouplikes\": ";
  write_subgroup(os, r.grouplikes);
  os << ",\n    \"iso_class_id\": " << r.iso_class_id;
  os << ",\n    \"orbit_size\": " << r.orbit_size << "\n  }";
}

}  // namespace detail

inline std::string format_reports(const std::vector<HgsReport>& reports) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    os << (i ? ",\n" : "\n");
    detail::write_report(os, reports[i]);
  }
  os << (reports.empty() ? "]\n" : "\n]\n");
  return os.str();
}

inline void write_reports(const std::vector<HgsReport>& reports, const std::string& path) {
  detail::write_file(path, format_reports(reports));
}

/// Inverse of format_reports; used to check round trips.
inline std::vector<HgsReport> parse_reports(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = detail::locate(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(line, col, e.what());
  }
  if (!j.is_array()) detail::structure_error("", "expected an array of reports");
  std::vector<HgsReport> out;
  try {
    for (const auto& o : j) {
      HgsReport r;
      r.operation = make_group(o.at("operation_table").get<Table>());
      r.type_name = o.at("type_name").get<std::string>();
      r.is_bi_skew = o.at("is_bi_skew").get<bool>();
      for (const auto& s : o.at("image")) r.image.push_back(SubgroupSet::from_elements(s.get<std::vector<Element>>()));
      r.is_surjective = o.at("is_surjective").get<bool>();
      r.gc_ratio = Ratio{o.at("gc_ratio").at("num").get<std::int64_t>(), o.at("gc_ratio").at("den").get<std::int64_t>()};
      r.grouplikes = SubgroupSet::from_elements(o.at("grouplikes").get<std::vector<Element>>());
      r.iso_class_id = o.at("iso_class_id").get<std::size_t>();
      r.orbit_size = o.at("orbit_size").get<std::size_t>();
      out.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    detail::structure_error("", e.what());
  }
  return out;
}

inline std::vector<HgsReport> read_reports(const std::string& path) { return parse_reports(detail::read_file(path)); }

/// Fixed-width text rendering, one structure per line.
inline std::string format_reports_table(const std::vector<HgsReport>& reports) {
  std::ostringstream os;
  os << "#   type           class orbit bi_skew surjective ratio   grouplikes\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    std::string idx = std::to_string(i);
    os << idx << std::string(idx.size() < 4 ? 4 - idx.size() : 1, ' ');
    std::string t = r.type_name;
    os << t << std::string(t.size() < 15 ? 15 - t.size() : 1, ' ');
    std::string c = std::to_string(r.iso_class_id);
    os << c << std::string(c.size() < 6 ? 6 - c.size() : 1, ' ');
    std::string o = std::to_string(r.orbit_size);
    os << o << std::string(o.size() < 6 ? 6 - o.size() : 1, ' ');
    os << (r.is_bi_skew ? "yes     " : "no      ");
    os << (r.is_surjective ? "yes        " : "no         ");
    std::string q = r.gc_ratio.str();
    os << q << std::string(q.size() < 8 ? 8 - q.size() : 1, ' ');
    os << r.grouplikes.size() << '\n';
  }
  return os.str();
}

}  // namespace hgs
