// File ingestion for the command-line front end: CSV point sets, polygon
// JSON, and a content digest for reports.

#ifndef EFFSET_CLI_IO_HPP
#define EFFSET_CLI_IO_HPP

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "effset/effset.hpp"
#include "effset/exact.hpp"
#include "effset/geom2d.hpp"

namespace effset::cli {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

/// "-" reads stdin.
inline std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(line);
  while (std::getline(ss, cur, ',')) out.push_back(trim(cur));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

inline bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  const char* b = s.data();
  const char* e = b + s.size();
  if (*b == '+') ++b;
  const auto [ptr, ec] = std::from_chars(b, e, out);
  return ec == std::errc() && ptr == e;
}

struct CsvTable {
  std::vector<std::string> header;  // empty when the file has none
  std::vector<std::vector<double>> rows;
};

/// Comma-separated, '.' decimal, one record per line. A first line with any
/// non-numeric field is a header. Rows and columns in messages are 1-based
/// file positions.
inline CsvTable parse_csv(const std::string& text) {
  CsvTable t;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0, width = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto fields = split_fields(line);
    std::vector<double> row(fields.size());
    bool numeric = true;
    std::size_t bad = 0;
    for (std::size_t c = 0; c < fields.size(); ++c) {
      if (!parse_double(fields[c], row[c]) || !std::isfinite(row[c])) {
        if (numeric) bad = c;
        numeric = false;
      }
    }
    if (first && !numeric) {
      t.header = fields;
      width = fields.size();
      first = false;
      continue;
    }
    first = false;
    if (!numeric) {
      throw InputError("row " + std::to_string(lineno) + ", column " + std::to_string(bad + 1) +
                       ": not a finite number: '" + fields[bad] + "'");
    }
    if (width == 0) width = row.size();
    if (row.size() != width) {
      throw InputError("row " + std::to_string(lineno) + ", column " + std::to_string(std::min(row.size(), width) + 1) +
                       ": expected " + std::to_string(width) + " fields, found " + std::to_string(row.size()));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline PointSet to_point_set(const CsvTable& t) {
  std::vector<Point> pts;
  for (const auto& r : t.rows) pts.emplace_back(r);
  return PointSet(std::move(pts));
}

inline Rational json_to_rational(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number_unsigned()) return Rational(static_cast<long long>(v.get<unsigned long long>()));
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw InputError("vertex coordinates must be finite");
    return from_double(d);
  }
  if (v.is_string()) {
    try {
      return Rational(v.get<std::string>());
    } catch (const std::exception&) {
      throw InputError("cannot read '" + v.get<std::string>() + "' as a rational");
    }
  }
  throw InputError("vertex coordinates must be numbers or \"p/q\" strings");
}

/// {"vertices": [[x, y], ...]}; coordinates may be integers, floats (taken
/// at their exact binary value) or "p/q" strings.
inline geom2d::Polygon2 parse_polygon_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
    throw InputError("polygon JSON must be an object with a \"vertices\" array");
  }
  std::vector<Vec2> pts;
  std::size_t k = 0;
  for (const auto& v : j["vertices"]) {
    ++k;
    if (!v.is_array() || v.size() != 2) throw InputError("vertex " + std::to_string(k) + " is not an [x, y] pair");
    pts.emplace_back(json_to_rational(v[0]), json_to_rational(v[1]));
  }
  try {
    return geom2d::Polygon2(std::move(pts));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("invalid polygon: ") + e.what());
  }
}

inline bool looks_like_json(const std::string& path, const std::string& text) {
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) return true;
  const auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string::npos && text[p] == '{';
}

/// "1,2" -> IndexSet{1, 2}.
inline IndexSet parse_index_set(const std::string& s) {
  std::vector<std::size_t> idx;
  for (const auto& f : split_fields(s)) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
    if (f.empty() || ec != std::errc() || ptr != f.data() + f.size()) {
      throw std::invalid_argument("bad index set '" + s + "' (expected e.g. 1,2)");
    }
    idx.push_back(v);
  }
  return IndexSet(std::move(idx));
}

inline std::vector<double> parse_number_list(const std::string& s) {
  std::vector<double> out;
  for (const auto& f : split_fields(s)) {
    double v = 0.0;
    if (!parse_double(f, v)) throw std::invalid_argument("bad number '" + f + "' in list '" + s + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace effset::cli

#endif  // EFFSET_CLI_IO_HPP
