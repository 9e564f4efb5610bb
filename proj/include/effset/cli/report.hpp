// JSON encodings of library results and the versioned run report envelope.

#ifndef EFFSET_CLI_REPORT_HPP
#define EFFSET_CLI_REPORT_HPP

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "effset/certificate.hpp"
#include "effset/effset.hpp"
#include "effset/exact.hpp"
#include "effset/geom2d.hpp"
#include "effset/instances.hpp"

namespace effset::cli {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

/// Exact coordinates as strings ("1/2") next to their nearest doubles.
inline json encode(const Vec2& v) {
  return {{"exact", {to_string(v.x), to_string(v.y)}}, {"approx", {to_double(v.x), to_double(v.y)}}};
}

using Namer = std::function<std::string(const Vec2&)>;

inline std::string piece_text(const geom2d::Piece& p, const Namer& name) {
  if (p.is_point()) return "{" + name(p.a) + "}";
  return std::string(p.a_closed ? "[" : "(") + name(p.a) + ", " + name(p.b) + (p.b_closed ? "]" : ")");
}

/// "[p1, p2) ∪ [p3, p4]"; the empty chain is "∅".
inline std::string chain_text(const geom2d::SegmentChain& c, const Namer& name) {
  if (c.empty()) return "∅";
  std::string s;
  for (const auto& p : c.pieces()) {
    if (!s.empty()) s += " ∪ ";
    s += piece_text(p, name);
  }
  return s;
}

inline json encode(const geom2d::SegmentChain& c, const Namer& name) {
  json pieces = json::array();
  for (const auto& p : c.pieces()) {
    json e{{"kind", p.is_point() ? "point" : "segment"}, {"a", encode(p.a)}, {"a_label", name(p.a)}};
    if (!p.is_point()) {
      e["b"] = encode(p.b);
      e["b_label"] = name(p.b);
      e["a_closed"] = p.a_closed;
      e["b_closed"] = p.b_closed;
    }
    pieces.push_back(std::move(e));
  }
  return {{"pieces", pieces}, {"text", chain_text(c, name)}};
}

inline json encode(const geom2d::Staircase2& s) {
  json corners = json::array();
  for (const auto& c : s.corners) corners.push_back(encode(c));
  return corners;
}

inline std::vector<std::string> labels_of(const PointSet& Y, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (std::size_t i : idx) out.push_back(Y.label(i));
  return out;
}

inline json encode(const cert::CertificateResult& r) {
  json out{{"status", r.found ? "certificate" : "no-certificate"}, {"optimum", r.optimum}, {"rows_used", r.rows_used}};
  if (r.certificate) {
    const auto& c = *r.certificate;
    out["certificate"] = {{"weights", c.weights},
                          {"support", c.support.to_string()},
                          {"margin", c.margin},
                          {"verified", c.verified}};
  } else {
    out["certificate"] = nullptr;
  }
  return out;
}

/// Envelope: schema_version, command, input_digest, seed, timings, result, version.
/// "timings" is the only field that varies between identical runs.
inline json run_report(const std::string& command, const std::string& input_digest, std::uint64_t seed,
                       double total_ms, json result) {
  return {{"schema_version", kSchemaVersion},
          {"command", command},
          {"input_digest", input_digest},
          {"seed", seed},
          {"timings", {{"total_ms", total_ms}}},
          {"result", std::move(result)},
          {"version", kToolVersion}};
}

}  // namespace effset::cli

#endif  // EFFSET_CLI_REPORT_HPP
