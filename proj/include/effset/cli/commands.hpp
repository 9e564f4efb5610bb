// Result payloads of the command-line subcommands. Each function is pure and
// returns the "result" member of a run report.

#ifndef EFFSET_CLI_COMMANDS_HPP
#define EFFSET_CLI_COMMANDS_HPP

#include <json.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "effset/certificate.hpp"
#include "effset/cli/report.hpp"
#include "effset/convexopt.hpp"
#include "effset/effset.hpp"
#include "effset/geom2d.hpp"
#include "effset/instances.hpp"
#include "effset/lasso.hpp"

namespace effset::cli {

inline json compute_result(const PointSet& Y, std::vector<IndexSet> subsets) {
  if (subsets.empty() && !Y.empty()) subsets.push_back(IndexSet::all(Y.dim()));
  json out{{"n", Y.size()}, {"m", Y.dim()}, {"subsets", json::array()}};
  for (const auto& I : subsets) {
    std::vector<std::size_t> eff, weak;
    if (!Y.empty()) {
      eff = efficient_set(Y, I);
      weak = weakly_efficient_set(Y, I);
    }
    out["subsets"].push_back({{"I", I.to_string()},
                              {"efficient", eff},
                              {"efficient_labels", labels_of(Y, eff)},
                              {"weakly_efficient", weak},
                              {"weakly_efficient_labels", labels_of(Y, weak)}});
  }
  return out;
}

inline json theorem_result(const PointSet& Y) {
  const bool convex = convex::finite_fdh_is_convex(Y);
  const auto v = theorem_verdict(Y, convex);
  json viol = json::array();
  for (const auto& b : v.beta_violations) {
    viol.push_back({{"I", b.subset.to_string()}, {"index", b.index}, {"label", Y.label(b.index)}});
  }
  return {{"kind", "point-set"},
          {"n", Y.size()},
          {"m", Y.dim()},
          {"fdh_convex", convex},
          {"alpha", v.alpha_holds},
          {"beta", v.beta_holds},
          {"beta_violations", viol},
          {"alpha_witnesses", v.alpha_witnesses},
          {"alpha_witness_labels", labels_of(Y, v.alpha_witnesses)}};
}

inline json polygon_result(const instances::NamedPolygon& np) {
  const auto v = geom2d::verdict_polygon(np.polygon);
  const Namer name = [&np](const Vec2& q) { return np.name_of(q); };
  json vertices = json::object();
  for (const auto& [label, p] : np.labels) vertices[label] = encode(p);
  json viol = json::array();
  for (const auto& I : v.beta_violations) viol.push_back(I.to_string());
  json chains{{"M_{1}", encode(v.m1, name)},
              {"M_{2}", encode(v.m2, name)},
              {"M", encode(v.m, name)},
              {"WM", encode(v.wm, name)}};
  json equations = json::array();
  for (const auto& key : {"M_{1}", "M_{2}", "M", "WM"}) {
    equations.push_back(std::string(key) + " Y = " + chains[key]["text"].get<std::string>());
  }
  return {{"kind", "polygon"},
          {"id", np.id},
          {"vertices", vertices},
          {"fdh_convex", v.fdh_convex},
          {"alpha", v.alpha_holds},
          {"beta", v.beta_holds},
          {"beta_violations", viol},
          {"chains", chains},
          {"equations", equations},
          {"alpha_witnesses", encode(v.alpha_witnesses, name)},
          {"envelope", encode(v.envelope)}};
}

/// which: an example id or "all".
inline json examples_result(const std::string& which) {
  json list = json::array();
  const auto& ids = instances::example_ids();
  if (which != "all" && std::find(ids.begin(), ids.end(), which) == ids.end()) {
    throw std::invalid_argument("unknown example '" + which + "' (expected 3.1, 3.2, 3.3, 3.4 or all)");
  }
  for (const auto& id : ids) {
    if (which == "all" || which == id) list.push_back(polygon_result(instances::example_polygon(id)));
  }
  return {{"examples", list}};
}

inline json certify_result(const PointSet& Y, const Point& y_star, std::optional<std::size_t> index) {
  json out = encode(cert::find_certificate(Y, y_star));
  out["ystar"] = y_star.vec();
  out["ystar_index"] = index ? json(*index) : json(nullptr);
  return out;
}

inline json encode(const lasso::SweepEntry& e) {
  std::vector<double> theta(e.theta.data(), e.theta.data() + e.theta.size());
  return {{"weight", e.weight},
          {"lambda_eff", e.lambda_eff ? json(*e.lambda_eff) : json(nullptr)},
          {"theta", theta},
          {"f1", e.objectives.f1},
          {"f2", e.objectives.f2},
          {"f1_tilde", e.objectives.f1_tilde},
          {"f2_tilde", e.objectives.f2_tilde},
          {"kkt_residual", e.kkt_residual},
          {"iterations", e.iterations},
          {"ok", e.ok},
          {"analytic_endpoint", e.analytic_endpoint},
          {"error", e.error}};
}

inline json lasso_result(const lasso::LassoProblem& p, const lasso::SweepResult& sr, double tol, json source) {
  json entries = json::array();
  std::size_t failed = 0;
  for (const auto& e : sr.entries) {
    entries.push_back(encode(e));
    failed += !e.ok;
  }
  const auto rep = lasso::check_theorem_71(sr, tol);
  return {{"problem", {{"rows", p.rows()}, {"cols", p.cols()}, {"epsilon", p.epsilon}, {"source", std::move(source)}}},
          {"sweep", entries},
          {"failed_entries", failed},
          {"theorem_71",
           {{"tol", tol}, {"checked", rep.checked}, {"weak_only", rep.weak_only}, {"holds", rep.holds()}}}};
}

inline json zero_matrix_result(std::size_t n, std::size_t count, double epsilon) {
  const auto r = lasso::zero_matrix_counterexample(n, count, epsilon);
  json samples = json::array();
  for (std::size_t k = 0; k < r.samples.size(); ++k) {
    const auto& th = r.samples[k];
    samples.push_back({{"theta", std::vector<double>(th.data(), th.data() + th.size())},
                       {"f1_tilde", r.images[k].first},
                       {"f2_tilde", r.images[k].second}});
  }
  return {{"kind", "zero-matrix"},
          {"n", n},
          {"epsilon", epsilon},
          {"samples", samples},
          {"weakly_efficient", r.weakly_efficient},
          {"efficient", r.efficient},
          {"weak_only", r.weak_only},
          {"wm_equals_m", r.weak_only.empty()}};
}

}  // namespace effset::cli

#endif  // EFFSET_CLI_COMMANDS_HPP
