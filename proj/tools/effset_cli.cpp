#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "effset/cli/commands.hpp"
#include "effset/cli/io.hpp"
#include "effset/cli/report.hpp"
#include "effset/cli/svg.hpp"

namespace {

using namespace effset;
using namespace effset::cli;

struct Common {
  std::string input;
  std::string example;
  std::string out;
  std::string svg;
  std::optional<std::uint64_t> seed;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("EFFSET_SEED"); env && *env) {
    std::uint64_t v = 0;
    const std::string s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw std::invalid_argument("EFFSET_SEED must be a nonnegative integer, got '" + s + "'");
    }
    return v;
  }
  return 0;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

void emit(const Common& c, const json& report) {
  const std::string text = report.dump(2) + "\n";
  if (c.out.empty()) {
    std::cout << text;
  } else {
    write_text(c.out, text);
  }
}

struct Loaded {
  std::string digest;
  std::optional<PointSet> points;
  std::optional<instances::NamedPolygon> polygon;
};

Loaded load(const Common& c, bool allow_polygon) {
  if (!c.input.empty() && !c.example.empty()) throw std::invalid_argument("give either --input or --example, not both");
  Loaded l;
  if (!c.example.empty()) {
    l.polygon = instances::example_polygon(c.example);
    l.digest = fnv1a64("example:" + c.example);
    return l;
  }
  if (c.input.empty()) throw std::invalid_argument("an --input file is required");
  const std::string text = read_input(c.input);
  l.digest = fnv1a64(text);
  if (allow_polygon && looks_like_json(c.input, text)) {
    auto poly = parse_polygon_json(text);
    std::vector<Vec2> verts = poly.vertices();
    l.polygon = instances::NamedPolygon{c.input, std::move(poly), {}};
    for (std::size_t i = 0; i < verts.size(); ++i) l.polygon->labels.push_back({"p" + std::to_string(i + 1), verts[i]});
    return l;
  }
  const auto table = parse_csv(text);
  try {
    l.points = to_point_set(table);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return l;
}

void add_common(CLI::App* sub, Common& c, bool input, bool example) {
  if (input) sub->add_option("--input", c.input, "input file (CSV point set, or polygon JSON); - for stdin");
  if (example) sub->add_option("--example", c.example, "built-in example polygon: 3.1, 3.2, 3.3 or 3.4");
  sub->add_option("--seed", c.seed, "RNG seed (falls back to EFFSET_SEED, then 0)");
  sub->add_option("--out", c.out, "write the JSON report here instead of stdout");
}

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Efficient, weakly efficient and subset-efficient sets; theorem checks, certificates, LASSO fronts"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  Common c;
  std::vector<std::string> subsets;
  auto* compute = app.add_subcommand("compute", "efficient and weakly efficient index sets of a CSV point set");
  add_common(compute, c, true, false);
  compute->add_option("--subset", subsets, "objective index set such as 1,2 (repeatable; default all)");

  auto* check = app.add_subcommand("check-theorem", "conditions alpha and beta with the convexity verdict");
  add_common(check, c, true, true);

  std::string which = "all";
  auto* examples = app.add_subcommand("examples", "reproduce the four illustration polygons exactly");
  add_common(examples, c, false, false);
  examples->add_option("which", which, "3.1, 3.2, 3.3, 3.4 or all")->capture_default_str();
  examples->add_option("--svg", c.svg, "SVG output (a directory when which = all)");

  std::optional<long long> ystar;
  std::string point;
  auto* certify = app.add_subcommand("certify", "separating weight certificate for a point");
  add_common(certify, c, true, true);
  certify->add_option("--ystar", ystar, "0-based row (or vertex) index of y*");
  certify->add_option("--point", point, "y* given as coordinates, e.g. 0.5,0.5");

  double epsilon = 1e-3, tol = 1e-6, sigma = 0.1;
  std::string weights;
  std::size_t rows = 50, cols = 20, sparsity = 5, samples = 10;
  bool zero_matrix = false, endpoint = false;
  auto* lasso_cmd = app.add_subcommand("lasso", "epsilon-modified bi-objective LASSO sweep");
  add_common(lasso_cmd, c, true, false);
  lasso_cmd->add_option("--epsilon", epsilon, "epsilon >= 0 (0 only with --zero-matrix)")->capture_default_str();
  lasso_cmd->add_option("--weights", weights, "comma-separated weights in (0, 1]; default 20 log-spaced");
  lasso_cmd->add_option("--tol", tol, "dominance tolerance on objective values")->capture_default_str();
  lasso_cmd->add_option("--rows", rows, "generator: observations")->capture_default_str();
  lasso_cmd->add_option("--cols", cols, "generator: predictors (also n for --zero-matrix)")->capture_default_str();
  lasso_cmd->add_option("--sparsity", sparsity, "generator: nonzeros in the ground truth")->capture_default_str();
  lasso_cmd->add_option("--sigma", sigma, "generator: noise scale")->capture_default_str();
  lasso_cmd->add_option("--samples", samples, "--zero-matrix: number of sample points")->capture_default_str();
  lasso_cmd->add_flag("--zero-matrix", zero_matrix, "X = 0 demonstration instead of a sweep");
  lasso_cmd->add_flag("--include-endpoint", endpoint, "add the analytic w = 0 entry theta = 0");
  lasso_cmd->add_option("--svg", c.svg, "SVG of the (f1~, f2~) front");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    const Timer timer;
    const std::uint64_t seed = resolve_seed(c.seed);
    json result;
    std::string digest;
    std::string command;

    if (compute->parsed()) {
      command = "compute";
      const auto l = load(c, false);
      std::vector<IndexSet> I;
      for (const auto& s : subsets) I.push_back(parse_index_set(s));
      digest = l.digest;
      result = compute_result(*l.points, I);
    } else if (check->parsed()) {
      command = "check-theorem";
      const auto l = load(c, true);
      digest = l.digest;
      result = l.polygon ? polygon_result(*l.polygon) : theorem_result(*l.points);
    } else if (examples->parsed()) {
      command = "examples";
      digest = fnv1a64("examples:" + which);
      result = examples_result(which);
      if (!c.svg.empty()) {
        if (which == "all") {
          std::filesystem::create_directories(c.svg);
          for (const auto& id : instances::example_ids()) {
            const auto np = instances::example_polygon(id);
            write_text((std::filesystem::path(c.svg) / ("example_" + id + ".svg")).string(),
                       svg::polygon_figure(np, geom2d::verdict_polygon(np.polygon)));
          }
        } else {
          const auto np = instances::example_polygon(which);
          write_text(c.svg, svg::polygon_figure(np, geom2d::verdict_polygon(np.polygon)));
        }
      }
    } else if (certify->parsed()) {
      command = "certify";
      const auto l = load(c, true);
      digest = l.digest;
      PointSet Y;
      if (l.polygon) {
        std::vector<Point> pts;
        for (const auto& v : l.polygon->polygon.vertices()) pts.push_back(Point{to_double(v.x), to_double(v.y)});
        Y = PointSet(std::move(pts));
      } else {
        Y = *l.points;
      }
      if (ystar.has_value() == !point.empty()) throw std::invalid_argument("give exactly one of --ystar and --point");
      std::optional<std::size_t> idx;
      Point ys{0.0};
      if (ystar) {
        if (*ystar < 0 || static_cast<std::size_t>(*ystar) >= Y.size()) {
          throw std::invalid_argument("--ystar " + std::to_string(*ystar) + " is out of range for " +
                                      std::to_string(Y.size()) + " points");
        }
        idx = static_cast<std::size_t>(*ystar);
        ys = Y[*idx];
      } else {
        ys = Point(parse_number_list(point));
      }
      result = certify_result(Y, ys, idx);
      digest = fnv1a64(digest + "|" + json(ys.vec()).dump());
    } else if (lasso_cmd->parsed()) {
      command = "lasso";
      if (zero_matrix) {
        digest = fnv1a64("zero-matrix:" + std::to_string(cols) + ":" + std::to_string(samples));
        result = zero_matrix_result(cols, samples, epsilon);
      } else {
        if (!(epsilon > 0.0)) throw std::invalid_argument("--epsilon must be positive for a sweep");
        lasso::LassoProblem p;
        json source;
        if (!c.input.empty()) {
          const std::string text = read_input(c.input);
          digest = fnv1a64(text);
          const auto t = parse_csv(text);
          if (t.rows.empty() || t.rows.front().size() < 2) {
            throw InputError("LASSO CSV needs at least one row and two columns (predictors..., response)");
          }
          const auto m = static_cast<Eigen::Index>(t.rows.size());
          const auto n = static_cast<Eigen::Index>(t.rows.front().size() - 1);
          p.X.resize(m, n);
          p.y.resize(m);
          for (Eigen::Index r = 0; r < m; ++r) {
            for (Eigen::Index k = 0; k < n; ++k) p.X(r, k) = t.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
            p.y(r) = t.rows[static_cast<std::size_t>(r)].back();
          }
          p.epsilon = epsilon;
          source = {{"kind", "csv"}, {"path", c.input}};
        } else {
          const lasso::SyntheticSpec gen{rows, cols, sparsity, sigma, epsilon, seed};
          p = lasso::synthetic_problem(gen);
          source = {{"kind", "synthetic"},
                    {"rows", rows},
                    {"cols", cols},
                    {"sparsity", sparsity},
                    {"sigma", sigma},
                    {"seed", seed},
                    {"design", "iid N(0,1)"},
                    {"truth", "k-sparse, |entries| in [1,2], random sign"},
                    {"noise", "N(0, sigma^2)"}};
          digest = fnv1a64(source.dump());
        }
        const auto w = weights.empty() ? lasso::default_weights(20) : parse_number_list(weights);
        const auto sr = lasso::pareto_sweep(p, w, {}, endpoint);
        result = lasso_result(p, sr, tol, source);
        if (!c.svg.empty()) write_text(c.svg, svg::lasso_front(sr));
      }
    }
    emit(c, run_report(command, digest, seed, timer.ms(), std::move(result)));
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
