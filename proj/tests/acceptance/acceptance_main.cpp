// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "effset/certificate.hpp"
#include "effset/cli/commands.hpp"
#include "effset/convexopt.hpp"
#include "effset/effset.hpp"
#include "effset/geom2d.hpp"
#include "effset/instances.hpp"
#include "effset/lasso.hpp"
#include "oracles.hpp"

namespace {

using namespace effset;

constexpr double kMarginTol = 1e-9;
constexpr double kKktTol = 1e-8;
constexpr double kDominanceTol = 1e-6;
constexpr double kLemmaTol = 1e-6;
constexpr double kConvexTol = 1e-9;

struct Outcome {
  bool ok = true;
  std::string detail;
  double limit_s = 0.0;  // 0: no runtime bound
};

struct Clock {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

Outcome examples_reproduction() {
  struct Expected {
    std::string id;
    std::vector<std::string> equations;
    bool convex, alpha, beta;
  };
  const std::vector<Expected> want{
      {"3.1", {"M_{1} Y = {p1}", "M_{2} Y = {p2}", "M Y = [p1, p2]", "WM Y = [p1, p2]"}, true, true, true},
      {"3.2",
       {"M_{1} Y = [p1, p2]", "M_{2} Y = [p3, p4]", "M Y = [p2, p3]", "WM Y = [p1, p2] ∪ [p2, p3] ∪ [p3, p4]"},
       true, false, false},
      {"3.3",
       {"M_{1} Y = {p1}", "M_{2} Y = {p4}", "M Y = [p1, p2) ∪ [p3, p4]", "WM Y = [p1, p2] ∪ [p2, p3] ∪ [p3, p4]"},
       false, false, true},
      {"3.4", {"M_{1} Y = {p1}", "M_{2} Y = {p3}", "M Y = [p1, p2] ∪ [p2, p3]", "WM Y = [p1, p2] ∪ [p2, p3]"},
       false, true, true}};
  Outcome o{true, "", 1.0};
  const auto all = cli::examples_result("all")["examples"];
  std::size_t blocks = 0;
  for (std::size_t k = 0; k < want.size(); ++k) {
    const auto& e = all[k];
    const auto& w = want[k];
    bool same = e["id"] == w.id && e["fdh_convex"] == w.convex && e["alpha"] == w.alpha && e["beta"] == w.beta;
    for (std::size_t j = 0; j < w.equations.size(); ++j) same = same && e["equations"][j] == w.equations[j];
    if (!same) {
      o.ok = false;
      o.detail += "mismatch in " + w.id + "; ";
    }
    blocks += w.equations.size();
  }
  // The excluded endpoint p2 = (1, 2) of the first piece of M in 3.3.
  const auto v = geom2d::verdict_polygon(instances::example_polygon("3.3").polygon);
  const auto& first = v.m.pieces().front();
  const bool open_p2 = first.b == Vec2{1, 2} && !first.b_closed && first.a_closed;
  if (!open_p2) o.ok = false;
  o.detail += std::to_string(blocks) + " equations compared exactly, open endpoint at p2 " +
              (open_p2 ? "present" : "MISSING");
  return o;
}

Outcome polygon_equivalence() {
  std::mt19937_64 rng(20240501);
  std::size_t convex = 0, alpha = 0, exceptions = 0;
  const std::size_t total = 600;
  for (std::size_t k = 0; k < total; ++k) {
    const auto P = instances::random_polygon(rng, k % 3);
    try {
      const auto v = geom2d::verdict_polygon(P);
      convex += v.fdh_convex;
      alpha += v.alpha_holds;
      if ((v.alpha_holds && !v.beta_holds) || (v.fdh_convex && v.alpha_holds != v.beta_holds)) ++exceptions;
    } catch (const TheoremInconsistency&) {
      ++exceptions;
    }
  }
  return {exceptions == 0 && convex > 0 && convex < total,
          std::to_string(total) + " polygons, " + std::to_string(convex) + " with convex FDH, " +
              std::to_string(alpha) + " with alpha, " + std::to_string(exceptions) + " exceptions",
          10.0};
}

// Oracle versions of the two conditions.
bool oracle_alpha(const std::vector<oracle::Vec>& Y, std::size_t m) {
  const auto I = oracle::all_coords(m);
  return oracle::efficient(Y, I) == oracle::weakly_efficient(Y, I);
}

bool oracle_beta(const std::vector<oracle::Vec>& Y, std::size_t m) {
  const auto M = oracle::efficient(Y, oracle::all_coords(m));
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    std::vector<int> I;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1) I.push_back(static_cast<int>(i));
    }
    for (std::size_t j : oracle::efficient(Y, I)) {
      if (!M.count(j)) return false;
    }
  }
  return true;
}

Outcome finite_direction() {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<std::size_t> dim(2, 4), size(1, 200), small(1, 12);
  std::size_t failures = 0, disagreements = 0, alpha = 0;
  double lib_seconds = 0.0;
  const std::size_t total = 1000;
  for (std::size_t k = 0; k < total; ++k) {
    const std::size_t m = dim(rng);
    // Half the sets are small so that alpha holds often enough to matter.
    const std::size_t n = k % 2 ? small(rng) : size(rng);
    const auto Y = oracle::random_integer_points(rng, n, m, 0, 5);
    const auto P = oracle::to_point_set(Y);
    const Clock c;
    const bool a = condition_alpha(P).holds, b = condition_beta(P).holds;
    lib_seconds += c.seconds();
    alpha += a;
    failures += a && !b;
    if (k % 10 == 0) disagreements += a != oracle_alpha(Y, m) || b != oracle_beta(Y, m);
  }
  std::ostringstream s;
  s << total << " sets, " << alpha << " with alpha, " << failures << " alpha-without-beta, " << disagreements
    << " oracle disagreements on 100 cross-checked, library time " << lib_seconds << " s";
  return {failures == 0 && disagreements == 0 && lib_seconds < 10.0, s.str(), 10.0};
}

Outcome fast_matches_oracle() {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<std::size_t> dim(2, 3), size(1, 200), range(1, 3);
  std::size_t mismatches = 0;
  const std::size_t total = 1000;
  for (std::size_t k = 0; k < total; ++k) {
    const std::size_t m = dim(rng);
    const int hi = static_cast<int>(range(rng) == 1 ? 5 : 1000);
    const auto Y = oracle::random_integer_points(rng, size(rng), m, 0, hi);
    const auto got = oracle::as_set(efficient_set_fast(oracle::to_point_set(Y)));
    mismatches += got != oracle::efficient(Y, oracle::all_coords(m));
  }
  return {mismatches == 0, std::to_string(total) + " instances, " + std::to_string(mismatches) + " mismatches"};
}

Outcome certificate_completeness() {
  std::mt19937_64 rng(99);
  const std::size_t polygons = 100, per_polygon = 20;
  std::size_t ok = 0, total = 0;
  double worst = 1e300;
  for (std::size_t k = 0; k < polygons; ++k) {
    const auto P = instances::random_convex_polygon(rng);
    const auto v = geom2d::verdict_polygon(P);
    const auto pool = geom2d::sample_chain(v.wm, per_polygon);
    for (std::size_t j = 0; j < per_polygon; ++j) {
      const auto& q = pool[(j * pool.size()) / per_polygon];
      const Point ys{to_double(q.x), to_double(q.y)};
      const auto r = cert::find_certificate(P, ys);
      ++total;
      if (r.found && r.certificate) {
        worst = std::min(worst, r.certificate->margin);
        if (r.certificate->margin >= -kMarginTol && r.certificate->verified) ++ok;
      }
    }
  }
  std::ostringstream s;
  s << ok << "/" << total << " certified and verified, worst margin " << worst;
  return {ok == total && total == polygons * per_polygon, s.str(), 30.0};
}

Outcome strongly_convex_suite() {
  std::mt19937_64 rng(64);
  std::size_t violations = 0, oracle_mismatch = 0;
  const std::size_t total = 50;
  for (std::size_t k = 0; k < total; ++k) {
    const auto q = instances::random_quadratic_map(rng, 2 + k % 2, 3);
    convex::HarnessOptions o;
    o.seed = k;
    o.alpha = q.modulus();
    o.sweep_weights = 50;
    o.weighted_minimizer = [q](const std::vector<double>& w) {
      const Eigen::VectorXd x = q.minimize_weighted(w);
      return convex::Vector(x.data(), x.data() + x.size());
    };
    const convex::SampledMapping f{
        [q](const convex::Vector& x) {
          return q.evaluate(Eigen::Map<const Eigen::VectorXd>(x.data(), static_cast<Eigen::Index>(x.size())));
        },
        convex::ConvexDomain::box(convex::Vector(3, -50.0), convex::Vector(3, 50.0))};
    const auto r = convex::corollary_harness(f, convex::CorollaryKind::StronglyConvex, o);
    if (!(r.hypothesis_consistent && r.we == r.e && r.e == r.se && r.injective_on_efficient &&
          r.solutions == 50)) {
      ++violations;
    }

    // Independent recount on the images of the same sweep.
    std::mt19937_64 again(o.seed);
    std::vector<oracle::Vec> Y;
    std::set<convex::Vector> xs;
    const std::size_t m = q.objectives();
    (void)f.domain.sample(again);
    for (const auto& w : convex::detail::sweep_weights(again, m, 50)) xs.insert(o.weighted_minimizer(w));
    for (const auto& x : xs) Y.push_back(f(x));
    const auto I = oracle::all_coords(m);
    const auto E = oracle::efficient(Y, I), WE = oracle::weakly_efficient(Y, I);
    std::size_t se = 0;
    for (std::size_t j = 0; j < Y.size(); ++j) {
      bool blocked = false;
      for (std::size_t i = 0; i < Y.size(); ++i) {
        bool le = i != j;
        for (std::size_t c = 0; c < m && le; ++c) le = Y[i][c] <= Y[j][c];
        blocked = blocked || le;
      }
      se += !blocked;
    }
    if (E.size() != r.e || WE.size() != r.we || se != r.se) ++oracle_mismatch;
  }
  return {violations == 0 && oracle_mismatch == 0,
          std::to_string(total) + " instances x 50 weights, " + std::to_string(violations) + " violations, " +
              std::to_string(oracle_mismatch) + " oracle mismatches"};
}

Outcome lasso_front() {
  const auto p = lasso::synthetic_problem({50, 20, 5, 0.1, 1e-3, 2024});
  const auto sr = lasso::pareto_sweep(p, lasso::default_weights(20));
  double worst = 0.0;
  std::size_t failed = 0;
  for (const auto& e : sr.entries) {
    worst = std::max(worst, e.kkt_residual);
    failed += !e.ok || !(e.kkt_residual <= kKktTol);
  }
  const auto rep = lasso::check_theorem_71(sr, kDominanceTol);
  std::ostringstream s;
  s << sr.entries.size() << " weights, worst KKT " << worst << ", " << failed << " failed solves, "
    << rep.weak_only.size() << " weak-only entries";
  return {sr.entries.size() == 20 && failed == 0 && rep.weak_only.empty() && rep.checked == 20, s.str(), 30.0};
}

Outcome zero_matrix() {
  const std::size_t count = 25;
  const auto r = lasso::zero_matrix_counterexample(5, count, 0.0);
  const auto e = lasso::zero_matrix_counterexample(5, count, 1e-3);
  const bool ok = r.weakly_efficient.size() == count && r.efficient == std::vector<std::size_t>{0} &&
                  r.samples[0].isZero(0) && e.weak_only.empty();
  return {ok, "eps = 0: |WM| = " + std::to_string(r.weakly_efficient.size()) + " of " + std::to_string(count) +
                  ", |M| = " + std::to_string(r.efficient.size()) + "; eps = 1e-3: " +
                  std::to_string(e.weak_only.size()) + " weak-only"};
}

Outcome duplicated_column() {
  lasso::LassoProblem p{Eigen::MatrixXd::Ones(1, 2), Eigen::VectorXd::Constant(1, 2.0), 0.5};
  std::vector<Eigen::VectorXd> starts;
  for (const auto& [a, b] : std::vector<std::pair<double, double>>{{0, 1.5}, {1.5, 0}, {0, 0}, {5, -1}, {0.3, 0.9}, {-2, 4}}) {
    Eigen::VectorXd s(2);
    s << a, b;
    starts.push_back(s);
  }
  const auto r = lasso::lemma_72_check(p, starts, kLemmaTol);
  double dev = 0.0, spread = 0.0;
  for (std::size_t k = 0; k < r.minimizers.size(); ++k) {
    dev = std::max({dev, std::abs(r.squared_residuals[k] - 0.25), std::abs(r.l1_norms[k] - 1.5)});
    spread = std::max(spread, (r.minimizers[k] - r.minimizers[0]).norm());
  }
  std::ostringstream s;
  s << starts.size() << " starts, max deviation " << dev << ", minimizer spread " << spread;
  return {r.agree() && dev <= kLemmaTol, s.str()};
}

// Recomputes a reported violation from scratch.
bool reproduces(const convex::SampledMapping& f, const convex::Violation& v, double alpha) {
  convex::Vector z(v.x.size());
  double d2 = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    z[i] = v.t * v.x[i] + (1 - v.t) * v.y[i];
    d2 += (v.x[i] - v.y[i]) * (v.x[i] - v.y[i]);
  }
  const std::size_t c = v.coordinate - 1;
  const double rhs = v.t * f(v.x)[c] + (1 - v.t) * f(v.y)[c] - 0.5 * alpha * v.t * (1 - v.t) * d2;
  return f(z)[c] > rhs + kConvexTol;
}

Outcome convexity_checkers() {
  const auto scalar = [](std::function<double(double)> g, double lo, double hi) {
    return convex::SampledMapping{[g](const convex::Vector& x) { return convex::Vector{g(x[0])}; },
                                  convex::ConvexDomain::box({lo}, {hi})};
  };
  const auto sq = scalar([](double x) { return x * x; }, -1, 1);
  const auto sine = scalar([](double x) { return std::sin(x); }, 0, std::numbers::pi);
  convex::SamplingOptions o;
  o.seed = 10;
  o.tol = kConvexTol;
  const auto pass = convex::check_strongly_convex(sq, 2.0, 1000, convex::default_ts(), o);
  const auto fail = convex::check_strongly_convex(sq, 2.5, 1000, convex::default_ts(), o);
  const auto s1 = convex::check_convex(sine, 1000, convex::default_ts(), o);
  const auto s2 = convex::check_convex(sine, 1000, convex::default_ts(), o);
  const bool witnesses = !fail.violations.empty() && reproduces(sq, fail.violations.front(), 2.5) &&
                         !s1.violations.empty() && reproduces(sine, s1.violations.front(), 0.0) &&
                         s1.violations.front().x == s2.violations.front().x &&
                         s1.violations.front().t == s2.violations.front().t;
  const bool ok = pass.consistent() && !fail.consistent() && !s1.consistent() && witnesses;
  return {ok, "x^2: alpha=2 " + pass.verdict() + ", alpha=2.5 " + fail.verdict() + " (" +
                  std::to_string(fail.violation_count) + " violations); sin: " + s1.verdict() + " (" +
                  std::to_string(s1.violation_count) + " violations); witnesses " +
                  (witnesses ? "reproduced" : "NOT reproduced")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"examples reproduction", examples_reproduction},
      {"polygon alpha/beta equivalence", polygon_equivalence},
      {"finite sets alpha => beta", finite_direction},
      {"efficient_set_fast vs oracle", fast_matches_oracle},
      {"certificate completeness", certificate_completeness},
      {"strongly convex WE = E = SE", strongly_convex_suite},
      {"LASSO front E = WE", lasso_front},
      {"zero-matrix counterexample", zero_matrix},
      {"duplicated-column degeneracy", duplicated_column},
      {"convexity checkers", convexity_checkers},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const Clock c;
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double t = c.seconds();
    bool ok = o.ok;
    std::string timing = std::to_string(t).substr(0, 6) + " s";
    if (o.limit_s > 0.0) {
      timing += " (limit " + std::to_string(static_cast<int>(o.limit_s)) + " s)";
      ok = ok && t < o.limit_s;
    }
    std::printf("%s  %2zu  %-32s %s; %s\n", ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), o.detail.c_str(),
                timing.c_str());
    failed += !ok;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
