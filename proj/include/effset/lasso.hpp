/**
 * @file lasso.hpp
 * @brief Bi-objective LASSO with the epsilon-modified objectives
 *
 *     f1~(theta) = f1 + eps |theta|_1,   f2~(theta) = (1 + eps) |theta|_1,
 *     f1(theta)  = |X theta - y|^2 / (2 m_rows).
 *
 * A weight w in (0, 1] reduces w f1~ + (1 - w) f2~ to the ordinary LASSO
 * f1 + lambda_eff |theta|_1 with lambda_eff = eps + (1 - w)/w (1 + eps),
 * solved by accelerated proximal gradient with restart.
 */

#ifndef EFFSET_LASSO_HPP
#define EFFSET_LASSO_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "effset/effset.hpp"

namespace effset::lasso {

struct LassoProblem {
  Eigen::MatrixXd X;
  Eigen::VectorXd y;
  double epsilon = 0.0;

  std::size_t rows() const { return static_cast<std::size_t>(X.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(X.cols()); }

  /// Throws on inconsistent shapes or a negative epsilon. epsilon = 0 is the
  /// unmodified problem and is allowed for demonstrations.
  void validate() const {
    if (X.rows() == 0 || X.cols() == 0) throw std::invalid_argument("design matrix must be nonempty");
    if (y.size() != X.rows()) throw std::invalid_argument("response length does not match design rows");
    if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) throw std::invalid_argument("epsilon must be a nonnegative real");
    if (!X.allFinite() || !y.allFinite()) throw std::invalid_argument("design and responses must be finite");
  }
};

struct Objectives {
  double f1 = 0.0, f2 = 0.0, f1_tilde = 0.0, f2_tilde = 0.0;
};

inline Objectives objectives(const LassoProblem& p, const Eigen::VectorXd& theta) {
  if (theta.size() != p.X.cols() || p.y.size() != p.X.rows()) throw std::invalid_argument("dimension mismatch");
  Objectives o;
  o.f1 = (p.X * theta - p.y).squaredNorm() / (2.0 * static_cast<double>(p.rows()));
  o.f2 = theta.lpNorm<1>();
  o.f1_tilde = o.f1 + p.epsilon * o.f2;
  o.f2_tilde = (1.0 + p.epsilon) * o.f2;
  return o;
}

inline double soft_threshold(double v, double tau) {
  if (!(tau >= 0.0)) throw std::invalid_argument("threshold must be nonnegative");
  if (v > tau) return v - tau;
  if (v < -tau) return v + tau;
  return 0.0;
}

inline double lambda_eff(double w, double epsilon) {
  if (!(w > 0.0 && w <= 1.0)) throw std::invalid_argument("weight must lie in (0, 1]");
  return epsilon + (1.0 - w) / w * (1.0 + epsilon);
}

struct SolverOptions {
  double tol = 1e-8;
  std::size_t max_iter = 50000;
};

struct ScalarizedSolution {
  Eigen::VectorXd theta;
  double lambda = 0.0;
  double kkt_residual = 0.0;
  std::size_t iterations = 0;
};

class SolverFailure : public std::runtime_error {
 public:
  SolverFailure(double best_residual, Eigen::VectorXd best_theta)
      : std::runtime_error("no convergence: best KKT residual " + std::to_string(best_residual)),
        best_residual_(best_residual),
        best_theta_(std::move(best_theta)) {}
  double best_residual() const noexcept { return best_residual_; }
  const Eigen::VectorXd& best_theta() const noexcept { return best_theta_; }

 private:
  double best_residual_;
  Eigen::VectorXd best_theta_;
};

/// Largest violation of 0 in grad f1 + lambda * subdifferential |theta|_1.
inline double kkt_residual(const LassoProblem& p, const Eigen::VectorXd& theta, double lambda) {
  const Eigen::VectorXd g = p.X.transpose() * (p.X * theta - p.y) / static_cast<double>(p.rows());
  double r = 0.0;
  for (Eigen::Index i = 0; i < theta.size(); ++i) {
    if (theta(i) != 0.0) {
      r = std::max(r, std::abs(g(i) + lambda * (theta(i) > 0 ? 1.0 : -1.0)));
    } else {
      r = std::max(r, std::max(0.0, std::abs(g(i)) - lambda));
    }
  }
  return r;
}

/// Power-iteration estimate of the largest eigenvalue of X^T X / m_rows.
inline double lipschitz_constant(const Eigen::MatrixXd& X) {
  const double m = static_cast<double>(X.rows());
  Eigen::VectorXd v = Eigen::VectorXd::Ones(X.cols()) / std::sqrt(static_cast<double>(X.cols()));
  double est = 0.0;
  for (int it = 0; it < 500; ++it) {
    Eigen::VectorXd w = X.transpose() * (X * v) / m;
    const double nw = w.norm();
    if (nw == 0.0) return 0.0;
    const double next = v.dot(w);
    v = w / nw;
    if (std::abs(next - est) <= 1e-12 * std::max(1.0, next)) {
      est = next;
      break;
    }
    est = next;
  }
  return est;
}

/// Minimizes f1 + lambda |theta|_1.
inline ScalarizedSolution solve_lasso(const LassoProblem& p, double lambda, const SolverOptions& opt = {},
                                      const std::optional<Eigen::VectorXd>& start = std::nullopt) {
  p.validate();
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("lambda must be a nonnegative real");
  const auto n = p.X.cols();
  const double m = static_cast<double>(p.rows());
  if (start && start->size() != n) throw std::invalid_argument("start has the wrong length");

  double L = lipschitz_constant(p.X);
  L = L > 0.0 ? 1.01 * L : 1.0;

  const auto F = [&](const Eigen::VectorXd& th) {
    return (p.X * th - p.y).squaredNorm() / (2.0 * m) + lambda * th.lpNorm<1>();
  };
  const auto prox_step = [&](const Eigen::VectorXd& z) {
    const Eigen::VectorXd g = p.X.transpose() * (p.X * z - p.y) / m;
    Eigen::VectorXd out(n);
    for (Eigen::Index i = 0; i < n; ++i) out(i) = soft_threshold(z(i) - g(i) / L, lambda / L);
    return out;
  };

  Eigen::VectorXd theta = start ? *start : Eigen::VectorXd::Zero(n);
  Eigen::VectorXd z = theta;
  double t = 1.0, Fx = F(theta);
  ScalarizedSolution best{theta, lambda, kkt_residual(p, theta, lambda), 0};
  if (best.kkt_residual <= opt.tol) return best;

  for (std::size_t it = 1; it <= opt.max_iter; ++it) {
    Eigen::VectorXd cand = prox_step(z);
    const double Fc = F(cand);
    if (Fc > Fx && t > 1.0) {
      // Momentum overshot: restart from the last accepted iterate.
      z = theta;
      t = 1.0;
      continue;
    }
    const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    z = cand + ((t - 1.0) / t_next) * (cand - theta);
    theta = std::move(cand);
    t = t_next;
    Fx = Fc;
    const double r = kkt_residual(p, theta, lambda);
    if (r < best.kkt_residual) best = {theta, lambda, r, it};
    if (r <= opt.tol) return best;
  }
  throw SolverFailure(best.kkt_residual, best.theta);
}

inline ScalarizedSolution solve_scalarized(const LassoProblem& p, double w, const SolverOptions& opt = {},
                                           const std::optional<Eigen::VectorXd>& start = std::nullopt) {
  return solve_lasso(p, lambda_eff(w, p.epsilon), opt, start);
}

struct SweepEntry {
  double weight = 0.0;
  std::optional<double> lambda_eff;  // empty for the w = 0 endpoint
  Eigen::VectorXd theta;
  Objectives objectives;
  double kkt_residual = 0.0;
  std::size_t iterations = 0;
  bool ok = false;
  bool analytic_endpoint = false;
  std::string error;
};

struct SweepResult {
  std::vector<SweepEntry> entries;
};

/// Weights 1/(1 + 10^s), s evenly spaced on [-3, 1], plus w = 1; ascending.
inline std::vector<double> default_weights(std::size_t count = 20) {
  if (count == 0) return {};
  std::vector<double> w{1.0};
  for (std::size_t k = 0; k + 1 < count; ++k) {
    const double s = count > 2 ? -3.0 + 4.0 * static_cast<double>(k) / static_cast<double>(count - 2) : -3.0;
    w.push_back(1.0 / (1.0 + std::pow(10.0, s)));
  }
  std::sort(w.begin(), w.end());
  return w;
}

inline SweepResult pareto_sweep(const LassoProblem& p, const std::vector<double>& weights,
                                const SolverOptions& opt = {}, bool include_zero_weight = false) {
  p.validate();
  for (double w : weights) {
    if (!(w > 0.0 && w <= 1.0)) throw std::invalid_argument("sweep weights must lie in (0, 1]");
  }
  SweepResult res;
  if (include_zero_weight) {
    // w = 0 minimizes f2~ alone: theta = 0.
    SweepEntry e;
    e.theta = Eigen::VectorXd::Zero(p.X.cols());
    e.objectives = objectives(p, e.theta);
    e.ok = true;
    e.analytic_endpoint = true;
    res.entries.push_back(std::move(e));
  }
  for (double w : weights) {
    SweepEntry e;
    e.weight = w;
    e.lambda_eff = lambda_eff(w, p.epsilon);
    try {
      const auto s = solve_lasso(p, *e.lambda_eff, opt);
      e.theta = s.theta;
      e.kkt_residual = s.kkt_residual;
      e.iterations = s.iterations;
      e.ok = true;
    } catch (const SolverFailure& f) {
      e.theta = f.best_theta();
      e.kkt_residual = f.best_residual();
      e.iterations = opt.max_iter;
      e.error = f.what();
    }
    e.objectives = objectives(p, e.theta);
    res.entries.push_back(std::move(e));
  }
  return res;
}

struct Theorem71Report {
  double tol = 0.0;
  std::size_t checked = 0;
  std::vector<std::size_t> weak_only;  // positions in the input list
  bool holds() const noexcept { return weak_only.empty(); }
};

/// Tolerance-aware dominance on (f1~, f2~) pairs: strict dominance needs
/// every margin > tol; lneq needs one margin > tol and none below -tol.
inline Theorem71Report check_theorem_71(const std::vector<std::pair<double, double>>& pts, double tol) {
  Theorem71Report rep;
  rep.tol = tol;
  rep.checked = pts.size();
  for (std::size_t j = 0; j < pts.size(); ++j) {
    bool weak = true, eff = true;
    for (std::size_t i = 0; i < pts.size() && weak; ++i) {
      const double d1 = pts[j].first - pts[i].first, d2 = pts[j].second - pts[i].second;
      if (d1 > tol && d2 > tol) weak = false;
      if ((d1 > tol || d2 > tol) && d1 >= -tol && d2 >= -tol) eff = false;
    }
    if (weak && !eff) rep.weak_only.push_back(j);
  }
  return rep;
}

/// Runs on the accepted entries; weak_only holds entry positions in sr.
inline Theorem71Report check_theorem_71(const SweepResult& sr, double tol = 1e-6) {
  std::vector<std::pair<double, double>> pts;
  std::vector<std::size_t> pos;
  for (std::size_t k = 0; k < sr.entries.size(); ++k) {
    if (!sr.entries[k].ok) continue;
    pts.emplace_back(sr.entries[k].objectives.f1_tilde, sr.entries[k].objectives.f2_tilde);
    pos.push_back(k);
  }
  auto rep = check_theorem_71(pts, tol);
  for (auto& j : rep.weak_only) j = pos[j];
  return rep;
}

struct ZeroMatrixReport {
  double epsilon = 0.0;
  std::vector<Eigen::VectorXd> samples;
  std::vector<std::pair<double, double>> images;  // (f1~, f2~)
  std::vector<std::size_t> weakly_efficient, efficient;
  std::vector<std::size_t> weak_only;
};

/// Exact dominance on the images of the given samples under X = 0.
inline ZeroMatrixReport zero_matrix_counterexample(std::vector<Eigen::VectorXd> samples, const Eigen::VectorXd& y,
                                                   double epsilon) {
  if (samples.empty()) throw std::invalid_argument("need at least one sample");
  LassoProblem p{Eigen::MatrixXd::Zero(y.size(), samples.front().size()), y, epsilon};
  p.validate();
  ZeroMatrixReport rep;
  rep.epsilon = epsilon;
  std::vector<Point> pts;
  for (const auto& th : samples) {
    const auto o = objectives(p, th);
    rep.images.emplace_back(o.f1_tilde, o.f2_tilde);
    pts.push_back(Point{o.f1_tilde, o.f2_tilde});
  }
  const PointSet Y(pts);
  rep.weakly_efficient = weakly_efficient_set(Y);
  rep.efficient = efficient_set(Y);
  std::set_difference(rep.weakly_efficient.begin(), rep.weakly_efficient.end(), rep.efficient.begin(),
                      rep.efficient.end(), std::back_inserter(rep.weak_only));
  rep.samples = std::move(samples);
  return rep;
}

/// Samples 0, 1 e_1, 2 e_2, ..., cycling through the n axes.
inline ZeroMatrixReport zero_matrix_counterexample(std::size_t n, std::size_t count, double epsilon,
                                                   std::size_t rows = 3) {
  if (n == 0 || count == 0 || rows == 0) throw std::invalid_argument("sizes must be positive");
  std::vector<Eigen::VectorXd> s;
  for (std::size_t k = 0; k < count; ++k) {
    Eigen::VectorXd th = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    if (k > 0) th(static_cast<Eigen::Index>((k - 1) % n)) = static_cast<double>(k);
    s.push_back(std::move(th));
  }
  return zero_matrix_counterexample(std::move(s), Eigen::VectorXd::Ones(static_cast<Eigen::Index>(rows)), epsilon);
}

struct Lemma72Report {
  std::vector<Eigen::VectorXd> minimizers;
  std::vector<double> squared_residuals;  // |X theta - y|^2
  std::vector<double> l1_norms;
  double residual_spread = 0.0, l1_spread = 0.0;
  double tol = 0.0;
  bool agree() const noexcept { return residual_spread <= tol && l1_spread <= tol; }
};

/// Minimizes f1~ = f1 + eps |theta|_1 from each start and compares the invariants.
inline Lemma72Report lemma_72_check(const LassoProblem& p, const std::vector<Eigen::VectorXd>& starts,
                                    double tol = 1e-6, const SolverOptions& opt = {}) {
  if (starts.empty()) throw std::invalid_argument("need at least one start");
  Lemma72Report rep;
  rep.tol = tol;
  for (const auto& s : starts) {
    const auto sol = solve_lasso(p, p.epsilon, opt, s);
    rep.minimizers.push_back(sol.theta);
    rep.squared_residuals.push_back((p.X * sol.theta - p.y).squaredNorm());
    rep.l1_norms.push_back(sol.theta.lpNorm<1>());
  }
  const auto spread = [](const std::vector<double>& v) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return *hi - *lo;
  };
  rep.residual_spread = spread(rep.squared_residuals);
  rep.l1_spread = spread(rep.l1_norms);
  return rep;
}

struct SyntheticSpec {
  std::size_t rows = 50;
  std::size_t cols = 20;
  std::size_t sparsity = 5;
  double sigma = 0.1;
  double epsilon = 1e-3;
  std::uint64_t seed = 0;
};

/// Gaussian design, k-sparse ground truth with entries of magnitude in [1, 2]
/// and random sign, Gaussian noise of scale sigma.
inline LassoProblem synthetic_problem(const SyntheticSpec& s, Eigen::VectorXd* truth = nullptr) {
  if (s.rows == 0 || s.cols == 0 || s.sparsity > s.cols) throw std::invalid_argument("bad synthetic sizes");
  if (!(s.sigma >= 0.0)) throw std::invalid_argument("noise scale must be nonnegative");
  std::mt19937_64 rng(s.seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> mag(1.0, 2.0);
  const auto m = static_cast<Eigen::Index>(s.rows), n = static_cast<Eigen::Index>(s.cols);
  LassoProblem p;
  p.X.resize(m, n);
  for (Eigen::Index r = 0; r < m; ++r)
    for (Eigen::Index c = 0; c < n; ++c) p.X(r, c) = g(rng);
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(n));
  for (Eigen::Index c = 0; c < n; ++c) idx[static_cast<std::size_t>(c)] = c;
  std::shuffle(idx.begin(), idx.end(), rng);
  Eigen::VectorXd th = Eigen::VectorXd::Zero(n);
  for (std::size_t k = 0; k < s.sparsity; ++k) th(idx[k]) = (g(rng) < 0 ? -1.0 : 1.0) * mag(rng);
  p.y = p.X * th;
  for (Eigen::Index r = 0; r < m; ++r) p.y(r) += s.sigma * g(rng);
  p.epsilon = s.epsilon;
  if (truth) *truth = th;
  return p;
}

}  // namespace effset::lasso

#endif  // EFFSET_LASSO_HPP
