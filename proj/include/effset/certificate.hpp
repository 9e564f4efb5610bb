/**
 * @file certificate.hpp
 * @brief Separating-weight certificates for weakly efficient points.
 *
 * For y* and a finite Y (or the vertex list of a polytope) the certificate is
 * a weight vector a on the unit simplex maximizing
 *
 *     min_{y in Y} <a, y - y*>.
 *
 * A nonnegative optimum separates Y - y* from the open negative orthant with
 * offset zero. Every y lneq_I y* with I = {i : a_i > 0} would make the inner
 * product negative, so a valid certificate witnesses y* in M_I Y.
 *
 * The LP is solved over a growing subset of rows: solve, find the most
 * violated point of Y, add it, repeat.
 */

#ifndef EFFSET_CERTIFICATE_HPP
#define EFFSET_CERTIFICATE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "effset/effset.hpp"
#include "effset/geom2d.hpp"
#include "effset/order.hpp"
#include "effset/simplex.hpp"

namespace effset::cert {

struct Options {
  double support_tol = 1e-9;
  double margin_tol = 1e-9;
};

struct WeightCertificate {
  std::vector<double> weights;  // >= 0, sums to 1
  IndexSet support;
  double margin = 0.0;  // min over Y of <a, y - y*>
  bool verified = false;
};

/// find_certificate outcome. A negative LP optimum is reported as "no certificate".
struct CertificateResult {
  bool found = false;
  double optimum = 0.0;  // best achievable margin
  std::optional<WeightCertificate> certificate;
  std::size_t rows_used = 0;
};

/// {i : a_i > support_tol}, 1-based.
inline IndexSet support_index_set(const std::vector<double>& a, double support_tol) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0) throw std::invalid_argument("weights must be nonnegative");
    if (a[i] > support_tol) idx.push_back(i + 1);
  }
  if (idx.empty()) throw std::invalid_argument("invalid weights: every weight is below the support tolerance");
  return IndexSet(std::move(idx));
}

inline double margin_of(const PointSet& Y, const Point& y_star, const std::vector<double>& a) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& y : Y.points()) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * (y[i] - y_star[i]);
    best = std::min(best, s);
  }
  return best;
}

/// Rechecks margin >= -tol on all of Y and y* in M_I (Y + {y*}) exactly.
inline bool verify_certificate(const PointSet& Y, const Point& y_star,
                               const WeightCertificate& cert, double margin_tol = 1e-9) {
  if (cert.weights.size() != y_star.dim() || (!Y.empty() && Y.dim() != y_star.dim())) {
    return false;
  }
  if (margin_of(Y, y_star, cert.weights) < -margin_tol) return false;
  std::vector<Point> pts = Y.points();
  pts.push_back(y_star);
  const PointSet with_star(std::move(pts));
  const auto eff = efficient_set(with_star, cert.support);
  return std::binary_search(eff.begin(), eff.end(), with_star.size() - 1);
}

inline CertificateResult find_certificate(const PointSet& Y, const Point& y_star,
                                          const Options& opt = {}) {
  if (Y.empty()) throw std::invalid_argument("point set is empty");
  if (Y.dim() != y_star.dim()) throw std::invalid_argument("dimension mismatch with y*");
  const std::size_t m = y_star.dim();
  const std::size_t n = Y.size();

  std::vector<std::vector<double>> d(n, std::vector<double>(m));
  double scale = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      d[k][i] = Y[k][i] - y_star[i];
      scale = std::max(scale, std::abs(d[k][i]));
    }
  }

  CertificateResult res;
  std::vector<double> a(m, 1.0 / static_cast<double>(m));
  if (scale == 0.0) {
    // Y = {y*}: every weight vector works.
    res.found = true;
    res.optimum = 0.0;
  } else {
    // Variables (a_1..a_m, s) with t = s - K and K large enough that s >= 0.
    const double K = scale + 1.0;
    std::vector<char> active(n, 0);
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t arg = 0;
      for (std::size_t k = 1; k < n; ++k) {
        if (d[k][i] < d[arg][i]) arg = k;
      }
      if (!active[arg]) {
        active[arg] = 1;
        rows.push_back(arg);
      }
    }
    double t_opt = 0.0;
    while (true) {
      lp::Problem prob;
      prob.objective.assign(m + 1, 0.0);
      prob.objective[m] = 1.0;
      prob.maximize = true;
      for (std::size_t k : rows) {
        lp::Constraint c;
        c.coeffs.resize(m + 1);
        for (std::size_t i = 0; i < m; ++i) c.coeffs[i] = -d[k][i];
        c.coeffs[m] = 1.0;
        c.sense = lp::Sense::LessEq;
        c.rhs = K;
        prob.rows.push_back(std::move(c));
      }
      lp::Constraint simplex_row;
      simplex_row.coeffs.assign(m + 1, 1.0);
      simplex_row.coeffs[m] = 0.0;
      simplex_row.sense = lp::Sense::Equal;
      simplex_row.rhs = 1.0;
      prob.rows.push_back(std::move(simplex_row));

      const auto sol = lp::solve(prob);
      if (sol.status != lp::Status::Optimal) {
        throw std::runtime_error("certificate LP did not reach an optimum");
      }
      a.assign(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(m));
      t_opt = sol.x[m] - K;

      std::size_t worst = n;
      double worst_val = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < n; ++k) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += a[i] * d[k][i];
        if (s < worst_val) {
          worst_val = s;
          worst = k;
        }
      }
      if (worst_val >= t_opt - 1e-12 * (1.0 + scale) || active[worst]) break;
      active[worst] = 1;
      rows.push_back(worst);
    }
    res.rows_used = rows.size();
    res.optimum = t_opt;
  }

  for (auto& w : a) w = std::max(w, 0.0);
  double sum = 0.0;
  for (double w : a) sum += w;
  for (auto& w : a) w /= sum;

  WeightCertificate c;
  c.weights = a;
  c.margin = scale == 0.0 ? 0.0 : margin_of(Y, y_star, a);
  res.found = c.margin >= -opt.margin_tol;
  if (!res.found) return res;
  c.support = support_index_set(a, opt.support_tol);
  c.verified = verify_certificate(Y, y_star, c, opt.margin_tol);
  res.certificate = std::move(c);
  return res;
}

/// Polytope input: extrema of linear functionals are attained at vertices.
inline CertificateResult find_certificate(const geom2d::Polygon2& P, const Point& y_star,
                                          const Options& opt = {}) {
  std::vector<Point> pts;
  for (const auto& v : P.vertices()) pts.push_back(Point{to_double(v.x), to_double(v.y)});
  return find_certificate(PointSet(std::move(pts)), y_star, opt);
}

}  // namespace effset::cert

#endif  // EFFSET_CERTIFICATE_HPP
