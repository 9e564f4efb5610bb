/**
 * @file simplex.hpp
 * @brief Dense two-phase primal simplex for small linear programs.
 *
 * Solves  max/min c^T x  subject to rows a_i^T x (<=, >=, =) b_i  and x >= 0.
 * Pivoting follows Bland's rule, so the returned vertex is deterministic and
 * the method cannot cycle.
 */

#ifndef EFFSET_SIMPLEX_HPP
#define EFFSET_SIMPLEX_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace effset::lp {

enum class Sense { LessEq, GreaterEq, Equal };

struct Constraint {
  std::vector<double> coeffs;
  Sense sense = Sense::LessEq;
  double rhs = 0.0;
};

struct Problem {
  std::vector<double> objective;
  bool maximize = true;
  std::vector<Constraint> rows;
};

enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };

struct Solution {
  Status status = Status::Infeasible;
  std::vector<double> x;
  double objective = 0.0;
  std::size_t iterations = 0;
};

namespace detail {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * (cols + 1), 0.0), basis_(rows, 0) {}

  double& at(std::size_t i, std::size_t j) { return a_[i * (cols_ + 1) + j]; }
  double at(std::size_t i, std::size_t j) const { return a_[i * (cols_ + 1) + j]; }
  double& rhs(std::size_t i) { return at(i, cols_); }
  double rhs(std::size_t i) const { return at(i, cols_); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t r, std::size_t c) {
    const double p = at(r, c);
    for (std::size_t j = 0; j <= cols_; ++j) at(r, j) /= p;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const double f = at(i, c);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) at(i, j) -= f * at(r, j);
    }
    basis_[r] = c;
  }

  void drop_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r * (cols_ + 1)),
             a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * (cols_ + 1)));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --rows_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<double> a_;
  std::vector<std::size_t> basis_;
};

// Minimizes cost^T x over the current tableau, restricted to allowed columns.
inline Status run_phase(Tableau& t, const std::vector<double>& cost,
                        const std::vector<char>& allowed, double tol, std::size_t max_iter,
                        std::size_t& iterations) {
  const std::size_t n = t.cols();
  std::vector<double> reduced(n);
  while (true) {
    if (iterations >= max_iter) return Status::IterationLimit;
    for (std::size_t j = 0; j < n; ++j) {
      double z = 0.0;
      for (std::size_t i = 0; i < t.rows(); ++i) z += cost[t.basis()[i]] * t.at(i, j);
      reduced[j] = cost[j] - z;
    }
    std::size_t enter = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (allowed[j] && reduced[j] < -tol) {
        enter = j;
        break;
      }
    }
    if (enter == n) return Status::Optimal;
    std::size_t leave = t.rows();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < t.rows(); ++i) {
      const double a = t.at(i, enter);
      if (a <= tol) continue;
      const double ratio = t.rhs(i) / a;
      if (ratio < best - tol ||
          (ratio <= best + tol && leave < t.rows() && t.basis()[i] < t.basis()[leave])) {
        best = std::min(best, ratio);
        leave = i;
      }
    }
    if (leave == t.rows()) return Status::Unbounded;
    t.pivot(leave, enter);
    ++iterations;
  }
}

}  // namespace detail

inline Solution solve(const Problem& prob, double tol = 1e-11, std::size_t max_iter = 100000) {
  const std::size_t n = prob.objective.size();
  const std::size_t m = prob.rows.size();
  for (const auto& r : prob.rows) {
    if (r.coeffs.size() != n) throw std::invalid_argument("constraint width mismatch");
  }
  // Normalize to nonnegative right-hand sides.
  std::vector<Constraint> rows = prob.rows;
  for (auto& r : rows) {
    if (r.rhs < 0) {
      for (auto& a : r.coeffs) a = -a;
      r.rhs = -r.rhs;
      if (r.sense == Sense::LessEq) {
        r.sense = Sense::GreaterEq;
      } else if (r.sense == Sense::GreaterEq) {
        r.sense = Sense::LessEq;
      }
    }
  }
  std::size_t n_slack = 0, n_art = 0;
  for (const auto& r : rows) {
    if (r.sense != Sense::Equal) ++n_slack;
    if (r.sense != Sense::LessEq) ++n_art;
  }
  const std::size_t cols = n + n_slack + n_art;
  detail::Tableau t(m, cols);
  std::vector<char> is_art(cols, 0);
  std::size_t next_slack = n, next_art = n + n_slack;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.at(i, j) = rows[i].coeffs[j];
    t.rhs(i) = rows[i].rhs;
    switch (rows[i].sense) {
      case Sense::LessEq:
        t.at(i, next_slack) = 1.0;
        t.basis()[i] = next_slack++;
        break;
      case Sense::GreaterEq:
        t.at(i, next_slack++) = -1.0;
        t.at(i, next_art) = 1.0;
        is_art[next_art] = 1;
        t.basis()[i] = next_art++;
        break;
      case Sense::Equal:
        t.at(i, next_art) = 1.0;
        is_art[next_art] = 1;
        t.basis()[i] = next_art++;
        break;
    }
  }

  Solution sol;
  std::vector<char> allowed(cols, 1);
  if (n_art > 0) {
    std::vector<double> cost(cols, 0.0);
    for (std::size_t j = 0; j < cols; ++j) cost[j] = is_art[j] ? 1.0 : 0.0;
    auto st = detail::run_phase(t, cost, allowed, tol, max_iter, sol.iterations);
    if (st == Status::IterationLimit) {
      sol.status = st;
      return sol;
    }
    double infeas = 0.0;
    for (std::size_t i = 0; i < t.rows(); ++i) {
      if (is_art[t.basis()[i]]) infeas += t.rhs(i);
    }
    if (infeas > 1e-9) {
      sol.status = Status::Infeasible;
      return sol;
    }
    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < t.rows();) {
      if (!is_art[t.basis()[i]]) {
        ++i;
        continue;
      }
      std::size_t c = cols;
      for (std::size_t j = 0; j < cols; ++j) {
        if (!is_art[j] && std::abs(t.at(i, j)) > tol) {
          c = j;
          break;
        }
      }
      if (c == cols) {
        t.drop_row(i);
      } else {
        t.pivot(i, c);
        ++i;
      }
    }
    for (std::size_t j = 0; j < cols; ++j) allowed[j] = !is_art[j];
  }

  std::vector<double> cost(cols, 0.0);
  for (std::size_t j = 0; j < n; ++j) cost[j] = prob.maximize ? -prob.objective[j] : prob.objective[j];
  sol.status = detail::run_phase(t, cost, allowed, tol, max_iter, sol.iterations);
  sol.x.assign(n, 0.0);
  for (std::size_t i = 0; i < t.rows(); ++i) {
    if (t.basis()[i] < n) sol.x[t.basis()[i]] = t.rhs(i);
  }
  sol.objective = 0.0;
  for (std::size_t j = 0; j < n; ++j) sol.objective += prob.objective[j] * sol.x[j];
  return sol;
}

}  // namespace effset::lp

#endif  // EFFSET_SIMPLEX_HPP
