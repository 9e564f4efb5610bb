/**
 * @file instances.hpp
 * @brief Built-in instances: the four illustration polygons, random simple
 * polygons with integer vertices, and random strongly convex quadratic maps.
 */

#ifndef EFFSET_INSTANCES_HPP
#define EFFSET_INSTANCES_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "effset/exact.hpp"
#include "effset/geom2d.hpp"

namespace effset::instances {

struct NamedPolygon {
  std::string id;
  geom2d::Polygon2 polygon;
  std::vector<std::pair<std::string, Vec2>> labels;  // p1, p2, ... as given

  /// "p3" if q is a labelled vertex, otherwise "(x, y)" in exact form.
  std::string name_of(const Vec2& q) const {
    for (const auto& [name, v] : labels) {
      if (v == q) return name;
    }
    return "(" + to_string(q.x) + ", " + to_string(q.y) + ")";
  }
};

inline NamedPolygon make_named(std::string id, std::vector<Vec2> pts) {
  std::vector<std::pair<std::string, Vec2>> labels;
  for (std::size_t i = 0; i < pts.size(); ++i) labels.push_back({"p" + std::to_string(i + 1), pts[i]});
  geom2d::Polygon2 poly(pts);
  return {std::move(id), std::move(poly), std::move(labels)};
}

inline const std::vector<std::string>& example_ids() {
  static const std::vector<std::string> ids{"3.1", "3.2", "3.3", "3.4"};
  return ids;
}

/// The four illustration polygons, addressed as "3.1" .. "3.4".
inline NamedPolygon example_polygon(const std::string& id) {
  if (id == "3.1") return make_named(id, {{0, 1}, {1, 0}, {2, 1}, {1, 2}});
  if (id == "3.2") return make_named(id, {{0, 2}, {0, 1}, {1, 0}, {2, 0}});
  if (id == "3.3") return make_named(id, {{0, 3}, {1, 2}, {1, 1}, {2, 0}, {2, 3}});
  if (id == "3.4") return make_named(id, {{0, 3}, {2, 2}, {3, 0}, {3, 3}});
  throw std::invalid_argument("unknown example '" + id + "' (expected 3.1, 3.2, 3.3 or 3.4)");
}

namespace detail {

inline std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Vec2> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

inline std::vector<Vec2> random_lattice(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> c(lo, hi);
  std::vector<Vec2> pts;
  for (std::size_t i = 0; i < n; ++i) pts.emplace_back(c(rng), c(rng));
  return pts;
}

// Angular order around a centre; exact.
inline void sort_by_angle(std::vector<Vec2>& pts, const Vec2& c) {
  const auto half = [](const Vec2& v) { return v.y < 0 || (v.y == 0 && v.x < 0); };
  std::sort(pts.begin(), pts.end(), [&](const Vec2& p, const Vec2& q) {
    const Vec2 u = p - c, v = q - c;
    if (half(u) != half(v)) return half(u) < half(v);
    const Rational cr = cross(u, v);
    if (cr != 0) return cr > 0;
    return dot(u, u) < dot(v, v);
  });
}

}  // namespace detail

/// Convex polygon: hull of random lattice points in [lo, hi]^2.
inline geom2d::Polygon2 random_convex_polygon(std::mt19937_64& rng, int lo = 0, int hi = 10) {
  std::uniform_int_distribution<std::size_t> count(3, 12);
  while (true) {
    auto hull = detail::convex_hull(detail::random_lattice(rng, count(rng), lo, hi));
    if (hull.size() < 3) continue;
    try {
      return geom2d::Polygon2(std::move(hull));
    } catch (const std::invalid_argument&) {
    }
  }
}

/// Star-shaped simple polygon with lattice vertices (often nonconvex).
inline geom2d::Polygon2 random_star_polygon(std::mt19937_64& rng, int lo = 0, int hi = 10) {
  std::uniform_int_distribution<std::size_t> count(3, 10);
  while (true) {
    auto pts = detail::random_lattice(rng, count(rng), lo, hi);
    std::sort(pts.begin(), pts.end(), staircase_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) continue;
    Vec2 c(0, 0);
    for (const auto& p : pts) c = c + p;
    c = Rational(1, static_cast<long long>(pts.size())) * c;
    detail::sort_by_angle(pts, c);
    try {
      return geom2d::Polygon2(std::move(pts));
    } catch (const std::invalid_argument&) {
    }
  }
}

/// Polygon whose lower-left side is a random lattice walk of right, down and
/// diagonal steps, closed through the top-right corner. Rich in axis-parallel
/// steps, so both outcomes of every condition occur.
inline geom2d::Polygon2 random_staircase_polygon(std::mt19937_64& rng, int size = 10) {
  std::uniform_int_distribution<int> move(0, 4);
  std::uniform_int_distribution<int> len(1, 3);
  while (true) {
    std::vector<Vec2> chain;
    long long x = 0, y = size;
    chain.emplace_back(x, y);
    while (x < size && y > 0) {
      const int l = len(rng);
      switch (move(rng)) {
        case 0: x = std::min<long long>(size, x + l); break;
        case 1: y = std::max<long long>(0, y - l); break;
        case 2: x = std::min<long long>(size, x + l); y = std::max<long long>(0, y - l); break;
        case 3: x = std::min<long long>(size, x + l); y = std::max<long long>(0, y - 1); break;
        default: x = std::min<long long>(size, x + 1); y = std::max<long long>(0, y - l); break;
      }
      chain.emplace_back(x, y);
    }
    if (x < size) chain.emplace_back(size, 0);
    std::vector<Vec2> pts = chain;
    pts.emplace_back(size, size);
    try {
      return geom2d::Polygon2(std::move(pts));
    } catch (const std::invalid_argument&) {
    }
  }
}

/// Round-robin over the three generators.
inline geom2d::Polygon2 random_polygon(std::mt19937_64& rng, std::size_t k) {
  switch (k % 3) {
    case 0: return random_convex_polygon(rng);
    case 1: return random_star_polygon(rng);
    default: return random_staircase_polygon(rng);
  }
}

/// Strongly convex quadratic objectives f_i(x) = 1/2 x^T Q_i x + c_i^T x.
struct QuadraticMap {
  std::vector<Eigen::MatrixXd> Q;
  std::vector<Eigen::VectorXd> c;

  std::size_t objectives() const { return Q.size(); }
  std::size_t dim() const { return Q.empty() ? 0 : static_cast<std::size_t>(Q.front().rows()); }

  std::vector<double> evaluate(const Eigen::VectorXd& x) const {
    std::vector<double> out(Q.size());
    for (std::size_t i = 0; i < Q.size(); ++i) out[i] = 0.5 * x.dot(Q[i] * x) + c[i].dot(x);
    return out;
  }

  /// Minimizer of sum_i w_i f_i (unique: the weighted Hessian is positive definite).
  Eigen::VectorXd minimize_weighted(const std::vector<double>& w) const {
    const auto n = static_cast<Eigen::Index>(dim());
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(n, n);
    Eigen::VectorXd g = Eigen::VectorXd::Zero(n);
    for (std::size_t i = 0; i < Q.size(); ++i) {
      H += w[i] * Q[i];
      g += w[i] * c[i];
    }
    return H.llt().solve(-g);
  }

  /// Smallest eigenvalue over the Q_i: a common strong-convexity modulus.
  double modulus() const {
    double best = 1e300;
    for (const auto& q : Q) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(q);
      best = std::min(best, es.eigenvalues().minCoeff());
    }
    return best;
  }
};

inline QuadraticMap random_quadratic_map(std::mt19937_64& rng, std::size_t objectives,
                                         std::size_t dim) {
  std::normal_distribution<double> g(0.0, 1.0);
  QuadraticMap f;
  const auto n = static_cast<Eigen::Index>(dim);
  for (std::size_t i = 0; i < objectives; ++i) {
    Eigen::MatrixXd A(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index s = 0; s < n; ++s) A(r, s) = g(rng);
    Eigen::MatrixXd Q = A.transpose() * A + 0.5 * Eigen::MatrixXd::Identity(n, n);
    Eigen::VectorXd c(n);
    for (Eigen::Index r = 0; r < n; ++r) c(r) = 3.0 * g(rng);
    f.Q.push_back(std::move(Q));
    f.c.push_back(std::move(c));
  }
  return f;
}

}  // namespace effset::instances

#endif  // EFFSET_INSTANCES_HPP
