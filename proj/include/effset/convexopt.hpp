// Sampled convexity checks for vector-valued maps and the property harnesses
// built on them. Every check here is one-sided: an empty violation list means
// "consistent with", a witness means "refuted".

#ifndef EFFSET_CONVEXOPT_HPP
#define EFFSET_CONVEXOPT_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "effset/effset.hpp"
#include "effset/order.hpp"

namespace effset::convex {

using Vector = std::vector<double>;

class ConvexDomain {
 public:
  using Constraint = std::function<double(const Vector&)>;
  using Sampler = std::function<Vector(std::mt19937_64&)>;

  static ConvexDomain box(Vector lo, Vector hi) {
    if (lo.empty() || lo.size() != hi.size()) throw std::invalid_argument("box bounds must be nonempty and of equal length");
    for (std::size_t i = 0; i < lo.size(); ++i) {
      if (!(lo[i] <= hi[i])) throw std::invalid_argument("box bound lo > hi");
    }
    ConvexDomain d;
    d.lo_ = std::move(lo);
    d.hi_ = std::move(hi);
    d.dim_ = d.lo_.size();
    return d;
  }

  /// Omega = {x : g_j(x) <= 0 for all j}. Convexity is the caller's claim.
  static ConvexDomain constrained(std::size_t dim, std::vector<Constraint> g, Sampler sampler) {
    if (dim == 0) throw std::invalid_argument("domain dimension must be positive");
    if (!sampler) throw std::invalid_argument("constrained domain needs a sampler");
    ConvexDomain d;
    d.dim_ = dim;
    d.g_ = std::move(g);
    d.sampler_ = std::move(sampler);
    return d;
  }

  std::size_t dim() const noexcept { return dim_; }
  bool is_box() const noexcept { return !sampler_; }

  bool contains(const Vector& x, double tol = 1e-12) const {
    if (x.size() != dim_) return false;
    if (is_box()) {
      for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] < lo_[i] - tol || x[i] > hi_[i] + tol) return false;
      }
      return true;
    }
    for (const auto& gj : g_) {
      if (gj(x) > tol) return false;
    }
    return true;
  }

  /// levels > 1 snaps box samples to a uniform grid (tie-rich sampling).
  Vector sample(std::mt19937_64& rng, std::size_t levels = 0) const {
    if (is_box()) {
      Vector x(dim_);
      std::uniform_real_distribution<double> u(0.0, 1.0);
      std::uniform_int_distribution<std::size_t> k(0, levels > 1 ? levels - 1 : 0);
      for (std::size_t i = 0; i < dim_; ++i) {
        const double s = levels > 1 ? static_cast<double>(k(rng)) / static_cast<double>(levels - 1) : u(rng);
        x[i] = lo_[i] + s * (hi_[i] - lo_[i]);
      }
      return x;
    }
    Vector x = sampler_(rng);
    if (!contains(x, 1e-9)) throw std::runtime_error("domain sampler produced a point outside the domain");
    return x;
  }

  /// Every point of the levels^dim grid on a box, or nothing if that exceeds max_points.
  std::vector<Vector> full_grid(std::size_t levels, std::size_t max_points) const {
    if (!is_box() || levels < 2) return {};
    double count = 1.0;
    for (std::size_t i = 0; i < dim_; ++i) count *= static_cast<double>(levels);
    if (count > static_cast<double>(max_points)) return {};
    std::vector<Vector> out;
    std::vector<std::size_t> idx(dim_, 0);
    while (true) {
      Vector x(dim_);
      for (std::size_t i = 0; i < dim_; ++i) {
        x[i] = lo_[i] + static_cast<double>(idx[i]) / static_cast<double>(levels - 1) * (hi_[i] - lo_[i]);
      }
      out.push_back(std::move(x));
      std::size_t i = 0;
      while (i < dim_ && ++idx[i] == levels) idx[i++] = 0;
      if (i == dim_) break;
    }
    return out;
  }

 private:
  std::size_t dim_ = 0;
  Vector lo_, hi_;
  std::vector<Constraint> g_;
  Sampler sampler_;
};

struct SampledMapping {
  std::function<Vector(const Vector&)> evaluate;
  ConvexDomain domain;

  Vector operator()(const Vector& x) const {
    Vector y = evaluate(x);
    if (y.empty()) throw std::runtime_error("mapping returned an empty vector");
    for (double v : y) {
      if (!std::isfinite(v)) throw std::runtime_error("mapping returned a non-finite value");
    }
    return y;
  }
};

struct SamplingOptions {
  std::uint64_t seed = 0;
  std::size_t random_ts = 5;
  double tol = 1e-9;
  std::size_t max_recorded = 64;
};

inline const std::vector<double>& default_ts() {
  static const std::vector<double> ts{0.25, 0.5, 0.75};
  return ts;
}

struct Violation {
  Vector x, y;
  double t = 0.0;
  std::size_t coordinate = 0;  // 1-based objective index
  double lhs = 0.0, rhs = 0.0;
};

struct ConvexityReport {
  std::uint64_t seed = 0;
  std::size_t checked_pairs = 0;
  std::size_t checked_triples = 0;
  std::size_t violation_count = 0;
  std::size_t outside_domain = 0;  // combinations a constrained domain did not contain
  std::vector<Violation> violations;  // first max_recorded
  std::optional<double> modulus_alpha;

  bool consistent() const noexcept { return violation_count == 0; }
  std::string verdict() const { return consistent() ? "consistent with" : "refuted"; }
};

namespace detail {

inline double sq_dist(const Vector& a, const Vector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

inline Vector combine(double t, const Vector& x, const Vector& y) {
  Vector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = t * x[i] + (1.0 - t) * y[i];
  return z;
}

inline ConvexityReport run_convexity(const SampledMapping& f, std::size_t trials,
                                     const std::vector<double>& ts, double alpha,
                                     const SamplingOptions& opt) {
  for (double t : ts) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("t values must lie in [0, 1]");
  }
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> ut(0.0, 1.0);
  ConvexityReport rep;
  rep.seed = opt.seed;
  if (alpha > 0.0) rep.modulus_alpha = alpha;
  for (std::size_t k = 0; k < trials; ++k) {
    const Vector x = f.domain.sample(rng), y = f.domain.sample(rng);
    const Vector fx = f(x), fy = f(y);
    std::vector<double> all_ts = ts;
    for (std::size_t r = 0; r < opt.random_ts; ++r) all_ts.push_back(ut(rng));
    const double d2 = sq_dist(x, y);
    ++rep.checked_pairs;
    for (double t : all_ts) {
      const Vector z = combine(t, x, y);
      if (!f.domain.is_box() && !f.domain.contains(z, 1e-9)) {
        ++rep.outside_domain;
        continue;
      }
      const Vector fz = f(z);
      ++rep.checked_triples;
      for (std::size_t i = 0; i < fz.size(); ++i) {
        const double rhs = t * fx[i] + (1.0 - t) * fy[i] - 0.5 * alpha * t * (1.0 - t) * d2;
        if (fz[i] > rhs + opt.tol) {
          ++rep.violation_count;
          if (rep.violations.size() < opt.max_recorded) rep.violations.push_back({x, y, t, i + 1, fz[i], rhs});
        }
      }
    }
  }
  return rep;
}

}  // namespace detail

inline ConvexityReport check_convex(const SampledMapping& f, std::size_t trials,
                                    const std::vector<double>& ts = default_ts(),
                                    const SamplingOptions& opt = {}) {
  return detail::run_convexity(f, trials, ts, 0.0, opt);
}

/// f(tx + (1-t)y) <= t f(x) + (1-t) f(y) - alpha/2 t(1-t) |x - y|^2, per coordinate.
inline ConvexityReport check_strongly_convex(const SampledMapping& f, double alpha, std::size_t trials,
                                             const std::vector<double>& ts = default_ts(),
                                             const SamplingOptions& opt = {}) {
  if (!(alpha > 0.0)) throw std::invalid_argument("strong convexity modulus must be positive");
  return detail::run_convexity(f, trials, ts, alpha, opt);
}

/// Some image point is componentwise <= z + slack.
inline bool fdh_membership(const PointSet& images, const Point& z, double slack = 0.0) {
  if (!images.empty() && images.dim() != z.dim()) throw std::invalid_argument("dimension mismatch");
  for (const auto& y : images.points()) {
    bool le = true;
    for (std::size_t i = 0; i < z.dim() && le; ++i) le = y[i] <= z[i] + slack;
    if (le) return true;
  }
  return false;
}

/// FDH of a finite set is convex iff one point is <= every other point.
inline bool finite_fdh_is_convex(const PointSet& Y) {
  if (Y.size() <= 1) return true;
  for (const auto& c : Y.points()) {
    bool below_all = true;
    for (const auto& y : Y.points()) {
      for (std::size_t i = 0; i < y.dim() && below_all; ++i) below_all = c[i] <= y[i];
      if (!below_all) break;
    }
    if (below_all) return true;
  }
  return false;
}

struct FdhSampleOptions {
  std::uint64_t seed = 0;
  std::size_t pairs = 1000;
  double slack = 1e-6;
  std::size_t max_recorded = 64;
};

struct FdhSampleReport {
  std::uint64_t seed = 0;
  std::size_t image_samples = 0;
  std::size_t pairs_tested = 0;
  std::size_t violations = 0;
  double rate = 0.0;
  std::vector<Vector> witnesses;  // midpoints found outside the sampled hull

  bool consistent() const noexcept { return violations == 0; }
  std::string verdict() const { return consistent() ? "consistent with" : "refuted"; }
};

/// Midpoints of random FDH members z_k = f(x_k) + r_k are tested against the
/// dense image sample plus f at the midpoint of the preimages.
inline FdhSampleReport check_fdh_convexity_sampled(const SampledMapping& f, std::size_t samples,
                                                   const FdhSampleOptions& opt = {}) {
  if (samples == 0) throw std::invalid_argument("need at least one sample");
  std::mt19937_64 rng(opt.seed);
  std::vector<Vector> xs;
  std::vector<Point> ys;
  for (std::size_t k = 0; k < samples; ++k) {
    xs.push_back(f.domain.sample(rng));
    ys.emplace_back(f(xs.back()));
  }
  const PointSet images(ys);
  const std::size_t m = images.dim();

  double spread = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double lo = ys.front()[i], hi = lo;
    for (const auto& y : ys) {
      lo = std::min(lo, y[i]);
      hi = std::max(hi, y[i]);
    }
    spread = std::max(spread, hi - lo);
  }

  FdhSampleReport rep;
  rep.seed = opt.seed;
  rep.image_samples = samples;
  std::uniform_int_distribution<std::size_t> pick(0, samples - 1);
  std::bernoulli_distribution lift(0.5);
  std::exponential_distribution<double> amount(1.0);
  const auto member = [&](std::size_t k) {
    Vector z = ys[k].vec();
    if (lift(rng)) {
      for (auto& c : z) c += 0.1 * spread * amount(rng);
    }
    return z;
  };
  for (std::size_t p = 0; p < opt.pairs; ++p) {
    const std::size_t a = pick(rng), b = pick(rng);
    const Vector za = member(a), zb = member(b);
    const Point mid(detail::combine(0.5, za, zb));
    bool in = fdh_membership(images, mid, opt.slack);
    if (!in) {
      const Vector xm = detail::combine(0.5, xs[a], xs[b]);
      if (f.domain.contains(xm)) in = fdh_membership(PointSet{Point(f(xm))}, mid, opt.slack);
    }
    ++rep.pairs_tested;
    if (!in) {
      ++rep.violations;
      if (rep.witnesses.size() < opt.max_recorded) rep.witnesses.push_back(mid.vec());
    }
  }
  rep.rate = static_cast<double>(rep.violations) / static_cast<double>(rep.pairs_tested);
  return rep;
}

/// Piecewise-linear walk through the given points, parameterized by [0, 1]
/// with equal parameter length per segment. Lets a polygon boundary be fed
/// to the mapping-based checks.
inline SampledMapping polyline_mapping(std::vector<Vector> pts) {
  if (pts.size() < 2) throw std::invalid_argument("polyline needs at least two points");
  for (const auto& p : pts) {
    if (p.size() != pts.front().size()) throw std::invalid_argument("polyline points differ in dimension");
  }
  const std::size_t segs = pts.size() - 1;
  auto eval = [pts = std::move(pts), segs](const Vector& s) {
    const double u = std::clamp(s.at(0), 0.0, 1.0) * static_cast<double>(segs);
    const std::size_t k = std::min(segs - 1, static_cast<std::size_t>(u));
    return detail::combine(1.0 - (u - static_cast<double>(k)), pts[k], pts[k + 1]);
  };
  return {eval, ConvexDomain::box({0.0}, {1.0})};
}

/// No two efficient entries share an image vector (exact equality).
inline bool check_injectivity_on_efficient(const SolutionSet& S) {
  if (S.size() <= 1) return true;
  const auto eff = efficient_solutions(S, IndexSet::all(S[0].image.dim()));
  std::vector<std::vector<double>> imgs;
  for (const auto& e : S.entries()) {
    if (std::find(eff.begin(), eff.end(), e.id) != eff.end()) imgs.push_back(e.image.vec());
  }
  std::sort(imgs.begin(), imgs.end());
  return std::adjacent_find(imgs.begin(), imgs.end()) == imgs.end();
}

enum class CorollaryKind { ConvexImage, ConvexMap, Constrained, StronglyConvex };

inline std::string to_string(CorollaryKind k) {
  switch (k) {
    case CorollaryKind::ConvexImage: return "convex-image";
    case CorollaryKind::ConvexMap: return "convex-map";
    case CorollaryKind::Constrained: return "constrained";
    default: return "strongly-convex";
  }
}

inline CorollaryKind corollary_kind_from_string(const std::string& s) {
  if (s == "convex-image") return CorollaryKind::ConvexImage;
  if (s == "convex-map") return CorollaryKind::ConvexMap;
  if (s == "constrained") return CorollaryKind::Constrained;
  if (s == "strongly-convex") return CorollaryKind::StronglyConvex;
  throw std::invalid_argument("unknown corollary kind '" + s + "'");
}

struct HarnessOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 200;
  std::size_t grid_levels = 11;  // tie-rich grid on box domains; 0 = continuous
  std::size_t max_grid_points = 4096;  // larger grids are subsampled
  std::size_t convexity_trials = 200;
  double alpha = 0.0;  // modulus checked for the strongly convex kind when > 0
  /// Minimizer of sum_i w_i f_i; when set, the strongly convex kind uses a
  /// weight sweep instead of domain samples.
  std::function<Vector(const std::vector<double>&)> weighted_minimizer;
  std::size_t sweep_weights = 50;
};

struct CorollaryReport {
  CorollaryKind kind = CorollaryKind::ConvexMap;
  std::uint64_t seed = 0;
  std::size_t solutions = 0;
  bool hypothesis_consistent = true;  // sampled check of the kind's hypothesis
  bool alpha = false, beta = false;
  std::size_t we = 0, e = 0, se = 0;
  bool injective_on_efficient = true;
  bool finite_fdh_convex = false;  // hull of the finite instance itself
  bool agrees = false;  // outcome matches the corollary's prediction
  std::string prediction;
  // "agrees"; "inconclusive" when alpha != beta on a finite instance whose own
  // hull is not convex (the sample is not the set the statement is about);
  // "contradiction" when alpha holds without beta, which no instance allows.
  std::string outcome;
};

namespace detail {

inline std::vector<std::vector<double>> sweep_weights(std::mt19937_64& rng, std::size_t m, std::size_t count) {
  std::vector<std::vector<double>> W;
  if (m == 2) {
    for (std::size_t k = 1; k <= count; ++k) {
      const double w = static_cast<double>(k) / static_cast<double>(count + 1);
      W.push_back({w, 1.0 - w});
    }
    return W;
  }
  std::exponential_distribution<double> ex(1.0);
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<double> w(m);
    double s = 0.0;
    for (auto& v : w) s += (v = ex(rng) + 1e-3);
    for (auto& v : w) v /= s;
    W.push_back(std::move(w));
  }
  return W;
}

}  // namespace detail

inline CorollaryReport corollary_harness(const SampledMapping& f, CorollaryKind kind,
                                         const HarnessOptions& opt = {}) {
  std::mt19937_64 rng(opt.seed);
  CorollaryReport rep;
  rep.kind = kind;
  rep.seed = opt.seed;

  std::vector<Vector> xs;
  if (kind == CorollaryKind::StronglyConvex && opt.weighted_minimizer) {
    const std::size_t m = f(f.domain.sample(rng)).size();
    for (const auto& w : detail::sweep_weights(rng, m, opt.sweep_weights)) xs.push_back(opt.weighted_minimizer(w));
  } else {
    const std::size_t levels = kind == CorollaryKind::StronglyConvex ? 0 : opt.grid_levels;
    xs = f.domain.full_grid(levels, opt.max_grid_points);
    if (xs.empty()) {
      for (std::size_t k = 0; k < opt.samples; ++k) xs.push_back(f.domain.sample(rng, levels));
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<SolutionEntry> entries;
  std::vector<Point> images;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    images.emplace_back(f(xs[k]));
    entries.push_back({"x" + std::to_string(k), images.back()});
  }
  const SolutionSet S(entries);
  const PointSet Y(images);
  rep.solutions = S.size();

  const SamplingOptions sopt{opt.seed, 5, 1e-9, 8};
  switch (kind) {
    case CorollaryKind::ConvexImage: {
      FdhSampleOptions fo;
      fo.seed = opt.seed;
      fo.pairs = 200;
      rep.hypothesis_consistent = check_fdh_convexity_sampled(f, std::max<std::size_t>(opt.samples, 1), fo).consistent();
      break;
    }
    case CorollaryKind::ConvexMap:
    case CorollaryKind::Constrained:
      rep.hypothesis_consistent = check_convex(f, opt.convexity_trials, default_ts(), sopt).consistent();
      break;
    case CorollaryKind::StronglyConvex:
      rep.hypothesis_consistent = opt.alpha > 0.0
                                      ? check_strongly_convex(f, opt.alpha, opt.convexity_trials, default_ts(), sopt).consistent()
                                      : check_convex(f, opt.convexity_trials, default_ts(), sopt).consistent();
      break;
  }

  rep.alpha = condition_alpha(Y).holds;
  rep.beta = condition_beta(Y).holds;
  const IndexSet all = IndexSet::all(Y.dim());
  rep.we = weakly_efficient_solutions(S, all).size();
  rep.e = efficient_solutions(S, all).size();
  rep.se = strictly_efficient(S).size();
  rep.injective_on_efficient = check_injectivity_on_efficient(S);
  rep.finite_fdh_convex = finite_fdh_is_convex(Y);

  if (kind == CorollaryKind::StronglyConvex) {
    rep.prediction = "WE = E = SE";
    rep.agrees = rep.we == rep.e && rep.e == rep.se && rep.injective_on_efficient;
    rep.outcome = rep.agrees ? "agrees" : "inconclusive";
  } else {
    rep.prediction = "alpha <=> beta";
    rep.agrees = rep.alpha == rep.beta;
    if (rep.agrees) {
      rep.outcome = "agrees";
    } else if (rep.alpha || rep.finite_fdh_convex) {
      rep.outcome = "contradiction";
    } else {
      rep.outcome = "inconclusive";
    }
  }
  return rep;
}

}  // namespace effset::convex

#endif  // EFFSET_CONVEXOPT_HPP
