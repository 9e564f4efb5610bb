/**
 * @file effset.hpp
 * @brief Efficient, weakly efficient and strictly efficient subsets of finite
 * point sets, and the checker for the WM = M characterization.
 *
 * For a finite Y in R^m and nonempty I:
 *   M_I Y  = { y' in Y : no y in Y with y lneq_I y' }
 *   WM_I Y = { y' in Y : no y in Y with y  lt_I  y' }
 * Condition (alpha) is WM Y = M Y. Condition (beta) is that every M_I Y is
 * contained in M Y. (alpha) implies (beta) unconditionally; the converse holds
 * whenever the free disposal hull Y + R^m_{>=0} is convex.
 *
 * Efficiency is decided per index, so duplicated points are all efficient or
 * all not.
 */

#ifndef EFFSET_EFFSET_HPP
#define EFFSET_EFFSET_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "effset/order.hpp"

namespace effset {

/// Signals a result that would contradict the characterization theorem.
/// Never expected on valid inputs; indicates an implementation defect.
class TheoremInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Ordered finite collection of points of uniform dimension, with optional labels.
class PointSet {
 public:
  PointSet() = default;

  explicit PointSet(std::vector<Point> points, std::vector<std::string> labels = {})
      : points_(std::move(points)), labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != points_.size()) {
      throw std::invalid_argument("label count does not match point count");
    }
    for (const auto& p : points_) {
      if (p.dim() != points_.front().dim()) {
        throw std::invalid_argument("points of a PointSet must share one dimension");
      }
    }
  }

  PointSet(std::initializer_list<Point> points) : PointSet(std::vector<Point>(points)) {}

  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  std::size_t dim() const noexcept { return points_.empty() ? 0 : points_.front().dim(); }

  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const noexcept { return points_; }

  std::string label(std::size_t i) const {
    return labels_.empty() ? std::to_string(i) : labels_[i];
  }
  bool has_labels() const noexcept { return !labels_.empty(); }

 private:
  std::vector<Point> points_;
  std::vector<std::string> labels_;
};

/// Solutions x identified by id, each with its evaluated image f(x).
struct SolutionEntry {
  std::string id;
  Point image;
};

class SolutionSet {
 public:
  SolutionSet() = default;

  explicit SolutionSet(std::vector<SolutionEntry> entries) : entries_(std::move(entries)) {
    std::unordered_set<std::string> seen;
    for (const auto& e : entries_) {
      if (!seen.insert(e.id).second) {
        throw std::invalid_argument("duplicate solution id '" + e.id + "'");
      }
      if (e.image.dim() != entries_.front().image.dim()) {
        throw std::invalid_argument("solution images must share one dimension");
      }
    }
  }

  std::size_t size() const noexcept { return entries_.size(); }
  const SolutionEntry& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<SolutionEntry>& entries() const noexcept { return entries_; }

  PointSet images() const {
    std::vector<Point> pts;
    std::vector<std::string> ids;
    pts.reserve(entries_.size());
    for (const auto& e : entries_) {
      pts.push_back(e.image);
      ids.push_back(e.id);
    }
    return PointSet(std::move(pts), std::move(ids));
  }

 private:
  std::vector<SolutionEntry> entries_;
};

namespace detail {

inline void check_index_set(const PointSet& Y, const IndexSet& I) {
  if (I.size() == 0) throw std::invalid_argument("index set must be nonempty");
  if (!Y.empty() && I.max() > Y.dim()) {
    throw std::invalid_argument("index set " + I.to_string() + " exceeds dimension " +
                                std::to_string(Y.dim()));
  }
}

// Unchecked kernels for the pairwise loops.
inline bool lneq_unchecked(const std::vector<double>& a, const std::vector<double>& b,
                           const std::vector<std::size_t>& I) {
  bool strict = false;
  for (std::size_t i : I) {
    if (a[i - 1] > b[i - 1]) return false;
    if (a[i - 1] < b[i - 1]) strict = true;
  }
  return strict;
}

inline bool lt_unchecked(const std::vector<double>& a, const std::vector<double>& b,
                         const std::vector<std::size_t>& I) {
  for (std::size_t i : I) {
    if (!(a[i - 1] < b[i - 1])) return false;
  }
  return true;
}

template <class Dominates>
std::vector<std::size_t> undominated(const PointSet& Y, const IndexSet& I, Dominates dom) {
  std::vector<std::size_t> out;
  const auto& idx = I.members();
  for (std::size_t j = 0; j < Y.size(); ++j) {
    const auto& target = Y[j].vec();
    bool dominated = false;
    for (std::size_t i = 0; i < Y.size() && !dominated; ++i) {
      dominated = dom(Y[i].vec(), target, idx);
    }
    if (!dominated) out.push_back(j);
  }
  return out;
}

// m = 2 sweep over an index subset; coordinates (cx, cy) are 0-based.
inline std::vector<std::size_t> sweep2(const PointSet& Y, std::vector<std::size_t> ids,
                                       std::size_t cx, std::size_t cy) {
  std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
    if (Y[a][cx] != Y[b][cx]) return Y[a][cx] < Y[b][cx];
    if (Y[a][cy] != Y[b][cy]) return Y[a][cy] < Y[b][cy];
    return a < b;
  });
  std::vector<std::size_t> out;
  double best_prev = std::numeric_limits<double>::infinity();
  for (std::size_t g = 0; g < ids.size();) {
    std::size_t h = g;
    while (h < ids.size() && Y[ids[h]][cx] == Y[ids[g]][cx]) ++h;
    const double gmin = Y[ids[g]][cy];  // sorted by cy within the group
    if (gmin < best_prev) {
      for (std::size_t k = g; k < h && Y[ids[k]][cy] == gmin; ++k) out.push_back(ids[k]);
    }
    best_prev = std::min(best_prev, gmin);
    g = h;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Staircase of (y, z) pairs: y increasing, z strictly decreasing.
class Staircase {
 public:
  double min_z_upto(double y) const {
    auto it = steps_.upper_bound(y);
    if (it == steps_.begin()) return std::numeric_limits<double>::infinity();
    return std::prev(it)->second;
  }

  void insert(double y, double z) {
    if (min_z_upto(y) <= z) return;
    auto [it, inserted] = steps_.insert_or_assign(y, z);
    auto next = std::next(it);
    while (next != steps_.end() && next->second >= z) next = steps_.erase(next);
  }

 private:
  std::map<double, double> steps_;
};

inline std::vector<std::size_t> sweep3(const PointSet& Y) {
  std::vector<std::size_t> ids(Y.size());
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
    const auto& p = Y[a].vec();
    const auto& q = Y[b].vec();
    if (p != q) return p < q;
    return a < b;
  });
  Staircase earlier;
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < ids.size();) {
    std::size_t h = g;
    while (h < ids.size() && Y[ids[h]][0] == Y[ids[g]][0]) ++h;
    std::vector<std::size_t> group(ids.begin() + static_cast<std::ptrdiff_t>(g),
                                   ids.begin() + static_cast<std::ptrdiff_t>(h));
    // Same x: domination reduces to the (y, z) plane.
    for (std::size_t k : sweep2(Y, group, 1, 2)) {
      if (earlier.min_z_upto(Y[k][1]) > Y[k][2]) out.push_back(k);
    }
    for (std::size_t k : group) earlier.insert(Y[k][1], Y[k][2]);
    g = h;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Indices of M_I Y, ascending.
inline std::vector<std::size_t> efficient_set(const PointSet& Y, const IndexSet& I) {
  detail::check_index_set(Y, I);
  return detail::undominated(Y, I, detail::lneq_unchecked);
}

/// Indices of WM_I Y, ascending.
inline std::vector<std::size_t> weakly_efficient_set(const PointSet& Y, const IndexSet& I) {
  detail::check_index_set(Y, I);
  return detail::undominated(Y, I, detail::lt_unchecked);
}

inline std::vector<std::size_t> efficient_set(const PointSet& Y) {
  return Y.empty() ? std::vector<std::size_t>{} : efficient_set(Y, IndexSet::all(Y.dim()));
}

inline std::vector<std::size_t> weakly_efficient_set(const PointSet& Y) {
  return Y.empty() ? std::vector<std::size_t>{}
                   : weakly_efficient_set(Y, IndexSet::all(Y.dim()));
}

/// Same result as efficient_set(Y, M) in O(n log n) for m in {2, 3}; other
/// dimensions use the pairwise scan.
inline std::vector<std::size_t> efficient_set_fast(const PointSet& Y) {
  if (Y.empty()) return {};
  switch (Y.dim()) {
    case 2: {
      std::vector<std::size_t> ids(Y.size());
      std::iota(ids.begin(), ids.end(), std::size_t{0});
      return detail::sweep2(Y, std::move(ids), 0, 1);
    }
    case 3:
      return detail::sweep3(Y);
    default:
      return efficient_set(Y);
  }
}

/// Efficient / weakly efficient solutions for the objective selection f_I.
inline std::vector<std::string> efficient_solutions(const SolutionSet& S, const IndexSet& I) {
  std::vector<std::string> out;
  for (std::size_t j : efficient_set(S.images(), I)) out.push_back(S[j].id);
  return out;
}

inline std::vector<std::string> weakly_efficient_solutions(const SolutionSet& S,
                                                           const IndexSet& I) {
  std::vector<std::string> out;
  for (std::size_t j : weakly_efficient_set(S.images(), I)) out.push_back(S[j].id);
  return out;
}

/// Ids x* such that no other entry has image componentwise <= f(x*).
/// Identical images disqualify each other.
inline std::vector<std::string> strictly_efficient(const SolutionSet& S) {
  std::vector<std::string> out;
  if (S.size() == 0) return out;
  const IndexSet M = IndexSet::all(S[0].image.dim());
  for (std::size_t j = 0; j < S.size(); ++j) {
    bool blocked = false;
    for (std::size_t i = 0; i < S.size() && !blocked; ++i) {
      blocked = i != j && leq(S[i].image, S[j].image, M);
    }
    if (!blocked) out.push_back(S[j].id);
  }
  return out;
}

/// Nonempty subsets of {1..m}: increasing cardinality, lexicographic within one.
inline std::vector<IndexSet> nonempty_subsets(std::size_t m) {
  constexpr std::size_t kMaxDim = 20;
  if (m > kMaxDim) {
    throw std::length_error("subset enumeration supports m <= 20, got m = " +
                            std::to_string(m));
  }
  std::vector<IndexSet> out;
  for (std::size_t k = 1; k <= m; ++k) {
    std::vector<std::size_t> c(k);
    std::iota(c.begin(), c.end(), std::size_t{1});
    while (true) {
      out.emplace_back(c);
      std::size_t pos = k;
      while (pos > 0 && c[pos - 1] == m - k + pos) --pos;
      if (pos == 0) break;
      ++c[pos - 1];
      for (std::size_t q = pos; q < k; ++q) c[q] = c[q - 1] + 1;
    }
  }
  return out;
}

struct BetaViolation {
  IndexSet subset;
  std::size_t index;  // into Y
};

struct BetaResult {
  bool holds = true;
  std::vector<BetaViolation> violations;
};

struct AlphaResult {
  bool holds = true;
  std::vector<std::size_t> witnesses;  // WM Y \ M Y
};

/// (beta): the union of M_I Y over nonempty I is contained in M Y.
inline BetaResult condition_beta(const PointSet& Y) {
  BetaResult r;
  if (Y.empty()) return r;
  const auto subsets = nonempty_subsets(Y.dim());
  std::vector<char> in_m(Y.size(), 0);
  for (std::size_t j : efficient_set(Y)) in_m[j] = 1;
  for (const auto& I : subsets) {
    if (I.size() == Y.dim()) continue;  // M_M Y = M Y
    for (std::size_t j : efficient_set(Y, I)) {
      if (!in_m[j]) r.violations.push_back({I, j});
    }
  }
  r.holds = r.violations.empty();
  return r;
}

/// (alpha): WM Y = M Y.
inline AlphaResult condition_alpha(const PointSet& Y) {
  AlphaResult r;
  const auto wm = weakly_efficient_set(Y);
  const auto m = efficient_set(Y);
  std::set_difference(wm.begin(), wm.end(), m.begin(), m.end(),
                      std::back_inserter(r.witnesses));
  r.holds = r.witnesses.empty();
  return r;
}

struct TheoremVerdict {
  std::optional<bool> fdh_convex;
  bool alpha_holds = true;
  bool beta_holds = true;
  std::vector<BetaViolation> beta_violations;
  std::vector<std::size_t> alpha_witnesses;
};

/// Evaluates (alpha) and (beta). fdh_convex is supplied by the caller; when it
/// is true the two conditions must agree.
inline TheoremVerdict theorem_verdict(const PointSet& Y, std::optional<bool> fdh_convex) {
  TheoremVerdict v;
  v.fdh_convex = fdh_convex;
  auto alpha = condition_alpha(Y);
  auto beta = condition_beta(Y);
  v.alpha_holds = alpha.holds;
  v.beta_holds = beta.holds;
  v.alpha_witnesses = std::move(alpha.witnesses);
  v.beta_violations = std::move(beta.violations);
  if (v.alpha_holds && !v.beta_holds) {
    throw TheoremInconsistency("(alpha) holds but (beta) fails");
  }
  if (fdh_convex.value_or(false) && v.alpha_holds != v.beta_holds) {
    throw TheoremInconsistency("convex free disposal hull but (alpha) != (beta)");
  }
  return v;
}

}  // namespace effset

#endif  // EFFSET_EFFSET_HPP
