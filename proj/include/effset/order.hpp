/**
 * @file order.hpp
 * @brief Componentwise orders on R^m restricted to a subset of coordinates.
 *
 * Three relations are provided for y, y' in R^m and a nonempty index set I:
 *   - leq:  y_i <= y'_i for all i in I
 *   - lt:   y_i <  y'_i for all i in I
 *   - lneq: leq and y_j < y'_j for at least one j in I
 *
 * All comparisons are exact. Index sets are 1-based.
 */

#ifndef EFFSET_ORDER_HPP
#define EFFSET_ORDER_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace effset {

/// A point of R^m with finite coordinates.
class Point {
 public:
  Point() = default;

  explicit Point(std::vector<double> coords) : coords_(std::move(coords)) {
    validate();
  }

  Point(std::initializer_list<double> coords) : coords_(coords) { validate(); }

  std::size_t dim() const noexcept { return coords_.size(); }

  double operator[](std::size_t i) const { return coords_[i]; }

  std::span<const double> coords() const noexcept { return coords_; }

  const std::vector<double>& vec() const noexcept { return coords_; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  void validate() const {
    if (coords_.empty()) {
      throw std::invalid_argument("point must have at least one coordinate");
    }
    for (double c : coords_) {
      if (!std::isfinite(c)) {
        throw std::invalid_argument("point coordinates must be finite");
      }
    }
  }

  std::vector<double> coords_;
};

/// Nonempty, strictly increasing set of 1-based coordinate indices.
class IndexSet {
 public:
  IndexSet() = default;

  explicit IndexSet(std::vector<std::size_t> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (members_.empty()) {
      throw std::invalid_argument("index set must be nonempty");
    }
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
      throw std::invalid_argument("index set has repeated members");
    }
    if (members_.front() == 0) {
      throw std::invalid_argument("index set members are 1-based");
    }
  }

  IndexSet(std::initializer_list<std::size_t> members)
      : IndexSet(std::vector<std::size_t>(members)) {}

  /// The full set M = {1, ..., m}.
  static IndexSet all(std::size_t m) {
    if (m == 0) throw std::invalid_argument("dimension must be positive");
    std::vector<std::size_t> v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = i + 1;
    return IndexSet(std::move(v));
  }

  /// Bitmask form: bit (i-1) set for member i.
  static IndexSet from_mask(unsigned long mask) {
    std::vector<std::size_t> v;
    for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
      if (mask & 1UL) v.push_back(i + 1);
    }
    return IndexSet(std::move(v));
  }

  const std::vector<std::size_t>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  std::size_t max() const noexcept { return members_.empty() ? 0 : members_.back(); }

  bool contains(std::size_t i) const {
    return std::binary_search(members_.begin(), members_.end(), i);
  }

  bool is_subset_of(const IndexSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(),
                         members_.begin(), members_.end());
  }

  /// "{1,2}"
  std::string to_string() const {
    std::string s = "{";
    for (std::size_t k = 0; k < members_.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(members_[k]);
    }
    return s + "}";
  }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::size_t> members_;
};

namespace detail {

inline void check_operands(std::span<const double> a, std::span<const double> b,
                           const IndexSet& I) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dimension mismatch between points");
  }
  if (I.size() == 0) {
    throw std::invalid_argument("index set must be nonempty");
  }
  if (I.max() > a.size()) {
    throw std::invalid_argument("index set " + I.to_string() +
                                " exceeds point dimension " + std::to_string(a.size()));
  }
}

}  // namespace detail

/// y <=_I y2
inline bool leq(std::span<const double> y, std::span<const double> y2, const IndexSet& I) {
  detail::check_operands(y, y2, I);
  for (std::size_t i : I.members()) {
    if (!(y[i - 1] <= y2[i - 1])) return false;
  }
  return true;
}

/// y <_I y2
inline bool lt(std::span<const double> y, std::span<const double> y2, const IndexSet& I) {
  detail::check_operands(y, y2, I);
  for (std::size_t i : I.members()) {
    if (!(y[i - 1] < y2[i - 1])) return false;
  }
  return true;
}

/// y <=_I y2 with at least one strict coordinate in I.
inline bool lneq(std::span<const double> y, std::span<const double> y2, const IndexSet& I) {
  detail::check_operands(y, y2, I);
  bool strict = false;
  for (std::size_t i : I.members()) {
    if (y[i - 1] > y2[i - 1]) return false;
    if (y[i - 1] < y2[i - 1]) strict = true;
  }
  return strict;
}

inline bool leq(const Point& y, const Point& y2, const IndexSet& I) {
  return leq(y.coords(), y2.coords(), I);
}
inline bool lt(const Point& y, const Point& y2, const IndexSet& I) {
  return lt(y.coords(), y2.coords(), I);
}
inline bool lneq(const Point& y, const Point& y2, const IndexSet& I) {
  return lneq(y.coords(), y2.coords(), I);
}

}  // namespace effset

#endif  // EFFSET_ORDER_HPP
