/**
 * @file exact.hpp
 * @brief Exact rational scalars and planar vectors used by the polygon code.
 */

#ifndef EFFSET_EXACT_HPP
#define EFFSET_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace effset {

using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::string to_string(const Rational& r) { return r.str(); }

/// Exact conversion of a finite double (every finite double is a dyadic rational).
inline Rational from_double(double v) {
  Rational r(v);
  return r;
}

struct Vec2 {
  Rational x;
  Rational y;

  Vec2() = default;
  Vec2(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}
  Vec2(long long x_, long long y_) : x(x_), y(y_) {}

  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Vec2& a, const Vec2& b) { return !(a == b); }

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(const Rational& s, const Vec2& a) { return {s * a.x, s * a.y}; }
};

inline Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

/// Orientation of c relative to the directed line a->b: >0 left, <0 right, 0 collinear.
inline int orient(const Vec2& a, const Vec2& b, const Vec2& c) {
  const Rational v = cross(b - a, c - a);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

/// c lies on the closed segment [a, b] (a, b, c collinear assumed or checked).
inline bool on_segment(const Vec2& a, const Vec2& b, const Vec2& c) {
  if (orient(a, b, c) != 0) return false;
  return (c.x >= (a.x < b.x ? a.x : b.x)) && (c.x <= (a.x < b.x ? b.x : a.x)) &&
         (c.y >= (a.y < b.y ? a.y : b.y)) && (c.y <= (a.y < b.y ? b.y : a.y));
}

/// Closed segments [a,b] and [c,d] share at least one point.
inline bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  const int o1 = orient(a, b, c);
  const int o2 = orient(a, b, d);
  const int o3 = orient(c, d, a);
  const int o4 = orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) ||
         on_segment(c, d, b);
}

/// Staircase order: x ascending, then y descending.
inline bool staircase_less(const Vec2& a, const Vec2& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y > b.y;
}

}  // namespace effset

#endif  // EFFSET_EXACT_HPP
