/**
 * @file geom2d.hpp
 * @brief Exact efficient sets and free-disposal-hull geometry of planar polygons.
 *
 * Everything here runs on exact rationals. For a simple polygon P:
 *   - weakly_efficient_chain(P): points of P whose open south-west quadrant
 *     misses P. Such points lie on the boundary, and the quadrant misses P
 *     iff it misses every edge, so the set is computed edge by edge.
 *   - efficient_chain(P, I): M_I P. For I = {1,2} this is WM P minus the
 *     points that have another WM point straight below or straight left.
 *   - lower_envelope(P): boundary of P + R^2_{>=0}, i.e. the WM chain with the
 *     gaps bridged by right-then-down steps, plus an upward and a rightward ray.
 *
 * Results are SegmentChains: unions of segments with open/closed endpoints
 * and isolated points, compared as point sets.
 */

#ifndef EFFSET_GEOM2D_HPP
#define EFFSET_GEOM2D_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "effset/effset.hpp"
#include "effset/exact.hpp"
#include "effset/order.hpp"

namespace effset::geom2d {

/// Simple polygon, stored counterclockwise without repeated or collinear vertices.
class Polygon2 {
 public:
  Polygon2() = default;

  explicit Polygon2(std::vector<Vec2> vertices) : v_(std::move(vertices)) { normalize(); }

  std::size_t size() const noexcept { return v_.size(); }
  const std::vector<Vec2>& vertices() const noexcept { return v_; }
  const Vec2& vertex(std::size_t i) const { return v_[i % v_.size()]; }

  std::pair<Vec2, Vec2> edge(std::size_t i) const { return {vertex(i), vertex(i + 1)}; }

  Rational twice_area() const {
    Rational s = 0;
    for (std::size_t i = 0; i < v_.size(); ++i) s += cross(vertex(i), vertex(i + 1));
    return s;
  }

  bool is_convex() const {
    for (std::size_t i = 0; i < v_.size(); ++i) {
      if (orient(vertex(i), vertex(i + 1), vertex(i + 2)) < 0) return false;
    }
    return true;
  }

 private:
  void normalize() {
    // Drop repeated vertices (cyclically).
    std::vector<Vec2> w;
    for (const auto& p : v_) {
      if (w.empty() || w.back() != p) w.push_back(p);
    }
    while (w.size() > 1 && w.front() == w.back()) w.pop_back();
    // Drop vertices in the middle of a straight run; a reversal is a spike.
    bool changed = true;
    while (changed && w.size() >= 3) {
      changed = false;
      for (std::size_t i = 0; i < w.size(); ++i) {
        const Vec2& a = w[(i + w.size() - 1) % w.size()];
        const Vec2& b = w[i];
        const Vec2& c = w[(i + 1) % w.size()];
        if (cross(b - a, c - b) == 0) {
          if (dot(b - a, c - b) < 0) {
            throw std::invalid_argument("degenerate polygon: edge folds back on itself");
          }
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
      }
    }
    if (w.size() < 3) throw std::invalid_argument("degenerate polygon: fewer than 3 vertices");
    v_ = std::move(w);
    const Rational area2 = twice_area();
    if (area2 == 0) throw std::invalid_argument("degenerate polygon: zero area");
    if (area2 < 0) std::reverse(v_.begin(), v_.end());
    const std::size_t n = v_.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (j == i + 1 || (i == 0 && j == n - 1)) continue;
        auto [a, b] = edge(i);
        auto [c, d] = edge(j);
        if (segments_intersect(a, b, c, d)) {
          throw std::invalid_argument("polygon is not simple: edges " + std::to_string(i) +
                                      " and " + std::to_string(j) + " intersect");
        }
      }
    }
  }

  std::vector<Vec2> v_;
};

/// A closed/half-open segment [a, b] or an isolated point (a == b).
/// Endpoints are kept in staircase order: a before b.
struct Piece {
  Vec2 a;
  Vec2 b;
  bool a_closed = true;
  bool b_closed = true;

  static Piece point(const Vec2& p) { return {p, p, true, true}; }

  static Piece segment(Vec2 a, Vec2 b, bool a_closed = true, bool b_closed = true) {
    if (a == b) return point(a);
    if (staircase_less(b, a)) {
      std::swap(a, b);
      std::swap(a_closed, b_closed);
    }
    return {std::move(a), std::move(b), a_closed, b_closed};
  }

  bool is_point() const { return a == b; }
  bool is_vertical() const { return !is_point() && a.x == b.x; }
  bool is_horizontal() const { return !is_point() && a.y == b.y; }

  bool contains(const Vec2& p) const {
    if (is_point()) return p == a;
    if (p == a) return a_closed;
    if (p == b) return b_closed;
    return on_segment(a, b, p);
  }

  Vec2 at(const Rational& t) const { return a + t * (b - a); }

  friend bool operator==(const Piece&, const Piece&) = default;
};

namespace detail {

// Builds pieces of [a,b] from membership at sorted breakpoints and between them.
template <class Keep>
std::vector<Piece> assemble(const Vec2& a, const Vec2& b, std::vector<Rational> ts, Keep keep) {
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  const std::size_t n = ts.size();
  std::vector<char> kp(n), kg(n > 0 ? n - 1 : 0);
  for (std::size_t i = 0; i < n; ++i) kp[i] = keep(ts[i]);
  for (std::size_t i = 0; i + 1 < n; ++i) kg[i] = keep((ts[i] + ts[i + 1]) / 2);
  const auto at = [&](const Rational& t) { return a + t * (b - a); };

  std::vector<Piece> out;
  bool consumed = false;
  for (std::size_t i = 0; i < n;) {
    if (i + 1 < n && kg[i]) {
      std::size_t j = i;
      while (j + 1 < n - 1 && kp[j + 1] && kg[j + 1]) ++j;
      out.push_back(Piece::segment(at(ts[i]), at(ts[j + 1]), kp[i] != 0, kp[j + 1] != 0));
      i = j + 1;
      consumed = kp[i] != 0;
      continue;
    }
    if (kp[i] && !consumed) out.push_back(Piece::point(at(ts[i])));
    consumed = false;
    ++i;
  }
  return out;
}

// Parameter of q along a + t d (q assumed on that line).
inline Rational param_on(const Vec2& a, const Vec2& d, const Vec2& q) {
  return dot(q - a, d) / dot(d, d);
}

// Breakpoints on segment piece s induced by the pieces of another chain.
inline std::vector<Rational> breakpoints(const Piece& s, const std::vector<Piece>& others) {
  std::vector<Rational> ts{Rational(0), Rational(1)};
  const Vec2 d = s.b - s.a;
  const auto add = [&](const Rational& t) {
    if (t > 0 && t < 1) ts.push_back(t);
  };
  for (const auto& o : others) {
    for (const Vec2* q : {&o.a, &o.b}) {
      if (orient(s.a, s.b, *q) == 0) add(param_on(s.a, d, *q));
    }
    if (!o.is_point()) {
      const Vec2 e = o.b - o.a;
      const Rational den = cross(d, e);
      if (den != 0) {
        const Rational u = cross(o.a - s.a, d) / den;
        if (u >= 0 && u <= 1) add(cross(o.a - s.a, e) / den);
      }
    }
  }
  return ts;
}

struct LineKey {
  Rational A, B, C;  // A x + B y = C, first nonzero of (A, B) equal to 1
  friend bool operator==(const LineKey&, const LineKey&) = default;
};

inline LineKey line_of(const Vec2& a, const Vec2& b) {
  Rational A = b.y - a.y;
  Rational B = a.x - b.x;
  const Rational s = (A != 0) ? A : B;
  A /= s;
  B /= s;
  return {A, B, A * a.x + B * a.y};
}

// Coordinate along a line that increases in staircase order.
inline Rational line_param(const LineKey& L, const Vec2& p) { return L.B == 0 ? -p.y : p.x; }

struct Interval {
  Rational t0, t1;
  Vec2 p0, p1;
  bool c0, c1;
};

}  // namespace detail

/// Finite union of pieces, interpreted as a point set.
class SegmentChain {
 public:
  SegmentChain() = default;

  explicit SegmentChain(std::vector<Piece> pieces) : pieces_(std::move(pieces)) { normalize(); }

  const std::vector<Piece>& pieces() const noexcept { return pieces_; }
  bool empty() const noexcept { return pieces_.empty(); }

  bool contains(const Vec2& p) const {
    return std::any_of(pieces_.begin(), pieces_.end(),
                       [&](const Piece& q) { return q.contains(p); });
  }

  /// Exact set difference *this \ other.
  SegmentChain minus(const SegmentChain& other) const {
    std::vector<Piece> out;
    for (const auto& s : pieces_) {
      if (s.is_point()) {
        if (!other.contains(s.a)) out.push_back(s);
        continue;
      }
      auto part = detail::assemble(s.a, s.b, detail::breakpoints(s, other.pieces_),
                                   [&](const Rational& t) {
                                     const Vec2 p = s.at(t);
                                     return s.contains(p) && !other.contains(p);
                                   });
      out.insert(out.end(), part.begin(), part.end());
    }
    return SegmentChain(std::move(out));
  }

  bool subset_of(const SegmentChain& other) const { return minus(other).empty(); }

  friend bool same_set(const SegmentChain& x, const SegmentChain& y) {
    return x.subset_of(y) && y.subset_of(x);
  }

 private:
  void normalize() {
    using detail::Interval;
    using detail::LineKey;
    std::vector<std::pair<LineKey, std::vector<Interval>>> lines;
    std::vector<Vec2> points;
    for (auto& raw : pieces_) {
      Piece p = raw.is_point() ? Piece::point(raw.a)
                               : Piece::segment(raw.a, raw.b, raw.a_closed, raw.b_closed);
      if (p.is_point()) {
        points.push_back(p.a);
        continue;
      }
      const LineKey L = detail::line_of(p.a, p.b);
      auto it = std::find_if(lines.begin(), lines.end(),
                             [&](const auto& e) { return e.first == L; });
      if (it == lines.end()) {
        lines.push_back({L, {}});
        it = std::prev(lines.end());
      }
      it->second.push_back({detail::line_param(L, p.a), detail::line_param(L, p.b), p.a, p.b,
                            p.a_closed, p.b_closed});
    }
    std::vector<Vec2> isolated;
    for (const auto& q : points) {
      bool placed = false;
      for (auto& [L, ivs] : lines) {
        const bool touches = std::any_of(ivs.begin(), ivs.end(), [&](const Interval& iv) {
          return on_segment(iv.p0, iv.p1, q);
        });
        if (touches) {
          const Rational t = detail::line_param(L, q);
          ivs.push_back({t, t, q, q, true, true});
          placed = true;
          break;
        }
      }
      if (!placed) isolated.push_back(q);
    }

    std::vector<Piece> out;
    for (auto& [L, ivs] : lines) {
      std::sort(ivs.begin(), ivs.end(), [](const Interval& x, const Interval& y) {
        if (x.t0 != y.t0) return x.t0 < y.t0;
        return x.c0 && !y.c0;
      });
      std::vector<Interval> merged;
      for (const auto& iv : ivs) {
        if (!merged.empty()) {
          Interval& cur = merged.back();
          if (iv.t0 < cur.t1 || (iv.t0 == cur.t1 && (cur.c1 || iv.c0))) {
            if (iv.t0 == cur.t0) cur.c0 = cur.c0 || iv.c0;
            if (iv.t1 > cur.t1) {
              cur.t1 = iv.t1;
              cur.p1 = iv.p1;
              cur.c1 = iv.c1;
            } else if (iv.t1 == cur.t1) {
              cur.c1 = cur.c1 || iv.c1;
            }
            continue;
          }
        }
        merged.push_back(iv);
      }
      for (const auto& iv : merged) {
        out.push_back(iv.t0 == iv.t1 ? Piece::point(iv.p0)
                                     : Piece::segment(iv.p0, iv.p1, iv.c0, iv.c1));
      }
    }
    std::sort(isolated.begin(), isolated.end(), staircase_less);
    isolated.erase(std::unique(isolated.begin(), isolated.end()), isolated.end());
    for (const auto& q : isolated) {
      const bool covered = std::any_of(out.begin(), out.end(), [&](const Piece& s) {
        return !s.is_point() && s.contains(q);
      });
      if (!covered) out.push_back(Piece::point(q));
    }
    std::sort(out.begin(), out.end(), [](const Piece& x, const Piece& y) {
      if (x.a != y.a) return staircase_less(x.a, y.a);
      return staircase_less(x.b, y.b);
    });
    pieces_ = std::move(out);
  }

  std::vector<Piece> pieces_;
};

/// Boundary of P + R^2_{>=0}: corners joined by segments, a ray up from the
/// first corner and a ray right from the last.
struct Staircase2 {
  std::vector<Vec2> corners;

  /// z lies in the free disposal hull.
  bool contains(const Vec2& z) const {
    for (const auto& c : corners) {
      if (c.x <= z.x && c.y <= z.y) return true;
    }
    for (std::size_t i = 0; i + 1 < corners.size(); ++i) {
      const Vec2& u = corners[i];
      const Vec2 d = corners[i + 1] - u;  // d.x >= 0, d.y <= 0
      Rational lo = 0, hi = 1;
      if (d.x > 0) {
        hi = std::min(hi, Rational((z.x - u.x) / d.x));
      } else if (u.x > z.x) {
        continue;
      }
      if (d.y < 0) {
        lo = std::max(lo, Rational((u.y - z.y) / (-d.y)));
      } else if (u.y > z.y) {
        continue;
      }
      if (lo <= hi) return true;
    }
    return false;
  }

  /// Directions of the boundary, starting and ending with the rays.
  std::vector<Vec2> directions() const {
    std::vector<Vec2> dirs{Vec2(0, -1)};
    for (std::size_t i = 0; i + 1 < corners.size(); ++i) dirs.push_back(corners[i + 1] - corners[i]);
    dirs.emplace_back(1, 0);
    return dirs;
  }
};

namespace detail {

struct Lin {
  Rational k, c;  // k s + c
  Lin operator-() const { return {-k, -c}; }
  Lin scaled(const Rational& s) const { return {k * s, c * s}; }
  friend Lin operator-(const Lin& x, const Lin& y) { return {x.k - y.k, x.c - y.c}; }
};

struct OpenRange {
  bool empty = false;
  std::optional<Rational> lo, hi;  // nullopt means unbounded

  bool contains(const Rational& t) const {
    if (empty) return false;
    if (lo && !(*lo < t)) return false;
    if (hi && !(t < *hi)) return false;
    return true;
  }
};

// Parameters s for which a + s d lies strictly north-east of some point of the
// segment [c, c + f]. This is an open range on the line through a.
inline OpenRange strictly_dominated_range(const Vec2& a, const Vec2& d, const Vec2& c,
                                          const Vec2& f) {
  struct Bound {
    Lin num;
    Rational den;  // > 0
    bool strict;
  };
  // The witness parameter u must satisfy 0 <= u <= 1, u f_x < alpha(s), u f_y < beta(s).
  std::vector<Bound> lowers{{Lin{0, 0}, 1, false}};
  std::vector<Bound> uppers{{Lin{0, 1}, 1, false}};
  std::vector<Lin> positive;
  const auto constrain = [&](const Lin& slack, const Rational& fc) {
    if (fc > 0) {
      uppers.push_back({slack, fc, true});
    } else if (fc < 0) {
      lowers.push_back({-slack, -fc, true});
    } else {
      positive.push_back(slack);
    }
  };
  constrain(Lin{d.x, a.x - c.x}, f.x);
  constrain(Lin{d.y, a.y - c.y}, f.y);
  for (const auto& l : lowers) {
    for (const auto& h : uppers) {
      if (!l.strict && !h.strict) continue;
      positive.push_back(h.num.scaled(l.den) - l.num.scaled(h.den));
    }
  }
  OpenRange r;
  for (const auto& p : positive) {
    if (p.k == 0) {
      if (p.c <= 0) {
        r.empty = true;
        return r;
      }
      continue;
    }
    const Rational root = -p.c / p.k;
    if (p.k > 0) {
      if (!r.lo || *r.lo < root) r.lo = root;
    } else {
      if (!r.hi || root < *r.hi) r.hi = root;
    }
  }
  if (r.lo && r.hi && !(*r.lo < *r.hi)) r.empty = true;
  return r;
}

// Some point of the chain lies on the vertical line through p strictly below
// it, or on the horizontal line strictly left of it.
inline bool has_axis_dominator(const std::vector<Piece>& pieces, const Vec2& p) {
  for (const auto& s : pieces) {
    if (s.a.x <= p.x && p.x <= s.b.x) {
      Rational y = s.b.y;
      if (s.a.x != s.b.x) y = s.a.y + (p.x - s.a.x) * (s.b.y - s.a.y) / (s.b.x - s.a.x);
      if (y < p.y) return true;
    }
    if (s.b.y <= p.y && p.y <= s.a.y) {
      Rational x = s.a.x;
      if (s.a.y != s.b.y) x = s.a.x + (p.y - s.a.y) * (s.b.x - s.a.x) / (s.b.y - s.a.y);
      if (x < p.x) return true;
    }
  }
  return false;
}

}  // namespace detail

/// WM P: all points of P with no point of P strictly south-west. Closed pieces.
inline SegmentChain weakly_efficient_chain(const Polygon2& P) {
  std::vector<Piece> pieces;
  const std::size_t n = P.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto [a, b] = P.edge(i);
    const Vec2 d = b - a;
    std::vector<detail::OpenRange> removed;
    std::vector<Rational> ts{Rational(0), Rational(1)};
    for (std::size_t j = 0; j < n; ++j) {
      const auto [c, c2] = P.edge(j);
      auto r = detail::strictly_dominated_range(a, d, c, c2 - c);
      if (r.empty) continue;
      for (const auto* bound : {&r.lo, &r.hi}) {
        if (*bound && **bound > 0 && **bound < 1) ts.push_back(**bound);
      }
      removed.push_back(std::move(r));
    }
    auto part = detail::assemble(a, b, ts, [&](const Rational& t) {
      return std::none_of(removed.begin(), removed.end(),
                          [&](const detail::OpenRange& r) { return r.contains(t); });
    });
    pieces.insert(pieces.end(), part.begin(), part.end());
  }
  return SegmentChain(std::move(pieces));
}

namespace detail {

inline SegmentChain minimizers_of_coordinate(const Polygon2& P, bool use_x) {
  const auto coord = [&](const Vec2& v) -> const Rational& { return use_x ? v.x : v.y; };
  Rational best = coord(P.vertex(0));
  for (const auto& v : P.vertices()) best = std::min(best, coord(v));
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < P.size(); ++i) {
    const auto [a, b] = P.edge(i);
    if (coord(a) == best && coord(b) == best) {
      pieces.push_back(Piece::segment(a, b));
    } else if (coord(a) == best) {
      pieces.push_back(Piece::point(a));
    }
  }
  return SegmentChain(std::move(pieces));
}

inline SegmentChain efficient_from_weak(const SegmentChain& wm) {
  const auto& w = wm.pieces();
  const auto keep = [&](const Vec2& p) { return !detail::has_axis_dominator(w, p); };
  std::vector<Piece> out;
  for (const auto& s : w) {
    if (s.is_point()) {
      if (keep(s.a)) out.push_back(s);
    } else if (s.is_vertical()) {
      if (keep(s.b)) out.push_back(Piece::point(s.b));  // lower end
    } else if (s.is_horizontal()) {
      if (keep(s.a)) out.push_back(Piece::point(s.a));  // left end
    } else {
      if (s.b.y > s.a.y) throw std::logic_error("increasing segment in a weakly efficient chain");
      out.push_back(Piece::segment(s.a, s.b, keep(s.a), keep(s.b)));
    }
  }
  return SegmentChain(std::move(out));
}

}  // namespace detail

/// M_I P for I in {{1}, {2}, {1,2}}.
inline SegmentChain efficient_chain(const Polygon2& P, const IndexSet& I) {
  if (I == IndexSet{1}) return detail::minimizers_of_coordinate(P, true);
  if (I == IndexSet{2}) return detail::minimizers_of_coordinate(P, false);
  if (I == IndexSet{1, 2}) return detail::efficient_from_weak(weakly_efficient_chain(P));
  throw std::invalid_argument("unsupported index set " + I.to_string() + " for planar polygons");
}

inline Staircase2 lower_envelope(const Polygon2& P) {
  const SegmentChain wm = weakly_efficient_chain(P);
  std::vector<Vec2> poly;
  const auto push = [&](const Vec2& v) {
    if (poly.empty() || poly.back() != v) poly.push_back(v);
  };
  for (const auto& s : wm.pieces()) {
    if (!poly.empty()) {
      const Vec2 u = poly.back();
      if (u.x != s.a.x && u.y != s.a.y) push(Vec2(s.a.x, u.y));
    }
    push(s.a);
    push(s.b);
  }
  // Leading vertical and trailing horizontal runs belong to the rays.
  while (poly.size() >= 2 && poly[0].x == poly[1].x) poly.erase(poly.begin());
  while (poly.size() >= 2 && poly[poly.size() - 2].y == poly.back().y) poly.pop_back();
  std::vector<Vec2> corners;
  for (const auto& v : poly) {
    while (corners.size() >= 2 &&
           cross(corners.back() - corners[corners.size() - 2], v - corners.back()) == 0) {
      corners.pop_back();
    }
    corners.push_back(v);
  }
  return Staircase2{std::move(corners)};
}

/// Convexity of P + R^2_{>=0}: the boundary never turns clockwise.
inline bool fdh_is_convex(const Staircase2& s) {
  const auto dirs = s.directions();
  for (std::size_t i = 0; i + 1 < dirs.size(); ++i) {
    if (cross(dirs[i], dirs[i + 1]) < 0) return false;
  }
  return true;
}

inline bool fdh_is_convex(const Polygon2& P) { return fdh_is_convex(lower_envelope(P)); }

struct PolygonVerdict {
  bool fdh_convex = false;
  bool alpha_holds = false;
  bool beta_holds = false;
  std::vector<IndexSet> beta_violations;  // singleton I with M_I P not inside M P
  SegmentChain m1, m2, m, wm;
  SegmentChain alpha_witnesses;  // WM P \ M P
  Staircase2 envelope;
};

inline PolygonVerdict verdict_polygon(const Polygon2& P) {
  PolygonVerdict v;
  v.envelope = lower_envelope(P);
  v.fdh_convex = fdh_is_convex(v.envelope);
  v.wm = weakly_efficient_chain(P);
  v.m = detail::efficient_from_weak(v.wm);
  v.m1 = efficient_chain(P, IndexSet{1});
  v.m2 = efficient_chain(P, IndexSet{2});
  v.alpha_witnesses = v.wm.minus(v.m);
  v.alpha_holds = v.alpha_witnesses.empty();
  if (!v.m1.subset_of(v.m)) v.beta_violations.push_back(IndexSet{1});
  if (!v.m2.subset_of(v.m)) v.beta_violations.push_back(IndexSet{2});
  v.beta_holds = v.beta_violations.empty();
  if (v.alpha_holds && !v.beta_holds) {
    throw TheoremInconsistency("(alpha) holds but (beta) fails on a polygon");
  }
  if (v.fdh_convex && v.alpha_holds != v.beta_holds) {
    throw TheoremInconsistency("convex free disposal hull but (alpha) != (beta) on a polygon");
  }
  return v;
}

/// Points of the chain: interior samples at (k + 1/2)/per_piece and every
/// closed endpoint.
inline std::vector<Vec2> sample_chain(const SegmentChain& chain, std::size_t per_piece) {
  std::vector<Vec2> out;
  for (const auto& s : chain.pieces()) {
    if (s.is_point()) {
      out.push_back(s.a);
      continue;
    }
    if (s.a_closed) out.push_back(s.a);
    for (std::size_t k = 0; k < per_piece; ++k) {
      out.push_back(s.at(Rational(2 * k + 1, 2 * per_piece)));
    }
    if (s.b_closed) out.push_back(s.b);
  }
  return out;
}

}  // namespace effset::geom2d

#endif  // EFFSET_GEOM2D_HPP
