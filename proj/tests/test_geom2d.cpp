#include <gtest/gtest.h>

#include <random>

#include "effset/geom2d.hpp"
#include "effset/instances.hpp"

using effset::IndexSet;
using effset::Rational;
using effset::Vec2;
using namespace effset::geom2d;

namespace {

Polygon2 ex(const std::string& id) { return effset::instances::example_polygon(id).polygon; }

SegmentChain chain(std::vector<Piece> p) { return SegmentChain(std::move(p)); }

Piece seg(Vec2 a, Vec2 b, bool ca = true, bool cb = true) { return Piece::segment(a, b, ca, cb); }

// Polygon-side oracle: some point of P lies componentwise <= z.
bool fdh_oracle(const Polygon2& P, const Vec2& z) {
  for (std::size_t i = 0; i < P.size(); ++i) {
    auto [a, b] = P.edge(i);
    Rational lo = 0, hi = 1;
    const Vec2 d = b - a;
    bool ok = true;
    for (int axis = 0; axis < 2 && ok; ++axis) {
      const Rational& ac = axis == 0 ? a.x : a.y;
      const Rational& dc = axis == 0 ? d.x : d.y;
      const Rational& zc = axis == 0 ? z.x : z.y;
      // ac + t dc <= zc
      if (dc > 0) {
        hi = std::min(hi, Rational((zc - ac) / dc));
      } else if (dc < 0) {
        lo = std::max(lo, Rational((zc - ac) / dc));
      } else if (ac > zc) {
        ok = false;
      }
    }
    if (ok && lo <= hi) return true;
  }
  return false;
}

bool inside_or_on(const Polygon2& P, const Vec2& q) {
  bool in = false;
  for (std::size_t i = 0; i < P.size(); ++i) {
    auto [a, b] = P.edge(i);
    if (effset::on_segment(a, b, q)) return true;
    if ((a.y > q.y) != (b.y > q.y)) {
      const Rational x = a.x + (q.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (q.x < x) in = !in;
    }
  }
  return in;
}

}  // namespace

TEST(Polygon2, NormalizesAndValidates) {
  Polygon2 cw({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
  EXPECT_GT(cw.twice_area(), 0);
  Polygon2 straight({{0, 0}, {1, 0}, {2, 0}, {2, 2}, {0, 2}});
  EXPECT_EQ(straight.size(), 4u);
  EXPECT_THROW(Polygon2({{0, 0}, {1, 1}}), std::invalid_argument);
  EXPECT_THROW(Polygon2({{0, 0}, {1, 1}, {2, 2}}), std::invalid_argument);
  EXPECT_THROW(Polygon2({{0, 0}, {2, 2}, {2, 0}, {0, 2}}), std::invalid_argument);  // bow tie
}

TEST(SegmentChain, HalfOpenSetSemantics) {
  const Vec2 p1(0, 3), p2(1, 2), p3(1, 1), p4(2, 0);
  const auto closed = chain({seg(p1, p2), seg(p3, p4)});
  const auto open_p2 = chain({seg(p1, p2, true, false), seg(p3, p4)});
  EXPECT_TRUE(open_p2.subset_of(closed));
  EXPECT_FALSE(closed.subset_of(open_p2));
  EXPECT_EQ(closed.minus(open_p2).pieces(), (std::vector<Piece>{Piece::point(p2)}));
  EXPECT_FALSE(open_p2.contains(p2));
  EXPECT_TRUE(open_p2.contains(Vec2(Rational(1, 2), Rational(5, 2))));
}

TEST(SegmentChain, NormalizationMergesCollinearAndAbsorbsPoints) {
  const auto c = chain({seg({0, 2}, {1, 1}, true, false), Piece::point({1, 1}), seg({1, 1}, {2, 0}, false, true),
                        Piece::point({2, 0}), Piece::point({5, 5})});
  ASSERT_EQ(c.pieces().size(), 2u);
  EXPECT_EQ(c.pieces()[0], seg({0, 2}, {2, 0}));
  EXPECT_EQ(c.pieces()[1], Piece::point({5, 5}));
  // Two open ends at a shared point stay separate.
  const auto gap = chain({seg({0, 2}, {1, 1}, true, false), seg({1, 1}, {2, 0}, false, true)});
  EXPECT_EQ(gap.pieces().size(), 2u);
  EXPECT_FALSE(gap.contains({1, 1}));
}

TEST(LowerEnvelope, Examples) {
  EXPECT_EQ(lower_envelope(ex("3.1")).corners, (std::vector<Vec2>{{0, 1}, {1, 0}}));
  EXPECT_EQ(lower_envelope(Polygon2({{0, 0}, {1, 0}, {1, 1}, {0, 1}})).corners, (std::vector<Vec2>{{0, 0}}));
  EXPECT_EQ(lower_envelope(ex("3.3")).corners, (std::vector<Vec2>{{0, 3}, {1, 2}, {1, 1}, {2, 0}}));
  // Same hull of free disposal as 3.1.
  EXPECT_EQ(lower_envelope(ex("3.2")).corners, (std::vector<Vec2>{{0, 1}, {1, 0}}));
}

TEST(LowerEnvelope, BridgesGapsWithSteps) {
  // Lower boundary dips to (1,1), rises to (2,3), then falls to (3,0).
  Polygon2 P({{0, 3}, {1, 1}, {2, 3}, {3, 0}, {4, 4}, {0, 4}});
  const auto s = lower_envelope(P);
  // Horizontal bridge at y = 1 to the point of the edge (2,3)-(3,0) at height 1.
  EXPECT_EQ(s.corners, (std::vector<Vec2>{{0, 3}, {1, 1}, {Rational(8, 3), 1}, {3, 0}}));
  EXPECT_FALSE(fdh_is_convex(s));
  EXPECT_TRUE(s.contains({2, 1}));
  EXPECT_FALSE(s.contains({2, Rational(99, 100)}));
}

TEST(FdhIsConvex, Examples) {
  EXPECT_TRUE(fdh_is_convex(ex("3.1")));
  EXPECT_TRUE(fdh_is_convex(ex("3.2")));
  EXPECT_FALSE(fdh_is_convex(ex("3.3")));
  EXPECT_FALSE(fdh_is_convex(ex("3.4")));
}

TEST(EfficientChain, Examples) {
  const Vec2 a1(0, 1), b1(1, 0);
  EXPECT_TRUE(same_set(efficient_chain(ex("3.1"), {1}), chain({Piece::point(a1)})));
  EXPECT_TRUE(same_set(efficient_chain(ex("3.1"), {2}), chain({Piece::point(b1)})));
  EXPECT_TRUE(same_set(efficient_chain(ex("3.1"), {1, 2}), chain({seg(a1, b1)})));

  EXPECT_TRUE(same_set(efficient_chain(ex("3.2"), {1}), chain({seg({0, 2}, {0, 1})})));
  EXPECT_TRUE(same_set(efficient_chain(ex("3.2"), {2}), chain({seg({1, 0}, {2, 0})})));
  EXPECT_TRUE(same_set(efficient_chain(ex("3.2"), {1, 2}), chain({seg({0, 1}, {1, 0})})));

  const Vec2 p1(0, 3), p2(1, 2), p3(1, 1), p4(2, 0);
  const auto m33 = efficient_chain(ex("3.3"), {1, 2});
  EXPECT_TRUE(same_set(m33, chain({seg(p1, p2, true, false), seg(p3, p4)})));
  EXPECT_FALSE(m33.contains(p2));
  EXPECT_TRUE(m33.contains(p3));

  EXPECT_THROW(efficient_chain(ex("3.1"), {1, 2, 3}), std::invalid_argument);
}

TEST(WeaklyEfficientChain, Examples) {
  EXPECT_TRUE(same_set(weakly_efficient_chain(ex("3.2")),
                       chain({seg({0, 2}, {0, 1}), seg({0, 1}, {1, 0}), seg({1, 0}, {2, 0})})));
  EXPECT_TRUE(same_set(weakly_efficient_chain(ex("3.1")), chain({seg({0, 1}, {1, 0})})));
  EXPECT_TRUE(same_set(weakly_efficient_chain(ex("3.4")), chain({seg({0, 3}, {2, 2}), seg({2, 2}, {3, 0})})));
  EXPECT_TRUE(same_set(weakly_efficient_chain(ex("3.3")),
                       chain({seg({0, 3}, {1, 2}), seg({1, 2}, {1, 1}), seg({1, 1}, {2, 0})})));
}

TEST(VerdictPolygon, Examples) {
  const auto v1 = verdict_polygon(ex("3.1"));
  EXPECT_TRUE(v1.fdh_convex && v1.alpha_holds && v1.beta_holds);
  const auto v2 = verdict_polygon(ex("3.2"));
  EXPECT_TRUE(v2.fdh_convex);
  EXPECT_FALSE(v2.alpha_holds);
  EXPECT_FALSE(v2.beta_holds);
  EXPECT_EQ(v2.beta_violations, (std::vector<IndexSet>{{1}, {2}}));
  const auto v3 = verdict_polygon(ex("3.3"));
  EXPECT_FALSE(v3.fdh_convex);
  EXPECT_FALSE(v3.alpha_holds);
  EXPECT_TRUE(v3.beta_holds);
  // The witness set of WM \ M is exactly the vertical step without its bottom.
  EXPECT_TRUE(same_set(v3.alpha_witnesses, chain({seg({1, 2}, {1, 1}, true, false)})));
  const auto v4 = verdict_polygon(ex("3.4"));
  EXPECT_FALSE(v4.fdh_convex);
  EXPECT_TRUE(v4.alpha_holds && v4.beta_holds);
}

TEST(Geom2dProperties, RandomPolygons) {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> coord(-2, 24);
  int convex = 0;
  for (std::size_t k = 0; k < 300; ++k) {
    const Polygon2 P = effset::instances::random_polygon(rng, k);
    const auto v = verdict_polygon(P);  // throws on any theorem inconsistency
    convex += v.fdh_convex;
    EXPECT_TRUE(v.m.subset_of(v.wm));
    if (v.fdh_convex) EXPECT_EQ(v.alpha_holds, v.beta_holds);
    // Membership agrees with the polygon oracle on a half-integer grid.
    for (int t = 0; t < 40; ++t) {
      const Vec2 z(Rational(coord(rng), 2), Rational(coord(rng), 2));
      ASSERT_EQ(v.envelope.contains(z), fdh_oracle(P, z)) << "polygon " << k;
    }
    // Idempotency: the envelope of the truncated hull is the same staircase.
    const auto& c = v.envelope.corners;
    const Rational R = 20;
    std::vector<Vec2> boxed = c;
    boxed.emplace_back(R, c.back().y);
    boxed.emplace_back(R, R);
    boxed.emplace_back(c.front().x, R);
    EXPECT_EQ(lower_envelope(Polygon2(boxed)).corners, c);
  }
  EXPECT_GT(convex, 50);
}

TEST(Geom2dProperties, DenseSamplingConsistency) {
  std::mt19937_64 rng(99);
  for (std::size_t k = 0; k < 9; ++k) {
    const Polygon2 P = effset::instances::random_polygon(rng, k);
    const auto m = efficient_chain(P, {1, 2});
    const auto wm = weakly_efficient_chain(P);
    std::size_t pieces = std::max<std::size_t>(1, m.pieces().size());
    const auto eff = sample_chain(m, 10000 / pieces);
    // Polygon sample: edge points plus interior lattice points at 1/20 spacing.
    std::vector<std::pair<double, double>> poly;
    for (std::size_t i = 0; i < P.size(); ++i) {
      auto [a, b] = P.edge(i);
      for (int s = 0; s <= 200; ++s) {
        const Vec2 q = a + Rational(s, 200) * (b - a);
        poly.emplace_back(effset::to_double(q.x), effset::to_double(q.y));
      }
    }
    for (int gx = 0; gx <= 200; ++gx) {
      for (int gy = 0; gy <= 200; ++gy) {
        const Vec2 q(Rational(gx, 20), Rational(gy, 20));
        if (inside_or_on(P, q)) poly.emplace_back(effset::to_double(q.x), effset::to_double(q.y));
      }
    }
    const double tol = 1e-9;
    for (const auto& e : eff) {
      ASSERT_TRUE(wm.contains(e));
      const double ex_ = effset::to_double(e.x), ey = effset::to_double(e.y);
      for (const auto& [qx, qy] : poly) {
        const bool dom = qx <= ex_ && qy <= ey && (qx < ex_ - tol || qy < ey - tol);
        ASSERT_FALSE(dom) << "polygon " << k << " point (" << ex_ << "," << ey << ")";
      }
    }
  }
}
