#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "effset/effset.hpp"
#include "oracles.hpp"

using effset::IndexSet;
using effset::Point;
using effset::PointSet;
using Indices = std::vector<std::size_t>;

namespace {

// Vertices of the second illustration polygon: p1..p4.
PointSet ex2_vertices() { return PointSet{{0, 2}, {0, 1}, {1, 0}, {2, 0}}; }
PointSet ex1_vertices() { return PointSet{{0, 1}, {1, 0}, {2, 1}, {1, 2}}; }

}  // namespace

TEST(EfficientSet, Examples) {
  const PointSet Y{{0, 1}, {1, 0}, {1, 1}};
  EXPECT_EQ(oracle::efficient({{0, 1}, {1, 0}, {1, 1}}, {0, 1}), (std::set<std::size_t>{0, 1}));
  EXPECT_EQ(effset::efficient_set(Y, {1, 2}), (Indices{0, 1}));
  EXPECT_EQ(effset::efficient_set(PointSet{{0, 0}}, {1, 2}), (Indices{0}));
  EXPECT_EQ(oracle::efficient({{0, 2}, {0, 1}, {1, 0}, {2, 0}}, {0}), (std::set<std::size_t>{0, 1}));
  EXPECT_EQ(effset::efficient_set(ex2_vertices(), {1}), (Indices{0, 1}));
}

TEST(EfficientSet, EmptyAndErrors) {
  EXPECT_TRUE(effset::efficient_set(PointSet{}, {1, 2}).empty());
  EXPECT_THROW(effset::efficient_set(PointSet{{0, 1}}, {3}), std::invalid_argument);
  EXPECT_THROW(PointSet({Point{0, 1}, Point{0, 1, 2}}), std::invalid_argument);
}

TEST(EfficientSet, DuplicatesAreAllEfficient) {
  const PointSet Y{{1, 1}, {1, 1}, {2, 2}};
  EXPECT_EQ(effset::efficient_set(Y, {1, 2}), (Indices{0, 1}));
  EXPECT_EQ(effset::efficient_set_fast(Y), (Indices{0, 1}));
}

TEST(WeaklyEfficientSet, Examples) {
  EXPECT_EQ(effset::weakly_efficient_set(PointSet{{0, 1}, {0, 2}}, {1, 2}), (Indices{0, 1}));
  // Nothing is strictly below (1,1) in both coordinates, so it stays weakly efficient.
  EXPECT_EQ(oracle::weakly_efficient({{0, 1}, {1, 0}, {1, 1}}, {0, 1}), (std::set<std::size_t>{0, 1, 2}));
  EXPECT_EQ(effset::weakly_efficient_set(PointSet{{0, 1}, {1, 0}, {1, 1}}, {1, 2}), (Indices{0, 1, 2}));
  EXPECT_EQ(effset::weakly_efficient_set(PointSet{{0, 1}, {1, 0}, {2, 2}}, {1, 2}), (Indices{0, 1}));
  EXPECT_EQ(oracle::weakly_efficient({{0, 2}, {0, 1}, {1, 0}, {2, 0}}, {0, 1}).size(), 4u);
  EXPECT_EQ(effset::weakly_efficient_set(ex2_vertices(), {1, 2}), (Indices{0, 1, 2, 3}));
}

TEST(EfficientSetFast, SmallExamples) {
  std::vector<Point> stair;
  for (int i = 0; i <= 6; ++i) stair.push_back(Point{double(i), double(6 - i)});
  EXPECT_EQ(effset::efficient_set_fast(PointSet(stair)).size(), 7u);
  const PointSet dom{{3, 4, 5}, {0, 0, 0}, {1, 2, 0}, {0, 5, 1}};
  EXPECT_EQ(effset::efficient_set_fast(dom), (Indices{1}));
  EXPECT_EQ(effset::efficient_set_fast(PointSet{{5, 5}, {0, 0}, {1, 0}}), (Indices{1}));
}

TEST(EfficientSetFast, MatchesPairwiseOracle) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> size(1, 200);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t m = 2 + trial % 2;
    const int hi = (trial % 3 == 0) ? 5 : 1000;
    const auto raw = oracle::random_integer_points(rng, size(rng), m, 0, hi);
    const PointSet Y = oracle::to_point_set(raw);
    const auto fast = effset::efficient_set_fast(Y);
    ASSERT_EQ(oracle::as_set(fast), oracle::efficient(raw, oracle::all_coords(m))) << "trial " << trial;
    ASSERT_EQ(fast, effset::efficient_set(Y));
  }
}

TEST(EfficientSetFast, HigherDimensionFallsBack) {
  std::mt19937_64 rng(5);
  const auto raw = oracle::random_integer_points(rng, 60, 4, 0, 4);
  const PointSet Y = oracle::to_point_set(raw);
  EXPECT_EQ(oracle::as_set(effset::efficient_set_fast(Y)), oracle::efficient(raw, oracle::all_coords(4)));
}

TEST(StrictlyEfficient, Examples) {
  effset::SolutionSet twins({{"a", Point{1, 1}}, {"b", Point{1, 1}}});
  EXPECT_TRUE(effset::strictly_efficient(twins).empty());
  EXPECT_EQ(effset::efficient_solutions(twins, {1, 2}), (std::vector<std::string>{"a", "b"}));

  effset::SolutionSet incomparable({{"a", Point{0, 1}}, {"b", Point{1, 0}}});
  EXPECT_EQ(effset::strictly_efficient(incomparable), (std::vector<std::string>{"a", "b"}));

  effset::SolutionSet dominated({{"a", Point{0, 0}}, {"b", Point{0, 1}}});
  EXPECT_EQ(effset::strictly_efficient(dominated), (std::vector<std::string>{"a"}));
}

TEST(StrictlyEfficient, DuplicateIdsRejected) {
  EXPECT_THROW(effset::SolutionSet({{"a", Point{0}}, {"a", Point{1}}}), std::invalid_argument);
}

TEST(SolutionSpace, SubsetEfficiencyPullsBackImages) {
  effset::SolutionSet S({{"x1", Point{0, 3}}, {"x2", Point{0, 2}}, {"x3", Point{2, 0}}});
  EXPECT_EQ(effset::efficient_solutions(S, {1}), (std::vector<std::string>{"x1", "x2"}));
  EXPECT_EQ(effset::weakly_efficient_solutions(S, {1, 2}), (std::vector<std::string>{"x1", "x2", "x3"}));
  EXPECT_EQ(effset::efficient_solutions(S, {1, 2}), (std::vector<std::string>{"x2", "x3"}));
}

TEST(Subsets, OrderIsCardinalityThenLex) {
  const auto s = effset::nonempty_subsets(3);
  std::vector<std::string> names;
  for (const auto& I : s) names.push_back(I.to_string());
  EXPECT_EQ(names, (std::vector<std::string>{"{1}", "{2}", "{3}", "{1,2}", "{1,3}", "{2,3}", "{1,2,3}"}));
  EXPECT_EQ(effset::nonempty_subsets(20).size(), (1u << 20) - 1);
  EXPECT_THROW(effset::nonempty_subsets(21), std::length_error);
}

TEST(ConditionBeta, Examples) {
  const auto r = effset::condition_beta(ex2_vertices());
  EXPECT_FALSE(r.holds);
  ASSERT_FALSE(r.violations.empty());
  EXPECT_EQ(r.violations.front().subset, (IndexSet{1}));
  EXPECT_EQ(ex2_vertices()[r.violations.front().index], (Point{0, 2}));
  EXPECT_TRUE(effset::condition_beta(PointSet{{0, 0}}).holds);
  EXPECT_TRUE(effset::condition_beta(ex1_vertices()).holds);
}

TEST(ConditionBeta, CapacityError) {
  std::vector<double> big(21, 0.0);
  EXPECT_THROW(effset::condition_beta(PointSet{Point(big)}), std::length_error);
}

TEST(ConditionAlpha, Examples) {
  const auto tie = effset::condition_alpha(PointSet{{0, 1}, {0, 2}});
  EXPECT_FALSE(tie.holds);
  EXPECT_EQ(tie.witnesses, (Indices{1}));
  EXPECT_TRUE(effset::condition_alpha(PointSet{{0, 1}, {1, 0}}).holds);
  EXPECT_FALSE(effset::condition_alpha(ex2_vertices()).holds);
}

TEST(TheoremVerdict, AssemblesAndGuards) {
  const auto v = effset::theorem_verdict(PointSet{{0, 0}}, true);
  EXPECT_TRUE(v.alpha_holds);
  EXPECT_TRUE(v.beta_holds);
  const auto w = effset::theorem_verdict(ex2_vertices(), std::nullopt);
  EXPECT_FALSE(w.alpha_holds);
  EXPECT_FALSE(w.beta_holds);
  EXPECT_FALSE(w.fdh_convex.has_value());
  // Tie construction: alpha fails while beta holds; a convex claim must be refused.
  const PointSet tie{{0, 1}, {0, 2}, {1, 0}};
  EXPECT_NO_THROW(effset::theorem_verdict(tie, false));
  EXPECT_THROW(effset::theorem_verdict(PointSet{{0, 1}, {1, 1}, {1, 0}}, true),
               effset::TheoremInconsistency);
}

TEST(EffsetProperties, InclusionChainAndAlphaImpliesBeta) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 2 + trial % 3;
    const auto raw = oracle::random_integer_points(rng, 1 + trial % 40, m, 0, 4);
    const PointSet Y = oracle::to_point_set(raw);
    const auto wm = oracle::as_set(effset::weakly_efficient_set(Y));
    for (const auto& I : effset::nonempty_subsets(m)) {
      const auto mi = oracle::as_set(effset::efficient_set(Y, I));
      const auto wmi = oracle::as_set(effset::weakly_efficient_set(Y, I));
      EXPECT_TRUE(std::includes(wmi.begin(), wmi.end(), mi.begin(), mi.end()));
      EXPECT_TRUE(std::includes(wm.begin(), wm.end(), wmi.begin(), wmi.end()));
    }
    const auto alpha = effset::condition_alpha(Y);
    const auto beta = effset::condition_beta(Y);
    if (alpha.holds) EXPECT_TRUE(beta.holds);
  }
}

TEST(EffsetProperties, GenericCoordinatesGiveAlpha) {
  std::mt19937_64 rng(78);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Point> pts;
    for (int k = 0; k < 50; ++k) pts.push_back(Point{u(rng), u(rng), u(rng)});
    EXPECT_TRUE(effset::condition_alpha(PointSet(pts)).holds);
  }
}

TEST(EffsetProperties, RemovingDominatedPointKeepsEfficientSet) {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 200; ++trial) {
    auto raw = oracle::random_integer_points(rng, 30, 2 + trial % 2, 0, 5);
    const auto eff = oracle::as_set(effset::efficient_set(oracle::to_point_set(raw)));
    std::size_t victim = raw.size();
    for (std::size_t j = 0; j < raw.size(); ++j) {
      if (!eff.count(j)) victim = j;
    }
    if (victim == raw.size()) continue;
    std::vector<oracle::Vec> before, after;
    for (std::size_t j : eff) before.push_back(raw[j]);
    raw.erase(raw.begin() + static_cast<std::ptrdiff_t>(victim));
    for (std::size_t j : effset::efficient_set(oracle::to_point_set(raw))) after.push_back(raw[j]);
    std::sort(before.begin(), before.end());
    std::sort(after.begin(), after.end());
    EXPECT_EQ(before, after);
  }
}
