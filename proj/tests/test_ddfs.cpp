#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "mvmatch/ddfs.hpp"
#include "support/ddfs_oracle.hpp"

using namespace mvmatch;
using mvmatch::testing::BacktrackCounter;
using mvmatch::testing::VectorView;

namespace {

std::set<Vertex> as_set(const std::vector<Vertex>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(DdfsTest, SharedSinkIsBottleneck) {
  // r = 0, g = 1 at layer 1, x = 2 at layer 0.
  VectorView view({1, 1, 0}, {{2}, {2}, {}});
  auto out = run_ddfs(view, 0, 1);
  const auto* b = std::get_if<DdfsBottleneck>(&out);
  ASSERT_NE(b, nullptr);
  EXPECT_EQ(b->bottleneck, 2);
  EXPECT_EQ(as_set(b->red_set), (std::set<Vertex>{0}));
  EXPECT_EQ(as_set(b->green_set), (std::set<Vertex>{1}));
}

TEST(DdfsTest, DisjointChainsGiveTwoPaths) {
  // r = 0 -> 2, g = 1 -> 3.
  VectorView view({1, 1, 0, 0}, {{2}, {3}, {}, {}});
  auto out = run_ddfs(view, 0, 1);
  const auto* two = std::get_if<DdfsTwoPaths>(&out);
  ASSERT_NE(two, nullptr);
  EXPECT_EQ(two->red_path, (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(two->green_path, (std::vector<Vertex>{1, 3}));
  EXPECT_EQ(two->red_edges, (std::vector<int>{0}));
}

TEST(DdfsTest, DiamondPartitionsMiddleLayer) {
  // r = 0, g = 1 at layer 2; a = 2, b = 3 at layer 1; x = 4 at layer 0.
  VectorView view({2, 2, 1, 1, 0}, {{2, 3}, {2, 3}, {4}, {4}, {}});
  auto out = run_ddfs(view, 0, 1);
  const auto* b = std::get_if<DdfsBottleneck>(&out);
  ASSERT_NE(b, nullptr);
  EXPECT_EQ(b->bottleneck, 4);
  auto red = as_set(b->red_set);
  auto green = as_set(b->green_set);
  std::set<Vertex> all = red;
  all.insert(green.begin(), green.end());
  EXPECT_EQ(all, (std::set<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(red.count(2) + red.count(3), 1u);
  EXPECT_EQ(green.count(2) + green.count(3), 1u);
  EXPECT_EQ(red, (std::set<Vertex>{0, 3}));
  EXPECT_EQ(green, (std::set<Vertex>{1, 2}));
}

TEST(DdfsTest, EqualRootsGiveEmptySupport) {
  VectorView view({1, 0}, {{1}, {}});
  EXPECT_TRUE(std::holds_alternative<DdfsEmptySupport>(run_ddfs(view, 0, 0)));
}

TEST(DdfsTest, RootIsBottleneckWhenOtherRootPassesThroughIt) {
  // g = 0 at layer 2 reaches layer 0 only through r = 1 at layer 1.
  VectorView view({2, 1, 0}, {{1}, {2}, {}});
  auto out = run_ddfs(view, 1, 0);
  const auto* b = std::get_if<DdfsBottleneck>(&out);
  ASSERT_NE(b, nullptr);
  EXPECT_EQ(b->bottleneck, 1);
  EXPECT_TRUE(b->red_set.empty());
  EXPECT_EQ(as_set(b->green_set), (std::set<Vertex>{0}));

  VectorView mirrored({2, 1, 0}, {{1}, {2}, {}});
  auto out2 = run_ddfs(mirrored, 0, 1);
  const auto* b2 = std::get_if<DdfsBottleneck>(&out2);
  ASSERT_NE(b2, nullptr);
  EXPECT_EQ(b2->bottleneck, 1);
  EXPECT_EQ(as_set(b2->red_set), (std::set<Vertex>{0}));
  EXPECT_TRUE(b2->green_set.empty());
}

TEST(DdfsTest, BothRootsFreeGiveTrivialPaths) {
  VectorView view({0, 0}, {{}, {}});
  auto out = run_ddfs(view, 0, 1);
  const auto* two = std::get_if<DdfsTwoPaths>(&out);
  ASSERT_NE(two, nullptr);
  EXPECT_EQ(two->red_path, (std::vector<Vertex>{0}));
  EXPECT_EQ(two->green_path, (std::vector<Vertex>{1}));
}

TEST(DdfsTest, MaskedEdgesAreSkipped) {
  VectorView view({1, 1, 0, 0}, {{kNoVertex, 2}, {kNoVertex, 3}, {}, {}});
  auto out = run_ddfs(view, 0, 1);
  EXPECT_TRUE(std::holds_alternative<DdfsTwoPaths>(out));
}

TEST(DdfsTest, NonDescendingEdgeRejected) {
  VectorView view({1, 1, 0}, {{1}, {2}, {}});
  EXPECT_THROW(run_ddfs(view, 0, 1), LayeredViewError);
}

TEST(DdfsTest, DeadEndRejected) {
  VectorView view({2, 1, 1, 0}, {{1}, {}, {3}, {}});
  EXPECT_THROW(run_ddfs(view, 0, 2), LayeredViewError);
}

TEST(DdfsTest, StepsFollowRedKeepsAheadRule) {
  // Two vertices at layer 2 compete; red moves first on a tie.
  VectorView view({2, 2, 1, 1, 0, 0}, {{2}, {3}, {4}, {5}, {}, {}});
  BacktrackCounter obs;
  run_ddfs(view, 0, 1, &obs);
  ASSERT_GE(obs.events.size(), 2u);
  EXPECT_EQ(obs.events[0].tree, DdfsTree::kRed);
  EXPECT_EQ(obs.events[0].vertex, 2);
  EXPECT_EQ(obs.events[1].tree, DdfsTree::kGreen);
  EXPECT_EQ(obs.events[1].vertex, 3);
}

TEST(DdfsTest, WorkspaceReuseMatchesFreshRuns) {
  std::mt19937_64 rng(11);
  Ddfs shared;
  for (int trial = 0; trial < 300; ++trial) {
    Vertex r, g;
    VectorView a = mvmatch::testing::random_layered_view(rng, 10, r, g);
    VectorView b = a;
    auto first = shared.run(a, r, g);
    auto second = run_ddfs(b, r, g);
    ASSERT_EQ(first.index(), second.index()) << a.describe();
    if (auto* x = std::get_if<DdfsBottleneck>(&first)) {
      const auto& y = std::get<DdfsBottleneck>(second);
      EXPECT_EQ(x->bottleneck, y.bottleneck);
      EXPECT_EQ(x->red_set, y.red_set);
      EXPECT_EQ(x->green_set, y.green_set);
    }
    if (auto* x = std::get_if<DdfsTwoPaths>(&first)) {
      const auto& y = std::get<DdfsTwoPaths>(second);
      EXPECT_EQ(x->red_path, y.red_path);
      EXPECT_EQ(x->green_path, y.green_path);
    }
  }
}

TEST(DdfsPropertyTest, AgreesWithExhaustiveAnalysis) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20000; ++trial) {
    Vertex r, g;
    VectorView view = mvmatch::testing::random_layered_view(rng, 10, r, g);
    BacktrackCounter obs;
    DdfsOutcome out;
    try {
      out = run_ddfs(view, r, g, &obs);
    } catch (const std::exception& e) {
      FAIL() << "trial " << trial << " r=" << r << " g=" << g << " " << view.describe() << ": "
             << e.what();
    }
    const std::string problem = mvmatch::testing::check_ddfs_outcome(view, r, g, out);
    ASSERT_EQ(problem, "") << "trial " << trial << " r=" << r << " g=" << g << " "
                           << view.describe();
    ASSERT_LE(view.max_target_calls(), 1) << view.describe();
    ASSERT_LE(obs.max_count(), 1) << view.describe();
  }
}
