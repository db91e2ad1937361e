#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "mvmatch/dimacs.hpp"
#include "mvmatch/graph.hpp"

using namespace mvmatch;
using fixtures::make_graph;
using fixtures::make_matching;

namespace {

std::set<std::pair<int, int>> edge_set(const Graph& g) {
  std::set<std::pair<int, int>> s;
  for (const Edge& e : g.edges()) s.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  return s;
}

bool has_violation_at(const ValidationReport& r, ViolationKind kind, Vertex v) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const MatchingViolation& x) {
    return x.kind == kind && (x.u == v || x.v == v);
  });
}

}  // namespace

TEST(GraphTest, ConstructionMergesParallelEdges) {
  Graph g = make_graph(3, {{0, 1}, {1, 0}, {1, 2}, {0, 1}});
  EXPECT_EQ(g.num_edges(), 2);
  EXPECT_EQ(g.degree(0), 1);
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_EQ(g.edge(0), (Edge{0, 1}));
}

TEST(GraphTest, ConstructionRejectsSelfLoopAndRange) {
  EXPECT_THROW(make_graph(2, {{1, 1}}), InputError);
  EXPECT_THROW(make_graph(2, {{0, 2}}), InputError);
  EXPECT_THROW(make_graph(2, {{-1, 0}}), InputError);
}

TEST(GraphTest, AdjacencyMatchesEdgeList) {
  Graph g = generate_random_graph(30, 120, 7);
  std::size_t degree_sum = 0;
  std::vector<int> seen(static_cast<std::size_t>(g.num_edges()), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    degree_sum += static_cast<std::size_t>(g.degree(v));
    for (const Incidence& inc : g.neighbors(v)) {
      EXPECT_EQ(g.edge(inc.edge).other(v), inc.neighbor);
      ++seen[static_cast<std::size_t>(inc.edge)];
    }
  }
  EXPECT_EQ(degree_sum, 2u * static_cast<std::size_t>(g.num_edges()));
  for (int c : seen) EXPECT_EQ(c, 2);
}

TEST(GraphTest, IncidenceOffsetsPartitionAdjacency) {
  Graph g = fixtures::petersen();
  std::size_t expected = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    EXPECT_EQ(g.incidence_offset(v), expected);
    expected += static_cast<std::size_t>(g.degree(v));
  }
  EXPECT_EQ(expected, 30u);
}

TEST(GraphTest, FindEdge) {
  Graph g = fixtures::path4();
  EXPECT_EQ(g.find_edge(2, 1), std::optional<EdgeId>(1));
  EXPECT_FALSE(g.find_edge(0, 3).has_value());
  EXPECT_FALSE(g.find_edge(0, 9).has_value());
}

TEST(DimacsTest, SmallestInstance) {
  Graph g = parse_dimacs_string("p edge 2 1\ne 1 2");
  EXPECT_EQ(g.num_vertices(), 2);
  ASSERT_EQ(g.num_edges(), 1);
  EXPECT_EQ(g.edge(0), (Edge{0, 1}));
}

TEST(DimacsTest, PathGraph) {
  Graph g = parse_dimacs_string("c a path\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n");
  EXPECT_EQ(edge_set(g), edge_set(fixtures::path4()));
}

TEST(DimacsTest, IndexOutOfRange) {
  EXPECT_THROW(parse_dimacs_string("p edge 2 1\ne 1 3"), InputError);
  EXPECT_THROW(parse_dimacs_string("p edge 2 1\ne 0 1"), InputError);
}

TEST(DimacsTest, MalformedInputs) {
  EXPECT_THROW(parse_dimacs_string("e 1 2\n"), InputError);
  EXPECT_THROW(parse_dimacs_string("c only comments\n"), InputError);
  EXPECT_THROW(parse_dimacs_string("p edge 2 1\ne 1 1\n"), InputError);
  EXPECT_THROW(parse_dimacs_string("p edge 2 1\ne 1\n"), InputError);
  EXPECT_THROW(parse_dimacs_string("p edge 2 1\ne 1 2 3\n"), InputError);
  EXPECT_THROW(parse_dimacs_string("p edge 2 1\nx 1 2\n"), InputError);
  EXPECT_THROW(parse_dimacs_string("p edge 2 2\ne 1 2\n"), InputError);
  EXPECT_THROW(parse_dimacs_string("p col 2 1\ne 1 2\n"), InputError);
  EXPECT_THROW(parse_dimacs_string("p edge 2 1\np edge 2 1\ne 1 2\n"), InputError);
}

TEST(DimacsTest, ErrorMentionsLineNumber) {
  try {
    parse_dimacs_string("p edge 3 2\ne 1 2\ne 2 7\n");
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(DimacsTest, DuplicateEdgesMerged) {
  Graph g = parse_dimacs_string("p edge 3 3\ne 1 2\ne 2 1\ne 2 3\n");
  EXPECT_EQ(g.num_edges(), 2);
}

TEST(DimacsTest, RoundTripPreservesEdgeSet) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = generate_random_graph(15, static_cast<std::int64_t>(seed * 4), seed);
    std::stringstream buf;
    write_dimacs(g, buf);
    Graph back = parse_dimacs(buf);
    EXPECT_EQ(back.num_vertices(), g.num_vertices());
    EXPECT_EQ(edge_set(back), edge_set(g));
  }
}

TEST(DimacsTest, MatchingRoundTrip) {
  Matching m = make_matching(6, {{0, 3}, {4, 5}});
  std::stringstream buf;
  write_matching(m, buf);
  EXPECT_EQ(buf.str(), "size 2\nmatched 1 4\nmatched 5 6\n");
  EXPECT_EQ(parse_matching(buf, 6), m);
}

TEST(DimacsTest, MatchingFileWithSharedVertexIsAsymmetric) {
  Graph g = fixtures::path4();
  Matching m = parse_matching_string("size 2\nmatched 1 2\nmatched 2 3\n", 4);
  EXPECT_FALSE(validate_matching(g, m).valid());
  EXPECT_THROW(parse_matching_string("size 2\nmatched 1 2\n", 4), InputError);
  EXPECT_THROW(parse_matching_string("matched 1 2\n", 4), InputError);
  EXPECT_THROW(parse_matching_string("size 1\nmatched 1 9\n", 4), InputError);
}

TEST(ValidateMatchingTest, PathWithMiddleEdgeIsValid) {
  EXPECT_TRUE(validate_matching(fixtures::path4(), make_matching(4, {{1, 2}})).valid());
}

TEST(ValidateMatchingTest, AsymmetricPartnerReported) {
  Matching m = Matching::from_partners({1, 2, kNoVertex, kNoVertex});
  auto report = validate_matching(fixtures::path4(), m);
  EXPECT_TRUE(has_violation_at(report, ViolationKind::kAsymmetric, 0));
}

TEST(ValidateMatchingTest, TriangleWithTwoMatchedEdgesAtOneVertex) {
  Matching m = Matching::from_partners({1, 2, 1});
  auto report = validate_matching(fixtures::complete(3), m);
  EXPECT_FALSE(report.valid());
  EXPECT_TRUE(has_violation_at(report, ViolationKind::kAsymmetric, 1));
}

TEST(ValidateMatchingTest, NonEdgePairReported) {
  Matching m = make_matching(4, {{0, 3}});
  auto report = validate_matching(fixtures::path4(), m);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].kind, ViolationKind::kNotAnEdge);
}

TEST(ValidateMatchingTest, SizeMismatchAndSelfPartner) {
  EXPECT_FALSE(validate_matching(fixtures::path4(), Matching(3)).valid());
  auto report = validate_matching(fixtures::path4(), Matching::from_partners({0, -1, -1, -1}));
  EXPECT_TRUE(has_violation_at(report, ViolationKind::kSelfPartner, 0));
}

TEST(AugmentTest, EmptyMatchingSingleEdge) {
  Graph g = make_graph(2, {{0, 1}});
  Matching out = augment(g, Matching(2), {{0, 1}});
  EXPECT_EQ(out.size(), 1);
  EXPECT_EQ(out.mate(0), 1);
}

TEST(AugmentTest, PathFlip) {
  Graph g = fixtures::path4();
  Matching out = augment(g, make_matching(4, {{1, 2}}), {{0, 1, 2, 3}});
  EXPECT_EQ(out, make_matching(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(out.size(), 2);
}

TEST(AugmentTest, MatchedEndpointRejected) {
  Graph g = fixtures::path4();
  Matching m = make_matching(4, {{1, 2}});
  try {
    augment(g, m, {{0, 1, 2}});
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("endpoint 2"), std::string::npos);
  }
}

TEST(AugmentTest, InvalidPathsRejected) {
  Graph g = fixtures::cycle(6);
  Matching m = make_matching(6, {{1, 2}, {3, 4}});
  EXPECT_NO_THROW(augment(g, m, {{0, 1, 2, 3, 4, 5}}));
  EXPECT_THROW(augment(g, m, {{0, 1, 2, 3}}), InputError);
  EXPECT_THROW(augment(g, m, {{0, 5, 4, 3, 2, 1}}), InputError);
  EXPECT_THROW(augment(g, m, {{0, 2}}), InputError);
  EXPECT_THROW(augment(g, m, {{0}}), InputError);
  EXPECT_THROW(augment(g, Matching(6), {{0, 1, 0}}), InputError);
  EXPECT_THROW(augment(g, Matching(6), {{0, 1, 2}}), InputError);
}

TEST(AugmentTest, RandomAugmentationsKeepMatchingValid) {
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = generate_random_graph(8, 12, static_cast<std::uint64_t>(trial));
    Matching m(8);
    // Single free edges are always augmenting; flipping along them must grow
    // the matching by exactly one.
    for (const Edge& e : g.edges()) {
      if (m.is_matched(e.u) || m.is_matched(e.v)) continue;
      const int before = m.size();
      m = augment(g, m, {{e.u, e.v}});
      EXPECT_EQ(m.size(), before + 1);
      EXPECT_TRUE(validate_matching(g, m).valid());
    }
  }
}

TEST(GenerateRandomGraphTest, CompleteGraphForced) {
  for (std::uint64_t seed : {0ull, 1ull, 99ull}) {
    EXPECT_EQ(edge_set(generate_random_graph(4, 6, seed)), edge_set(fixtures::complete(4)));
  }
}

TEST(GenerateRandomGraphTest, Edgeless) {
  Graph g = generate_random_graph(10, 0, 5);
  EXPECT_EQ(g.num_vertices(), 10);
  EXPECT_EQ(g.num_edges(), 0);
}

TEST(GenerateRandomGraphTest, Deterministic) {
  for (std::int64_t m : {5, 30, 40}) {
    Graph a = generate_random_graph(10, m, 42);
    Graph b = generate_random_graph(10, m, 42);
    EXPECT_EQ(a.edges(), b.edges());
    EXPECT_EQ(a.num_edges(), m);
  }
  EXPECT_NE(generate_random_graph(50, 100, 1).edges(), generate_random_graph(50, 100, 2).edges());
}

TEST(GenerateRandomGraphTest, CapacityExceeded) {
  EXPECT_THROW(generate_random_graph(4, 7, 0), InputError);
  EXPECT_THROW(generate_random_graph(1, 1, 0), InputError);
}

TEST(GenerateRandomGraphTest, ExactEdgeCountAcrossDensities) {
  for (std::int64_t m = 0; m <= 45; ++m) {
    Graph g = generate_random_graph(10, m, static_cast<std::uint64_t>(m));
    EXPECT_EQ(g.num_edges(), m);
    EXPECT_EQ(edge_set(g).size(), static_cast<std::size_t>(m));
  }
}
