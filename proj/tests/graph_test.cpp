#include "bicaut/graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "bicaut/enumerate.hpp"
#include "bicaut/error.hpp"
#include "support.hpp"

namespace bicaut {
namespace {

std::vector<Edge> sorted_edges(const Graph& g) {
  auto e = g.edges();
  std::sort(e.begin(), e.end());
  return e;
}

GraphFormatError::Kind edge_list_error(const std::string& text, std::size_t* line) {
  try {
    parse_edge_list(text);
  } catch (const GraphFormatError& e) {
    *line = e.location();
    return e.kind();
  }
  ADD_FAILURE() << "no error for: " << text;
  return GraphFormatError::Kind::kMalformedHeader;
}

TEST(EdgeListTest, ParsesSmallGraph) {
  const Graph g = parse_edge_list("3 2\n0 1\n1 2\n");
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 2u);
  EXPECT_TRUE(g.has_edge(2, 1));
  EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(EdgeListTest, ReportsErrorKindAndLine) {
  using Kind = GraphFormatError::Kind;
  std::size_t line = 0;
  EXPECT_EQ(edge_list_error("x y\n", &line), Kind::kMalformedHeader);
  EXPECT_EQ(line, 1u);
  EXPECT_EQ(edge_list_error("3 2\n0 1\n", &line), Kind::kEdgeCount);
  EXPECT_EQ(edge_list_error("3 2\n0 1\n1 7\n", &line), Kind::kOutOfRange);
  EXPECT_EQ(line, 3u);
  EXPECT_EQ(edge_list_error("3 2\n0 1\n2 2\n", &line), Kind::kSelfLoop);
  EXPECT_EQ(line, 3u);
  EXPECT_EQ(edge_list_error("3 2\n0 1\n1 0\n", &line), Kind::kDuplicateEdge);
  EXPECT_EQ(line, 3u);
  EXPECT_EQ(edge_list_error("3 2\n0 1\n1\n", &line), Kind::kMalformedLine);
  EXPECT_EQ(line, 3u);
}

TEST(Graph6Test, KnownEncodings) {
  // K4 is "C~", P3 with edges 01, 12 is "Bg".
  EXPECT_EQ(to_graph6(graphs::complete(4)), "C~");
  const Graph p = parse_graph6("Bg");
  EXPECT_EQ(sorted_edges(p), sorted_edges(graphs::path(3)));
  EXPECT_EQ(parse_graph6(">>graph6<<C~").size(), 6u);
}

TEST(Graph6Test, RejectsBadInput) {
  EXPECT_THROW(parse_graph6("C"), GraphFormatError);
  EXPECT_THROW(parse_graph6("C~~"), GraphFormatError);
  EXPECT_THROW(parse_graph6("C\x20"), GraphFormatError);
  // P3 body with a padding bit set.
  EXPECT_THROW(parse_graph6("Bh"), GraphFormatError);
}

TEST(Graph6Test, LongFormHeader) {
  const Graph g = graphs::cycle(70);
  const std::string s = to_graph6(g);
  EXPECT_EQ(s[0], '~');
  EXPECT_EQ(sorted_edges(parse_graph6(s)), sorted_edges(g));
}

TEST(Graph6Test, MultipleLines) {
  const auto gs = parse_graph6_lines("C~\nBg\n\n");
  ASSERT_EQ(gs.size(), 2u);
  EXPECT_EQ(gs[1].order(), 3);
}

TEST(FormatTest, RandomRoundTrips) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const int n = testing::uniform(rng, 1, 30);
    const Graph g = random_connected(rng, n, testing::uniform(rng, 0, 3));
    for (auto f : {GraphFormat::kEdgeList, GraphFormat::kGraph6}) {
      const Graph back = parse_graph(print_graph(g, f), f);
      EXPECT_EQ(back.order(), g.order());
      EXPECT_EQ(sorted_edges(back), sorted_edges(g));
    }
  }
}

TEST(FamilyTest, Classification) {
  EXPECT_EQ(classify_family(graphs::path(5)).to_string(), "tree");
  EXPECT_EQ(classify_family(graphs::cycle(5)).to_string(), "unicyclic");
  EXPECT_EQ(classify_family(graphs::complete_bipartite(2, 3)).to_string(), "bicyclic-1");
  EXPECT_EQ(classify_family(graphs::complete(4)).to_string(), "other-c3");

  const Graph eight(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
  EXPECT_EQ(classify_family(eight).to_string(), "bicyclic-3");
  const Graph dumbbell(7, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 4}});
  EXPECT_EQ(classify_family(dumbbell).to_string(), "bicyclic-2");
}

TEST(FamilyTest, DisconnectedInputThrows) {
  EXPECT_THROW(cyclomatic_number(Graph(2)), NotConnectedError);
}

TEST(TwoCoreTest, StripsPendantTrees) {
  Graph g(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {3, 5}});
  const auto core = two_core(g);
  EXPECT_EQ(core, (std::vector<bool>{true, true, true, false, false, false}));
  const auto tree_core = two_core(graphs::star(4));
  EXPECT_EQ(std::count(tree_core.begin(), tree_core.end(), true), 0);
}

TEST(CompositeTest, SpliceAndLink) {
  const Graph a = graphs::path(3);
  const Graph b = graphs::star(2);
  const auto s = splice(a, 2, b, 0);
  EXPECT_EQ(s.graph.order(), 5);
  EXPECT_EQ(s.graph.size(), 4u);
  const auto l = link(a, 2, b, 0);
  EXPECT_EQ(l.graph.order(), 6);
  EXPECT_EQ(l.graph.size(), 5u);
  EXPECT_TRUE(l.graph.has_edge(l.first_map[2], l.second_map[0]));
}

TEST(MetricTest, CenterAndDiameter) {
  EXPECT_EQ(diameter(graphs::path(6)), 5);
  EXPECT_EQ(center(graphs::path(6)), (std::vector<Vertex>{2, 3}));
  EXPECT_EQ(center(graphs::star(5)), (std::vector<Vertex>{0}));
}

}  // namespace
}  // namespace bicaut
