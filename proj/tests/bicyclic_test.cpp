#include "bicaut/bicyclic.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "bicaut/enumerate.hpp"
#include "bicaut/error.hpp"
#include "bicaut/oracle.hpp"
#include "support.hpp"

namespace bicaut {
namespace {

// Two cycles of the given lengths sharing vertex 0.
Graph shared_vertex(int a, int b) {
  std::vector<Edge> edges;
  int next = 1;
  for (int len : {a, b}) {
    Vertex prev = 0;
    for (int i = 1; i < len; ++i, ++next) {
      edges.push_back({prev, next});
      prev = next;
    }
    edges.push_back({prev, 0});
  }
  return Graph(next, edges);
}

std::vector<Edge> sorted_edges(const Graph& g) {
  auto e = g.edges();
  std::sort(e.begin(), e.end());
  return e;
}

const Graph kFigureEight = shared_vertex(3, 3);
// C3 - P3 - C3: triangles {0,1,2} and {4,5,6} joined through 3.
const Graph kDumbbell(7, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 4}});

TEST(DecompositionTest, FigureEightWithPendant) {
  Graph g(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}, {0, 5}});
  const Decomposition d = extract_decomposition(g);
  EXPECT_EQ(d.skeleton.kind, Skeleton::Kind::kSharedVertex);
  EXPECT_EQ(d.skeleton.hubs, (std::vector<Vertex>{0}));
  EXPECT_EQ(d.attached[d.core_index[0]].tree.order(), 2);
  for (Vertex v = 1; v <= 4; ++v) EXPECT_EQ(d.attached[d.core_index[v]].tree.order(), 1);
  EXPECT_EQ(d.core_index[5], -1);
}

TEST(DecompositionTest, CompleteBipartiteIsTheta) {
  const Decomposition d = extract_decomposition(graphs::complete_bipartite(2, 3));
  EXPECT_EQ(d.skeleton.kind, Skeleton::Kind::kTheta);
  EXPECT_EQ(d.skeleton.lengths(), (std::vector<int>{2, 2, 2}));
  for (const auto& a : d.attached) EXPECT_EQ(a.tree.order(), 1);
}

TEST(DecompositionTest, DumbbellLengths) {
  const Decomposition d = extract_decomposition(kDumbbell);
  EXPECT_EQ(d.skeleton.kind, Skeleton::Kind::kDumbbell);
  EXPECT_EQ(d.skeleton.lengths(), (std::vector<int>{3, 3, 2}));
}

TEST(DecompositionTest, RoundTripIsExact) {
  StratifiedGenerator gen(31);
  for (int i = 0; i < 300; ++i) {
    const Graph g = gen.next(5, 14);
    const Decomposition d = extract_decomposition(g);
    EXPECT_EQ(sorted_edges(reconstruct(d)), sorted_edges(g)) << to_graph6(g);
  }
}

TEST(DecompositionTest, RejectsOtherCyclomaticNumbers) {
  EXPECT_THROW(extract_decomposition(graphs::complete(4)), DomainError);
  EXPECT_THROW(extract_decomposition(graphs::path(4)), DomainError);
}

TEST(TopTest, NamedTops) {
  const TopSymmetry eight = top_symmetries(extract_decomposition(kFigureEight));
  EXPECT_EQ(eight.elements.size(), 8u);
  EXPECT_EQ(eight.top, SmallTop::z2_wr_z2());

  const TopSymmetry c3c4 = top_symmetries(extract_decomposition(shared_vertex(3, 4)));
  EXPECT_EQ(c3c4.elements.size(), 4u);
  EXPECT_EQ(c3c4.top, SmallTop::klein());

  const TopSymmetry k23 = top_symmetries(extract_decomposition(graphs::complete_bipartite(2, 3)));
  EXPECT_EQ(k23.elements.size(), 12u);
  EXPECT_EQ(k23.top, SmallTop::s3_x_z2());
}

TEST(TopTest, OrderDividesSkeletonBound) {
  StratifiedGenerator gen(37);
  for (int i = 0; i < 300; ++i) {
    const Decomposition d = extract_decomposition(gen.next(4, 14));
    const auto q = top_symmetries(d).elements.size();
    switch (d.skeleton.kind) {
      case Skeleton::Kind::kTheta: EXPECT_EQ(12 % q, 0u); break;
      case Skeleton::Kind::kSingleCycle:
        EXPECT_EQ((2 * d.skeleton.lengths()[0]) % q, 0u);
        break;
      default: EXPECT_EQ(8 % q, 0u);
    }
  }
}

TEST(AssembleTest, NamedCases) {
  const Report m1 = analyze(kFigureEight);
  EXPECT_EQ(m1.expr, normalize(parse_expr("wr(S2,S2)")));
  EXPECT_EQ(m1.order, 8);
  EXPECT_EQ(m1.case_label, "M1");
  EXPECT_EQ(m1.generators.size(), 3u);
  EXPECT_EQ(m1.status, "verified");

  const Report m6 = analyze(shared_vertex(3, 4));
  EXPECT_EQ(m6.expr, normalize(parse_expr("S2*S2")));
  EXPECT_EQ(m6.case_label, "M6");

  const Report dumbbell = analyze(kDumbbell);
  EXPECT_EQ(dumbbell.order, 8);
  EXPECT_EQ(dumbbell.order, oracle::automorphism_count(kDumbbell));

  const Report k23 = analyze(graphs::complete_bipartite(2, 3));
  EXPECT_EQ(k23.expr, normalize(parse_expr("S2*S3")));
  EXPECT_EQ(k23.class_tag, ClassTag::kT);
  EXPECT_EQ(k23.status, "verified");
}

TEST(AssembleTest, KleinThetaInstance) {
  const Graph g = testing::klein_theta_instance();
  const Report r = analyze(g);
  EXPECT_EQ(r.order, 1024);
  EXPECT_EQ(r.expr, normalize(parse_expr("b2(S2,S2,S2)")));
  EXPECT_EQ(r.class_tag, ClassTag::kB2);
  EXPECT_EQ(r.case_label, "lem2");
  EXPECT_EQ(r.status, "verified");
  EXPECT_EQ(oracle::automorphism_count(g), 1024);
}

TEST(AssembleTest, KleinThetaWithEqualSlotsIsB1) {
  // Only the four path-end slots decorated: D = S2, H = K = 1.
  std::vector<Edge> edges = {{0, 1}, {0, 2}, {2, 3}, {3, 4}, {4, 1},
                             {0, 5}, {5, 6}, {6, 7}, {7, 1}};
  int next = 8;
  for (Vertex slot : {2, 4, 5, 7}) {
    edges.push_back({slot, next++});
    edges.push_back({slot, next++});
  }
  const Graph g(next, edges);
  const Report r = analyze(g);
  EXPECT_EQ(r.class_tag, ClassTag::kB1);
  EXPECT_EQ(r.order, 64);
  EXPECT_EQ(oracle::automorphism_count(g), 64);
}

TEST(UnicyclicTest, Examples) {
  EXPECT_EQ(analyze(graphs::cycle(5)).expr, GroupExpr::dihedral(5));
  Graph c3p(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
  EXPECT_EQ(analyze(c3p).order, 2);
  // C4 with a cherry on every vertex: 2^4 * 8.
  std::vector<Edge> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  for (Vertex v = 0; v < 4; ++v) {
    edges.push_back({v, 4 + 2 * v});
    edges.push_back({v, 5 + 2 * v});
  }
  const Graph g(12, edges);
  EXPECT_EQ(analyze(g).order, 128);
  EXPECT_EQ(oracle::automorphism_count(g), 128);
}

TEST(UnicyclicTest, ExhaustiveUpToNine) {
  for (int n = 3; n <= 9; ++n) {
    for (const auto& g : enumerate_connected(n, 1)) {
      EXPECT_EQ(analyze(g).order, oracle::automorphism_count(g)) << to_graph6(g);
    }
  }
}

TEST(BicyclicTest, ExhaustiveUpToEight) {
  // Connected bicyclic graphs on 4..8 vertices.
  const std::map<int, std::size_t> counts = {{4, 1}, {5, 5}, {6, 19}, {7, 67}, {8, 236}};
  for (const auto& [n, expected] : counts) {
    const auto graphs = enumerate_connected(n, 2);
    EXPECT_EQ(graphs.size(), expected);
    for (const auto& g : graphs) {
      const Report r = analyze(g);
      EXPECT_EQ(r.order, oracle::automorphism_count(g)) << to_graph6(g);
      EXPECT_NE(r.class_tag, ClassTag::kOutsideS) << to_graph6(g);
      EXPECT_EQ(r.status, "verified") << to_graph6(g);
    }
  }
}

TEST(BicyclicTest, RelabellingDoesNotChangeTheReport) {
  std::mt19937_64 rng(41);
  StratifiedGenerator gen(43);
  for (int i = 0; i < 200; ++i) {
    const Graph g = gen.next(6, 14, true);
    const Report a = analyze(g);
    const Report b = analyze(random_relabel(g, rng));
    EXPECT_EQ(a.expr, b.expr);
    EXPECT_EQ(a.case_label, b.case_label);
  }
}

TEST(GeneratorTest, OutputsAreAutomorphisms) {
  StratifiedGenerator gen(47);
  for (int i = 0; i < 300; ++i) {
    const Graph g = gen.next(4, 14, true);
    const Decomposition d = extract_decomposition(g);
    for (const auto& p : emit_generators(d, top_symmetries(d))) {
      EXPECT_TRUE(oracle::is_automorphism(g, p)) << to_graph6(g);
    }
  }
}

TEST(ReportTest, Format) {
  const std::string s = format_report(analyze(kFigureEight));
  EXPECT_EQ(s,
            "family=bicyclic-3 skeleton=shared-vertex lengths=3,3 expr=wr(S2,S2) "
            "order=8 class=T case=M1 generators=3 status=verified");
  EXPECT_THROW(analyze(graphs::complete(4)), DomainError);
  EXPECT_THROW(analyze(Graph(3)), NotConnectedError);
}

}  // namespace
}  // namespace bicaut
