#include "bicaut/oracle.hpp"

#include <gtest/gtest.h>

#include <random>

#include "bicaut/enumerate.hpp"
#include "bicaut/error.hpp"
#include "support.hpp"

namespace bicaut {
namespace {

TEST(OracleTest, KnownCounts) {
  EXPECT_EQ(oracle::automorphism_count(graphs::cycle(4)), 8);
  EXPECT_EQ(oracle::automorphism_count(graphs::complete(4)), 24);
  EXPECT_EQ(oracle::automorphism_count(graphs::complete_bipartite(2, 3)), 12);
  EXPECT_EQ(oracle::automorphism_count(graphs::star(5)), 120);
  EXPECT_EQ(oracle::automorphism_count(graphs::path(7)), 2);
  EXPECT_EQ(oracle::automorphism_count(Graph(1)), 1);
  // Petersen graph.
  Graph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                      {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  EXPECT_EQ(oracle::automorphism_count(petersen), 120);
}

TEST(OracleTest, MatchesBruteForce) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 150; ++i) {
    const int n = testing::uniform(rng, 2, 7);
    const Graph g = random_connected(rng, n, testing::uniform(rng, 0, 5));
    EXPECT_EQ(oracle::automorphism_count(g), testing::brute_force_count(g))
        << to_graph6(g);
  }
}

TEST(OracleTest, RelabelInvariance) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_connected(rng, testing::uniform(rng, 3, 20), testing::uniform(rng, 0, 4));
    const Graph h = random_relabel(g, rng);
    EXPECT_EQ(oracle::automorphism_count(g), oracle::automorphism_count(h));
    EXPECT_EQ(oracle::canonical_form(g), oracle::canonical_form(h));
  }
}

TEST(OracleTest, CanonicalFormSeparatesNonIsomorphic) {
  EXPECT_NE(oracle::canonical_form(graphs::path(4)), oracle::canonical_form(graphs::star(3)));
}

TEST(OracleTest, GeneratorsAreAutomorphisms) {
  const Graph g = graphs::complete_bipartite(2, 3);
  const auto set = oracle::automorphisms(g);
  EXPECT_EQ(set.count, 12);
  for (const auto& p : set.generators) EXPECT_TRUE(oracle::is_automorphism(g, p));
  EXPECT_TRUE(set.complete);
  EXPECT_EQ(set.elements.size(), 12u);
}

TEST(OracleTest, IsAutomorphism) {
  const Graph g = graphs::path(3);
  EXPECT_TRUE(oracle::is_automorphism(g, Permutation({2, 1, 0})));
  EXPECT_FALSE(oracle::is_automorphism(g, Permutation({1, 0, 2})));
  EXPECT_THROW(oracle::is_automorphism(g, Permutation({1, 0})), std::invalid_argument);
}

TEST(OracleTest, StabilizerAndOrbits) {
  const Graph s = graphs::star(4);
  EXPECT_EQ(oracle::stabilizer_count(s, 0), 24);
  EXPECT_EQ(oracle::stabilizer_count(s, 1), 6);
  EXPECT_EQ(oracle::orbit_partition(s).size(), 2u);
}

TEST(OracleTest, ColorsRestrictTheGroup) {
  EXPECT_EQ(oracle::automorphism_count(graphs::cycle(4), {1, 0, 0, 0}), 2);
}

TEST(OracleTest, VertexBound) {
  const Graph big = graphs::path(oracle::vertex_bound() + 1);
  EXPECT_THROW(oracle::automorphism_count(big), OracleBoundError);
}

}  // namespace
}  // namespace bicaut
