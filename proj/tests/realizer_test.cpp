#include "bicaut/realizer.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "bicaut/bicyclic.hpp"
#include "bicaut/error.hpp"
#include "bicaut/oracle.hpp"
#include "support.hpp"

namespace bicaut {
namespace {

TEST(CatalogTest, SmallestAsymmetricTrees) {
  const auto trees = asymmetric_trees(4);
  ASSERT_EQ(trees.size(), 4u);
  EXPECT_EQ(trees[0].order(), 7);
  std::set<std::string> codes;
  for (const auto& t : trees) {
    EXPECT_EQ(oracle::automorphism_count(t), 1);
    codes.insert(free_tree_code(t));
  }
  EXPECT_EQ(codes.size(), 4u);
}

TEST(CatalogTest, ExclusionsAndExhaustion) {
  const auto first = asymmetric_trees(1);
  CatalogConstraints c;
  c.not_isomorphic_to = {first[0], graphs::path(5)};
  const auto rest = asymmetric_trees(1, c);
  EXPECT_NE(free_tree_code(rest[0]), free_tree_code(first[0]));
  CatalogConstraints tiny;
  tiny.max_size = 7;
  EXPECT_THROW(asymmetric_trees(2, tiny), DomainError);
  EXPECT_TRUE(asymmetric_trees(0).empty());
}

TEST(RealizeTreeTest, OrderAndFixedAnchor) {
  for (const char* text : {"1", "S2", "S3", "S2*S2", "wr(S2,S2)", "S2*S3*S3",
                           "wr(S2*S3,S2)", "wr(wr(S2,S2),S3)"}) {
    const GroupExpr e = parse_expr(text);
    const TreeRealization r = realize_tree(e);
    EXPECT_EQ(oracle::automorphism_count(r.tree), order(e)) << text;
    EXPECT_EQ(oracle::stabilizer_count(r.tree, r.anchor), order(e)) << text;
  }
  EXPECT_THROW(realize_tree(parse_expr("wrK4(S2)")), OutsideClassError);
}

TEST(FixedAnchorTest, UsesBarConstructionWhenFixIsEmpty) {
  const TreeRealization r = fixed_anchor(graphs::path(4));
  EXPECT_EQ(r.tree.order(), 6);
  EXPECT_EQ(oracle::stabilizer_count(r.tree, r.anchor), 2);
  const TreeRealization s = fixed_anchor(graphs::star(3));
  EXPECT_EQ(s.anchor, 0);
}

TEST(RealizeTest, GadgetIsRigid) {
  for (bool catalog : {false, true}) {
    RealizeOptions options;
    options.catalog_decorations = catalog;
    const Realization r = realize(GroupExpr(), options);
    EXPECT_EQ(oracle::automorphism_count(r.graph), 1);
    EXPECT_EQ(cyclomatic_number(r.graph), 2);
  }
}

TEST(RealizeTest, NamedExpressions) {
  for (const char* text : {"wr(S2,S2)", "S3", "S2*b2(1,1,1)", "wrK4(S2)", "b2(S2,S2,S3)",
                           "S2*wrK4(1)", "S3*b2(S2,1,S2)"}) {
    const GroupExpr e = parse_expr(text);
    const Realization r = realize(e);
    EXPECT_EQ(cyclomatic_number(r.graph), 2) << text;
    EXPECT_EQ(oracle::automorphism_count(r.graph), order(e)) << text;
    EXPECT_EQ(analyze(r.graph).class_tag, classify_class(e)) << text;
  }
}

TEST(RealizeTest, RandomRoundTrip) {
  std::mt19937_64 rng(53);
  int tested = 0;
  while (tested < 40) {
    const GroupExpr e = testing::random_class_expr(rng);
    if (order(e) > 10000) continue;
    const Realization r = realize(e);
    if (r.graph.order() > oracle::vertex_bound()) continue;
    ++tested;
    EXPECT_EQ(oracle::automorphism_count(r.graph), order(e)) << print_expr(e);
    EXPECT_EQ(analyze(r.graph).class_tag, classify_class(e)) << print_expr(e);
  }
}

TEST(RealizeTest, Errors) {
  EXPECT_THROW(realize(parse_expr("semi(S2,Z6)")), OutsideClassError);
  EXPECT_THROW(realize(parse_expr("dih(7)")), OutsideClassError);
  EXPECT_THROW(realize(parse_expr("S200")), SizeBudgetError);
}

TEST(ManifestTest, ListsEveryAttachment) {
  const Realization r = realize(parse_expr("S2*b2(S2,S2,S3)"));
  std::set<std::string> roles;
  for (const auto& m : r.manifest) {
    roles.insert(m.role);
    EXPECT_LE(m.first, m.last);
    EXPECT_LT(m.last, r.graph.order());
  }
  EXPECT_EQ(roles, (std::set<std::string>{"gadget", "D", "H", "K", "C"}));
  const std::string text = format_manifest(r.manifest);
  EXPECT_NE(text.find("role=gadget slot=- vertices=0-8"), std::string::npos);
}

}  // namespace
}  // namespace bicaut
