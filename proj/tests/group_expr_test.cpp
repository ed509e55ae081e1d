#include "bicaut/group_expr.hpp"

#include <gtest/gtest.h>

#include <random>

#include "bicaut/error.hpp"
#include "support.hpp"

namespace bicaut {
namespace {

GroupExpr P(const char* text) { return parse_expr(text); }
GroupExpr N(const char* text) { return normalize(parse_expr(text)); }

TEST(OrderTest, Shapes) {
  EXPECT_EQ(order(GroupExpr::wreath(GroupExpr::sym(2), 2)), 8);
  EXPECT_EQ(order(GroupExpr::b2(GroupExpr(), GroupExpr(), GroupExpr())), 4);
  EXPECT_EQ(order(GroupExpr::wreath_k4(GroupExpr::sym(2))), 64);
  EXPECT_EQ(order(P("b2(S2,S2,S2)")), 1024);
  EXPECT_EQ(order(P("S3*S4")), 144);
  EXPECT_EQ(order(P("wr(S3,S3)")), 6 * 6 * 6 * 6);
  EXPECT_EQ(order(P("dih(5)")), 10);
  EXPECT_EQ(order(P("semi(S2*S2,S3xZ2)")), 48);
  EXPECT_EQ(order(P("semi(1,Z6)")), 6);
  EXPECT_EQ(order(P("semi(S2,D4)")), 16);
  EXPECT_EQ(order(P("1")), 1);
}

TEST(OrderTest, LargeOrdersAreExact) {
  // 20! has 19 digits; wr(S20,S5) is far beyond 64 bits.
  const BigInt f20("2432902008176640000");
  EXPECT_EQ(order(P("S20")), f20);
  EXPECT_EQ(order(P("wr(S20,S5)")), f20 * f20 * f20 * f20 * f20 * 120);
}

TEST(NormalizeTest, Examples) {
  EXPECT_EQ(print_expr(N("1*S3")), "S3");
  EXPECT_EQ(print_expr(N("wr(1,S4)")), "S4");
  EXPECT_EQ(N("S3*S2"), N("S2*S3"));
  EXPECT_EQ(print_expr(N("dih(3)")), "S3");
  EXPECT_EQ(N("dih(4)"), N("wr(S2,S2)"));
  EXPECT_EQ(N("wrK4(1)"), N("S2*S2"));
  EXPECT_EQ(N("b2(1,S2,S3)"), N("wr(S2,S2)*wr(S3,S2)"));
  EXPECT_EQ(N("b2(S2,1,1)"), N("wrK4(S2)"));
  EXPECT_EQ(N("b2(S2,S3,S2)"), N("b2(S2,S2,S3)"));
}

TEST(NormalizeTest, SwapTopBecomesWreath) {
  const GroupExpr g = GroupExpr::sym(3);
  const GroupExpr e = GroupExpr::semi({g, g}, SmallTop::cyclic(2), {{1, 0}});
  EXPECT_EQ(normalize(e), GroupExpr::wreath(g, 2));
  const GroupExpr mixed = GroupExpr::semi({GroupExpr::sym(2), g, g}, SmallTop::cyclic(2),
                                          {{0, 2, 1}});
  EXPECT_EQ(normalize(mixed), N("S2*wr(S3,S2)"));
}

TEST(NormalizeTest, IdempotentAndOrderPreserving) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 1000; ++i) {
    const GroupExpr e = testing::random_any_expr(rng, 3);
    const GroupExpr n = normalize(e);
    EXPECT_EQ(normalize(n), n) << print_expr(e);
    EXPECT_EQ(order(n), order(e)) << print_expr(e);
  }
}

TEST(ClassifyTest, Examples) {
  EXPECT_EQ(classify_class(N("wr(S3,S2)")), ClassTag::kT);
  EXPECT_EQ(classify_class(N("S2*wrK4(S2)")), ClassTag::kB1);
  EXPECT_EQ(classify_class(N("S2*b2(S2,S2,S3)")), ClassTag::kB2);
  EXPECT_EQ(classify_class(N("S2*S3")), ClassTag::kT);
  EXPECT_EQ(classify_class(N("semi(S2,Z6)")), ClassTag::kOutsideS);
  EXPECT_EQ(classify_class(N("dih(5)")), ClassTag::kOutsideS);
  EXPECT_EQ(classify_class(N("wrK4(S2)*wrK4(S2)")), ClassTag::kOutsideS);
  EXPECT_EQ(classify_class(N("wr(wrK4(S2),S2)")), ClassTag::kOutsideS);
  EXPECT_EQ(to_string(ClassTag::kB2), "B2");
  EXPECT_EQ(to_string(ClassTag::kOutsideS), "OutsideS");
}

TEST(ParseTest, Examples) {
  EXPECT_EQ(P("wr(S2, S2)"), GroupExpr::wreath(GroupExpr::sym(2), 2));
  EXPECT_EQ(P("S2 * b2(1, S2, S3)"),
            GroupExpr::product({GroupExpr::sym(2),
                                GroupExpr::b2(GroupExpr(), GroupExpr::sym(2),
                                              GroupExpr::sym(3))}));
  EXPECT_EQ(print_expr(P("  wrK4( S2 )")), "wrK4(S2)");
  EXPECT_EQ(print_expr(P("semi(S2*S2,Z2xZ2)")), "semi(S2*S2,Z2xZ2)");
}

ExprParseError parse_error(const char* text) {
  try {
    parse_expr(text);
  } catch (const ExprParseError& e) {
    return e;
  }
  ADD_FAILURE() << "accepted: " << text;
  return ExprParseError(ExprParseError::Kind::kSyntax, 0, {}, "");
}

TEST(ParseTest, ErrorsCarryPositionAndExpectation) {
  const auto open = parse_error("wr(S2");
  EXPECT_EQ(open.kind(), ExprParseError::Kind::kSyntax);
  EXPECT_EQ(open.position(), 6u);
  EXPECT_NE(std::find(open.expected().begin(), open.expected().end(), ","),
            open.expected().end());

  const auto gap = parse_error("S 17");
  EXPECT_EQ(gap.kind(), ExprParseError::Kind::kSyntax);
  EXPECT_EQ(gap.position(), 2u);

  EXPECT_EQ(parse_error("S1").kind(), ExprParseError::Kind::kArity);
  EXPECT_EQ(parse_error("dih(2)").kind(), ExprParseError::Kind::kArity);
  EXPECT_EQ(parse_error("foo(S2)").kind(), ExprParseError::Kind::kUnknownName);
  EXPECT_EQ(parse_error("semi(S2,Q8)").kind(), ExprParseError::Kind::kUnknownName);
  EXPECT_EQ(parse_error("S2*").kind(), ExprParseError::Kind::kSyntax);
  EXPECT_EQ(parse_error("S2 S3").kind(), ExprParseError::Kind::kSyntax);
  EXPECT_EQ(parse_error("").kind(), ExprParseError::Kind::kSyntax);
}

TEST(ParseTest, RoundTrip) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 1000; ++i) {
    const GroupExpr e = testing::random_any_expr(rng, 3);
    EXPECT_EQ(normalize(parse_expr(print_expr(e))), normalize(e)) << print_expr(e);
  }
}

TEST(SmallTopTest, Names) {
  EXPECT_EQ(SmallTop::cyclic(1), SmallTop::trivial());
  EXPECT_EQ(SmallTop::dihedral(2), SmallTop::klein());
  EXPECT_EQ(SmallTop::cyclic(6).name(), "Z6");
  EXPECT_EQ(SmallTop::dihedral(5).order(), 10);
  EXPECT_EQ(SmallTop::s3_x_z2().name(), "S3xZ2");
}

}  // namespace
}  // namespace bicaut
