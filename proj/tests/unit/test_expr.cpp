#include "gdet/expr.hpp"

#include <gtest/gtest.h>

using namespace gdet;

namespace {

RingElement basis(std::size_t i) { return RingElement::basis(s4_group(), i); }

}  // namespace

TEST(Expr, Literal) { EXPECT_EQ(parse_expr("3"), RingElement::scalar(s4_group(), 3)); }

TEST(Expr, OnePlusX) {
  const RingElement e = parse_expr("1 + x");
  EXPECT_EQ(e.a(1), 1);
  EXPECT_EQ(e.b(1), 1);
  EXPECT_EQ(e, basis(0) + basis(kS4Alpha));
}

TEST(Expr, Commutator) {
  const RingElement e = parse_expr("x*y - y*x");
  EXPECT_EQ(e.a(5), 1);
  EXPECT_EQ(e.a(12), -1);
  EXPECT_EQ(e, basis(4) - basis(11));
}

TEST(Expr, GroupRelations) {
  EXPECT_EQ(parse_expr("x^4"), parse_expr("1"));
  EXPECT_EQ(parse_expr("y^2"), parse_expr("1"));
  EXPECT_EQ(parse_expr("(x*y)^3"), parse_expr("1"));
}

TEST(Expr, Precedence) {
  EXPECT_EQ(parse_expr("2*3+1"), parse_expr("7"));
  EXPECT_EQ(parse_expr("-x^2"), -basis(1));
  EXPECT_EQ(parse_expr("(1+x)^2"), parse_expr("1 + 2*x + x^2"));
  EXPECT_EQ(parse_expr("1 - x - y"), parse_expr("(1 - x) - y"));
  EXPECT_EQ(parse_expr("x^2^2"), parse_expr("(x^2)^2"));
}

TEST(Expr, ParenthesesAreTransparent) {
  for (const char* s : {"1", "x", "x*y - y*x", "3*x^3 + -2*y*x", "(1+x)^3*y"})
    EXPECT_EQ(parse_expr(std::string("(") + s + ")"), parse_expr(s)) << s;
}

TEST(Expr, SyntaxErrorsCarryPositions) {
  try {
    parse_expr("xy");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 1U);
  }
  EXPECT_THROW(parse_expr(""), ParseError);
  EXPECT_THROW(parse_expr("1 +"), ParseError);
  EXPECT_THROW(parse_expr("(x"), ParseError);
  EXPECT_THROW(parse_expr("x z"), ParseError);
  EXPECT_THROW(parse_expr("x^-1"), ParseError);
  EXPECT_THROW(parse_expr("2 x"), ParseError);
}

TEST(Expr, ExponentOverflow) {
  EXPECT_NO_THROW(parse_expr("x^65536"));
  EXPECT_THROW(parse_expr("x^65537"), ParseError);
  EXPECT_THROW(parse_expr("x^99999999999999999999999"), ParseError);
}

TEST(Expr, BigLiterals) {
  const RingElement e = parse_expr("123456789012345678901234567890");
  EXPECT_EQ(e[0], BigInt("123456789012345678901234567890"));
}

TEST(Expr, OnlyS4) { EXPECT_THROW(parse_expr("x", make_group(GroupKind::cyclic(4))), InvalidArgument); }
