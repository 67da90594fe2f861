#include <gtest/gtest.h>

#include "hessiankit/parse.hpp"
#include "support.hpp"

using namespace hk;
using hk::test::C;
using hk::test::Gen;
using hk::test::X;

namespace {

std::size_t error_position(const std::string& text) {
  try {
    parse_cubic(text);
  } catch (const ParseError& e) {
    return e.position;
  }
  ADD_FAILURE() << "no parse error for " << text;
  return std::string::npos;
}

}  // namespace

TEST(Parse, Examples) {
  EXPECT_EQ(parse_cubic("x0^3+x1^3+x2^3+x3^3"), hk::test::fermat());
  EXPECT_EQ(parse_cubic("x0*x1*x2+x0*x1*x3+x0*x2*x3+x1*x2*x3"), hk::test::cayley());
  EXPECT_EQ(parse_cubic("x_0^3 + x_1^3 + x_2^3 + x_3^3"), hk::test::fermat());
  EXPECT_EQ(parse_cubic("(x0+x1)^3 - 3*x0*x1*(x0+x1)"), parse_cubic("x0^3+x1^3"));
  const Cubic half = parse_cubic("-3/2*x0*x1*x2 + 7*x3^3");
  EXPECT_EQ(half.coef(0, 1, 2), Rational(-3) / 2);
  EXPECT_EQ(half.coef(2, 1, 0), Rational(-3) / 2);
  EXPECT_EQ(half.coef(3, 3, 3), 7);
  EXPECT_EQ(parse_polynomial("x0^2 - 1"), X(0) * X(0) - C(1));
}

TEST(Parse, RejectsWrongShape) {
  EXPECT_THROW(parse_cubic("x0^2"), std::invalid_argument);
  EXPECT_THROW(parse_cubic("x0^3+x1"), std::invalid_argument);
  EXPECT_THROW(parse_cubic("x0^3-x0^3"), std::invalid_argument);
  EXPECT_THROW(parse_cubic("x0^4"), std::invalid_argument);
}

TEST(Parse, ErrorPositions) {
  EXPECT_EQ(error_position(""), 0u);
  EXPECT_EQ(error_position("x0^3+*x1^3"), 5u);
  EXPECT_EQ(error_position("x0^3+x4^3"), 5u);
  EXPECT_EQ(error_position("(x0+x1^3"), 8u);
  EXPECT_EQ(error_position("x0^3 + 2/0*x1^3"), 9u);
  EXPECT_EQ(error_position("x0^3 x1"), 5u);
  EXPECT_EQ(error_position("x0^-1"), 3u);
  EXPECT_EQ(error_position("2*x0^3$"), 6u);
  EXPECT_EQ(error_position("x0^3)"), 4u);
}

TEST(Parse, CoefficientMap) {
  const Cubic f = parse_cubic(R"({"000": "1", "012": "-3/2"})");
  EXPECT_EQ(f, parse_cubic("x0^3 - 3/2*x0*x1*x2"));
  EXPECT_EQ(cubic_to_json(f), R"({"000": "1", "012": "-3/2"})");
  EXPECT_THROW(parse_cubic(R"({"100": "1"})"), ParseError);
  EXPECT_THROW(parse_cubic(R"({"0000": "1"})"), ParseError);
  EXPECT_THROW(parse_cubic(R"({"004": "1"})"), ParseError);
  EXPECT_THROW(parse_cubic(R"({"000": "a"})"), ParseError);
  EXPECT_THROW(parse_cubic(R"({"000": "0"})"), std::invalid_argument);
}

TEST(Parse, PrintParseRoundTrip) {
  Gen g(81);
  for (int trial = 0; trial < 60; ++trial) {
    Cubic f = g.cubic();
    if (trial % 3 == 0)
      for (const auto& tr : Cubic::triples())
        if (g.integer(0, 1)) f.set(tr[0], tr[1], tr[2], g.rational(40, 9));
    if (f.is_zero()) continue;
    EXPECT_EQ(parse_cubic(f.to_string()), f) << f.to_string();
    EXPECT_EQ(parse_cubic(cubic_to_json(f)), f) << cubic_to_json(f);
    EXPECT_EQ(parse_cubic(parse_cubic(f.to_string()).to_string()).to_string(), f.to_string());
  }
}
