#include <gtest/gtest.h>

#include <set>

#include "hessiankit/random.hpp"
#include "hessiankit/rational.hpp"

namespace hk {
namespace {

// Reference values computed by a separate Python transcription of the
// documented splitmix64 + xorshift64* recipe.
TEST(Xorshift, MatchesReferenceStream) {
  Xorshift64Star g0(0);
  EXPECT_EQ(g0.next(), 0x7bbcb40d550682d0ULL);
  EXPECT_EQ(g0.next(), 0xde7fe413d00cc9fdULL);
  EXPECT_EQ(g0.next(), 0xb3c638353c668c91ULL);
  Xorshift64Star g42(42);
  EXPECT_EQ(g42.next(), 0x31b0ece7c4f697a2ULL);
  EXPECT_EQ(g42.next(), 0x9008a3b1cb686f03ULL);
  EXPECT_EQ(g42.next(), 0x7c7173abd97be16fULL);
}

TEST(Xorshift, DeriveSeedReference) {
  EXPECT_EQ(derive_seed(0, 0), 0x98bc9b3a9f64da94ULL);
  EXPECT_EQ(derive_seed(42, 7), 0xb0ecf3100b0f004bULL);
  EXPECT_EQ(derive_seed(0, 1000), 4024084613436381150ULL);
}

TEST(Xorshift, SameSeedSameStream) {
  Xorshift64Star a(123), b(123), c(124);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    EXPECT_EQ(x, b.next());
    differs |= x != c.next();
  }
  EXPECT_TRUE(differs);
}

TEST(Xorshift, UniformStaysInRangeAndCoversIt) {
  Xorshift64Star g(7);
  std::set<std::int64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto v = g.uniform(-3, 3);
    ASSERT_GE(v, -3);
    ASSERT_LE(v, 3);
    seen.insert(v);
  }
  EXPECT_EQ(seen.size(), 7u);
  for (int i = 0; i < 500; ++i) EXPECT_NE(g.nonzero(-1, 1), 0);
  for (int i = 0; i < 500; ++i) {
    const Rational q = g.nonzero_rational(9, 4);
    EXPECT_NE(q, 0);
    EXPECT_LE(abs(numer(q)), 9);
    EXPECT_LE(denom(q), 4);
  }
}

TEST(RationalText, ParsesAndPrints) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-3/2"), Rational(-3) / 2);
  EXPECT_EQ(parse_rational("4/6"), Rational(2) / 3);
  EXPECT_EQ(to_string(Rational(-3) / 2), "-3/2");
  EXPECT_EQ(to_string(Rational(8) / 4), "2");
  EXPECT_EQ(parse_rational("123456789012345678901234567890"),
            Rational(Integer("123456789012345678901234567890")));
}

TEST(RationalText, RejectsMalformed) {
  for (const char* bad : {"", "1/0", "x", "1/", "/2", "1.5", "--1", "1/-2", "+"})
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
}

TEST(RationalText, RoundTrip) {
  Xorshift64Star g(99);
  for (int i = 0; i < 200; ++i) {
    const Rational q = Rational(g.uniform(-1000000, 1000000)) / Rational(g.uniform(1, 1000));
    EXPECT_EQ(parse_rational(to_string(q)), q);
  }
}

}  // namespace
}  // namespace hk
