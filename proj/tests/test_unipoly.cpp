#include <gtest/gtest.h>

#include <set>

#include "hessiankit/unipoly.hpp"
#include "support.hpp"

namespace hk {
namespace {

const UniPoly u{0, 1};

UniPoly reassemble(const std::vector<SquarefreeFactor>& fs, const Rational& lc) {
  UniPoly p = UniPoly::constant(lc);
  for (const auto& f : fs) p = p * f.factor.pow(f.multiplicity);
  return p;
}

TEST(UniPoly, ArithmeticBasics) {
  EXPECT_EQ((u + UniPoly{1}) * (u - UniPoly{1}), u.pow(2) - UniPoly{1});
  EXPECT_TRUE((u - u).is_zero());
  EXPECT_EQ((u - u).degree(), -1);
  EXPECT_EQ(UniPoly({1, 2, 0, 0}).degree(), 1);
  EXPECT_EQ(UniPoly({1, 2, 3})(Rational(2)), Rational(17));
  EXPECT_EQ(UniPoly({5, 3, 1}).derivative(), UniPoly({3, 2}));
}

TEST(UniPoly, DivmodReconstructs) {
  test::Gen g(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> a(static_cast<std::size_t>(g.integer(1, 8))), b(static_cast<std::size_t>(g.integer(1, 5)));
    for (auto& x : a) x = g.rational();
    for (auto& x : b) x = g.rational();
    b.back() = g.nonzero_rational();
    const UniPoly A(a), B(b);
    const auto [q, r] = divmod(A, B);
    EXPECT_EQ(q * B + r, A);
    EXPECT_LT(r.degree(), B.degree());
  }
  EXPECT_THROW(divmod(u, UniPoly{}), std::domain_error);
}

TEST(UniPoly, GcdOfConstructedProducts) {
  test::Gen g(12);
  for (int trial = 0; trial < 50; ++trial) {
    const Rational r1 = g.rational(), r2 = g.rational(), r3 = g.rational();
    if (r1 == r2 || r1 == r3 || r2 == r3) continue;
    const UniPoly common = UniPoly::linear_root(r1);
    const UniPoly a = g.nonzero_rational() * common * UniPoly::linear_root(r2);
    const UniPoly b = g.nonzero_rational() * common * UniPoly::linear_root(r3).pow(2);
    EXPECT_EQ(gcd(a, b), common);
  }
  EXPECT_TRUE(gcd(UniPoly{}, UniPoly{}).is_zero());
  EXPECT_EQ(gcd(UniPoly{}, UniPoly({2, 4})), UniPoly({Rational(1) / 2, 1}));
}

TEST(Squarefree, Examples) {
  const auto f1 = squarefree_factorization(u.pow(2) * (u - UniPoly{1}));
  ASSERT_EQ(f1.size(), 2u);
  EXPECT_EQ(f1[0], (SquarefreeFactor{u - UniPoly{1}, 1}));
  EXPECT_EQ(f1[1], (SquarefreeFactor{u, 2}));

  const UniPoly sf = UniPoly({3, 0, 6});  // 6u^2 + 3
  const auto f2 = squarefree_factorization(sf);
  ASSERT_EQ(f2.size(), 1u);
  EXPECT_EQ(f2[0], (SquarefreeFactor{sf.monic(), 1}));

  const UniPoly a = u.pow(2) - UniPoly{2}, b = u.pow(2) - UniPoly{3};
  const auto f3 = squarefree_factorization(a.pow(3) * b);
  ASSERT_EQ(f3.size(), 2u);
  EXPECT_EQ(f3[0], (SquarefreeFactor{b, 1}));
  EXPECT_EQ(f3[1], (SquarefreeFactor{a, 3}));
  EXPECT_THROW(squarefree_factorization(UniPoly{}), std::domain_error);
}

TEST(Squarefree, ReassemblesRandomProducts) {
  test::Gen g(13);
  for (int trial = 0; trial < 60; ++trial) {
    UniPoly p = UniPoly::constant(g.nonzero_rational());
    std::map<Rational, unsigned> mult;
    const int n = static_cast<int>(g.integer(1, 4));
    for (int k = 0; k < n; ++k) {
      const Rational r = g.rational();
      const auto e = static_cast<unsigned>(g.integer(1, 3));
      mult[r] += e;
      p = p * UniPoly::linear_root(r).pow(e);
    }
    // An irreducible quadratic factor keeps things honest.
    if (trial % 2) p = p * (u.pow(2) + UniPoly{g.integer(1, 5)});
    const auto fs = squarefree_factorization(p);
    EXPECT_EQ(reassemble(fs, p.leading()), p);
    for (std::size_t k = 0; k < fs.size(); ++k) {
      EXPECT_TRUE(fs[k].factor.is_squarefree());
      EXPECT_EQ(fs[k].factor, fs[k].factor.monic());
      if (k) EXPECT_LT(fs[k - 1].multiplicity, fs[k].multiplicity);
      for (std::size_t l = k + 1; l < fs.size(); ++l) EXPECT_EQ(gcd(fs[k].factor, fs[l].factor).degree(), 0);
    }
    // Each root's multiplicity must be the one its factor reports.
    for (const auto& [r, e] : mult) {
      unsigned found = 0;
      for (const auto& f : fs)
        if (f.factor(r) == 0) found = f.multiplicity;
      EXPECT_EQ(found, e);
    }
  }
}

TEST(RationalRoots, Examples) {
  EXPECT_EQ(rational_roots(u.pow(2) - UniPoly{1}), (std::vector<Rational>{-1, 1}));
  EXPECT_TRUE(rational_roots(u.pow(2) - UniPoly{2}).empty());
  EXPECT_EQ(rational_roots(UniPoly({1, -3, 2})), (std::vector<Rational>{Rational(1) / 2, 1}));
  EXPECT_TRUE(rational_roots(UniPoly{7}).empty());
  EXPECT_THROW(rational_roots(UniPoly{}), std::domain_error);
}

TEST(RationalRoots, MatchesConstructedRoots) {
  test::Gen g(14);
  for (int trial = 0; trial < 60; ++trial) {
    std::set<Rational> expected;
    UniPoly p = UniPoly::constant(g.nonzero_rational());
    const int n = static_cast<int>(g.integer(0, 5));
    for (int k = 0; k < n; ++k) {
      const Rational r = g.rational(20, 7);
      expected.insert(r);
      p = p * UniPoly::linear_root(r).pow(static_cast<unsigned>(g.integer(1, 2)));
    }
    p = p * (u.pow(2) - UniPoly{g.integer(2, 3)}) * (u.pow(3) - UniPoly{5});
    const auto got = rational_roots(p);
    EXPECT_EQ(std::set<Rational>(got.begin(), got.end()), expected);
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
    for (const auto& r : got) {
      EXPECT_EQ(p(r), 0);
      bool in_factor = false;
      for (const auto& f : squarefree_factorization(p)) in_factor |= f.factor(r) == 0;
      EXPECT_TRUE(in_factor);
    }
  }
}

TEST(Laurent, OrderExamples) {
  EXPECT_EQ(laurent_order(LaurentPoly(UniPoly{1, 1}, -3)), -3);
  EXPECT_EQ(laurent_order(LaurentPoly::constant(5)), 0);
  EXPECT_EQ(laurent_order(LaurentPoly(UniPoly{0, 0, 1, 0, 0, 1}, 0)), 2);
  EXPECT_THROW(laurent_order(LaurentPoly{}), std::domain_error);
}

TEST(Laurent, ArithmeticAgreesWithShiftedPolynomials) {
  // Multiply everything by eps^K to land in ordinary polynomials.
  test::Gen g(15);
  for (int trial = 0; trial < 50; ++trial) {
    const LaurentPoly a(UniPoly({g.rational(), g.rational(), g.nonzero_rational()}), static_cast<int>(g.integer(-4, 2)));
    const LaurentPoly b(UniPoly({g.nonzero_rational(), g.rational()}), static_cast<int>(g.integer(-4, 2)));
    const auto lift = [](const LaurentPoly& x, int K) {
      return x.is_zero() ? UniPoly{} : UniPoly::monomial(static_cast<unsigned>(x.shift() + K)) * x.body();
    };
    EXPECT_EQ(lift(a * b, 8), lift(a, 4) * lift(b, 4));
    EXPECT_EQ(lift(a + b, 4), lift(a, 4) + lift(b, 4));
    EXPECT_EQ(lift(a - b, 4), lift(a, 4) - lift(b, 4));
    EXPECT_EQ(lift(a.pow(2), 8), lift(a, 4).pow(2));
    if (!(a * b).is_zero()) EXPECT_EQ(laurent_order(a * b), laurent_order(a) + laurent_order(b));
  }
  EXPECT_TRUE((LaurentPoly::monomial(-2, 3) - LaurentPoly::monomial(-2, 3)).is_zero());
  EXPECT_EQ((LaurentPoly::monomial(-1) + LaurentPoly::constant(1)).coeff(-1), 1);
}

}  // namespace
}  // namespace hk
