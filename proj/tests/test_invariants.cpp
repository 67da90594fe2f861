#include <gtest/gtest.h>

#include "hessiankit/invariants.hpp"
#include "support.hpp"

using namespace hk;
using hk::test::Gen;

namespace {

std::array<Rational, 5> R5(int a, int b, int c, int d, int e) { return {a, b, c, d, e}; }

InvariantPoint IP(int a, int b, int c, int d, int e) { return InvariantPoint{{a, b, c, d, e}}; }

std::array<Rational, 3> random_lambda(Gen& g) {
  return {g.nonzero_rational(4, 3), g.nonzero_rational(4, 3), g.nonzero_rational(4, 3)};
}

// eps-polynomial of eps^k * L as a polynomial in the variable e of ring r.
MultiPoly lift(const LaurentPoly& L, int k, const RingPtr& r, std::size_t e) {
  MultiPoly out(r);
  const MultiPoly E = MultiPoly::variable(r, e);
  for (int j = L.shift(); j <= L.shift() + L.body().degree(); ++j) {
    EXPECT_GE(j + k, 0);
    out += L.coeff(j) * E.pow(static_cast<unsigned>(j + k));
  }
  return out;
}

// Part of p of exact degree d in the variable e, with e removed.
MultiPoly e_part(const MultiPoly& p, std::size_t e, unsigned d, const RingPtr& target) {
  std::vector<Term> kept;
  for (const auto& t : p.terms()) {
    if (t.mono.exp[e] != d) continue;
    Monomial m;
    for (std::size_t v = 0; v < target->size(); ++v) m.exp[v] = t.mono.exp[v];
    kept.push_back({m, t.coef});
  }
  return MultiPoly(target, std::move(kept));
}

}  // namespace

TEST(Sigma, Examples) {
  EXPECT_EQ(sigma(R5(1, 1, 1, 1, 1)), R5(5, 10, 10, 5, 1));
  EXPECT_EQ(sigma(R5(1, 0, 0, 0, 0)), R5(1, 0, 0, 0, 0));
  EXPECT_EQ(sigma(R5(1, 2, 3, 4, 5)), R5(15, 85, 225, 274, 120));
}

TEST(Sigma, MatchesProductExpansion) {
  Gen g(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::array<Rational, 5> c;
    UniPoly prod = UniPoly::constant(1);
    for (auto& ci : c) {
      ci = g.rational();
      prod = prod * UniPoly({ci, 1});
    }
    const auto s = sigma(c);
    ASSERT_EQ(prod.degree(), 5);
    EXPECT_EQ(prod.coeff(5), 1);
    for (int k = 1; k <= 5; ++k) EXPECT_EQ(prod.coeff(static_cast<std::size_t>(5 - k)), s[static_cast<std::size_t>(k - 1)]);
  }
}

TEST(Salmon, Examples) {
  EXPECT_EQ(salmon_from_pentahedral(R5(1, 1, 1, 1, 1)), IP(-15, 5, 5, 10, 1));
  EXPECT_EQ(salmon_from_pentahedral(R5(1, 1, 1, 1, 0)), IP(1, 0, 0, 0, 0));
  EXPECT_TRUE(wp_equal(salmon_from_pentahedral(R5(3, 3, 3, 3, 3)), salmon_from_pentahedral(R5(1, 1, 1, 1, 1))));
  EXPECT_EQ(salmon_from_pentahedral(R5(3, 3, 3, 3, 3)),
            weighted_rescale(salmon_from_pentahedral(R5(1, 1, 1, 1, 1)), Rational(6561)));
  EXPECT_THROW(salmon_from_pentahedral(R5(1, 0, 0, 0, 0)), AllZeroInvariants);
}

TEST(Salmon, ScalingLaw) {
  Gen g(21);
  for (int trial = 0; trial < 20; ++trial) {
    std::array<Rational, 5> c, sc;
    for (auto& ci : c) ci = g.nonzero_rational();
    const Rational s = g.nonzero_rational(7, 4);
    for (std::size_t i = 0; i < 5; ++i) sc[i] = s * c[i];
    const auto P = salmon_from_pentahedral(c);
    const auto Q = salmon_from_pentahedral(sc);
    Rational pw = 1;
    for (std::size_t d = 0; d < 5; ++d) {
      for (int k = 0; k < 8; ++k) pw *= s;
      EXPECT_EQ(Q.I[d], pw * P.I[d]);
    }
    EXPECT_TRUE(wp_equal(P, Q));
  }
}

TEST(Salmon, I40VanishesExactlyWithACoefficient) {
  Gen g(31);
  int zero_cases = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::array<Rational, 5> c;
    for (auto& ci : c) ci = Rational(g.integer(-2, 2));
    const bool some_zero = std::any_of(c.begin(), c.end(), [](const Rational& v) { return v == 0; });
    zero_cases += some_zero;
    const auto s = sigma(c);
    try {
      const auto P = salmon_from_pentahedral(c);
      EXPECT_EQ(P.I[4] == 0, some_zero);
    } catch (const AllZeroInvariants&) {
      // Only possible when both sigma_5 and sigma_4 vanish.
      EXPECT_TRUE(some_zero);
      EXPECT_EQ(s[4], 0);
      EXPECT_EQ(s[3], 0);
    }
  }
  EXPECT_GT(zero_cases, 5);
  EXPECT_LT(zero_cases, 50);
}

TEST(WeightedProjective, Equality) {
  const auto P = IP(-15, 5, 5, 10, 1);
  EXPECT_TRUE(wp_equal(P, P));
  EXPECT_TRUE(wp_equal(P, IP(-30, 20, 40, 160, 32)));
  EXPECT_FALSE(wp_equal(IP(1, 0, 0, 0, 0), IP(1, 1, 0, 0, 0)));
  // mu = -1 flips the odd weights; mu = i would flip weights 2 mod 4 only.
  EXPECT_TRUE(wp_equal(P, IP(15, 5, -5, 10, -1)));
  EXPECT_TRUE(wp_equal(IP(1, 1, 0, 0, 0), IP(-1, 1, 0, 0, 0)));
  EXPECT_TRUE(wp_equal(IP(0, 1, 0, 0, 0), IP(0, -1, 0, 0, 0)));  // mu^2 = -1
  EXPECT_FALSE(wp_equal(IP(0, 0, 0, 1, 0), IP(0, 0, 0, 1, 1)));
  EXPECT_FALSE(wp_equal(P, IP(-15, 5, 5, 10, 2)));
  EXPECT_THROW(wp_equal(IP(0, 0, 0, 0, 0), P), AllZeroInvariants);
}

TEST(WeightedProjective, RescaleIsEquality) {
  Gen g(41);
  for (int trial = 0; trial < 30; ++trial) {
    InvariantPoint P;
    for (auto& v : P.I) v = g.integer(0, 2) ? g.rational() : Rational(0);
    if (P.is_zero()) continue;
    const Rational mu = g.nonzero_rational();
    EXPECT_TRUE(wp_equal(P, weighted_rescale(P, mu)));
    InvariantPoint Q = P;
    for (auto& v : Q.I)
      if (v != 0) {
        v += 1;
        break;
      }
    // Perturbing one entry breaks equality unless the zero pattern hides it.
    if (!Q.is_zero() && std::count_if(P.I.begin(), P.I.end(), [](const Rational& v) { return v != 0; }) > 1 &&
        std::count_if(Q.I.begin(), Q.I.end(), [](const Rational& v) { return v != 0; }) > 1) {
      bool scaled = false;
      for (int m : {1, -1}) scaled |= weighted_rescale(P, Rational(m)) == Q;
      if (!scaled) EXPECT_FALSE(wp_equal(P, Q)) << P.to_string() << " " << Q.to_string();
    }
  }
}

TEST(EpsilonFamily, OnesByDirectReading) {
  const auto e = epsilon_family({1, 1, 1});
  const auto em3 = LaurentPoly::monomial(-3);
  const auto em1 = LaurentPoly::monomial(-1);
  EXPECT_EQ(e[0], em3);
  EXPECT_EQ(e[1], em3);
  EXPECT_EQ(e[2], em3);
  EXPECT_EQ(e[3], LaurentPoly::constant(1) + em1);
  EXPECT_EQ(e[4], em1);
  EXPECT_THROW(epsilon_family({1, 0, 1}), std::invalid_argument);
}

TEST(EpsilonFamily, ReproducesTheDisplayedCubicAndItsLimit) {
  Gen g(51);
  const auto r = make_ring({"x0", "x1", "x2", "x3", "e"});
  auto x = [&](std::size_t i) { return MultiPoly::variable(r, i); };
  const MultiPoly E = x(4);
  for (int trial = 0; trial < 6; ++trial) {
    const auto lam = trial == 0 ? std::array<Rational, 3>{1, 1, 1} : random_lambda(g);
    const auto coeffs = epsilon_family(lam);
    for (const auto& c : coeffs) EXPECT_FALSE(c.is_zero());

    // eps^3 f_eps read straight off the displayed formula.
    MultiPoly lin = lam[0] * x(0) + lam[1] * x(1) + lam[2] * x(2);
    MultiPoly direct = E.pow(3) * (x(0).pow(3) + x(1).pow(3) + x(2).pow(3)) + (E.pow(3) + E.pow(2)) * x(3).pow(3) +
                       E.pow(2) * (-(E * lin) - x(3)).pow(3);

    // eps^3 sum a_i y_i^3 with y_i = eps lambda_i x_i, y3 = x3, y4 = -sum y.
    std::array<MultiPoly, 5> y{lam[0] * E * x(0), lam[1] * E * x(1), lam[2] * E * x(2), x(3), MultiPoly(r)};
    for (std::size_t i = 0; i < 4; ++i) y[4] -= y[i];
    MultiPoly penta(r);
    for (std::size_t i = 0; i < 5; ++i) penta += lift(coeffs[i], 3, r, 4) * y[i].pow(3);
    EXPECT_EQ(direct, penta);

    // lim f_eps = f: no eps^0..eps^2 terms in eps^3 f_eps, and the eps^3
    // part is the rank 6 normal form.
    for (unsigned d = 0; d < 3; ++d) EXPECT_TRUE(e_part(direct, 4, d, x_ring()).is_zero());
    EXPECT_EQ(cubic_from_poly(e_part(direct, 4, 3, x_ring())), make_normal_form(Rank6{lam}));
  }
}

TEST(EpsilonLimit, OnesAndI40) {
  EXPECT_TRUE(wp_equal(limit_invariants({1, 1, 1}), IP(-11, 3, 2, 3, 0)));
  EXPECT_TRUE(wp_equal(limit_invariants({1, 2, 3}), rank6_closed_form({1, 2, 3})));
  EXPECT_THROW(limit_invariants({0, 1, 1}), std::invalid_argument);
}

TEST(EpsilonLimit, AgreesWithClosedFormOnSeededLambda) {
  Gen g(61);
  for (int trial = 0; trial < 20; ++trial) {
    const auto lam = random_lambda(g);
    const auto L = limit_invariants(lam);
    EXPECT_EQ(L.I[4], 0);
    EXPECT_TRUE(wp_equal(L, rank6_closed_form(lam))) << L.to_string();
  }
}

TEST(EpsilonLimit, ValuationRuleByHand) {
  // Independent evaluation of the Laurent invariants from the sigma
  // expansion, then the tau rule, for lambda = (1, 1, 1).
  const auto inv = salmon_from_pentahedral(epsilon_family({1, 1, 1}));
  const std::array<int, 5> w{1, 2, 3, 4, 5};
  Rational tau;
  bool have = false;
  for (std::size_t d = 0; d < 5; ++d) {
    if (inv.I[d].is_zero()) continue;
    const Rational q = Rational(laurent_order(inv.I[d])) / w[d];
    if (!have || q < tau) tau = q, have = true;
  }
  ASSERT_TRUE(have);
  InvariantPoint manual;
  for (std::size_t d = 0; d < 5; ++d)
    if (!inv.I[d].is_zero() && Rational(laurent_order(inv.I[d])) / w[d] == tau) manual.I[d] = inv.I[d].leading_low();
  EXPECT_EQ(limit_invariants({1, 1, 1}), manual);
  EXPECT_EQ(manual.I[4], 0);
}

TEST(ClosedForm, Examples) {
  EXPECT_EQ(rank6_closed_form({1, 1, 1}), IP(-11, 3, 2, 3, 0));
  EXPECT_EQ(rank6_closed_form({1, 1, -1}), IP(-3, -1, -2, -1, 0));
  EXPECT_THROW(rank6_closed_form({1, 0, 1}), std::invalid_argument);
}

TEST(InvariantPoint, Printing) {
  EXPECT_EQ(IP(-15, 5, 5, 10, 1).to_string(), "(-15, 5, 5, 10, 1)");
  InvariantPoint half{{Rational(1) / 2, 0, 0, 0, 0}};
  EXPECT_EQ(half.to_string(), "(1/2, 0, 0, 0, 0)");
}
