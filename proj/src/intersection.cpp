#include "hessiankit/intersection.hpp"

#include <algorithm>

#include "hessiankit/linalg.hpp"
#include "hessiankit/random.hpp"

namespace hk {

namespace {

// Stream indices below kFormStream are chart attempts.
constexpr std::uint64_t kFormStream = 1000;
constexpr std::uint64_t kRadicalStream = 2000;

bool lex_less(const RatVector& a, const RatVector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return a(i) < b(i);
  return false;
}

// No point of V(I) with t3 = 0, checked as: each t_i (i < 3) has a power in
// I + <t3>.
bool finite_at_infinity(const std::vector<MultiPoly>& gens) {
  std::vector<MultiPoly> J = gens;
  J.push_back(MultiPoly::variable(t_ring(), 3));
  const auto G = buchberger(Ideal(t_ring(), J));
  if (G.is_unit()) return true;
  for (std::size_t v = 0; v < 3; ++v) {
    const bool pure = std::any_of(G.leading_monomials().begin(), G.leading_monomials().end(),
                                  [&](const Monomial& m) { return m.exp[v] > 0 && m.degree() == m.exp[v]; });
    if (!pure) return false;
  }
  return true;
}

std::vector<MultiPoly> dehomogenize(const std::vector<MultiPoly>& gens) {
  const auto r = chart_ring();
  const std::vector<MultiPoly> images{MultiPoly::variable(r, 0), MultiPoly::variable(r, 1),
                                      MultiPoly::variable(r, 2), MultiPoly::constant(r, 1)};
  std::vector<MultiPoly> out;
  for (const auto& g : gens) out.push_back(g.substitute(images));
  return out;
}

}  // namespace

std::string to_string(DimensionClass d) {
  switch (d) {
    case DimensionClass::empty:
      return "empty";
    case DimensionClass::zero_dimensional:
      return "zero_dimensional";
    case DimensionClass::positive_dimensional:
      return "positive_dimensional";
  }
  return "?";
}

RingPtr chart_ring() {
  static const RingPtr r = make_ring({"s0", "s1", "s2"});
  return r;
}

RatMatrix seeded_invertible(std::uint64_t seed) {
  Xorshift64Star rng(seed);
  RatMatrix A(4, 4);
  do {
    for (Eigen::Index i = 0; i < 4; ++i)
      for (Eigen::Index j = 0; j < 4; ++j) A(i, j) = Rational(rng.uniform(-9, 9));
  } while (determinant(A) == 0);
  return A;
}

IntersectionReport intersection_analysis(const Cubic& f, std::uint64_t seed, unsigned retries) {
  IntersectionReport r;
  r.seed = seed;
  r.retries = retries;
  const Ideal I = rank2_pencil_ideal(f);

  for (unsigned attempt = 0; attempt < retries; ++attempt) {
    const auto s = derive_seed(seed, attempt);
    const RatMatrix A = seeded_invertible(s);
    ++r.chart_attempts;
    std::vector<MultiPoly> moved;
    for (const auto& g : I.generators()) moved.push_back(linear_substitute(g, A));
    if (!finite_at_infinity(moved)) continue;

    r.chart_seed = s;
    r.chart = A;
    const auto G = buchberger(Ideal(chart_ring(), dehomogenize(moved)));
    r.chart_basis = G;
    if (G.is_unit()) {
      r.dimension_class = DimensionClass::empty;
      r.degree = 0;
      r.on_hessian_discriminant = true;
      return r;
    }
    try {
      r.degree = quotient_basis(G).degree();
    } catch (const PositiveDimensional&) {
      r.dimension_class = DimensionClass::positive_dimensional;
      return r;
    }
    r.dimension_class = DimensionClass::zero_dimensional;

    const auto prof = multiplicity_profile(G, derive_seed(seed, kFormStream), retries);
    r.profile = prof.profile;
    r.distinct_points = prof.distinct_points;
    r.form_seed = prof.form_seed;
    r.form_attempts = prof.attempts;
    r.radical = check_radical_zero_dim(G, derive_seed(seed, kRadicalStream), retries).radical;
    const bool reduced_profile = prof.profile == MultiplicityProfile::from_pairs({{1, *r.degree}});
    if (*r.radical != reduced_profile)
      throw std::logic_error("radicality disagrees with the multiplicity profile");

    r.on_hessian_discriminant = !(*r.degree == 10 && *r.radical);
    return r;
  }
  r.dimension_class = DimensionClass::positive_dimensional;
  r.on_hessian_discriminant = true;
  return r;
}

bool is_on_hessian_discriminant(const Cubic& f, std::uint64_t seed) {
  return intersection_analysis(f, seed).on_hessian_discriminant;
}

std::vector<RationalPoint> rational_points(const IntersectionReport& report, const Cubic& f) {
  if (report.dimension_class == DimensionClass::empty) return {};
  if (report.dimension_class != DimensionClass::zero_dimensional || !report.chart_basis || !report.chart ||
      !report.distinct_points)
    throw std::invalid_argument("rational_points needs a zero-dimensional report");
  const auto& G = *report.chart_basis;
  const auto& A = *report.chart;
  const auto slices = hessian_slices(f);
  const Ideal I = rank2_pencil_ideal(f);

  std::vector<std::vector<Rational>> roots;
  for (std::size_t v = 0; v < 3; ++v) roots.push_back(rational_roots(univariate_eliminant(G, v)));

  std::vector<RationalPoint> out;
  std::vector<Rational> s(3);
  for (const auto& a : roots[0]) {
    for (const auto& b : roots[1]) {
      for (const auto& c : roots[2]) {
        s = {a, b, c};
        const bool on = std::all_of(G.elements().begin(), G.elements().end(),
                                    [&](const MultiPoly& g) { return g.evaluate(s) == 0; });
        if (!on) continue;
        RatVector chart_pt(4);
        chart_pt << a, b, c, Rational(1);
        RatVector t = A * chart_pt;
        Eigen::Index lead = 0;
        while (t(lead) == 0) ++lead;
        const Rational scale = t(lead);
        for (Eigen::Index i = 0; i < 4; ++i) t(i) /= scale;

        std::vector<Rational> tv(t.data(), t.data() + 4);
        for (const auto& g : I.generators())
          if (g.evaluate(tv) != 0) throw std::logic_error("extracted point is off the pencil ideal");
        RatMatrix M = pencil_matrix(slices, tv);
        if (rank(M) != 2) throw std::logic_error("extracted point does not have rank 2");
        out.push_back({std::move(t), std::move(M)});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const RationalPoint& p, const RationalPoint& q) { return lex_less(p.t, q.t); });
  if (out.size() != *report.distinct_points) throw IncompleteRationalPoints(out.size(), *report.distinct_points);
  return out;
}

}  // namespace hk
