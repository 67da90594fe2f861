#include "hessiankit/invariants.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace hk {

SigmaVector sigma(const std::array<Rational, 5>& c) { return elementary_symmetric(c); }

bool InvariantPoint::is_zero() const {
  return std::all_of(I.begin(), I.end(), [](const Rational& v) { return v == 0; });
}

std::string InvariantPoint::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < 5; ++i) os << (i ? ", " : "") << hk::to_string(I[i]);
  os << ")";
  return os.str();
}

InvariantPoint salmon_from_pentahedral(const std::array<Rational, 5>& c) {
  InvariantPoint p{salmon_formulas(sigma(c))};
  if (p.is_zero()) throw AllZeroInvariants();
  return p;
}

LaurentInvariantPoint salmon_from_pentahedral(const std::array<LaurentPoly, 5>& c) {
  return {salmon_formulas(elementary_symmetric(c))};
}

namespace {

Rational rpow(const Rational& x, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

bool wp_equal(const InvariantPoint& P, const InvariantPoint& Q) {
  if (P.is_zero() || Q.is_zero()) throw AllZeroInvariants();
  const auto& w = InvariantPoint::kWeights;
  for (std::size_t a = 0; a < 5; ++a)
    if ((P.I[a] == 0) != (Q.I[a] == 0)) return false;
  for (std::size_t a = 0; a < 5; ++a) {
    if (P.I[a] == 0) continue;
    for (std::size_t b = a + 1; b < 5; ++b) {
      if (P.I[b] == 0) continue;
      if (rpow(P.I[a], w[b]) * rpow(Q.I[b], w[a]) != rpow(P.I[b], w[a]) * rpow(Q.I[a], w[b])) return false;
    }
  }
  // A single nonzero entry: any two such points agree.
  return true;
}

InvariantPoint weighted_rescale(const InvariantPoint& P, const Rational& mu) {
  InvariantPoint out = P;
  for (std::size_t i = 0; i < 5; ++i) out.I[i] *= rpow(mu, InvariantPoint::kWeights[i]);
  return out;
}

namespace {

void require_nonzero(const std::array<Rational, 3>& lambda) {
  for (const auto& l : lambda)
    if (l == 0) throw std::invalid_argument("lambda entries must be nonzero");
}

}  // namespace

std::array<LaurentPoly, 5> epsilon_family(const std::array<Rational, 3>& lambda) {
  require_nonzero(lambda);
  std::array<LaurentPoly, 5> c;
  for (std::size_t i = 0; i < 3; ++i) c[i] = LaurentPoly::monomial(-3, Rational(1) / rpow(lambda[i], 3));
  c[3] = LaurentPoly::constant(1) + LaurentPoly::monomial(-1);
  c[4] = LaurentPoly::monomial(-1);
  return c;
}

InvariantPoint limit_invariants(const std::array<Rational, 3>& lambda) {
  const auto L = salmon_from_pentahedral(epsilon_family(lambda));
  std::optional<Rational> tau;
  for (std::size_t d = 0; d < 5; ++d) {
    if (L.I[d].is_zero()) continue;
    const Rational r(laurent_order(L.I[d]), InvariantPoint::kWeights[d]);
    if (!tau || r < *tau) tau = r;
  }
  if (!tau) throw AllZeroInvariants();
  InvariantPoint out;
  for (std::size_t d = 0; d < 5; ++d) {
    if (L.I[d].is_zero()) continue;
    if (Rational(laurent_order(L.I[d]), InvariantPoint::kWeights[d]) == *tau) out.I[d] = L.I[d].leading_low();
  }
  return out;
}

InvariantPoint rank6_closed_form(const std::array<Rational, 3>& lambda) {
  require_nonzero(lambda);
  const Rational a = rpow(lambda[0], 3), b = rpow(lambda[1], 3), c = rpow(lambda[2], 3);
  const Rational S = a + b + c;
  const Rational P = a * b * c;
  InvariantPoint out{{1 - 4 * S, a * b + a * c + b * c, 2 * P, P * S, Rational(0)}};
  if (out.is_zero()) throw AllZeroInvariants();
  return out;
}

}  // namespace hk
