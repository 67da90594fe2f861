#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "hessiankit/rational.hpp"
#include "hessiankit/unipoly.hpp"

namespace hk {

class AllZeroInvariants : public std::domain_error {
 public:
  AllZeroInvariants() : std::domain_error("all invariants vanish: not a point of P(1,2,3,4,5)") {}
};

/// sigma_1..sigma_5 of five values, summed over subsets so that only
/// addition and multiplication of T are needed (T() must be zero).
template <typename T>
std::array<T, 5> elementary_symmetric(const std::array<T, 5>& c) {
  std::array<T, 5> s{};
  for (unsigned mask = 1; mask < 32; ++mask) {
    T prod{};
    bool first = true;
    int size = 0;
    for (unsigned i = 0; i < 5; ++i) {
      if (!(mask & (1u << i))) continue;
      prod = first ? c[i] : prod * c[i];
      first = false;
      ++size;
    }
    s[size - 1] = s[size - 1] + prod;
  }
  return s;
}

using SigmaVector = std::array<Rational, 5>;

SigmaVector sigma(const std::array<Rational, 5>& c);

/// (I8, I16, I24, I32, I40) from sigma_1..sigma_5:
///   I8 = s4^2 - 4 s3 s5, I16 = s5^3 s1, I24 = s5^4 s4, I32 = s5^6 s2, I40 = s5^8.
template <typename T>
std::array<T, 5> salmon_formulas(const std::array<T, 5>& s) {
  const T& s1 = s[0];
  const T& s2 = s[1];
  const T& s3 = s[2];
  const T& s4 = s[3];
  const T& s5 = s[4];
  const T s3s5 = s3 * s5;
  const T s5_2 = s5 * s5;
  const T s5_4 = s5_2 * s5_2;
  return {s4 * s4 - (s3s5 + s3s5 + s3s5 + s3s5), s5_2 * s5 * s1, s5_4 * s4, s5_4 * s5_2 * s2,
          s5_4 * s5_4};
}

/// A point of the weighted projective space P(1,2,3,4,5).
struct InvariantPoint {
  static constexpr std::array<int, 5> kWeights{1, 2, 3, 4, 5};
  static constexpr std::array<int, 5> kDegrees{8, 16, 24, 32, 40};

  std::array<Rational, 5> I{};

  bool is_zero() const;
  /// "(I8, I16, I24, I32, I40)"
  std::string to_string() const;
  bool operator==(const InvariantPoint&) const = default;
};

struct LaurentInvariantPoint {
  std::array<LaurentPoly, 5> I{};
};

/// Throws AllZeroInvariants.
InvariantPoint salmon_from_pentahedral(const std::array<Rational, 5>& c);

LaurentInvariantPoint salmon_from_pentahedral(const std::array<LaurentPoly, 5>& c);

/// Equality in P(1,2,3,4,5) over the algebraic closure: the zero patterns
/// agree and P_a^{w_b} Q_b^{w_a} = P_b^{w_a} Q_a^{w_b} for every pair of
/// nonzero entries. Throws AllZeroInvariants.
bool wp_equal(const InvariantPoint& P, const InvariantPoint& Q);

/// The (P_0, ..., P_4) -> (mu P_0, mu^2 P_1, ..., mu^5 P_4) action.
InvariantPoint weighted_rescale(const InvariantPoint& P, const Rational& mu);

/// Pentahedral coefficients of the degeneration
///   f_eps = sum_i (lambda_i eps)^{-3} (eps lambda_i x_i)^3 + (1 + 1/eps) x3^3
///           + (1/eps) (-eps lambda_0 x0 - eps lambda_1 x1 - eps lambda_2 x2 - x3)^3,
/// namely (l0^-3 eps^-3, l1^-3 eps^-3, l2^-3 eps^-3, 1 + eps^-1, eps^-1).
/// Throws std::invalid_argument on a zero lambda.
std::array<LaurentPoly, 5> epsilon_family(const std::array<Rational, 3>& lambda);

/// Limit in P(1,2,3,4,5) as eps -> 0: with tau the least ord(I_d)/w_d over
/// nonzero entries, keep the lowest coefficient of the entries reaching tau
/// and zero the rest.
InvariantPoint limit_invariants(const std::array<Rational, 3>& lambda);

/// [1 - 4 S : sum_{i<j} l_i^3 l_j^3 : 2 P : P S : 0] with S = sum l_i^3 and
/// P = prod l_i^3. Throws AllZeroInvariants or std::invalid_argument.
InvariantPoint rank6_closed_form(const std::array<Rational, 3>& lambda);

}  // namespace hk
