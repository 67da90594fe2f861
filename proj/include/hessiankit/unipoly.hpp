#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hessiankit/rational.hpp"

namespace hk {

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs)
      : UniPoly(std::vector<Rational>(coeffs)) {}

  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  /// u - root
  static UniPoly linear_root(const Rational& root) { return UniPoly({-root, 1}); }
  static UniPoly monomial(unsigned degree, const Rational& c = 1);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& leading() const { return c_.back(); }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  Rational operator()(const Rational& u) const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& s, const UniPoly& a);
  UniPoly pow(unsigned e) const;
  bool operator==(const UniPoly&) const = default;

  UniPoly derivative() const;
  UniPoly monic() const;

  /// Returns (quotient, remainder). Throws std::domain_error on division by zero.
  friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
  /// Monic gcd; gcd(0, 0) = 0.
  friend UniPoly gcd(const UniPoly& a, const UniPoly& b);

  bool is_squarefree() const;
  /// Product of the distinct monic irreducible factors.
  UniPoly squarefree_part() const;

  std::string to_string(const std::string& var = "u") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct SquarefreeFactor {
  UniPoly factor;  // monic, squarefree
  unsigned multiplicity;
  bool operator==(const SquarefreeFactor&) const = default;
};

/// Yun's algorithm over characteristic zero: g = lc * prod factor^multiplicity
/// with pairwise coprime monic squarefree factors, multiplicities strictly
/// increasing, factors of degree 0 omitted. Throws std::domain_error on zero.
std::vector<SquarefreeFactor> squarefree_factorization(const UniPoly& g);

/// All rational roots, sorted ascending and without repetition. Throws
/// std::domain_error on zero.
std::vector<Rational> rational_roots(const UniPoly& g);

/// eps^shift * body(eps), where body has a nonzero constant term unless the
/// whole value is zero.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(UniPoly body, int shift);
  static LaurentPoly constant(const Rational& c) { return {UniPoly::constant(c), 0}; }
  static LaurentPoly monomial(int exponent, const Rational& c = 1) {
    return {UniPoly::constant(c), exponent};
  }

  bool is_zero() const { return body_.is_zero(); }
  const UniPoly& body() const { return body_; }
  int shift() const { return shift_; }

  /// Coefficient of eps^k.
  Rational coeff(int k) const;
  /// Coefficient of eps^order(); requires nonzero.
  Rational leading_low() const;

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly pow(unsigned e) const;
  bool operator==(const LaurentPoly&) const = default;

  std::string to_string(const std::string& var = "eps") const;

 private:
  void normalize();
  UniPoly body_;
  int shift_ = 0;
};

/// The eps-adic valuation. Throws std::domain_error for the zero polynomial.
int laurent_order(const LaurentPoly& L);

}  // namespace hk
