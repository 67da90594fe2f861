#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hessiankit/rational.hpp"

namespace hk {

inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector. Unused trailing slots stay zero, so two monomials of the
/// same ring compare equal iff their exponents agree.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};

  unsigned degree() const {
    unsigned d = 0;
    for (auto e : exp) d += e;
    return d;
  }
  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp[i] > other.exp[i]) return false;
    return true;
  }
  bool is_one() const { return degree() == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = a.exp[i] + b.exp[i];
    return r;
  }
  /// b / a; requires a | b.
  friend Monomial quotient(const Monomial& b, const Monomial& a) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = b.exp[i] - a.exp[i];
    return r;
  }
  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
    return r;
  }
  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (a.exp[i] != 0 && b.exp[i] != 0) return false;
    return true;
  }

  static Monomial variable(std::size_t i, unsigned power = 1) {
    Monomial m;
    m.exp[i] = static_cast<std::uint16_t>(power);
    return m;
  }

  // Plain lexicographic comparison of the exponent arrays; used only as a
  // container key, never as a term order.
  auto operator<=>(const Monomial&) const = default;
};

/// A named set of polynomial variables. Rings are compared by their names, so
/// the x-ring and the t-ring never mix silently even though both have four
/// variables.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  bool operator==(const Ring& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names);
/// x0..x3, coordinates of the cubic.
RingPtr x_ring();
/// t0..t3, coordinates on the polar subspace H(f).
RingPtr t_ring();
/// y0..y3, the dual ring acting by differentiation.
RingPtr y_ring();

bool same_ring(const RingPtr& a, const RingPtr& b);

class RingMismatch : public std::invalid_argument {
 public:
  RingMismatch() : std::invalid_argument("polynomials live in different rings") {}
};

struct MonomialOrder {
  enum class Kind { degrevlex, lex, block };
  Kind kind = Kind::degrevlex;
  // For Kind::block: variables [0, split) form the first block, compared by
  // degrevlex before the remaining variables are consulted.
  std::size_t split = 0;

  static MonomialOrder degrevlex() { return {Kind::degrevlex, 0}; }
  static MonomialOrder lex() { return {Kind::lex, 0}; }
  static MonomialOrder block(std::size_t split) { return {Kind::block, split}; }

  /// Negative, zero, positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b, std::size_t nvars) const;

  bool operator==(const MonomialOrder&) const = default;
};

struct Term {
  Monomial mono;
  Rational coef;
};

/// Sparse multivariate polynomial with exact rational coefficients. Terms are
/// kept sorted by decreasing degrevlex order with no zero coefficients, so
/// equality is structural.
class MultiPoly {
 public:
  explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}
  MultiPoly(RingPtr ring, std::vector<Term> terms);

  static MultiPoly constant(RingPtr ring, const Rational& c);
  static MultiPoly variable(RingPtr ring, std::size_t i);
  static MultiPoly monomial(RingPtr ring, const Monomial& m, const Rational& c = 1);

  const RingPtr& ring() const { return ring_; }
  std::size_t nvars() const { return ring_->size(); }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  Rational coefficient(const Monomial& m) const;
  /// Leading term under the given order. Requires a nonzero polynomial.
  const Term& leading_term(const MonomialOrder& order) const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& c, const MultiPoly& a);
  MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
  MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
  MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }
  MultiPoly pow(unsigned e) const;

  bool operator==(const MultiPoly& other) const;

  MultiPoly differentiate(std::size_t i) const;

  /// Replaces variable i by images[i]; all images share one target ring.
  MultiPoly substitute(std::span<const MultiPoly> images) const;

  Rational evaluate(std::span<const Rational> point) const;

  /// Re-tags the polynomial with another ring of at least as many variables.
  MultiPoly with_ring(RingPtr ring) const;

  /// Divides by the leading (degrevlex) coefficient.
  MultiPoly monic() const;

  std::string to_string() const;

 private:
  void canonicalize();

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// f(Mx): each variable x_i becomes the linear form sum_j M(i,j) x_j.
/// Throws std::invalid_argument if M is not square of the ring's size or is
/// singular.
MultiPoly linear_substitute(const MultiPoly& f, const RatMatrix& M);

/// Dense coefficient vector of a linear form over the ring's variables.
/// Throws std::invalid_argument if f is not a homogeneous linear form.
RatVector linear_coefficients(const MultiPoly& f);

MultiPoly linear_form(RingPtr ring, const RatVector& coeffs);

std::string monomial_to_string(const Monomial& m, const Ring& ring);

}  // namespace hk
