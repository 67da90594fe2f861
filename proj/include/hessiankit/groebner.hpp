#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hessiankit/poly.hpp"
#include "hessiankit/unipoly.hpp"

namespace hk {

class PositiveDimensional : public std::domain_error {
 public:
  PositiveDimensional() : std::domain_error("ideal is not zero-dimensional") {}
};

class SeparationFailure : public std::runtime_error {
 public:
  explicit SeparationFailure(unsigned attempts)
      : std::runtime_error("no separating linear form found after " + std::to_string(attempts) +
                           " attempts") {}
};

/// Generators in a shared ring, zero generators dropped. An empty generator
/// list is the zero ideal (it can arise as an elimination ideal).
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<MultiPoly> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<MultiPoly>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

 private:
  RingPtr ring_;
  std::vector<MultiPoly> gens_;
};

/// Reduced Groebner basis: monic elements, sorted by increasing leading
/// monomial, no leading monomial divides another element's terms.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<MultiPoly> elements);

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<MultiPoly>& elements() const { return elements_; }
  const std::vector<Monomial>& leading_monomials() const { return leads_; }

  bool is_unit() const { return elements_.size() == 1 && elements_[0].is_constant(); }

 private:
  RingPtr ring_;
  MonomialOrder order_;
  std::vector<MultiPoly> elements_;
  std::vector<Monomial> leads_;
};

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;  // after Gebauer-Moller pruning
  std::size_t zero_reductions = 0;
};

/// Buchberger's algorithm with Gebauer-Moller pair pruning and the normal
/// selection strategy. Deterministic for fixed input and order.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order = MonomialOrder::degrevlex(),
                         BuchbergerStats* stats = nullptr);

/// Full reduction of f modulo G.
MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& G);

bool ideal_contains(const GroebnerBasis& G, const MultiPoly& f);

/// Buchberger criterion certificate: every S-polynomial of G reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& G);

/// Generators of I intersected with the subring of the kept variables (still
/// tagged with I's ring). Uses a block order with the eliminated variables in
/// the first block.
Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> keep);

/// Standard monomials of a zero-dimensional quotient, increasing in G's order.
struct QuotientBasis {
  std::vector<Monomial> monomials;
  std::size_t degree() const { return monomials.size(); }
};

/// Throws PositiveDimensional if some variable has no pure power among the
/// leading monomials.
QuotientBasis quotient_basis(const GroebnerBasis& G);

/// Matrix of multiplication by u on the quotient, in the standard-monomial
/// basis (column j = coordinates of NF(u * b_j)).
RatMatrix multiplication_matrix(const GroebnerBasis& G, const QuotientBasis& B, const MultiPoly& u);

/// Characteristic polynomial of multiplication by u on the quotient.
UniPoly mult_charpoly(const GroebnerBasis& G, const MultiPoly& u);

/// The reduced basis of the same zero-dimensional ideal under another order
/// (FGLM: linear algebra on the quotient, no S-polynomials). Throws
/// PositiveDimensional.
GroebnerBasis change_order(const GroebnerBasis& G, const MonomialOrder& target);

/// Monic generator of I intersected with Q[x_var]: the first linear relation
/// among the normal forms of 1, x_var, x_var^2, ... (minimal polynomial of
/// multiplication by x_var). Throws PositiveDimensional unless G is
/// zero-dimensional.
UniPoly univariate_eliminant(const GroebnerBasis& G, std::size_t var);

/// The same generator via eliminate(); slower, works directly from the
/// ideal and throws PositiveDimensional only if I cap Q[x_var] = 0.
UniPoly eliminant_by_elimination(const GroebnerBasis& G, std::size_t var);

/// Random linear form with coefficients in [-bound, bound] \ {0} drawn from
/// the seeded stream.
MultiPoly seeded_linear_form(const RingPtr& ring, std::uint64_t seed, std::int64_t bound = 9);

struct RadicalityCheck {
  bool radical = false;
  std::vector<UniPoly> eliminants;      // one per variable
  std::vector<std::uint64_t> charpoly_seeds;  // cross-check forms tried
};

/// Seidenberg's criterion: radical iff every univariate eliminant is
/// squarefree. Cross-checked against squarefreeness of mult_charpoly for
/// seeded generic forms; a disagreement throws std::logic_error.
RadicalityCheck check_radical_zero_dim(const GroebnerBasis& G, std::uint64_t seed = 0,
                                       unsigned max_attempts = 8);
bool is_radical_zero_dim(const GroebnerBasis& G);

/// Number of distinct points of V(I): the quotient degree of
/// I + <squarefree part of each eliminant>, which is the radical of I.
std::size_t count_distinct_points(const GroebnerBasis& G);

/// Multiset of point multiplicities: multiplicity -> number of points.
struct MultiplicityProfile {
  std::map<unsigned, std::size_t> entries;

  std::size_t total_degree() const;
  std::size_t point_count() const;
  std::string to_string() const;  // "{(1,4),(2,3)}"
  bool operator==(const MultiplicityProfile&) const = default;

  static MultiplicityProfile from_pairs(std::initializer_list<std::pair<unsigned, std::size_t>> pairs);
};

struct ProfileResult {
  MultiplicityProfile profile;
  MultiPoly separating_form;
  std::uint64_t form_seed = 0;
  unsigned attempts = 0;
  std::size_t distinct_points = 0;
  UniPoly charpoly;
};

/// Squarefree decomposition of the characteristic polynomial of a separating
/// linear form. Candidate forms come from derive_seed(seed, attempt) for
/// attempt = 0, 1, ...; a form separates when its charpoly has as many
/// distinct roots as V(I) has points. Throws SeparationFailure after
/// max_attempts failures.
ProfileResult multiplicity_profile(const GroebnerBasis& G, std::uint64_t seed = 0,
                                   unsigned max_attempts = 8);

/// Profile for a caller-chosen form u; throws SeparationFailure if u does not
/// separate the points.
MultiplicityProfile multiplicity_profile_for(const GroebnerBasis& G, const MultiPoly& u);

}  // namespace hk
