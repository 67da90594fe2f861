#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "hessiankit/groebner.hpp"
#include "hessiankit/poly.hpp"
#include "hessiankit/rational.hpp"

namespace hk {

/// H(f) is undefined: the four slices are linearly dependent, i.e. f is a cone
/// over a plane cubic (a polynomial in at most three linear forms).
class ConeOrDegenerate : public std::domain_error {
 public:
  ConeOrDegenerate() : std::domain_error("polar subspace undefined: cubic is a cone over a plane cubic") {}
};

/// A quaternary cubic, stored as its 20 coefficients c_ijk (i <= j <= k) in
/// lexicographic order of the index triples: 000, 001, 002, 003, 011, ...,
/// 333.
class Cubic {
 public:
  using Triple = std::array<int, 3>;
  static constexpr std::size_t kSize = 20;

  Cubic() = default;

  static const std::array<Triple, kSize>& triples();
  /// Position of the (unsorted) triple in the coefficient array.
  static std::size_t index(int i, int j, int k);

  const Rational& coef(int i, int j, int k) const { return c_[index(i, j, k)]; }
  void set(int i, int j, int k, const Rational& v) { c_[index(i, j, k)] = v; }
  const std::array<Rational, kSize>& coefficients() const { return c_; }

  bool is_zero() const;
  MultiPoly to_poly() const;  // in x_ring()
  /// Polynomial string in x0..x3, parseable by parse_cubic.
  std::string to_string() const;

  bool operator==(const Cubic&) const = default;

 private:
  std::array<Rational, kSize> c_{};
};

/// Throws std::invalid_argument unless f is a nonzero homogeneous cubic in
/// x0..x3.
Cubic cubic_from_poly(const MultiPoly& f);

/// f(Mx) for invertible M.
Cubic transform(const Cubic& f, const RatMatrix& M);

/// sum_i coeffs[i] * L_i^3 for linear forms given by coefficient 4-vectors.
Cubic sum_of_cubes(std::span<const RatVector> planes, std::span<const Rational> coeffs);

/// Fully symmetric tensor with c_ijk = (number of distinct permutations) * T_ijk.
class SymTensor {
 public:
  explicit SymTensor(const Cubic& f);
  const Rational& operator()(int i, int j, int k) const { return t_[16 * i + 4 * j + k]; }

 private:
  std::array<Rational, 64> t_{};
};

/// slice m = (T_mjk)_{j,k}; 6 * sum_m x_m * slice_m is the Hessian of f.
struct SymSlices {
  std::array<RatMatrix, 4> slices;
};

/// The Hessian matrix of f as 4x4 linear forms in x_ring().
std::array<std::array<MultiPoly, 4>, 4> hessian_matrix(const Cubic& f);

/// Throws ConeOrDegenerate if the slices are linearly dependent.
SymSlices hessian_slices(const Cubic& f);

/// Stiefel and Pluecker coordinates of H(f) in P^9.
struct PolarSubspace {
  /// Column order of the 4 x 10 Stiefel matrix: pairs (j, k), j <= k,
  /// lexicographic.
  static const std::array<std::array<int, 2>, 10>& column_pairs();
  /// The 210 four-element column subsets, lexicographic; pluecker[n] is the
  /// maximal minor on subsets()[n].
  static const std::vector<std::array<Eigen::Index, 4>>& subsets();

  RatMatrix stiefel;               // 4 x 10, entry (m, (j,k)) = T_mjk
  std::vector<Rational> pluecker;  // 210 values
};

PolarSubspace polar_subspace(const Cubic& f);

/// Symmetric matrix of a quadratic form: A_ii = coefficient of x_i^2,
/// A_ij = half the coefficient of x_i x_j, so q(x) = x^T A x.
RatMatrix quadric_matrix(const MultiPoly& q);
MultiPoly quadric_poly(const RatMatrix& A, const RingPtr& ring = x_ring());

/// Frobenius pairing trace(A M): how a quadric in the dual variables y,
/// written as a symmetric matrix A, acts as a linear equation on symmetric
/// matrices M in P^9.
Rational quadric_pairing(const RatMatrix& A, const RatMatrix& M);

/// The 4 x 10 catalecticant: column (i,j) holds the x-coefficients of
/// (y_i y_j) o f = d^2 f / dx_i dx_j.
RatMatrix catalecticant(const Cubic& f);

/// Basis of the degree-2 part of ann(f), each element as a symmetric matrix
/// in the y variables (see quadric_matrix). Six elements unless f is a cone.
std::vector<RatMatrix> annihilator_quadrics(const Cubic& f);

/// M(t) = sum_m t_m slice_m evaluated at a point.
RatMatrix pencil_matrix(const SymSlices& s, std::span<const Rational> t);

/// The ten distinct 3x3 minors of M(t), homogeneous cubics in t_ring().
/// Throws ConeOrDegenerate.
Ideal rank2_pencil_ideal(const Cubic& f);

struct Pentahedral {
  std::array<Rational, 5> c;
};
struct Rank6 {
  std::array<Rational, 3> lambda;
};
struct AltRank6 {
  std::array<Rational, 3> mu;
};
struct SingularGeneric {
  std::array<Rational, 3> rho;
};
using NormalFormParams = std::variant<Pentahedral, Rank6, AltRank6, SingularGeneric>;

/// c0 x0^3 + ... + c3 x3^3 + c4 (-x0-x1-x2-x3)^3, the linear forms of the
/// Sylvester pentahedron in normal position.
std::array<RatVector, 5> standard_pentahedron();

/// Expanded cubic of the normal form. Throws std::invalid_argument on a
/// parameter constraint violation (zero lambda; rho in {0,1} or repeated).
/// Pentahedral parameters may contain zeros; see is_degenerate_pentahedral.
Cubic make_normal_form(const NormalFormParams& p);

/// True when some c_i is zero (the cubic then lies on V(I40)).
bool is_degenerate_pentahedral(const Pentahedral& p);

/// Degree 2p + 2g - 2 of the Hurwitz form of a variety of degree p and
/// sectional genus g. Throws std::domain_error for p < 2 or g < 0.
int hurwitz_degree(int p, int g);

}  // namespace hk
