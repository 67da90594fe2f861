#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "hessiankit/cubic.hpp"
#include "hessiankit/invariants.hpp"

namespace hk {

class NotPentahedralRational : public std::runtime_error {
 public:
  explicit NotPentahedralRational(const std::string& why)
      : std::runtime_error("no rational Sylvester pentahedron: " + why) {}
};

/// f = sum_i coefficients[i] * L_i^3, where L_i has coefficient vector
/// planes[i] (first nonzero entry 1). Any four planes are independent.
struct Pentahedron {
  std::array<RatVector, 5> planes;
  std::array<Rational, 5> coefficients;

  Cubic cubic() const { return sum_of_cubes(planes, coefficients); }
};

/// Sylvester pentahedron from the ten rank-2 points of H(f): each point is
/// c_i L_i^2 - c_j L_j^2 with kernel {L_i = L_j = 0}; the faces are the
/// 3-spaces holding exactly four kernels. Faces are sorted by their
/// coefficient vectors. Throws NotPentahedralRational.
Pentahedron recover_pentahedron(const Cubic& f, std::uint64_t seed = 0, unsigned retries = 8);

/// Coefficients in normal position: with the relation sum a_i L_i = 0,
/// x_i = a_i L_i (i < 4) turns f into sum c_i x_i^3 + c_4 (-x0-x1-x2-x3)^3,
/// so c_i = coefficients[i] / a_i^3. Unique up to a common cube, which
/// P(1,2,3,4,5) does not see.
std::array<Rational, 5> sylvester_coefficients(const Pentahedron& p);

/// Invariant point of the cubic sum c_i L_i^3 for any pentahedron.
InvariantPoint pentahedron_invariants(const Pentahedron& p);

/// Throws std::invalid_argument unless every four of the planes are
/// independent.
void check_general_position(const std::array<RatVector, 5>& planes);

}  // namespace hk
