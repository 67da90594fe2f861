#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hessiankit/cubic.hpp"
#include "hessiankit/groebner.hpp"
#include "hessiankit/pentahedron.hpp"

namespace hk {

/// One sampled cubic: what the invariants say (I40 = 0) against what the
/// rank-2 intersection says (on the Hessian discriminant). The two must
/// agree.
struct TheoremCase {
  std::size_t index = 0;
  std::string family;  // pentahedral, rank6, fermat_type, singular_generic
  std::string parameters;
  std::uint64_t seed = 0;
  Cubic cubic;
  std::optional<bool> i40_zero;  // unknown for singular_generic
  bool on_hessian_discriminant = false;
  std::optional<MultiplicityProfile> profile;
  std::optional<bool> recovery_agrees;  // pentahedral: recovered invariants wp_equal the constructed ones
  bool consistent = false;
  std::string note;
};

struct TheoremReport {
  std::uint64_t seed = 0;
  std::vector<TheoremCase> cases;

  bool consistent() const;
  std::vector<const TheoremCase*> counterexamples() const;
};

/// Random pentahedron: planes with integer entries in [-5, 5] in general
/// position, coefficients nonzero rationals.
Pentahedron random_pentahedron(std::uint64_t seed);

/// Random nonzero rational lambda.
std::array<Rational, 3> random_lambda(std::uint64_t seed);

/// n_pentahedral pentahedral samples and n_rank6 rank-6 samples, plus two
/// fixed spot checks (a Fermat-type cubic with one coefficient zero and the
/// singular normal form with rho = (2, 3, 4)). Throws std::invalid_argument
/// for a zero count.
TheoremReport verify_theorem(std::uint64_t seed, std::size_t n_pentahedral, std::size_t n_rank6,
                             unsigned retries = 8);

}  // namespace hk
