#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hessiankit/cubic.hpp"
#include "hessiankit/intersection.hpp"

namespace hk {

/// A named cubic with the facts expected of its intersection H(f) cap X2.
struct CorpusCase {
  std::string name;
  Cubic cubic;
  DimensionClass dimension = DimensionClass::zero_dimensional;
  std::optional<MultiplicityProfile> profile;
  bool on_hessian_discriminant = false;
  /// Expected rational points as quadrics in x0..x3, compared up to scaling.
  std::optional<std::vector<MultiPoly>> points;
};

struct CorpusResult {
  const CorpusCase* expected = nullptr;
  IntersectionReport report;
  std::optional<std::vector<RationalPoint>> points;
  bool pass = false;
  std::string failure;  // first mismatch, empty on pass
};

/// Cayley; Fermat; pentahedral (1,2,3,4,5); rank 6 with lambda (1,1,1) and
/// (1,2,3); the alternative form with mu = (1,1,1); singular rho = (2,3,4).
const std::vector<CorpusCase>& builtin_corpus();

/// True when the two symmetric matrices are nonzero multiples of each other.
bool projectively_equal(const RatMatrix& A, const RatMatrix& B);

/// Same multiset of quadrics up to scaling and order.
bool same_quadric_set(const std::vector<RatMatrix>& got, const std::vector<MultiPoly>& expected);

CorpusResult run_case(const CorpusCase& c, std::uint64_t seed = 0, unsigned retries = 8);

}  // namespace hk
