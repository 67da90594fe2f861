#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hessiankit/cubic.hpp"
#include "hessiankit/groebner.hpp"

namespace hk {

enum class DimensionClass { empty, zero_dimensional, positive_dimensional };

std::string to_string(DimensionClass d);

/// Extraction found fewer rational points than V(I) has points, so some are
/// irrational. The analysis itself is unaffected.
class IncompleteRationalPoints : public std::runtime_error {
 public:
  IncompleteRationalPoints(std::size_t found, std::size_t expected)
      : std::runtime_error("found " + std::to_string(found) + " rational points out of " +
                           std::to_string(expected)),
        found(found),
        expected(expected) {}
  std::size_t found, expected;
};

/// A point of H(f) cap X2: projective coordinates t (first nonzero entry 1)
/// and the rank-2 matrix M(t).
struct RationalPoint {
  RatVector t;
  RatMatrix quadric;
};

struct IntersectionReport {
  DimensionClass dimension_class = DimensionClass::positive_dimensional;
  std::optional<std::size_t> degree;
  std::optional<MultiplicityProfile> profile;
  std::optional<bool> radical;
  std::optional<std::size_t> distinct_points;
  bool on_hessian_discriminant = true;
  std::optional<std::vector<RationalPoint>> rational_points;

  std::uint64_t seed = 0;
  unsigned retries = 8;
  unsigned chart_attempts = 0;       // coordinate changes tried
  std::uint64_t chart_seed = 0;      // seed of the accepted change
  std::optional<std::uint64_t> form_seed;  // separating form
  unsigned form_attempts = 0;

  /// Accepted chart: original t = chart * (s0, s1, s2, 1). Empty when every
  /// attempt met a positive-dimensional part at infinity.
  std::optional<RatMatrix> chart;
  /// Reduced basis of the dehomogenized ideal in the chart ring.
  std::optional<GroebnerBasis> chart_basis;
};

/// Affine chart ring s0, s1, s2.
RingPtr chart_ring();

/// Seeded invertible 4x4 matrix with entries in [-9, 9].
RatMatrix seeded_invertible(std::uint64_t seed);

/// Decides whether H(f) meets the rank-2 locus in 10 reduced points.
/// Throws ConeOrDegenerate when H(f) is undefined and SeparationFailure when
/// no separating form is found within `retries` attempts.
IntersectionReport intersection_analysis(const Cubic& f, std::uint64_t seed = 0, unsigned retries = 8);

bool is_on_hessian_discriminant(const Cubic& f, std::uint64_t seed = 0);

/// Points of V(rank2_pencil_ideal(f)) with rational coordinates, sorted by t.
/// Requires a zero-dimensional report for the same f. Throws
/// IncompleteRationalPoints if some point is irrational.
std::vector<RationalPoint> rational_points(const IntersectionReport& report, const Cubic& f);

}  // namespace hk
