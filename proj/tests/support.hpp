#pragma once

// Shared helpers for the unit tests. Random inputs come from std::mt19937_64
// with fixed seeds, kept apart from the library's own generator so the two
// cannot mask each other's bugs.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "hessiankit/cubic.hpp"
#include "hessiankit/poly.hpp"
#include "hessiankit/rational.hpp"

namespace hk::test {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(eng_() % span);
  }
  std::int64_t nonzero(std::int64_t lo, std::int64_t hi) {
    for (;;)
      if (auto v = integer(lo, hi); v != 0) return v;
  }
  Rational rational(std::int64_t num = 9, std::int64_t den = 5) {
    return Rational(integer(-num, num)) / Rational(integer(1, den));
  }
  Rational nonzero_rational(std::int64_t num = 9, std::int64_t den = 5) {
    return Rational(nonzero(-num, num)) / Rational(integer(1, den));
  }
  RatMatrix matrix(Eigen::Index r, Eigen::Index c, std::int64_t bound = 5) {
    RatMatrix M(r, c);
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index j = 0; j < c; ++j) M(i, j) = Rational(integer(-bound, bound));
    return M;
  }
  MultiPoly poly(const RingPtr& ring, int terms, unsigned max_deg) {
    std::vector<Term> t;
    for (int k = 0; k < terms; ++k) {
      Monomial m;
      for (std::size_t v = 0; v < ring->size(); ++v) m.exp[v] = static_cast<std::uint16_t>(integer(0, max_deg));
      t.push_back({m, rational()});
    }
    return MultiPoly(ring, std::move(t));
  }
  Cubic cubic(std::int64_t bound = 4) {
    Cubic f;
    do {
      for (const auto& tr : Cubic::triples()) f.set(tr[0], tr[1], tr[2], Rational(integer(-bound, bound)));
    } while (f.is_zero());
    return f;
  }
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

/// Leibniz expansion: an oracle for determinants that shares nothing with
/// the elimination code.
inline Rational leibniz_det(const RatMatrix& M) {
  const auto n = static_cast<int>(M.rows());
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (int i = 0; i < n; ++i) term *= M(i, p[static_cast<std::size_t>(i)]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline MultiPoly X(std::size_t i) { return MultiPoly::variable(x_ring(), i); }
inline MultiPoly T(std::size_t i) { return MultiPoly::variable(t_ring(), i); }
inline MultiPoly C(const Rational& c, const RingPtr& r = x_ring()) { return MultiPoly::constant(r, c); }

inline Cubic cayley() { return cubic_from_poly(X(0) * X(1) * X(2) + X(0) * X(1) * X(3) + X(0) * X(2) * X(3) + X(1) * X(2) * X(3)); }
inline Cubic fermat() { return cubic_from_poly(X(0).pow(3) + X(1).pow(3) + X(2).pow(3) + X(3).pow(3)); }

}  // namespace hk::test
