#include "hessiankit/random.hpp"

#include <stdexcept>

namespace hk {
namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

Xorshift64Star::Xorshift64Star(std::uint64_t seed) : state_(splitmix64(seed)) {
  if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t Xorshift64Star::next() {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1DULL;
}

std::int64_t Xorshift64Star::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return lo + static_cast<std::int64_t>(r % span);
}

std::int64_t Xorshift64Star::nonzero(std::int64_t lo, std::int64_t hi) {
  if (lo == 0 && hi == 0) throw std::invalid_argument("nonzero: range is {0}");
  std::int64_t v;
  do {
    v = uniform(lo, hi);
  } while (v == 0);
  return v;
}

Rational Xorshift64Star::nonzero_rational(std::int64_t num_bound,
                                          std::int64_t den_bound) {
  const auto p = nonzero(-num_bound, num_bound);
  const auto q = uniform(1, den_bound);
  return Rational(p, q);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return splitmix64(base ^ splitmix64(stream + 0xD1B54A32D192ED03ULL));
}

}  // namespace hk
