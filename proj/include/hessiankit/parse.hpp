#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hessiankit/cubic.hpp"

namespace hk {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position(position) {}
  std::size_t position;
};

/// Polynomial in x0..x3 (or x_0..x_3) with +, -, *, ^, parentheses and
/// integer or p/q literals.
MultiPoly parse_polynomial(std::string_view text);

/// Either a polynomial (see parse_polynomial) or a coefficient map
/// {"000": "1", "012": "-3/2", ...} with non-decreasing index digits.
/// Throws ParseError, or std::invalid_argument if the result is not a
/// nonzero homogeneous cubic.
Cubic parse_cubic(std::string_view text);

/// Coefficient-map form of f, nonzero entries only, keys in order.
std::string cubic_to_json(const Cubic& f);

}  // namespace hk
