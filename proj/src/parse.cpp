#include "hessiankit/parse.hpp"

#include <cctype>
#include <nlohmann/json.hpp>

namespace hk {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  MultiPoly expr() {
    MultiPoly p = term();
    for (;;) {
      if (accept('+'))
        p += term();
      else if (accept('-'))
        p -= term();
      else
        return p;
    }
  }

  MultiPoly term() {
    MultiPoly p = unary();
    while (accept('*')) p *= unary();
    return p;
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (!accept('^')) return base;
    skip();
    const std::size_t start = pos_;
    const std::string digits = read_digits();
    if (digits.empty()) fail("expected an exponent");
    if (digits.size() > 3) {
      pos_ = start;
      fail("exponent too large");
    }
    return base.pow(static_cast<unsigned>(std::stoul(digits)));
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  MultiPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string lit = read_digits();
      if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        const std::size_t den_pos = pos_;
        const std::string den = read_digits();
        if (den.find_first_not_of('0') == std::string::npos) {
          pos_ = den_pos;
          fail("zero denominator");
        }
        lit += "/" + den;
      }
      return MultiPoly::constant(x_ring(), parse_rational(lit));
    }
    if (c == 'x') {
      const std::size_t start = pos_++;
      if (pos_ < s_.size() && s_[pos_] == '_') ++pos_;
      if (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '3' &&
          (pos_ + 1 == s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
        return MultiPoly::variable(x_ring(), static_cast<std::size_t>(s_[pos_++] - '0'));
      }
      pos_ = start;
      fail("unknown variable (expected x0..x3)");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

Cubic parse_coefficient_map(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("invalid JSON", e.byte > 0 ? e.byte - 1 : 0);
  }
  if (!j.is_object()) throw ParseError("coefficient map must be a JSON object", 0);
  Cubic f;
  for (const auto& [key, value] : j.items()) {
    const auto where = text.find("\"" + key + "\"");
    const std::size_t pos = where == std::string_view::npos ? 0 : where;
    if (key.size() != 3 || key.find_first_not_of("0123") != std::string::npos || key[0] > key[1] ||
        key[1] > key[2])
      throw ParseError("bad index triple \"" + key + "\"", pos);
    Rational v;
    try {
      if (value.is_string())
        v = parse_rational(value.get<std::string>());
      else if (value.is_number_integer())
        v = Rational(value.get<long long>());
      else
        throw std::invalid_argument("coefficient must be a string or an integer");
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("bad coefficient for \"") + key + "\": " + e.what(), pos);
    }
    f.set(key[0] - '0', key[1] - '0', key[2] - '0', v);
  }
  if (f.is_zero()) throw std::invalid_argument("the zero form is not a cubic");
  return f;
}

}  // namespace

MultiPoly parse_polynomial(std::string_view text) { return Parser(text).parse(); }

Cubic parse_cubic(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty input", 0);
  if (text[first] == '{') return parse_coefficient_map(text);
  return cubic_from_poly(parse_polynomial(text));
}

std::string cubic_to_json(const Cubic& f) {
  std::string out = "{";
  bool first = true;
  for (std::size_t k = 0; k < Cubic::kSize; ++k) {
    const auto& v = f.coefficients()[k];
    if (v == 0) continue;
    const auto& t = Cubic::triples()[k];
    out += first ? "" : ", ";
    first = false;
    out += "\"" + std::to_string(t[0]) + std::to_string(t[1]) + std::to_string(t[2]) + "\": \"" + to_string(v) + "\"";
  }
  return out + "}";
}

}  // namespace hk
