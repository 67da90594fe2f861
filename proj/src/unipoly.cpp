#include "hessiankit/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hk {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(unsigned degree, const Rational& c) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UniPoly::operator()(const Rational& u) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * u + *it;
  return acc;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return UniPoly(std::move(r));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(r));
}

UniPoly operator*(const Rational& s, const UniPoly& a) {
  std::vector<Rational> r = a.c_;
  for (auto& c : r) c *= s;
  return UniPoly(std::move(r));
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly result = constant(1);
  UniPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return (Rational(1) / leading()) * *this;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1);
  const Rational inv_lc = Rational(1) / b.leading();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const Rational q = rem[k + b.degree()] * inv_lc;
    quo[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= q * b.c_[j];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

bool UniPoly::is_squarefree() const {
  if (is_zero()) throw std::domain_error("zero polynomial");
  return gcd(*this, derivative()).degree() == 0;
}

UniPoly UniPoly::squarefree_part() const {
  if (is_zero()) throw std::domain_error("zero polynomial");
  return divmod(*this, gcd(*this, derivative())).first.monic();
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    if (k == 0 || mag != 1) {
      os << mag.str();
      if (k > 0) os << "*";
    }
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

std::vector<SquarefreeFactor> squarefree_factorization(const UniPoly& g) {
  if (g.is_zero()) throw std::domain_error("squarefree factorization of zero");
  std::vector<SquarefreeFactor> out;
  if (g.degree() == 0) return out;
  const UniPoly f = g.monic();
  const UniPoly fp = f.derivative();
  const UniPoly a0 = gcd(f, fp);
  UniPoly b = divmod(f, a0).first;
  UniPoly c = divmod(fp, a0).first;
  UniPoly d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    UniPoly a = gcd(b, d);
    if (a.degree() > 0) out.push_back({a, i});
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

namespace {

Integer floor_div(const Rational& q) {
  Integer n = numerator(q), d = denominator(q);
  Integer fl = n / d;  // truncates toward zero
  if (n < 0 && fl * d != n) fl -= 1;
  return fl;
}

// Fraction of smallest denominator strictly inside (a, b), a < b.
Rational simplest_between(const Rational& a, const Rational& b) {
  const Integer fl = floor_div(a);
  if (Rational(fl + 1) < b) {
    // Prefer the integer closest to zero in the interval.
    if (a < 0 && b > 0) return 0;
    if (b <= 0) {
      Integer n = floor_div(b);
      if (Rational(n) == b) n -= 1;
      return Rational(n);
    }
    return Rational(fl + 1);
  }
  const Rational lo = a - Rational(fl);
  const Rational hi = b - Rational(fl);
  if (lo == 0) return Rational(fl) + Rational(Integer(1), floor_div(1 / hi) + 1);
  return Rational(fl) + 1 / simplest_between(1 / hi, 1 / lo);
}

int sign(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

int sign_variations(const std::vector<UniPoly>& seq, const Rational& x) {
  int count = 0, last = 0;
  for (const auto& p : seq) {
    const int s = sign(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> seq{p, p.derivative()};
  while (seq.back().degree() > 0) {
    UniPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

// Finds one rational root of a squarefree p with p(0) != 0, or returns false
// when p has no rational root at all.
bool find_rational_root(const UniPoly& p, Rational& root) {
  // Primitive integer multiple: only the leading coefficient matters for
  // the denominator bound.
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) den_lcm = lcm(den_lcm, denominator(c));
  const Integer lead = abs(numerator(p.leading() * Rational(den_lcm)));

  Rational bound = 0;
  for (int i = 0; i < p.degree(); ++i) bound = std::max(bound, abs(p.coeff(i) / p.leading()));
  bound += 1;

  // Two distinct fractions with denominators <= lead are at least 1/lead^2
  // apart, so an isolating interval narrower than that holds at most one
  // candidate: the simplest fraction inside it.
  const Rational width_goal(Integer(1), lead * lead);
  const auto seq = sturm_sequence(p);

  struct Interval {
    Rational a, b;
    int va, vb;
  };
  std::vector<Interval> stack{{-bound, bound, sign_variations(seq, -bound), sign_variations(seq, bound)}};
  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();
    const int count = iv.va - iv.vb;
    if (count == 0) continue;
    if (count == 1) {
      // Refine by sign changes of p alone.
      int sa = sign(p(iv.a));
      while (iv.b - iv.a >= width_goal) {
        const Rational mid = (iv.a + iv.b) / 2;
        const int sm = sign(p(mid));
        if (sm == 0) {
          root = mid;
          return true;
        }
        if (sm == sa) {
          iv.a = mid;
        } else {
          iv.b = mid;
        }
      }
      const Rational cand = simplest_between(iv.a, iv.b);
      if (denominator(cand) <= lead && p(cand) == 0) {
        root = cand;
        return true;
      }
      continue;
    }
    const Rational mid = (iv.a + iv.b) / 2;
    if (p(mid) == 0) {
      root = mid;
      return true;
    }
    const int vm = sign_variations(seq, mid);
    stack.push_back({iv.a, mid, iv.va, vm});
    stack.push_back({mid, iv.b, vm, iv.vb});
  }
  return false;
}

}  // namespace

std::vector<Rational> rational_roots(const UniPoly& g) {
  if (g.is_zero()) throw std::domain_error("rational roots of zero");
  std::vector<Rational> roots;
  if (g.degree() <= 0) return roots;
  UniPoly p = g.squarefree_part();
  if (p.coeff(0) == 0) {
    roots.push_back(0);
    p = divmod(p, UniPoly({0, 1})).first;
  }
  Rational r;
  while (p.degree() >= 1) {
    if (p.degree() == 1) {
      roots.push_back(-p.coeff(0) / p.coeff(1));
      break;
    }
    if (!find_rational_root(p, r)) break;
    roots.push_back(r);
    p = divmod(p, UniPoly::linear_root(r)).first;
  }
  for (const auto& x : roots) {
    if (g(x) != 0) throw std::logic_error("rational_roots: candidate failed verification");
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

LaurentPoly::LaurentPoly(UniPoly body, int shift) : body_(std::move(body)), shift_(shift) {
  normalize();
}

void LaurentPoly::normalize() {
  if (body_.is_zero()) {
    shift_ = 0;
    return;
  }
  const auto& c = body_.coeffs();
  std::size_t k = 0;
  while (c[k] == 0) ++k;
  if (k > 0) {
    body_ = UniPoly(std::vector<Rational>(c.begin() + static_cast<long>(k), c.end()));
    shift_ += static_cast<int>(k);
  }
}

Rational LaurentPoly::coeff(int k) const {
  if (k < shift_) return 0;
  return body_.coeff(static_cast<std::size_t>(k - shift_));
}

Rational LaurentPoly::leading_low() const {
  if (is_zero()) throw std::domain_error("zero Laurent polynomial");
  return body_.coeff(0);
}

LaurentPoly LaurentPoly::operator-() const { return {-body_, shift_}; }

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int s = std::min(a.shift_, b.shift_);
  const UniPoly pa = UniPoly::monomial(static_cast<unsigned>(a.shift_ - s)) * a.body_;
  const UniPoly pb = UniPoly::monomial(static_cast<unsigned>(b.shift_ - s)) * b.body_;
  return {pa + pb, s};
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  return {a.body_ * b.body_, a.shift_ + b.shift_};
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  return {body_.pow(e), shift_ * static_cast<int>(e)};
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  return var + "^" + std::to_string(shift_) + "*(" + body_.to_string(var) + ")";
}

int laurent_order(const LaurentPoly& L) {
  if (L.is_zero()) throw std::domain_error("order of the zero Laurent polynomial");
  return L.shift();
}

}  // namespace hk
