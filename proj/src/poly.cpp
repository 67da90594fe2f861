#include "hessiankit/poly.hpp"

#include <algorithm>
#include <sstream>

#include "hessiankit/linalg.hpp"

namespace hk {

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty() || names_.size() > kMaxVars)
    throw std::invalid_argument("ring must have between 1 and 8 variables");
}

RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(names));
}

RingPtr x_ring() {
  static const RingPtr r = make_ring({"x0", "x1", "x2", "x3"});
  return r;
}

RingPtr t_ring() {
  static const RingPtr r = make_ring({"t0", "t1", "t2", "t3"});
  return r;
}

RingPtr y_ring() {
  static const RingPtr r = make_ring({"y0", "y1", "y2", "y3"});
  return r;
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

namespace {

int degrevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  unsigned da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a.exp[i];
    db += b.exp[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? -1 : 1;
  }
  return 0;
}

bool degrevlex_greater(const Monomial& a, const Monomial& b) {
  return degrevlex_range(a, b, 0, kMaxVars) > 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b, std::size_t nvars) const {
  switch (kind) {
    case Kind::degrevlex:
      return degrevlex_range(a, b, 0, nvars);
    case Kind::lex:
      for (std::size_t i = 0; i < nvars; ++i)
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
      return 0;
    case Kind::block: {
      const int first = degrevlex_range(a, b, 0, split);
      if (first != 0) return first;
      return degrevlex_range(a, b, split, nvars);
    }
  }
  return 0;
}

MultiPoly::MultiPoly(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  canonicalize();
}

void MultiPoly::canonicalize() {
  for (const auto& t : terms_) {
    for (std::size_t i = ring_->size(); i < kMaxVars; ++i)
      if (t.mono.exp[i] != 0) throw std::invalid_argument("monomial uses a variable outside the ring");
  }
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return degrevlex_greater(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  terms_ = std::move(out);
}

MultiPoly MultiPoly::constant(RingPtr ring, const Rational& c) {
  return MultiPoly(std::move(ring), {Term{Monomial{}, c}});
}

MultiPoly MultiPoly::variable(RingPtr ring, std::size_t i) {
  if (i >= ring->size()) throw std::out_of_range("variable index");
  return MultiPoly(std::move(ring), {Term{Monomial::variable(i), 1}});
}

MultiPoly MultiPoly::monomial(RingPtr ring, const Monomial& m, const Rational& c) {
  return MultiPoly(std::move(ring), {Term{m, c}});
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coef;
  return 0;
}

const Term& MultiPoly::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw std::domain_error("leading term of zero");
  if (order.kind == MonomialOrder::Kind::degrevlex) return terms_.front();
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (order.compare(t.mono, best->mono, nvars()) > 0) best = &t;
  return *best;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

namespace {

MultiPoly merge(const MultiPoly& a, const MultiPoly& b, bool subtract) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
  std::vector<Term> out;
  out.reserve(a.terms().size() + b.terms().size());
  auto ia = a.terms().begin(), ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end() || (ia != a.terms().end() && degrevlex_greater(ia->mono, ib->mono))) {
      out.push_back(*ia++);
    } else if (ia == a.terms().end() || degrevlex_greater(ib->mono, ia->mono)) {
      out.push_back({ib->mono, subtract ? -ib->coef : ib->coef});
      ++ib;
    } else {
      Rational c = subtract ? ia->coef - ib->coef : ia->coef + ib->coef;
      if (c != 0) out.push_back({ia->mono, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  return MultiPoly(a.ring(), std::move(out));
}

}  // namespace

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, false); }
MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, true); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
  std::vector<Term> out;
  out.reserve(a.terms().size() * b.terms().size());
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) out.push_back({s.mono * t.mono, s.coef * t.coef});
  return MultiPoly(a.ring(), std::move(out));
}

MultiPoly operator*(const Rational& c, const MultiPoly& a) {
  if (c == 0) return MultiPoly(a.ring());
  MultiPoly r = a;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(ring_, 1);
  MultiPoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

bool MultiPoly::operator==(const MultiPoly& other) const {
  if (!same_ring(ring_, other.ring_)) return false;
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].mono != other.terms_[i].mono || terms_[i].coef != other.terms_[i].coef) return false;
  }
  return true;
}

MultiPoly MultiPoly::differentiate(std::size_t i) const {
  if (i >= nvars()) throw std::out_of_range("differentiate: variable index");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono.exp[i] == 0) continue;
    Term d = t;
    d.coef *= static_cast<long>(t.mono.exp[i]);
    d.mono.exp[i] -= 1;
    out.push_back(std::move(d));
  }
  return MultiPoly(ring_, std::move(out));
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
  if (images.size() != nvars()) throw std::invalid_argument("substitute: need one image per variable");
  const RingPtr& target = images.front().ring();
  for (const auto& im : images)
    if (!same_ring(im.ring(), target)) throw RingMismatch();
  // Cache powers of each image.
  std::vector<std::vector<MultiPoly>> powers(nvars());
  MultiPoly result(target);
  for (const auto& t : terms_) {
    MultiPoly term = constant(target, t.coef);
    for (std::size_t i = 0; i < nvars(); ++i) {
      const unsigned e = t.mono.exp[i];
      if (e == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(target, 1));
      while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
      term *= cache[e];
    }
    result += term;
  }
  return result;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars()) throw std::invalid_argument("evaluate: point dimension");
  Rational acc = 0;
  for (const auto& t : terms_) {
    Rational v = t.coef;
    for (std::size_t i = 0; i < nvars(); ++i)
      for (unsigned k = 0; k < t.mono.exp[i]; ++k) v *= point[i];
    acc += v;
  }
  return acc;
}

MultiPoly MultiPoly::with_ring(RingPtr ring) const {
  if (ring->size() < nvars()) {
    for (const auto& t : terms_)
      for (std::size_t i = ring->size(); i < nvars(); ++i)
        if (t.mono.exp[i] != 0) throw std::invalid_argument("with_ring: polynomial uses dropped variable");
  }
  return MultiPoly(std::move(ring), terms_);
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  return (Rational(1) / terms_.front().coef) * *this;
}

std::string monomial_to_string(const Monomial& m, const Ring& ring) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << ring.name(i);
    if (m.exp[i] > 1) os << "^" << m.exp[i];
  }
  return first ? "1" : os.str();
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const Rational mag = abs(t.coef);
    if (!first) os << (t.coef < 0 ? " - " : " + ");
    else if (t.coef < 0) os << "-";
    first = false;
    if (t.mono.is_one()) {
      os << mag.str();
    } else {
      if (mag != 1) os << mag.str() << "*";
      os << monomial_to_string(t.mono, *ring_);
    }
  }
  return os.str();
}

MultiPoly linear_form(RingPtr ring, const RatVector& coeffs) {
  if (static_cast<std::size_t>(coeffs.size()) != ring->size())
    throw std::invalid_argument("linear_form: coefficient count");
  std::vector<Term> terms;
  for (Eigen::Index j = 0; j < coeffs.size(); ++j)
    if (coeffs(j) != 0) terms.push_back({Monomial::variable(static_cast<std::size_t>(j)), coeffs(j)});
  return MultiPoly(std::move(ring), std::move(terms));
}

RatVector linear_coefficients(const MultiPoly& f) {
  RatVector v = RatVector::Zero(static_cast<Eigen::Index>(f.nvars()));
  for (const auto& t : f.terms()) {
    if (t.mono.degree() != 1) throw std::invalid_argument("not a linear form");
    for (std::size_t i = 0; i < f.nvars(); ++i)
      if (t.mono.exp[i] == 1) v(static_cast<Eigen::Index>(i)) = t.coef;
  }
  return v;
}

MultiPoly linear_substitute(const MultiPoly& f, const RatMatrix& M) {
  const auto n = static_cast<Eigen::Index>(f.nvars());
  if (M.rows() != n || M.cols() != n) throw std::invalid_argument("linear_substitute: matrix size");
  if (determinant(M) == 0) throw std::invalid_argument("linear_substitute: singular matrix");
  std::vector<MultiPoly> images;
  images.reserve(f.nvars());
  for (Eigen::Index i = 0; i < n; ++i) images.push_back(linear_form(f.ring(), M.row(i).transpose()));
  return f.substitute(images);
}

}  // namespace hk
