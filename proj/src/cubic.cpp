#include "hessiankit/cubic.hpp"

#include <algorithm>

#include "hessiankit/linalg.hpp"

namespace hk {

const std::array<Cubic::Triple, Cubic::kSize>& Cubic::triples() {
  static const auto table = [] {
    std::array<Triple, kSize> t{};
    std::size_t n = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j)
        for (int k = j; k < 4; ++k) t[n++] = {i, j, k};
    return t;
  }();
  return table;
}

std::size_t Cubic::index(int i, int j, int k) {
  if (i < 0 || j < 0 || k < 0 || i > 3 || j > 3 || k > 3) throw std::out_of_range("cubic index");
  std::array<int, 3> s{i, j, k};
  std::sort(s.begin(), s.end());
  const auto& t = triples();
  return static_cast<std::size_t>(std::find(t.begin(), t.end(), s) - t.begin());
}

bool Cubic::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& v) { return v == 0; });
}

MultiPoly Cubic::to_poly() const {
  std::vector<Term> terms;
  for (std::size_t n = 0; n < kSize; ++n) {
    if (c_[n] == 0) continue;
    Monomial m;
    for (int v : triples()[n]) m.exp[static_cast<std::size_t>(v)] += 1;
    terms.push_back({m, c_[n]});
  }
  return MultiPoly(x_ring(), std::move(terms));
}

std::string Cubic::to_string() const { return to_poly().to_string(); }

Cubic cubic_from_poly(const MultiPoly& f) {
  if (f.nvars() != 4) throw std::invalid_argument("cubic must be in four variables");
  if (f.is_zero()) throw std::invalid_argument("cubic must be nonzero");
  if (!f.is_homogeneous()) throw std::invalid_argument("polynomial is not homogeneous");
  if (f.total_degree() != 3)
    throw std::invalid_argument("polynomial has degree " + std::to_string(f.total_degree()) + ", expected 3");
  Cubic c;
  for (const auto& t : f.terms()) {
    std::array<int, 3> idx{};
    std::size_t n = 0;
    for (int v = 0; v < 4; ++v)
      for (unsigned e = 0; e < t.mono.exp[static_cast<std::size_t>(v)]; ++e) idx[n++] = v;
    c.set(idx[0], idx[1], idx[2], t.coef);
  }
  return c;
}

Cubic transform(const Cubic& f, const RatMatrix& M) {
  return cubic_from_poly(linear_substitute(f.to_poly(), M));
}

Cubic sum_of_cubes(std::span<const RatVector> planes, std::span<const Rational> coeffs) {
  if (planes.size() != coeffs.size()) throw std::invalid_argument("sum_of_cubes: size mismatch");
  MultiPoly f(x_ring());
  for (std::size_t i = 0; i < planes.size(); ++i)
    f += coeffs[i] * linear_form(x_ring(), planes[i]).pow(3);
  return cubic_from_poly(f);
}

SymTensor::SymTensor(const Cubic& f) {
  for (std::size_t n = 0; n < Cubic::kSize; ++n) {
    auto [i, j, k] = Cubic::triples()[n];
    const int perms = (i == j && j == k) ? 1 : (i == j || j == k) ? 3 : 6;
    const Rational v = f.coefficients()[n] / perms;
    std::array<int, 3> p{i, j, k};
    do {
      t_[static_cast<std::size_t>(16 * p[0] + 4 * p[1] + p[2])] = v;
    } while (std::next_permutation(p.begin(), p.end()));
  }
}

std::array<std::array<MultiPoly, 4>, 4> hessian_matrix(const Cubic& f) {
  const MultiPoly p = f.to_poly();
  std::array<std::array<MultiPoly, 4>, 4> H{{
      {MultiPoly(x_ring()), MultiPoly(x_ring()), MultiPoly(x_ring()), MultiPoly(x_ring())},
      {MultiPoly(x_ring()), MultiPoly(x_ring()), MultiPoly(x_ring()), MultiPoly(x_ring())},
      {MultiPoly(x_ring()), MultiPoly(x_ring()), MultiPoly(x_ring()), MultiPoly(x_ring())},
      {MultiPoly(x_ring()), MultiPoly(x_ring()), MultiPoly(x_ring()), MultiPoly(x_ring())},
  }};
  for (std::size_t i = 0; i < 4; ++i) {
    const MultiPoly di = p.differentiate(i);
    for (std::size_t j = 0; j < 4; ++j) H[i][j] = di.differentiate(j);
  }
  return H;
}

const std::array<std::array<int, 2>, 10>& PolarSubspace::column_pairs() {
  static const auto table = [] {
    std::array<std::array<int, 2>, 10> t{};
    std::size_t n = 0;
    for (int j = 0; j < 4; ++j)
      for (int k = j; k < 4; ++k) t[n++] = {j, k};
    return t;
  }();
  return table;
}

const std::vector<std::array<Eigen::Index, 4>>& PolarSubspace::subsets() {
  static const auto table = [] {
    std::vector<std::array<Eigen::Index, 4>> t;
    for (Eigen::Index a = 0; a < 10; ++a)
      for (Eigen::Index b = a + 1; b < 10; ++b)
        for (Eigen::Index c = b + 1; c < 10; ++c)
          for (Eigen::Index d = c + 1; d < 10; ++d) t.push_back({a, b, c, d});
    return t;
  }();
  return table;
}

namespace {

RatMatrix stiefel_matrix(const SymTensor& T) {
  RatMatrix S(4, 10);
  const auto& pairs = PolarSubspace::column_pairs();
  for (int m = 0; m < 4; ++m)
    for (std::size_t c = 0; c < 10; ++c) S(m, static_cast<Eigen::Index>(c)) = T(m, pairs[c][0], pairs[c][1]);
  return S;
}

}  // namespace

SymSlices hessian_slices(const Cubic& f) {
  const SymTensor T(f);
  if (rank(stiefel_matrix(T)) < 4) throw ConeOrDegenerate();
  SymSlices s;
  for (int m = 0; m < 4; ++m) {
    RatMatrix M(4, 4);
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) M(j, k) = T(m, j, k);
    s.slices[static_cast<std::size_t>(m)] = std::move(M);
  }
  const auto H = hessian_matrix(f);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      MultiPoly lhs(x_ring());
      for (int m = 0; m < 4; ++m)
        lhs += Rational(6 * s.slices[static_cast<std::size_t>(m)](i, j)) *
               MultiPoly::variable(x_ring(), static_cast<std::size_t>(m));
      if (!(lhs == H[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]))
        throw std::logic_error("slice identity 6 sum x_m slice_m = Hessian violated");
    }
  }
  return s;
}

PolarSubspace polar_subspace(const Cubic& f) {
  hessian_slices(f);  // validates non-degeneracy
  PolarSubspace P;
  P.stiefel = stiefel_matrix(SymTensor(f));
  const Eigen::Index rows[] = {0, 1, 2, 3};
  P.pluecker.reserve(PolarSubspace::subsets().size());
  for (const auto& cols : PolarSubspace::subsets()) P.pluecker.push_back(minor(P.stiefel, rows, cols));
  return P;
}

RatMatrix quadric_matrix(const MultiPoly& q) {
  if (q.nvars() != 4) throw std::invalid_argument("quadric must be in four variables");
  RatMatrix A = RatMatrix::Zero(4, 4);
  for (const auto& t : q.terms()) {
    if (t.mono.degree() != 2) throw std::invalid_argument("not a quadratic form");
    std::array<int, 2> idx{};
    std::size_t n = 0;
    for (int v = 0; v < 4; ++v)
      for (unsigned e = 0; e < t.mono.exp[static_cast<std::size_t>(v)]; ++e) idx[n++] = v;
    if (idx[0] == idx[1]) {
      A(idx[0], idx[0]) = t.coef;
    } else {
      A(idx[0], idx[1]) = t.coef / 2;
      A(idx[1], idx[0]) = t.coef / 2;
    }
  }
  return A;
}

MultiPoly quadric_poly(const RatMatrix& A, const RingPtr& ring) {
  std::vector<Term> terms;
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      Monomial m;
      m.exp[static_cast<std::size_t>(i)] += 1;
      m.exp[static_cast<std::size_t>(j)] += 1;
      terms.push_back({m, i == j ? A(i, i) : A(i, j) + A(j, i)});
    }
  }
  return MultiPoly(ring, std::move(terms));
}

Rational quadric_pairing(const RatMatrix& A, const RatMatrix& M) { return A.cwiseProduct(M).sum(); }

RatMatrix catalecticant(const Cubic& f) {
  const SymTensor T(f);
  RatMatrix C(4, 10);
  const auto& pairs = PolarSubspace::column_pairs();
  for (int k = 0; k < 4; ++k)
    for (std::size_t c = 0; c < 10; ++c) C(k, static_cast<Eigen::Index>(c)) = 6 * T(pairs[c][0], pairs[c][1], k);
  return C;
}

std::vector<RatMatrix> annihilator_quadrics(const Cubic& f) {
  const auto& pairs = PolarSubspace::column_pairs();
  std::vector<RatMatrix> out;
  for (const auto& a : rref_kernel(catalecticant(f)).basis) {
    RatMatrix A = RatMatrix::Zero(4, 4);
    for (std::size_t c = 0; c < 10; ++c) {
      const auto [i, j] = pairs[c];
      const Rational& v = a(static_cast<Eigen::Index>(c));
      if (i == j) {
        A(i, i) = v;
      } else {
        A(i, j) = v / 2;
        A(j, i) = v / 2;
      }
    }
    out.push_back(std::move(A));
  }
  return out;
}

RatMatrix pencil_matrix(const SymSlices& s, std::span<const Rational> t) {
  if (t.size() != 4) throw std::invalid_argument("pencil point needs four coordinates");
  RatMatrix M = RatMatrix::Zero(4, 4);
  for (std::size_t m = 0; m < 4; ++m) M += t[m] * s.slices[m];
  return M;
}

namespace {

MultiPoly det3(const std::array<std::array<const MultiPoly*, 3>, 3>& a) {
  return *a[0][0] * (*a[1][1] * *a[2][2] - *a[1][2] * *a[2][1]) -
         *a[0][1] * (*a[1][0] * *a[2][2] - *a[1][2] * *a[2][0]) +
         *a[0][2] * (*a[1][0] * *a[2][1] - *a[1][1] * *a[2][0]);
}

}  // namespace

Ideal rank2_pencil_ideal(const Cubic& f) {
  const auto s = hessian_slices(f);
  std::vector<std::vector<MultiPoly>> M(4, std::vector<MultiPoly>(4, MultiPoly(t_ring())));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (std::size_t m = 0; m < 4; ++m)
        M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
            s.slices[m](i, j) * MultiPoly::variable(t_ring(), m);
  std::vector<MultiPoly> gens;
  for (int drop_r = 0; drop_r < 4; ++drop_r) {
    for (int drop_c = drop_r; drop_c < 4; ++drop_c) {
      std::array<std::array<const MultiPoly*, 3>, 3> sub{};
      int a = 0;
      for (int i = 0; i < 4; ++i) {
        if (i == drop_r) continue;
        int b = 0;
        for (int j = 0; j < 4; ++j) {
          if (j == drop_c) continue;
          sub[static_cast<std::size_t>(a)][static_cast<std::size_t>(b++)] =
              &M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        ++a;
      }
      gens.push_back(det3(sub));
    }
  }
  return Ideal(t_ring(), std::move(gens));
}

std::array<RatVector, 5> standard_pentahedron() {
  std::array<RatVector, 5> p;
  for (int i = 0; i < 4; ++i) {
    p[static_cast<std::size_t>(i)] = RatVector::Zero(4);
    p[static_cast<std::size_t>(i)](i) = 1;
  }
  p[4] = RatVector::Constant(4, Rational(-1));
  return p;
}

bool is_degenerate_pentahedral(const Pentahedral& p) {
  return std::any_of(p.c.begin(), p.c.end(), [](const Rational& v) { return v == 0; });
}

namespace {

MultiPoly x(std::size_t i) { return MultiPoly::variable(x_ring(), i); }

struct NormalFormBuilder {
  Cubic operator()(const Pentahedral& p) const {
    const auto planes = standard_pentahedron();
    return sum_of_cubes(planes, p.c);
  }
  Cubic operator()(const Rank6& p) const {
    for (const auto& l : p.lambda)
      if (l == 0) throw std::invalid_argument("rank-6 normal form needs nonzero lambda");
    const auto& l = p.lambda;
    MultiPoly f = x(0).pow(3) + x(1).pow(3) + x(2).pow(3) -
                  x(3).pow(2) * (Rational(3 * l[0]) * x(0) + Rational(3 * l[1]) * x(1) +
                                 Rational(3 * l[2]) * x(2) - x(3));
    return cubic_from_poly(f);
  }
  Cubic operator()(const AltRank6& p) const {
    const auto& m = p.mu;
    MultiPoly f = m[0] * x(0).pow(3) + x(1).pow(3) + x(2).pow(3) -
                  Rational(3) * x(0) * (m[1] * x(0) * x(1) + x(0) * x(2) + m[2] * x(3).pow(2));
    return cubic_from_poly(f);
  }
  Cubic operator()(const SingularGeneric& p) const {
    const auto& r = p.rho;
    for (std::size_t i = 0; i < 3; ++i) {
      if (r[i] == 0 || r[i] == 1) throw std::invalid_argument("singular normal form needs rho outside {0, 1}");
      for (std::size_t j = i + 1; j < 3; ++j)
        if (r[i] == r[j]) throw std::invalid_argument("singular normal form needs distinct rho");
    }
    MultiPoly f = x(3) * (x(1).pow(2) - x(0) * x(2)) +
                  x(1) * (x(0) - (1 + r[0]) * x(1) + r[0] * x(2)) *
                      (x(0) - (r[1] + r[2]) * x(1) + (r[1] * r[2]) * x(2));
    return cubic_from_poly(f);
  }
};

}  // namespace

Cubic make_normal_form(const NormalFormParams& p) { return std::visit(NormalFormBuilder{}, p); }

int hurwitz_degree(int p, int g) {
  if (p < 2 || g < 0) throw std::domain_error("hurwitz_degree needs degree >= 2 and genus >= 0");
  return 2 * p + 2 * g - 2;
}

}  // namespace hk
