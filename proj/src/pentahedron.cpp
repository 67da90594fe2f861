#include "hessiankit/pentahedron.hpp"

#include <algorithm>

#include "hessiankit/intersection.hpp"
#include "hessiankit/linalg.hpp"

namespace hk {

namespace {

bool lex_less(const RatVector& a, const RatVector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return a(i) < b(i);
  return false;
}

RatMatrix columns(const std::array<RatVector, 5>& planes, std::initializer_list<std::size_t> which) {
  RatMatrix M(4, static_cast<Eigen::Index>(which.size()));
  Eigen::Index k = 0;
  for (auto i : which) M.col(k++) = planes[i];
  return M;
}

}  // namespace

void check_general_position(const std::array<RatVector, 5>& planes) {
  for (std::size_t skip = 0; skip < 5; ++skip) {
    RatMatrix M(4, 4);
    Eigen::Index k = 0;
    for (std::size_t i = 0; i < 5; ++i)
      if (i != skip) M.col(k++) = planes[i];
    if (determinant(M) == 0) throw std::invalid_argument("four of the planes are dependent");
  }
}

Pentahedron recover_pentahedron(const Cubic& f, std::uint64_t seed, unsigned retries) {
  const auto report = intersection_analysis(f, seed, retries);
  if (report.dimension_class != DimensionClass::zero_dimensional || report.degree != 10 || !report.radical.value_or(false))
    throw NotPentahedralRational("H(f) does not meet the rank-2 locus in 10 reduced points");
  std::vector<RationalPoint> points;
  try {
    points = rational_points(report, f);
  } catch (const IncompleteRationalPoints& e) {
    throw NotPentahedralRational(e.what());
  }

  // Edges: the 2-dimensional kernels, as 4x2 column bases.
  std::vector<RatMatrix> edges;
  for (const auto& p : points) {
    const auto ker = rref_kernel(p.quadric);
    if (ker.basis.size() != 2) throw std::logic_error("rank-2 point without a 2-dimensional kernel");
    RatMatrix E(4, 2);
    E.col(0) = ker.basis[0];
    E.col(1) = ker.basis[1];
    edges.push_back(std::move(E));
  }

  // Candidate faces: normals of 3-spaces spanned by two edges.
  std::vector<RatVector> normals;
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      RatMatrix S(4, 4);
      S << edges[a], edges[b];
      const auto ann = rref_kernel(RatMatrix(S.transpose()));
      if (ann.basis.size() != 1) continue;
      const RatVector& n = ann.basis.front();
      if (std::none_of(normals.begin(), normals.end(), [&](const RatVector& m) { return m == n; }))
        normals.push_back(n);
    }
  }
  std::vector<RatVector> faces;
  for (const auto& n : normals) {
    std::size_t contained = 0;
    for (const auto& E : edges) {
      const RatMatrix prod = n.transpose() * E;
      if (prod(0, 0) == 0 && prod(0, 1) == 0) ++contained;
    }
    if (contained == 4) faces.push_back(n);
  }
  if (faces.size() != 5)
    throw NotPentahedralRational("found " + std::to_string(faces.size()) + " faces instead of 5");
  std::sort(faces.begin(), faces.end(), lex_less);

  Pentahedron p;
  std::copy(faces.begin(), faces.end(), p.planes.begin());
  try {
    check_general_position(p.planes);
  } catch (const std::invalid_argument&) {
    throw NotPentahedralRational("four of the faces are dependent");
  }

  // 20 x 5 system: column i holds the coefficients of L_i^3.
  RatMatrix A(static_cast<Eigen::Index>(Cubic::kSize), 5);
  RatVector rhs(static_cast<Eigen::Index>(Cubic::kSize));
  for (std::size_t i = 0; i < 5; ++i) {
    const RatVector plane = p.planes[i];
    const Rational one = 1;
    const Cubic cube = sum_of_cubes(std::span<const RatVector>(&plane, 1), std::span<const Rational>(&one, 1));
    for (std::size_t k = 0; k < Cubic::kSize; ++k)
      A(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)) = cube.coefficients()[k];
  }
  for (std::size_t k = 0; k < Cubic::kSize; ++k) rhs(static_cast<Eigen::Index>(k)) = f.coefficients()[k];
  const auto c = solve_unique(A, rhs);
  if (!c) throw NotPentahedralRational("f is not a combination of the five cubes");
  for (std::size_t i = 0; i < 5; ++i) {
    p.coefficients[i] = (*c)(static_cast<Eigen::Index>(i));
    if (p.coefficients[i] == 0) throw NotPentahedralRational("a cube has coefficient zero");
  }
  if (p.cubic() != f) throw std::logic_error("recovered pentahedron does not reproduce f");
  return p;
}

std::array<Rational, 5> sylvester_coefficients(const Pentahedron& p) {
  const auto rel = rref_kernel(columns(p.planes, {0, 1, 2, 3, 4}));
  if (rel.basis.size() != 1) throw std::invalid_argument("planes do not span a 4-space");
  const RatVector& a = rel.basis.front();
  std::array<Rational, 5> c;
  for (std::size_t i = 0; i < 5; ++i) {
    const Rational ai = a(static_cast<Eigen::Index>(i));
    if (ai == 0) throw std::invalid_argument("four of the planes are dependent");
    c[i] = p.coefficients[i] / (ai * ai * ai);
  }
  return c;
}

InvariantPoint pentahedron_invariants(const Pentahedron& p) { return salmon_from_pentahedral(sylvester_coefficients(p)); }

}  // namespace hk
