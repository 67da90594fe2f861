#include "hessiankit/corpus.hpp"

#include "hessiankit/linalg.hpp"
#include "hessiankit/parse.hpp"

namespace hk {

namespace {

std::vector<MultiPoly> cayley_points() {
  std::vector<MultiPoly> out;
  for (const char* q : {"x0*(x1+x2+x3)", "x1*(x0+x2+x3)", "x2*(x0+x1+x3)", "x3*(x0+x1+x2)", "(x0-x1)*(x2+x3)",
                        "(x0-x2)*(x1+x3)", "(x0-x3)*(x1+x2)", "(x1-x2)*(x0+x3)", "(x1-x3)*(x0+x2)",
                        "(x2-x3)*(x0+x1)"})
    out.push_back(parse_polynomial(q));
  return out;
}

std::vector<MultiPoly> pentahedral_points(const std::array<Rational, 5>& c) {
  std::array<MultiPoly, 5> L{MultiPoly(x_ring()), MultiPoly(x_ring()), MultiPoly(x_ring()), MultiPoly(x_ring()),
                             MultiPoly(x_ring())};
  for (std::size_t i = 0; i < 4; ++i) {
    L[i] = MultiPoly::variable(x_ring(), i);
    L[4] -= L[i];
  }
  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) out.push_back(c[i] * L[i].pow(2) - c[j] * L[j].pow(2));
  return out;
}

}  // namespace

const std::vector<CorpusCase>& builtin_corpus() {
  static const std::vector<CorpusCase> corpus = [] {
    const auto reduced = MultiplicityProfile::from_pairs({{1, 10}});
    const auto rank6 = MultiplicityProfile::from_pairs({{1, 4}, {2, 3}});
    std::vector<CorpusCase> v;
    v.push_back({"cayley", parse_cubic("x0*x1*x2+x0*x1*x3+x0*x2*x3+x1*x2*x3"), DimensionClass::zero_dimensional,
                 reduced, false, cayley_points()});
    v.push_back({"fermat", parse_cubic("x0^3+x1^3+x2^3+x3^3"), DimensionClass::positive_dimensional,
                 std::nullopt, true, std::nullopt});
    const std::array<Rational, 5> c{1, 2, 3, 4, 5};
    v.push_back({"pentahedral_1_2_3_4_5", make_normal_form(Pentahedral{c}), DimensionClass::zero_dimensional,
                 reduced, false, pentahedral_points(c)});
    v.push_back({"rank6_1_1_1", make_normal_form(Rank6{{1, 1, 1}}), DimensionClass::zero_dimensional, rank6, true,
                 std::nullopt});
    v.push_back({"rank6_1_2_3", make_normal_form(Rank6{{1, 2, 3}}), DimensionClass::zero_dimensional, rank6, true,
                 std::nullopt});
    v.push_back({"alt_rank6_1_1_1", make_normal_form(AltRank6{{1, 1, 1}}), DimensionClass::zero_dimensional,
                 MultiplicityProfile::from_pairs({{1, 1}, {3, 3}}), true, std::nullopt});
    v.push_back({"singular_2_3_4", make_normal_form(SingularGeneric{{2, 3, 4}}), DimensionClass::zero_dimensional,
                 std::nullopt, false, std::nullopt});
    return v;
  }();
  return corpus;
}

bool projectively_equal(const RatMatrix& A, const RatMatrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) return false;
  // Find the scale on one nonzero entry, then compare everything.
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
      if (A(i, j) == 0 && B(i, j) == 0) continue;
      if (A(i, j) == 0 || B(i, j) == 0) return false;
      const Rational s = B(i, j) / A(i, j);
      for (Eigen::Index k = 0; k < A.rows(); ++k)
        for (Eigen::Index l = 0; l < A.cols(); ++l)
          if (A(k, l) * s != B(k, l)) return false;
      return true;
    }
  }
  return false;  // both zero
}

bool same_quadric_set(const std::vector<RatMatrix>& got, const std::vector<MultiPoly>& expected) {
  if (got.size() != expected.size()) return false;
  std::vector<bool> used(got.size(), false);
  for (const auto& q : expected) {
    const RatMatrix E = quadric_matrix(q);
    bool found = false;
    for (std::size_t k = 0; k < got.size() && !found; ++k) {
      if (!used[k] && projectively_equal(got[k], E)) used[k] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

CorpusResult run_case(const CorpusCase& c, std::uint64_t seed, unsigned retries) {
  CorpusResult r;
  r.expected = &c;
  r.report = intersection_analysis(c.cubic, seed, retries);
  const auto& rep = r.report;
  auto fail = [&](const std::string& why) {
    if (r.failure.empty()) r.failure = why;
  };
  if (rep.dimension_class != c.dimension)
    fail("dimension " + to_string(rep.dimension_class) + ", expected " + to_string(c.dimension));
  if (rep.on_hessian_discriminant != c.on_hessian_discriminant)
    fail(std::string("on_hessian_discriminant ") + (rep.on_hessian_discriminant ? "true" : "false") +
         ", expected " + (c.on_hessian_discriminant ? "true" : "false"));
  if (c.profile && (!rep.profile || *rep.profile != *c.profile))
    fail("profile " + (rep.profile ? rep.profile->to_string() : std::string("none")) + ", expected " +
         c.profile->to_string());
  if (c.points) {
    try {
      r.points = rational_points(rep, c.cubic);
      std::vector<RatMatrix> got;
      for (const auto& p : *r.points) got.push_back(p.quadric);
      if (!same_quadric_set(got, *c.points)) fail("rational points differ from the expected list");
    } catch (const std::exception& e) {
      fail(std::string("rational points: ") + e.what());
    }
  }
  r.pass = r.failure.empty();
  return r;
}

}  // namespace hk
