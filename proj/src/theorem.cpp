#include "hessiankit/theorem.hpp"

#include <sstream>

#include "hessiankit/intersection.hpp"
#include "hessiankit/invariants.hpp"
#include "hessiankit/random.hpp"

namespace hk {

namespace {

constexpr std::uint64_t kRank6Stream = 1u << 20;
constexpr std::uint64_t kSpotStream = 1u << 21;

template <std::size_t N>
std::string join(const std::array<Rational, N>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < N; ++i) os << (i ? " " : "") << to_string(v[i]);
  return os.str();
}

std::string describe(const Pentahedron& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < 5; ++i) {
    os << (i ? " + " : "") << to_string(p.coefficients[i]) << "*(";
    for (Eigen::Index j = 0; j < 4; ++j) os << (j ? "," : "") << to_string(p.planes[i](j));
    os << ")^3";
  }
  return os.str();
}

void analyze_into(TheoremCase& c, unsigned retries) {
  const auto r = intersection_analysis(c.cubic, c.seed, retries);
  c.on_hessian_discriminant = r.on_hessian_discriminant;
  c.profile = r.profile;
}

}  // namespace

bool TheoremReport::consistent() const {
  for (const auto& c : cases)
    if (!c.consistent) return false;
  return true;
}

std::vector<const TheoremCase*> TheoremReport::counterexamples() const {
  std::vector<const TheoremCase*> out;
  for (const auto& c : cases)
    if (!c.consistent) out.push_back(&c);
  return out;
}

Pentahedron random_pentahedron(std::uint64_t seed) {
  Xorshift64Star rng(seed);
  Pentahedron p;
  for (;;) {
    for (auto& plane : p.planes) {
      plane.resize(4);
      for (Eigen::Index j = 0; j < 4; ++j) plane(j) = Rational(rng.uniform(-5, 5));
    }
    try {
      check_general_position(p.planes);
      break;
    } catch (const std::invalid_argument&) {
    }
  }
  for (auto& c : p.coefficients) c = rng.nonzero_rational(9, 4);
  return p;
}

std::array<Rational, 3> random_lambda(std::uint64_t seed) {
  Xorshift64Star rng(seed);
  return {rng.nonzero_rational(9, 4), rng.nonzero_rational(9, 4), rng.nonzero_rational(9, 4)};
}

TheoremReport verify_theorem(std::uint64_t seed, std::size_t n_pentahedral, std::size_t n_rank6, unsigned retries) {
  if (n_pentahedral == 0 || n_rank6 == 0) throw std::invalid_argument("sample counts must be positive");
  TheoremReport report;
  report.seed = seed;
  const auto reduced10 = MultiplicityProfile::from_pairs({{1, 10}});
  const auto rank6_profile = MultiplicityProfile::from_pairs({{1, 4}, {2, 3}});

  auto run = [&](TheoremCase c, auto&& body) {
    c.index = report.cases.size();
    try {
      body(c);
    } catch (const std::exception& e) {
      c.consistent = false;
      c.note = e.what();
    }
    report.cases.push_back(std::move(c));
  };

  for (std::size_t k = 0; k < n_pentahedral; ++k) {
    TheoremCase c;
    c.family = "pentahedral";
    c.seed = derive_seed(seed, k);
    run(std::move(c), [&](TheoremCase& c) {
      const Pentahedron p = random_pentahedron(c.seed);
      c.parameters = describe(p);
      c.cubic = p.cubic();
      const auto inv = pentahedron_invariants(p);
      c.i40_zero = inv.I[4] == 0;
      analyze_into(c, retries);
      c.consistent = !*c.i40_zero && !c.on_hessian_discriminant && c.profile == reduced10;
      try {
        c.recovery_agrees = wp_equal(pentahedron_invariants(recover_pentahedron(c.cubic, c.seed, retries)), inv);
      } catch (const NotPentahedralRational& e) {
        c.recovery_agrees = false;
        c.note = e.what();
      }
    });
  }

  for (std::size_t k = 0; k < n_rank6; ++k) {
    TheoremCase c;
    c.family = "rank6";
    c.seed = derive_seed(seed, kRank6Stream + k);
    run(std::move(c), [&](TheoremCase& c) {
      const auto lambda = random_lambda(c.seed);
      c.parameters = join(lambda);
      c.cubic = make_normal_form(Rank6{lambda});
      c.i40_zero = limit_invariants(lambda).I[4] == 0;
      analyze_into(c, retries);
      c.consistent = *c.i40_zero && c.on_hessian_discriminant && c.profile == rank6_profile;
    });
  }

  {
    TheoremCase c;
    c.family = "fermat_type";
    c.seed = derive_seed(seed, kSpotStream);
    run(std::move(c), [&](TheoremCase& c) {
      const std::array<Rational, 5> coeffs{1, 1, 1, 1, 0};
      c.parameters = join(coeffs);
      c.cubic = make_normal_form(Pentahedral{coeffs});
      c.i40_zero = salmon_from_pentahedral(coeffs).I[4] == 0;
      analyze_into(c, retries);
      c.consistent = *c.i40_zero && c.on_hessian_discriminant;
    });
  }
  {
    TheoremCase c;
    c.family = "singular_generic";
    c.seed = derive_seed(seed, kSpotStream + 1);
    run(std::move(c), [&](TheoremCase& c) {
      const std::array<Rational, 3> rho{2, 3, 4};
      c.parameters = join(rho);
      c.cubic = make_normal_form(SingularGeneric{rho});
      analyze_into(c, retries);
      c.consistent = !c.on_hessian_discriminant;
    });
  }
  return report;
}

}  // namespace hk
