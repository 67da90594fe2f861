// hessiankit: command-line front end.
//
//   hessiankit analyze CUBIC | --file PATH
//   hessiankit invariants --pentahedral c0 c1 c2 c3 c4 | --rank6 l0 l1 l2 | --recover CUBIC
//   hessiankit corpus [--corrupt NAME]
//   hessiankit verify-theorem --samples N
//
// Global flags: --seed, --format human|json-lines, --retries.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "hessiankit/corpus.hpp"
#include "hessiankit/intersection.hpp"
#include "hessiankit/invariants.hpp"
#include "hessiankit/parse.hpp"
#include "hessiankit/pentahedron.hpp"
#include "hessiankit/theorem.hpp"

using namespace hk;
using nlohmann::ordered_json;

namespace {

struct Config {
  std::uint64_t seed = 0;
  std::string format = "human";
  unsigned retries = 8;
  bool json() const { return format == "json-lines"; }
};

void emit(const ordered_json& j) { std::cout << j.dump() << "\n"; }

std::string bool_str(bool b) { return b ? "true" : "false"; }

ordered_json profile_json(const MultiplicityProfile& p) {
  ordered_json a = ordered_json::array();
  for (const auto& [m, n] : p.entries) a.push_back({m, n});
  return a;
}

std::string vector_str(const RatVector& v) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? " : " : "") + to_string(v(i));
  return s + "]";
}

std::string quadric_str(const RatMatrix& M) { return quadric_poly(M).monic().to_string(); }

std::string read_input(const std::string& inline_text, const std::string& path) {
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  if (inline_text.empty()) throw std::runtime_error("no cubic given (pass it inline or with --file)");
  return inline_text;
}

int cmd_analyze(const Config& cfg, const Cubic& f) {
  const auto r = intersection_analysis(f, cfg.seed, cfg.retries);
  std::optional<std::vector<RationalPoint>> points;
  std::string points_note;
  if (r.dimension_class == DimensionClass::zero_dimensional) {
    try {
      points = rational_points(r, f);
    } catch (const IncompleteRationalPoints& e) {
      points_note = e.what();
    }
  }

  if (cfg.json()) {
    ordered_json j;
    j["command"] = "analyze";
    j["cubic"] = f.to_string();
    j["seed"] = cfg.seed;
    j["retries"] = cfg.retries;
    j["chart_attempts"] = r.chart_attempts;
    j["chart_seed"] = r.chart ? ordered_json(r.chart_seed) : ordered_json(nullptr);
    j["dimension"] = to_string(r.dimension_class);
    j["degree"] = r.degree ? ordered_json(*r.degree) : ordered_json(nullptr);
    j["profile"] = r.profile ? profile_json(*r.profile) : ordered_json(nullptr);
    j["radical"] = r.radical ? ordered_json(*r.radical) : ordered_json(nullptr);
    j["distinct_points"] = r.distinct_points ? ordered_json(*r.distinct_points) : ordered_json(nullptr);
    j["form_seed"] = r.form_seed ? ordered_json(*r.form_seed) : ordered_json(nullptr);
    j["form_attempts"] = r.form_attempts;
    j["on_hessian_discriminant"] = r.on_hessian_discriminant;
    if (points) {
      ordered_json pts = ordered_json::array();
      for (const auto& p : *points) {
        ordered_json t = ordered_json::array();
        for (Eigen::Index i = 0; i < 4; ++i) t.push_back(to_string(p.t(i)));
        pts.push_back({{"t", t}, {"quadric", quadric_str(p.quadric)}});
      }
      j["rational_points"] = pts;
    } else {
      j["rational_points"] = nullptr;
    }
    if (!points_note.empty()) j["rational_points_note"] = points_note;
    emit(j);
    return 0;
  }

  std::cout << "cubic: " << f.to_string() << "\n";
  std::cout << "seed: " << cfg.seed << "\n";
  std::cout << "retries: " << cfg.retries << "\n";
  std::cout << "chart_attempts: " << r.chart_attempts << "\n";
  std::cout << "dimension: " << to_string(r.dimension_class) << "\n";
  if (r.degree) std::cout << "degree: " << *r.degree << "\n";
  if (r.profile) std::cout << "profile: " << r.profile->to_string() << "\n";
  if (r.radical) std::cout << "radical: " << bool_str(*r.radical) << "\n";
  if (r.form_seed) std::cout << "separating_form: seed " << *r.form_seed << ", attempts " << r.form_attempts << "\n";
  std::cout << "on_hessian_discriminant: " << bool_str(r.on_hessian_discriminant) << "\n";
  if (points) {
    std::cout << "rational_points: " << points->size() << "\n";
    for (const auto& p : *points) std::cout << "  t = " << vector_str(p.t) << "  quadric " << quadric_str(p.quadric) << "\n";
  } else if (!points_note.empty()) {
    std::cout << "rational_points: incomplete (" << points_note << ")\n";
  }
  return 0;
}

std::array<Rational, 5> five(const std::vector<std::string>& v) {
  std::array<Rational, 5> c;
  for (std::size_t i = 0; i < 5; ++i) c[i] = parse_rational(v[i]);
  return c;
}

std::array<Rational, 3> three(const std::vector<std::string>& v) {
  std::array<Rational, 3> c;
  for (std::size_t i = 0; i < 3; ++i) c[i] = parse_rational(v[i]);
  return c;
}

template <std::size_t N>
ordered_json rationals_json(const std::array<Rational, N>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

int cmd_invariants(const Config& cfg, const std::vector<std::string>& pent, const std::vector<std::string>& rank6,
                   const std::string& recover) {
  if (!pent.empty()) {
    const auto c = five(pent);
    const auto s = sigma(c);
    const auto inv = salmon_from_pentahedral(c);
    if (cfg.json()) {
      emit({{"command", "invariants"}, {"mode", "pentahedral"}, {"seed", cfg.seed}, {"retries", cfg.retries},
            {"c", rationals_json(c)}, {"sigma", rationals_json(s)}, {"invariants", rationals_json(inv.I)}});
    } else {
      std::cout << "sigma: (" << to_string(s[0]);
      for (std::size_t i = 1; i < 5; ++i) std::cout << ", " << to_string(s[i]);
      std::cout << ")\n";
      std::cout << "invariants (I8, I16, I24, I32, I40): " << inv.to_string() << "\n";
    }
    return 0;
  }
  if (!rank6.empty()) {
    const auto l = three(rank6);
    const auto closed = rank6_closed_form(l);
    const auto limit = limit_invariants(l);
    const bool agree = wp_equal(closed, limit);
    if (cfg.json()) {
      emit({{"command", "invariants"}, {"mode", "rank6"}, {"seed", cfg.seed}, {"retries", cfg.retries},
            {"lambda", rationals_json(l)}, {"closed_form", rationals_json(closed.I)},
            {"limit", rationals_json(limit.I)}, {"limit_agrees", agree}});
    } else {
      std::cout << "closed form (I8, I16, I24, I32, I40): " << closed.to_string() << "\n";
      std::cout << "eps-limit: " << limit.to_string() << "\n";
      std::cout << "limit agrees: " << (agree ? "yes" : "no") << "\n";
    }
    return agree ? 0 : 1;
  }
  const Cubic f = parse_cubic(recover);
  const auto p = recover_pentahedron(f, cfg.seed, cfg.retries);
  const auto sc = sylvester_coefficients(p);
  const auto inv = salmon_from_pentahedral(sc);
  if (cfg.json()) {
    ordered_json planes = ordered_json::array();
    for (const auto& L : p.planes) {
      ordered_json v = ordered_json::array();
      for (Eigen::Index i = 0; i < 4; ++i) v.push_back(to_string(L(i)));
      planes.push_back(v);
    }
    emit({{"command", "invariants"}, {"mode", "recover"}, {"seed", cfg.seed}, {"retries", cfg.retries},
          {"cubic", f.to_string()}, {"planes", planes}, {"coefficients", rationals_json(p.coefficients)},
          {"sylvester_coefficients", rationals_json(sc)}, {"invariants", rationals_json(inv.I)}});
  } else {
    std::cout << "pentahedron:\n";
    for (std::size_t i = 0; i < 5; ++i)
      std::cout << "  " << to_string(p.coefficients[i]) << " * (" << linear_form(x_ring(), p.planes[i]).to_string()
                << ")^3\n";
    std::cout << "sylvester coefficients: " << rationals_json(sc).dump() << "\n";
    std::cout << "invariants (I8, I16, I24, I32, I40): " << inv.to_string() << "\n";
  }
  return 0;
}

int cmd_corpus(const Config& cfg, const std::string& corrupt) {
  std::vector<CorpusCase> cases = builtin_corpus();
  if (!corrupt.empty()) {
    auto it = std::find_if(cases.begin(), cases.end(), [&](const CorpusCase& c) { return c.name == corrupt; });
    if (it == cases.end()) throw std::runtime_error("no corpus case named " + corrupt);
    it->on_hessian_discriminant = !it->on_hessian_discriminant;
  }
  std::size_t passed = 0;
  const CorpusResult* first_failure = nullptr;
  std::vector<CorpusResult> results;
  results.reserve(cases.size());
  for (const auto& c : cases) results.push_back(run_case(c, cfg.seed, cfg.retries));
  for (const auto& r : results) {
    const auto& rep = r.report;
    if (r.pass) ++passed;
    else if (!first_failure) first_failure = &r;
    if (cfg.json()) {
      emit({{"command", "corpus"}, {"case", r.expected->name}, {"seed", cfg.seed}, {"retries", cfg.retries},
            {"dimension", to_string(rep.dimension_class)},
            {"degree", rep.degree ? ordered_json(*rep.degree) : ordered_json(nullptr)},
            {"profile", rep.profile ? profile_json(*rep.profile) : ordered_json(nullptr)},
            {"radical", rep.radical ? ordered_json(*rep.radical) : ordered_json(nullptr)},
            {"on_hessian_discriminant", rep.on_hessian_discriminant},
            {"rational_points", r.points ? ordered_json(r.points->size()) : ordered_json(nullptr)},
            {"pass", r.pass}, {"failure", r.failure}});
    } else {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.expected->name << ": " << to_string(rep.dimension_class);
      if (rep.degree) std::cout << ", degree " << *rep.degree;
      if (rep.profile) std::cout << ", profile " << rep.profile->to_string();
      std::cout << ", on_hessian_discriminant " << bool_str(rep.on_hessian_discriminant);
      if (r.points) std::cout << ", " << r.points->size() << " rational points";
      if (!r.pass) std::cout << " [" << r.failure << "]";
      std::cout << "\n";
    }
  }
  if (cfg.json()) {
    emit({{"command", "corpus"}, {"summary", true}, {"seed", cfg.seed}, {"retries", cfg.retries},
          {"passed", passed}, {"total", cases.size()}});
  } else {
    std::cout << passed << "/" << cases.size() << " pass\n";
    if (first_failure) std::cout << "first failure: " << first_failure->expected->name << "\n";
  }
  return first_failure ? 1 : 0;
}

int cmd_verify(const Config& cfg, std::size_t samples) {
  const auto rep = verify_theorem(cfg.seed, samples, samples, cfg.retries);
  for (const auto& c : rep.cases) {
    if (cfg.json()) {
      emit({{"command", "verify-theorem"}, {"case", c.index}, {"family", c.family}, {"parameters", c.parameters},
            {"seed", c.seed}, {"retries", cfg.retries},
            {"i40_zero", c.i40_zero ? ordered_json(*c.i40_zero) : ordered_json(nullptr)},
            {"on_hessian_discriminant", c.on_hessian_discriminant},
            {"profile", c.profile ? profile_json(*c.profile) : ordered_json(nullptr)},
            {"recovery_agrees", c.recovery_agrees ? ordered_json(*c.recovery_agrees) : ordered_json(nullptr)},
            {"consistent", c.consistent}, {"note", c.note}});
    } else {
      std::cout << (c.consistent ? "ok   " : "FAIL ") << "#" << c.index << " " << c.family << " [" << c.parameters
                << "] I40=0: " << (c.i40_zero ? bool_str(*c.i40_zero) : "n/a")
                << ", on_hessian_discriminant: " << bool_str(c.on_hessian_discriminant);
      if (c.profile) std::cout << ", profile " << c.profile->to_string();
      if (c.recovery_agrees) std::cout << ", recovery " << (*c.recovery_agrees ? "agrees" : "disagrees");
      if (!c.note.empty()) std::cout << " (" << c.note << ")";
      std::cout << "\n";
    }
  }
  const auto bad = rep.counterexamples();
  if (cfg.json()) {
    emit({{"command", "verify-theorem"}, {"summary", true}, {"seed", cfg.seed}, {"retries", cfg.retries},
          {"cases", rep.cases.size()}, {"counterexamples", bad.size()}, {"consistent", rep.consistent()}});
  } else {
    std::cout << "seed " << cfg.seed << ": " << rep.cases.size() - bad.size() << "/" << rep.cases.size()
              << " consistent\n";
    for (const auto* c : bad) std::cout << "counterexample: #" << c->index << " " << c->cubic.to_string() << "\n";
  }
  return rep.consistent() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hessian discriminant membership and Salmon invariants for cubic surfaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--seed", cfg.seed, "Seed for every generic choice")->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"human", "json-lines"}))
      ->capture_default_str();
  app.add_option("--retries", cfg.retries, "Attempts for coordinate changes and separating forms")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* analyze = app.add_subcommand("analyze", "Decide membership in the Hessian discriminant");
  std::string cubic_text, cubic_file;
  analyze->add_option("cubic", cubic_text, "Polynomial in x0..x3 or a coefficient map");
  analyze->add_option("--file", cubic_file, "Read the cubic from a file")->check(CLI::ExistingFile);

  auto* invariants = app.add_subcommand("invariants", "Salmon invariants in P(1,2,3,4,5)");
  std::vector<std::string> pent, rank6;
  std::string recover;
  auto* o_pent = invariants->add_option("--pentahedral", pent, "c0 c1 c2 c3 c4")->expected(5);
  auto* o_rank6 = invariants->add_option("--rank6", rank6, "lambda0 lambda1 lambda2")->expected(3);
  auto* o_recover = invariants->add_option("--recover", recover, "Cubic to decompose as a sum of five cubes");
  o_pent->excludes(o_rank6)->excludes(o_recover);
  o_rank6->excludes(o_recover);

  auto* corpus = app.add_subcommand("corpus", "Run the built-in regression corpus");
  std::string corrupt;
  corpus->add_option("--corrupt", corrupt, "Test mode: flip the expected verdict of the named case");

  auto* verify = app.add_subcommand("verify-theorem", "Check V(HD) = V(I40) on sampled cubics");
  std::size_t samples = 0;
  verify->add_option("--samples", samples, "Samples per family")->required()->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return cmd_analyze(cfg, parse_cubic(read_input(cubic_text, cubic_file)));
    if (*invariants) {
      if (pent.empty() && rank6.empty() && recover.empty())
        throw CLI::RequiredError("one of --pentahedral, --rank6, --recover");
      return cmd_invariants(cfg, pent, rank6, recover);
    }
    if (*corpus) return cmd_corpus(cfg, corrupt);
    if (*verify) return cmd_verify(cfg, samples);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
