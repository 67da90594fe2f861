#include "hessiankit/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "hessiankit/linalg.hpp"
#include "hessiankit/random.hpp"

namespace hk {

Ideal::Ideal(RingPtr ring, std::vector<MultiPoly> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring_)) throw RingMismatch();
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

GroebnerBasis::GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<MultiPoly> elements)
    : ring_(std::move(ring)), order_(order), elements_(std::move(elements)) {
  for (const auto& e : elements_) leads_.push_back(e.leading_term(order_).mono);
}

namespace {

using OPoly = std::vector<Term>;

struct Ctx {
  MonomialOrder order;
  std::size_t n;
  bool greater(const Monomial& a, const Monomial& b) const { return order.compare(a, b, n) > 0; }
};

OPoly to_opoly(const MultiPoly& f, const Ctx& ctx) {
  OPoly p = f.terms();
  if (ctx.order.kind != MonomialOrder::Kind::degrevlex)
    std::sort(p.begin(), p.end(), [&](const Term& a, const Term& b) { return ctx.greater(a.mono, b.mono); });
  return p;
}

MultiPoly from_opoly(const RingPtr& ring, OPoly p) { return MultiPoly(ring, std::move(p)); }

// p[pos:] - c * m * g
OPoly sub_mul(const OPoly& p, std::size_t pos, const Rational& c, const Monomial& m, const OPoly& g,
              const Ctx& ctx) {
  OPoly out;
  out.reserve(p.size() - pos + g.size());
  auto ip = p.begin() + static_cast<long>(pos);
  auto ig = g.begin();
  while (ip != p.end() || ig != g.end()) {
    if (ig == g.end()) {
      out.push_back(*ip++);
      continue;
    }
    const Monomial gm = m * ig->mono;
    if (ip == p.end() || ctx.greater(gm, ip->mono)) {
      out.push_back({gm, -c * ig->coef});
      ++ig;
    } else if (ctx.greater(ip->mono, gm)) {
      out.push_back(*ip++);
    } else {
      Rational v = ip->coef - c * ig->coef;
      if (v != 0) out.push_back({gm, std::move(v)});
      ++ip;
      ++ig;
    }
  }
  return out;
}

void make_monic(OPoly& p) {
  if (p.empty() || p.front().coef == 1) return;
  const Rational inv = Rational(1) / p.front().coef;
  for (auto& t : p) t.coef *= inv;
}

OPoly reduce(OPoly p, const std::vector<const OPoly*>& basis, const Ctx& ctx) {
  OPoly rem;
  std::size_t pos = 0;
  while (pos < p.size()) {
    const Term& lt = p[pos];
    const OPoly* div = nullptr;
    for (const OPoly* g : basis) {
      if (g->front().mono.divides(lt.mono)) {
        div = g;
        break;
      }
    }
    if (div == nullptr) {
      rem.push_back(lt);
      ++pos;
      continue;
    }
    const Rational c = lt.coef / div->front().coef;
    const Monomial m = quotient(lt.mono, div->front().mono);
    p = sub_mul(p, pos, c, m, *div, ctx);
    pos = 0;
  }
  return rem;
}

OPoly s_polynomial(const OPoly& f, const OPoly& g, const Ctx& ctx) {
  const Monomial l = lcm(f.front().mono, g.front().mono);
  const Monomial mf = quotient(l, f.front().mono);
  const Monomial mg = quotient(l, g.front().mono);
  OPoly lhs;
  lhs.reserve(f.size());
  const Rational cf = Rational(1) / f.front().coef;
  for (const auto& t : f) lhs.push_back({mf * t.mono, t.coef * cf});
  // Drop the cancelling leading terms.
  OPoly diff = sub_mul(lhs, 0, Rational(1) / g.front().coef, mg, g, ctx);
  return diff;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar = 0;
};

class Engine {
 public:
  Engine(const Ctx& ctx, BuchbergerStats* stats) : ctx_(ctx), stats_(stats) {}

  void add_generator(const OPoly& f) {
    unsigned sugar = 0;
    for (const auto& t : f) sugar = std::max(sugar, t.mono.degree());
    OPoly h = reduce(f, active_basis(), ctx_);
    if (h.empty()) return;
    make_monic(h);
    insert(std::move(h), sugar);
  }

  void run() {
    while (!pairs_.empty()) {
      auto best = pairs_.begin();
      // Sugar strategy; plain normal selection behaves badly under lex.
      for (auto it = pairs_.begin(); it != pairs_.end(); ++it) {
        if (it->sugar != best->sugar) {
          if (it->sugar < best->sugar) best = it;
          continue;
        }
        const int c = ctx_.order.compare(it->lcm, best->lcm, ctx_.n);
        if (c < 0 || (c == 0 && std::tie(it->j, it->i) < std::tie(best->j, best->i))) best = it;
      }
      const Pair p = *best;
      pairs_.erase(best);
      if (stats_) ++stats_->pairs_reduced;
      OPoly h = reduce(s_polynomial(store_[p.i], store_[p.j], ctx_), active_basis(), ctx_);
      if (h.empty()) {
        if (stats_) ++stats_->zero_reductions;
        continue;
      }
      make_monic(h);
      insert(std::move(h), p.sugar);
    }
  }

  std::vector<OPoly> reduced_basis() const {
    std::vector<OPoly> g;
    for (std::size_t k = 0; k < store_.size(); ++k)
      if (active_[k]) g.push_back(store_[k]);
    // Minimalize.
    std::vector<OPoly> minimal;
    for (std::size_t a = 0; a < g.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
        if (a == b) continue;
        const auto& la = g[a].front().mono;
        const auto& lb = g[b].front().mono;
        if (lb.divides(la) && (lb != la || b < a)) redundant = true;
      }
      if (!redundant) minimal.push_back(g[a]);
    }
    // Interreduce tails.
    std::vector<OPoly> out;
    for (std::size_t a = 0; a < minimal.size(); ++a) {
      std::vector<const OPoly*> others;
      for (std::size_t b = 0; b < minimal.size(); ++b)
        if (b != a) others.push_back(&minimal[b]);
      OPoly tail(minimal[a].begin() + 1, minimal[a].end());
      OPoly r = reduce(std::move(tail), others, ctx_);
      OPoly full{minimal[a].front()};
      full.insert(full.end(), r.begin(), r.end());
      make_monic(full);
      out.push_back(std::move(full));
    }
    std::sort(out.begin(), out.end(), [&](const OPoly& a, const OPoly& b) {
      return ctx_.greater(b.front().mono, a.front().mono);
    });
    return out;
  }

 private:
  std::vector<const OPoly*> active_basis() const {
    std::vector<const OPoly*> b;
    for (std::size_t k = 0; k < store_.size(); ++k)
      if (active_[k]) b.push_back(&store_[k]);
    return b;
  }

  // Gebauer-Moller update with the new element h.
  void insert(OPoly h_poly, unsigned sugar) {
    const std::size_t h = store_.size();
    store_.push_back(std::move(h_poly));
    active_.push_back(true);
    sugar_.push_back(sugar);
    const Monomial lh = store_[h].front().mono;

    std::vector<Pair> C;
    for (std::size_t g = 0; g < h; ++g) {
      if (!active_[g]) continue;
      const Monomial l = lcm(store_[g].front().mono, lh);
      const unsigned s = std::max(sugar_[g] + l.degree() - store_[g].front().mono.degree(),
                                  sugar + l.degree() - lh.degree());
      C.push_back({g, h, l, s});
    }
    if (stats_) stats_->pairs_considered += C.size();

    std::vector<Pair> D;
    for (std::size_t k = 0; k < C.size(); ++k) {
      const Pair& p = C[k];
      const Monomial& lg = store_[p.i].front().mono;
      bool keep = coprime(lh, lg);
      if (!keep) {
        keep = true;
        for (std::size_t q = k + 1; q < C.size() && keep; ++q)
          if (C[q].lcm.divides(p.lcm)) keep = false;
        for (const auto& d : D)
          if (keep && d.lcm.divides(p.lcm)) keep = false;
      }
      if (keep) D.push_back(p);
    }

    std::vector<Pair> next;
    for (const auto& p : pairs_) {
      const bool drop = lh.divides(p.lcm) && lcm(store_[p.i].front().mono, lh) != p.lcm &&
                        lcm(store_[p.j].front().mono, lh) != p.lcm;
      if (!drop) next.push_back(p);
    }
    for (const auto& d : D)
      if (!coprime(store_[d.i].front().mono, lh)) next.push_back(d);
    pairs_ = std::move(next);

    for (std::size_t g = 0; g < h; ++g)
      if (active_[g] && lh.divides(store_[g].front().mono)) active_[g] = false;
  }

  Ctx ctx_;
  BuchbergerStats* stats_;
  std::vector<OPoly> store_;
  std::vector<bool> active_;
  std::vector<unsigned> sugar_;
  std::vector<Pair> pairs_;
};

std::vector<OPoly> basis_opolys(const GroebnerBasis& G, const Ctx& ctx) {
  std::vector<OPoly> b;
  for (const auto& e : G.elements()) b.push_back(to_opoly(e, ctx));
  return b;
}

Monomial permute(const Monomial& m, std::span<const std::size_t> new_pos) {
  Monomial r;
  for (std::size_t i = 0; i < new_pos.size(); ++i) r.exp[new_pos[i]] = m.exp[i];
  return r;
}

MultiPoly permute(const MultiPoly& f, std::span<const std::size_t> new_pos) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) terms.push_back({permute(t.mono, new_pos), t.coef});
  return MultiPoly(f.ring(), std::move(terms));
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, BuchbergerStats* stats) {
  const Ctx ctx{order, ideal.ring()->size()};
  Engine engine(ctx, stats);
  for (const auto& g : ideal.generators()) engine.add_generator(to_opoly(g, ctx));
  engine.run();
  std::vector<MultiPoly> elems;
  for (auto& p : engine.reduced_basis()) elems.push_back(from_opoly(ideal.ring(), std::move(p)));
  return GroebnerBasis(ideal.ring(), order, std::move(elems));
}

MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& G) {
  if (!same_ring(f.ring(), G.ring())) throw RingMismatch();
  const Ctx ctx{G.order(), G.ring()->size()};
  const auto basis = basis_opolys(G, ctx);
  std::vector<const OPoly*> ptrs;
  for (const auto& b : basis) ptrs.push_back(&b);
  return from_opoly(G.ring(), reduce(to_opoly(f, ctx), ptrs, ctx));
}

bool ideal_contains(const GroebnerBasis& G, const MultiPoly& f) { return normal_form(f, G).is_zero(); }

bool satisfies_buchberger_criterion(const GroebnerBasis& G) {
  const Ctx ctx{G.order(), G.ring()->size()};
  const auto basis = basis_opolys(G, ctx);
  std::vector<const OPoly*> ptrs;
  for (const auto& b : basis) ptrs.push_back(&b);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!reduce(s_polynomial(basis[i], basis[j], ctx), ptrs, ctx).empty()) return false;
  return true;
}

Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> keep) {
  const std::size_t n = ideal.ring()->size();
  std::vector<bool> kept(n, false);
  for (auto k : keep) {
    if (k >= n) throw std::out_of_range("eliminate: variable index");
    kept[k] = true;
  }
  // Eliminated variables move to the front block.
  std::vector<std::size_t> new_pos(n), old_of_new(n);
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (!kept[i]) old_of_new[next] = i, new_pos[i] = next++;
  const std::size_t split = next;
  for (std::size_t i = 0; i < n; ++i)
    if (kept[i]) old_of_new[next] = i, new_pos[i] = next++;

  std::vector<MultiPoly> permuted;
  for (const auto& g : ideal.generators()) permuted.push_back(permute(g, new_pos));
  const auto G = buchberger(Ideal(ideal.ring(), permuted),
                            split == 0 ? MonomialOrder::degrevlex() : MonomialOrder::block(split));
  std::vector<MultiPoly> out;
  for (const auto& e : G.elements()) {
    bool free_of_eliminated = true;
    for (const auto& t : e.terms())
      for (std::size_t v = 0; v < split; ++v)
        if (t.mono.exp[v] != 0) free_of_eliminated = false;
    if (free_of_eliminated) out.push_back(permute(e, old_of_new));
  }
  return Ideal(ideal.ring(), std::move(out));
}

QuotientBasis quotient_basis(const GroebnerBasis& G) {
  const std::size_t n = G.ring()->size();
  const auto& leads = G.leading_monomials();
  QuotientBasis qb;
  if (G.is_unit()) return qb;
  for (std::size_t v = 0; v < n; ++v) {
    bool has_pure_power = false;
    for (const auto& m : leads)
      if (m.exp[v] > 0 && m.degree() == m.exp[v]) has_pure_power = true;
    if (!has_pure_power) throw PositiveDimensional();
  }
  auto standard = [&](const Monomial& m) {
    return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  std::set<Monomial> seen{Monomial{}};
  std::vector<Monomial> frontier{Monomial{}};
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier) {
      for (std::size_t v = 0; v < n; ++v) {
        Monomial c = m * Monomial::variable(v);
        if (standard(c) && seen.insert(c).second) next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  qb.monomials.assign(seen.begin(), seen.end());
  std::sort(qb.monomials.begin(), qb.monomials.end(), [&](const Monomial& a, const Monomial& b) {
    return G.order().compare(a, b, n) < 0;
  });
  return qb;
}

RatMatrix multiplication_matrix(const GroebnerBasis& G, const QuotientBasis& B, const MultiPoly& u) {
  const auto d = static_cast<Eigen::Index>(B.degree());
  std::map<Monomial, Eigen::Index> index;
  for (Eigen::Index k = 0; k < d; ++k) index[B.monomials[static_cast<std::size_t>(k)]] = k;
  RatMatrix M = RatMatrix::Zero(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    const auto prod = u * MultiPoly::monomial(G.ring(), B.monomials[static_cast<std::size_t>(j)]);
    const MultiPoly nf = normal_form(prod, G);
    for (const auto& t : nf.terms()) M(index.at(t.mono), j) = t.coef;
  }
  return M;
}

UniPoly mult_charpoly(const GroebnerBasis& G, const MultiPoly& u) {
  const auto B = quotient_basis(G);
  return charpoly(multiplication_matrix(G, B, u));
}

GroebnerBasis change_order(const GroebnerBasis& G, const MonomialOrder& target) {
  if (G.is_unit()) return GroebnerBasis(G.ring(), target, G.elements());
  const auto B = quotient_basis(G);
  const std::size_t n = G.ring()->size();
  const auto d = static_cast<Eigen::Index>(B.degree());
  std::vector<RatMatrix> mult;
  for (std::size_t v = 0; v < n; ++v) mult.push_back(multiplication_matrix(G, B, MultiPoly::variable(G.ring(), v)));
  auto greater = [&](const Monomial& a, const Monomial& b) { return target.compare(a, b, n) > 0; };

  // Walk monomials upward in the target order; each one is either new in the
  // staircase or gives a basis element through a linear dependency.
  std::map<Monomial, RatVector> coords;
  {
    const auto one = normal_form(MultiPoly::constant(G.ring(), 1), G);
    RatVector e = RatVector::Zero(d);
    for (Eigen::Index k = 0; k < d; ++k)
      if (B.monomials[static_cast<std::size_t>(k)].is_one()) e(k) = one.coefficient(Monomial{});
    coords[Monomial{}] = e;
  }
  std::vector<Monomial> candidates{Monomial{}}, staircase, leads;
  RatMatrix S(d, 0);
  std::vector<MultiPoly> elements;
  while (!candidates.empty()) {
    auto it = std::min_element(candidates.begin(), candidates.end(), [&](const Monomial& a, const Monomial& b) {
      return greater(b, a);
    });
    const Monomial m = *it;
    candidates.erase(it);
    if (std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); })) continue;
    const RatVector& v = coords.at(m);
    std::optional<RatVector> c;
    if (S.cols() == 0) {
      if (v.isZero()) c = RatVector(0);
    } else {
      c = solve_unique(S, v);
    }
    if (c) {
      std::vector<Term> terms{{m, 1}};
      for (std::size_t k = 0; k < staircase.size(); ++k)
        if ((*c)(static_cast<Eigen::Index>(k)) != 0) terms.push_back({staircase[k], -(*c)(static_cast<Eigen::Index>(k))});
      elements.emplace_back(G.ring(), std::move(terms));
      leads.push_back(m);
      continue;
    }
    staircase.push_back(m);
    S.conservativeResize(d, S.cols() + 1);
    S.col(S.cols() - 1) = v;
    for (std::size_t x = 0; x < n; ++x) {
      const Monomial next = m * Monomial::variable(x);
      if (coords.count(next)) continue;
      coords[next] = mult[x] * v;
      candidates.push_back(next);
    }
  }
  std::sort(elements.begin(), elements.end(), [&](const MultiPoly& a, const MultiPoly& b) {
    return greater(b.leading_term(target).mono, a.leading_term(target).mono);
  });
  return GroebnerBasis(G.ring(), target, std::move(elements));
}

UniPoly eliminant_by_elimination(const GroebnerBasis& G, std::size_t var) {
  if (G.is_unit()) return UniPoly::constant(1);
  const std::size_t keep[] = {var};
  const Ideal I = eliminate(Ideal(G.ring(), G.elements()), keep);
  if (I.is_zero()) throw PositiveDimensional();
  if (I.generators().size() != 1)
    throw std::logic_error("univariate elimination ideal should be principal");
  const auto& p = I.generators().front();
  std::vector<Rational> coeffs(static_cast<std::size_t>(p.total_degree()) + 1);
  for (const auto& t : p.terms()) coeffs[t.mono.exp[var]] = t.coef;
  return UniPoly(std::move(coeffs)).monic();
}

UniPoly univariate_eliminant(const GroebnerBasis& G, std::size_t var) {
  if (G.is_unit()) return UniPoly::constant(1);
  const auto B = quotient_basis(G);
  const auto d = static_cast<Eigen::Index>(B.degree());
  std::map<Monomial, Eigen::Index> index;
  for (Eigen::Index k = 0; k < d; ++k) index[B.monomials[static_cast<std::size_t>(k)]] = k;
  // Columns are the normal forms of 1, x, x^2, ...; the first linear
  // dependency gives the monic generator of I cap Q[x].
  RatMatrix K(d, 0);
  MultiPoly power = MultiPoly::constant(G.ring(), 1);
  const MultiPoly x = MultiPoly::variable(G.ring(), var);
  for (Eigen::Index k = 0; k <= d; ++k) {
    K.conservativeResize(d, k + 1);
    K.col(k).setZero();
    for (const auto& t : power.terms()) K(index.at(t.mono), k) = t.coef;
    const auto ker = rref_kernel(K);
    if (!ker.basis.empty()) {
      const auto& v = ker.basis.front();
      std::vector<Rational> coeffs(v.data(), v.data() + v.size());
      return UniPoly(std::move(coeffs)).monic();
    }
    power = normal_form(power * x, G);
  }
  throw std::logic_error("no dependency among d+1 vectors in a d-dimensional space");
}

MultiPoly seeded_linear_form(const RingPtr& ring, std::uint64_t seed, std::int64_t bound) {
  Xorshift64Star rng(seed);
  RatVector c(static_cast<Eigen::Index>(ring->size()));
  for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = Rational(rng.nonzero(-bound, bound));
  return linear_form(ring, c);
}

namespace {

MultiPoly embed_univariate(const UniPoly& p, const RingPtr& ring, std::size_t var) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k)
    if (p.coeffs()[k] != 0) terms.push_back({Monomial::variable(var, static_cast<unsigned>(k)), p.coeffs()[k]});
  return MultiPoly(ring, std::move(terms));
}

}  // namespace

RadicalityCheck check_radical_zero_dim(const GroebnerBasis& G, std::uint64_t seed, unsigned max_attempts) {
  const auto B = quotient_basis(G);  // throws PositiveDimensional
  RadicalityCheck out;
  out.radical = true;
  for (std::size_t v = 0; v < G.ring()->size(); ++v) {
    out.eliminants.push_back(univariate_eliminant(G, v));
    if (!out.eliminants.back().is_squarefree()) out.radical = false;
  }
  // A squarefree charpoly for any u certifies radicality; a radical ideal
  // yields a squarefree charpoly for every separating u.
  for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
    const auto s = derive_seed(seed, attempt);
    out.charpoly_seeds.push_back(s);
    const auto u = seeded_linear_form(G.ring(), s);
    const bool sqfree = charpoly(multiplication_matrix(G, B, u)).is_squarefree();
    if (sqfree && !out.radical)
      throw std::logic_error("radicality certificates disagree: charpoly squarefree, eliminant is not");
    if (sqfree == out.radical) return out;
    // radical but u does not separate: try another form
  }
  throw SeparationFailure(max_attempts);
}

bool is_radical_zero_dim(const GroebnerBasis& G) { return check_radical_zero_dim(G).radical; }

std::size_t count_distinct_points(const GroebnerBasis& G) {
  if (G.is_unit()) return 0;
  quotient_basis(G);  // throws PositiveDimensional
  std::vector<MultiPoly> gens = G.elements();
  for (std::size_t v = 0; v < G.ring()->size(); ++v)
    gens.push_back(embed_univariate(univariate_eliminant(G, v).squarefree_part(), G.ring(), v));
  return quotient_basis(buchberger(Ideal(G.ring(), gens), G.order())).degree();
}

std::size_t MultiplicityProfile::total_degree() const {
  std::size_t s = 0;
  for (const auto& [m, count] : entries) s += m * count;
  return s;
}

std::size_t MultiplicityProfile::point_count() const {
  std::size_t s = 0;
  for (const auto& [m, count] : entries) s += count;
  return s;
}

std::string MultiplicityProfile::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [m, count] : entries) {
    if (!first) os << ",";
    first = false;
    os << "(" << m << "," << count << ")";
  }
  os << "}";
  return os.str();
}

MultiplicityProfile MultiplicityProfile::from_pairs(
    std::initializer_list<std::pair<unsigned, std::size_t>> pairs) {
  MultiplicityProfile p;
  for (const auto& [m, c] : pairs) p.entries[m] += c;
  return p;
}

namespace {

MultiplicityProfile profile_of(const UniPoly& cp) {
  MultiplicityProfile p;
  for (const auto& f : squarefree_factorization(cp))
    p.entries[f.multiplicity] += static_cast<std::size_t>(f.factor.degree());
  return p;
}

}  // namespace

MultiplicityProfile multiplicity_profile_for(const GroebnerBasis& G, const MultiPoly& u) {
  const auto cp = mult_charpoly(G, u);
  const auto p = profile_of(cp);
  if (p.point_count() != count_distinct_points(G)) throw SeparationFailure(1);
  return p;
}

ProfileResult multiplicity_profile(const GroebnerBasis& G, std::uint64_t seed, unsigned max_attempts) {
  const auto B = quotient_basis(G);
  const std::size_t points = count_distinct_points(G);
  for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
    const auto s = derive_seed(seed, attempt);
    auto u = seeded_linear_form(G.ring(), s);
    auto cp = charpoly(multiplication_matrix(G, B, u));
    auto p = profile_of(cp);
    if (p.point_count() == points)
      return {std::move(p), std::move(u), s, attempt + 1, points, std::move(cp)};
  }
  throw SeparationFailure(max_attempts);
}

}  // namespace hk
