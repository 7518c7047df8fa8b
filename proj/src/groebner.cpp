#include "segtool/groebner.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_map>
#include <numeric>
#include <sstream>

#include "segtool/error.hpp"

namespace segtool {

namespace {

// ---------------------------------------------------------------------------
// Fraction-free internal representation: primitive integer polynomials whose
// terms are sorted decreasingly under the working order.

struct ITerm {
  Monomial m;
  Integer c;
};
using IPoly = std::vector<ITerm>;

struct OrderedBy {
  MonomialOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    return monomial_compare(a, b, order) > 0;
  }
};

void make_primitive(IPoly& f) {
  if (f.empty()) return;
  Integer g = 0;
  for (const auto& t : f) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  if (f.front().c < 0) g = -g;
  if (g != 1)
    for (auto& t : f) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
}

IPoly to_ipoly(const Polynomial& f, const MonomialOrder& order) {
  Integer den = 1;
  for (const auto& t : f.terms())
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  IPoly out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Integer c = t.coeff.get_num() * (den / t.coeff.get_den());
    out.push_back({t.monomial, std::move(c)});
  }
  if (order != MonomialOrder::grevlex()) {
    OrderedBy cmp{order};
    std::sort(out.begin(), out.end(),
              [&](const ITerm& a, const ITerm& b) { return cmp(a.m, b.m); });
  }
  make_primitive(out);
  return out;
}

/// Monic rational polynomial, re-sorted to the canonical grevlex layout.
Polynomial to_polynomial(const IPoly& f, const RingPtr& ring) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  if (f.empty()) return Polynomial(ring);
  const Integer& lc = f.front().c;
  for (const auto& t : f) terms.push_back({t.m, Rational(t.c, lc)});
  for (auto& t : terms) t.coeff.canonicalize();
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return monomial_compare(a.monomial, b.monomial, MonomialOrder::grevlex()) > 0;
  });
  return Polynomial::from_sorted_terms(ring, std::move(terms));
}

// Returns a*f[fstart+1..] - b*m*g[1..], the leading terms being assumed to
// cancel.
IPoly combine(const IPoly& f, std::size_t fstart, const Integer& a, const Integer& b,
              const Monomial& m, const IPoly& g, const OrderedBy& greater) {
  IPoly out;
  out.reserve(f.size() - fstart + g.size());
  std::size_t i = fstart + 1, j = 1;
  Integer tmp;
  while (i < f.size() && j < g.size()) {
    Monomial gm = g[j].m * m;
    if (greater(f[i].m, gm)) {
      out.push_back({f[i].m, a * f[i].c});
      ++i;
    } else if (greater(gm, f[i].m)) {
      out.push_back({gm, -(b * g[j].c)});
      ++j;
    } else {
      tmp = a * f[i].c - b * g[j].c;
      if (tmp != 0) out.push_back({f[i].m, tmp});
      ++i, ++j;
    }
  }
  for (; i < f.size(); ++i) out.push_back({f[i].m, a * f[i].c});
  for (; j < g.size(); ++j) out.push_back({g[j].m * m, -(b * g[j].c)});
  return out;
}

struct ReducerSet {
  std::vector<const IPoly*> polys;

  const IPoly* find(const Monomial& m) const {
    const IPoly* best = nullptr;
    for (const IPoly* g : polys)
      if (g->front().m.divides(m) && (!best || g->size() < best->size())) best = g;
    return best;
  }
};

// Fraction-free reduction. With full=false only the leading term is reduced.
IPoly reduce(IPoly f, const ReducerSet& reducers, bool full, const OrderedBy& greater) {
  IPoly done;
  std::size_t start = 0;
  int steps = 0;
  while (start < f.size()) {
    const Monomial& lead = f[start].m;
    const IPoly* g = reducers.find(lead);
    if (!g) {
      if (!full) break;
      done.push_back(std::move(f[start]));
      ++start;
      continue;
    }
    Integer gcd;
    mpz_gcd(gcd.get_mpz_t(), f[start].c.get_mpz_t(), g->front().c.get_mpz_t());
    Integer a = g->front().c / gcd;
    Integer b = f[start].c / gcd;
    if (a < 0) {
      a = -a;
      b = -b;
    }
    if (a != 1)
      for (auto& t : done) t.c *= a;
    f = combine(f, start, a, b, lead / g->front().m, *g, greater);
    start = 0;
    if (++steps % 32 == 0) {
      Integer c = 0;
      for (const auto& t : done) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.c.get_mpz_t());
      for (const auto& t : f) {
        if (c == 1) break;
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.c.get_mpz_t());
      }
      if (c > 1) {
        for (auto& t : done) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
        for (auto& t : f) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
      }
    }
  }
  for (std::size_t i = start; i < f.size(); ++i) done.push_back(std::move(f[i]));
  make_primitive(done);
  return done;
}

IPoly spoly(const IPoly& f, const IPoly& g, const OrderedBy& greater) {
  const Monomial lcm = f.front().m.lcm(g.front().m);
  const Monomial mf = lcm / f.front().m;
  const Monomial mg = lcm / g.front().m;
  Integer gcd;
  mpz_gcd(gcd.get_mpz_t(), f.front().c.get_mpz_t(), g.front().c.get_mpz_t());
  const Integer a = g.front().c / gcd;
  const Integer b = f.front().c / gcd;
  // a*mf*f - b*mg*g
  IPoly lhs;
  lhs.reserve(f.size());
  for (const auto& t : f) lhs.push_back({t.m * mf, t.c});
  IPoly out = combine(lhs, 0, a, b, mg, g, greater);
  make_primitive(out);
  return out;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  int sugar;
};

class Buchberger {
 public:
  Buchberger(const MonomialOrder& order) : greater_{order} {}

  std::vector<IPoly> run(std::vector<IPoly> inputs) {
    std::sort(inputs.begin(), inputs.end(), [&](const IPoly& a, const IPoly& b) {
      return greater_(b.front().m, a.front().m);
    });
    for (auto& f : inputs) {
      IPoly r = reduce(std::move(f), reducers(), true, greater_);
      if (r.empty()) continue;
      if (r.front().m.is_one()) return {r};
      const int sugar = r.front().m.degree();
      insert(std::move(r), sugar);
    }
    while (!pairs_.empty()) {
      auto it = std::min_element(pairs_.begin(), pairs_.end(),
                                 [&](const Pair& a, const Pair& b) {
                                   if (a.sugar != b.sugar) return a.sugar < b.sugar;
                                   if (!(a.lcm == b.lcm)) return greater_(b.lcm, a.lcm);
                                   return std::tie(a.i, a.j) < std::tie(b.i, b.j);
                                 });
      Pair p = *it;
      pairs_.erase(it);
      IPoly s = spoly(polys_[p.i], polys_[p.j], greater_);
      IPoly r = reduce(std::move(s), reducers(), true, greater_);
      if (r.empty()) continue;
      if (r.front().m.is_one()) return {r};
      insert(std::move(r), p.sugar);
    }
    return interreduce();
  }

 private:
  ReducerSet reducers() const {
    ReducerSet set;
    for (std::size_t k : basis_) set.polys.push_back(&polys_[k]);
    return set;
  }

  // Gebauer-Moeller installation of a new element.
  void insert(IPoly h, int sugar) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    sugar_.push_back(sugar);
    const Monomial& lh = polys_[hi].front().m;

    std::vector<Pair> candidates;
    for (std::size_t g : basis_) {
      const Monomial& lg = polys_[g].front().m;
      const Monomial l = lh.lcm(lg);
      const int s = std::max(sugar_[hi] + l.degree() - lh.degree(),
                             sugar_[g] + l.degree() - lg.degree());
      candidates.push_back({g, hi, l, s});
    }
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& p = candidates[a];
      const bool disjoint = lh.coprime(polys_[p.i].front().m);
      bool redundant = false;
      if (!disjoint) {
        for (std::size_t b = a + 1; b < candidates.size() && !redundant; ++b)
          redundant = candidates[b].lcm.divides(p.lcm);
        for (std::size_t b = 0; b < kept.size() && !redundant; ++b)
          redundant = kept[b].lcm.divides(p.lcm);
      }
      if (!redundant) kept.push_back(p);
    }
    std::vector<Pair> next;
    for (const Pair& p : pairs_) {
      const bool drop = lh.divides(p.lcm) &&
                        !(polys_[p.i].front().m.lcm(lh) == p.lcm) &&
                        !(polys_[p.j].front().m.lcm(lh) == p.lcm);
      if (!drop) next.push_back(p);
    }
    for (const Pair& p : kept)
      if (!lh.coprime(polys_[p.i].front().m)) next.push_back(p);
    pairs_ = std::move(next);

    std::vector<std::size_t> basis;
    for (std::size_t g : basis_)
      if (!lh.divides(polys_[g].front().m)) basis.push_back(g);
    basis.push_back(hi);
    basis_ = std::move(basis);
  }

  std::vector<IPoly> interreduce() {
    std::vector<IPoly> out;
    for (std::size_t a = 0; a < basis_.size(); ++a) {
      ReducerSet others;
      for (std::size_t b = 0; b < basis_.size(); ++b)
        if (b != a) others.polys.push_back(&polys_[basis_[b]]);
      // the leading term is irreducible by minimality, so only the tail moves
      out.push_back(reduce(polys_[basis_[a]], others, true, greater_));
    }
    std::sort(out.begin(), out.end(), [&](const IPoly& a, const IPoly& b) {
      return greater_(b.front().m, a.front().m);
    });
    return out;
  }

  OrderedBy greater_;
  std::vector<IPoly> polys_;
  std::vector<int> sugar_;
  std::vector<std::size_t> basis_;
  std::vector<Pair> pairs_;
};

std::string fresh_name(const Ring& ring, const std::string& stem) {
  std::string name = stem;
  for (int k = 0; ring.index_of(name); ++k) name = stem + std::to_string(k);
  return name;
}

// Ring with one extra variable placed first.
RingPtr ring_with_leading_var(const RingPtr& ring, const std::string& stem) {
  std::vector<std::string> vars{fresh_name(*ring, stem)};
  vars.insert(vars.end(), ring->variables().begin(), ring->variables().end());
  std::string name = ring->name() + "+" + vars.front();
  return Ring::make(std::move(name), std::move(vars));
}

std::vector<int> shift_map(std::size_t n, int by) {
  std::vector<int> map(n);
  std::iota(map.begin(), map.end(), by);
  return map;
}

// Elements of an elimination basis free of the first k variables, mapped to
// `target` (whose variables are the remaining ones in order). Those elements
// are a reduced grevlex basis of the elimination ideal.
Ideal restrict_elimination(const GroebnerBasis& gb, std::size_t k, const RingPtr& target) {
  std::vector<int> map(gb.ring()->num_vars(), -1);
  for (std::size_t i = k; i < map.size(); ++i) map[i] = static_cast<int>(i - k);
  std::vector<Polynomial> kept;
  for (std::size_t e = 0; e < gb.basis().size(); ++e) {
    const Monomial& lead = gb.leading_monomial(e);
    bool free = true;
    for (std::size_t i = 0; i < k; ++i) free = free && lead[i] == 0;
    if (free) kept.push_back(remap_variables(gb.basis()[e], target, map));
  }
  return Ideal::from_basis(GroebnerBasis(target, MonomialOrder::grevlex(), std::move(kept)));
}

}  // namespace

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring_))
      throw Error(ErrorCode::ring_mismatch,
                  "generator from ring '" + g.ring()->name() + "' in ideal over '" +
                      ring_->name() + "'");
    if (g.is_zero()) continue;
    homogeneous_ = homogeneous_ && g.is_homogeneous();
    gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {std::move(one)});
}

Ideal Ideal::from_basis(const GroebnerBasis& basis) {
  if (basis.order() != MonomialOrder::grevlex())
    throw Error(ErrorCode::invalid_argument, "cached bases must be grevlex");
  Ideal ideal(basis.ring(), basis.basis());
  ideal.basis_ = std::make_shared<const GroebnerBasis>(basis);
  return ideal;
}

bool Ideal::has_unit_generator() const noexcept {
  for (const auto& g : gens_)
    if (g.is_constant()) return true;
  return false;
}

std::string Ideal::to_string() const {
  if (gens_.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

GroebnerBasis::GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<Polynomial> basis)
    : ring_(std::move(ring)), order_(order), basis_(std::move(basis)) {
  leads_.reserve(basis_.size());
  for (const auto& g : basis_) leads_.push_back(segtool::leading_monomial(g, order_));
}

bool GroebnerBasis::is_unit() const noexcept {
  return basis_.size() == 1 && basis_.front().is_constant();
}

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw Error(ErrorCode::invalid_argument, "zero polynomial has no leading term");
  const Monomial* best = &f.terms().front().monomial;
  if (order == MonomialOrder::grevlex()) return *best;
  for (const auto& t : f.terms())
    if (monomial_compare(t.monomial, *best, order) > 0) best = &t.monomial;
  return *best;
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order) {
  if (order == MonomialOrder::grevlex() && ideal.cached_basis()) return *ideal.cached_basis();
  std::vector<IPoly> inputs;
  for (const auto& g : ideal.generators()) inputs.push_back(to_ipoly(g, order));
  Buchberger engine(order);
  std::vector<IPoly> reduced = engine.run(std::move(inputs));
  std::vector<Polynomial> basis;
  basis.reserve(reduced.size());
  for (const auto& f : reduced) basis.push_back(to_polynomial(f, ideal.ring()));
  return GroebnerBasis(ideal.ring(), order, std::move(basis));
}

std::shared_ptr<const GroebnerBasis> grevlex_basis(const Ideal& ideal) {
  if (ideal.cached_basis()) return ideal.cached_basis();
  return std::make_shared<const GroebnerBasis>(buchberger(ideal));
}

// ---------------------------------------------------------------------------
// Division

namespace {

// Rational terms sorted under an arbitrary order.
std::vector<Term> sorted_terms(const Polynomial& f, const MonomialOrder& order) {
  std::vector<Term> terms = f.terms();
  if (order != MonomialOrder::grevlex())
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
      return monomial_compare(a.monomial, b.monomial, order) > 0;
    });
  return terms;
}

// f[1..] - c*m*g[1..]
std::vector<Term> subtract_multiple(const std::vector<Term>& f, const Rational& c,
                                    const Monomial& m, const std::vector<Term>& g,
                                    const MonomialOrder& order) {
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  std::size_t i = 1, j = 1;
  while (i < f.size() && j < g.size()) {
    Monomial gm = g[j].monomial * m;
    auto cmp = monomial_compare(f[i].monomial, gm, order);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, -(c * g[j].coeff)});
      ++j;
    } else {
      Rational v = f[i].coeff - c * g[j].coeff;
      if (v != 0) out.push_back({f[i].monomial, std::move(v)});
      ++i, ++j;
    }
  }
  for (; i < f.size(); ++i) out.push_back(f[i]);
  for (; j < g.size(); ++j) out.push_back({g[j].monomial * m, -(c * g[j].coeff)});
  return out;
}

}  // namespace

Division divide(const Polynomial& f, const GroebnerBasis& basis) {
  if (!same_ring(f.ring(), basis.ring()))
    throw Error(ErrorCode::ring_mismatch, "normal form across rings");
  const auto& order = basis.order();
  std::vector<std::vector<Term>> gs;
  for (const auto& g : basis.basis()) gs.push_back(sorted_terms(g, order));
  std::vector<std::vector<RawTerm>> cof(gs.size());
  std::vector<RawTerm> rem;
  std::vector<Term> cur = sorted_terms(f, order);
  while (!cur.empty()) {
    const Term& lead = cur.front();
    std::size_t k = 0;
    while (k < gs.size() && !gs[k].front().monomial.divides(lead.monomial)) ++k;
    if (k == gs.size()) {
      rem.push_back({f.ring(), lead.monomial, lead.coeff});
      cur.erase(cur.begin());
      continue;
    }
    const Monomial m = lead.monomial / gs[k].front().monomial;
    const Rational c = lead.coeff / gs[k].front().coeff;
    cof[k].push_back({f.ring(), m, c});
    cur = subtract_multiple(cur, c, m, gs[k], order);
  }
  Division d{poly_normalize(f.ring(), std::move(rem)), {}};
  for (auto& c : cof) d.cofactors.push_back(poly_normalize(f.ring(), std::move(c)));
  return d;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  return divide(f, basis).remainder;
}

bool reduces_to_zero(const Polynomial& f, const GroebnerBasis& basis) {
  if (!same_ring(f.ring(), basis.ring()))
    throw Error(ErrorCode::ring_mismatch, "membership test across rings");
  if (f.is_zero()) return true;
  if (basis.is_unit()) return true;
  OrderedBy greater{basis.order()};
  std::vector<IPoly> gs;
  for (const auto& g : basis.basis()) gs.push_back(to_ipoly(g, basis.order()));
  ReducerSet set;
  for (const auto& g : gs) set.polys.push_back(&g);
  return reduce(to_ipoly(f, basis.order()), set, false, greater).empty();
}

bool s_pairs_reduce_to_zero(const GroebnerBasis& basis) {
  const auto& order = basis.order();
  OrderedBy greater{order};
  std::vector<IPoly> gs;
  for (const auto& g : basis.basis()) gs.push_back(to_ipoly(g, order));
  ReducerSet set;
  for (const auto& g : gs) set.polys.push_back(&g);
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      if (!reduce(spoly(gs[i], gs[j], greater), set, false, greater).empty()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Ideal operations

bool is_unit_ideal(const Ideal& ideal) {
  if (ideal.has_unit_generator()) return true;
  if (ideal.is_zero()) return false;
  return grevlex_basis(ideal)->is_unit();
}

bool ideal_contains(const Ideal& big, const Ideal& small) {
  if (!same_ring(big.ring(), small.ring()))
    throw Error(ErrorCode::ring_mismatch, "ideal comparison across rings");
  if (small.is_zero()) return true;
  if (big.is_zero()) return false;
  auto gb = grevlex_basis(big);
  for (const auto& g : small.generators())
    if (!reduces_to_zero(g, *gb)) return false;
  return true;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  return ideal_contains(a, b) && ideal_contains(b, a);
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring()))
    throw Error(ErrorCode::ring_mismatch, "ideal sum across rings");
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring()))
    throw Error(ErrorCode::ring_mismatch, "ideal intersection across rings");
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
  if (is_unit_ideal(a)) return b;
  if (is_unit_ideal(b)) return a;
  // (t*a + (1-t)*b) eliminated with respect to t
  const RingPtr aux = ring_with_leading_var(a.ring(), "t");
  const auto map = shift_map(a.ring()->num_vars(), 1);
  const Polynomial t = Polynomial::variable(aux, 0);
  const Polynomial one_minus_t = Polynomial::constant(aux, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(t * remap_variables(g, aux, map));
  for (const auto& g : b.generators())
    gens.push_back(one_minus_t * remap_variables(g, aux, map));
  GroebnerBasis gb = buchberger(Ideal(aux, std::move(gens)), MonomialOrder::elimination(1));
  return restrict_elimination(gb, 1, a.ring());
}

Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::invalid_argument, "quotient by the zero polynomial");
  if (!same_ring(ideal.ring(), f.ring()))
    throw Error(ErrorCode::ring_mismatch, "quotient across rings");
  if (ideal.is_zero()) return ideal;
  auto gb = grevlex_basis(ideal);
  if (gb->is_unit() || reduces_to_zero(f, *gb)) return Ideal::unit(ideal.ring());
  Ideal meet = ideal_intersection(Ideal::from_basis(*gb), Ideal(f.ring(), {f}));
  std::vector<Polynomial> gens;
  for (const auto& g : meet.generators()) {
    auto q = divide_exact(g, f);
    if (!q) throw Error(ErrorCode::internal_consistency, "intersection element not divisible");
    gens.push_back(std::move(*q));
  }
  return Ideal::from_basis(buchberger(Ideal(ideal.ring(), std::move(gens))));
}

Ideal saturate(const Ideal& ideal, const Ideal& by) {
  if (!same_ring(ideal.ring(), by.ring()))
    throw Error(ErrorCode::ring_mismatch, "saturation across rings");
  if (by.is_zero()) throw Error(ErrorCode::invalid_argument, "saturation by the zero ideal");
  if (ideal.is_zero()) return ideal;
  const Ideal start = Ideal::from_basis(*grevlex_basis(ideal));
  std::vector<Ideal> pieces;
  for (const auto& f : by.generators()) {
    Ideal current = start;
    for (;;) {
      Ideal next = ideal_quotient(current, f);
      if (ideal_equal(next, current)) break;
      current = std::move(next);
    }
    if (!is_unit_ideal(current)) pieces.push_back(std::move(current));
  }
  if (pieces.empty()) return Ideal::unit(ideal.ring());
  Ideal result = pieces.front();
  for (std::size_t k = 1; k < pieces.size(); ++k) result = ideal_intersection(result, pieces[k]);
  return result;
}

Ideal saturate_principal(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::invalid_argument, "saturation by the zero polynomial");
  if (!same_ring(ideal.ring(), f.ring()))
    throw Error(ErrorCode::ring_mismatch, "saturation across rings");
  if (!f.is_homogeneous() || !ideal.is_homogeneous())
    throw Error(ErrorCode::inhomogeneous, "principal saturation needs homogeneous input");
  if (ideal.is_zero()) return ideal;
  if (f.is_constant()) return ideal;
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->num_vars();
  // R/I = S/(I, y - f) with deg y = deg f; y is last under weighted revlex, so
  // saturating by y means stripping y-powers off the basis.
  std::vector<std::string> names = ring->variables();
  names.push_back(fresh_name(*ring, "y"));
  const RingPtr aux = Ring::make(ring->name() + "+" + names.back(), names);
  std::vector<int> map(n);
  std::iota(map.begin(), map.end(), 0);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(remap_variables(g, aux, map));
  gens.push_back(Polynomial::variable(aux, n) - remap_variables(f, aux, map));
  const GroebnerBasis gb = buchberger(
      Ideal(aux, std::move(gens)),
      MonomialOrder::weighted_last(static_cast<std::size_t>(f.total_degree())));
  std::vector<Polynomial> fpow{Polynomial::constant(ring, 1)};
  std::vector<Polynomial> out;
  for (const auto& g : gb.basis()) {
    int strip = std::numeric_limits<int>::max();
    for (const auto& t : g.terms()) strip = std::min(strip, t.monomial[n]);
    std::unordered_map<int, std::vector<RawTerm>> by_power;
    for (const auto& t : g.terms()) {
      Monomial m(n);
      for (std::size_t v = 0; v < n; ++v) m.set(v, t.monomial[v]);
      by_power[t.monomial[n] - strip].push_back({ring, m, t.coeff});
    }
    Polynomial image(ring);
    for (auto& [e, terms] : by_power) {
      while (static_cast<int>(fpow.size()) <= e) fpow.push_back(fpow.back() * f);
      image = image + poly_normalize(ring, std::move(terms)) * fpow[static_cast<std::size_t>(e)];
    }
    out.push_back(std::move(image));
  }
  return Ideal(ring, std::move(out));
}

Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> variables) {
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->num_vars();
  std::vector<bool> drop(n, false);
  for (std::size_t v : variables) {
    if (v >= n) throw Error(ErrorCode::out_of_range, "elimination variable out of range");
    drop[v] = true;
  }
  // eliminated variables first, then the rest in their original order
  std::vector<int> map(n);
  std::vector<std::string> names;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (drop[i]) {
      map[i] = static_cast<int>(names.size());
      names.push_back(ring->variables()[i]);
      ++k;
    }
  std::vector<int> back;
  for (std::size_t i = 0; i < n; ++i)
    if (!drop[i]) {
      map[i] = static_cast<int>(names.size());
      names.push_back(ring->variables()[i]);
      back.push_back(static_cast<int>(i));
    }
  if (k == 0) return ideal;
  const RingPtr aux = Ring::make(ring->name() + "/elim", names);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(remap_variables(g, aux, map));
  GroebnerBasis gb = buchberger(Ideal(aux, std::move(gens)), MonomialOrder::elimination(k));
  std::vector<int> to_orig(n, -1);
  for (std::size_t i = 0; i < back.size(); ++i) to_orig[k + i] = back[i];
  std::vector<Polynomial> kept;
  for (std::size_t e = 0; e < gb.basis().size(); ++e) {
    const Monomial& lead = gb.leading_monomial(e);
    bool free = true;
    for (std::size_t i = 0; i < k; ++i) free = free && lead[i] == 0;
    if (free) kept.push_back(remap_variables(gb.basis()[e], ring, to_orig));
  }
  return Ideal(ring, std::move(kept));
}

Polynomial remap_variables(const Polynomial& f, const RingPtr& target,
                           std::span<const int> new_index) {
  std::vector<RawTerm> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target->num_vars());
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (new_index[i] < 0)
        throw Error(ErrorCode::invalid_argument, "remapped polynomial uses a dropped variable");
      m.set(static_cast<std::size_t>(new_index[i]), t.monomial[i]);
    }
    terms.push_back({target, m, t.coeff});
  }
  return poly_normalize(target, std::move(terms));
}

// ---------------------------------------------------------------------------
// Hilbert series of monomial ideals by pivot splitting.

namespace {

using UPoly = std::vector<Integer>;  // coefficients of t^0, t^1, ...

UPoly upoly_add(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return monomial_compare(a, b, MonomialOrder::grevlex()) < 0;
  });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& k : out)
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  return out;
}

struct MonomialListLess {
  bool operator()(const std::vector<Monomial>& a, const std::vector<Monomial>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto c = monomial_compare(a[i], b[i], MonomialOrder::lex());
      if (c != 0) return c < 0;
    }
    return false;
  }
};

class HilbertNumerator {
 public:
  explicit HilbertNumerator(std::size_t nvars) : nvars_(nvars) {}

  // Numerator N(t) of the Hilbert series N(t) / (1-t)^nvars of R/M.
  UPoly operator()(std::vector<Monomial> gens) {
    gens = minimalize(std::move(gens));
    if (auto it = memo_.find(gens); it != memo_.end()) return it->second;
    UPoly result = compute(gens);
    memo_.emplace(std::move(gens), result);
    return result;
  }

 private:
  UPoly compute(const std::vector<Monomial>& gens) {
    if (gens.empty()) return {1};
    // pairwise coprime: product of (1 - t^deg)
    std::vector<int> count(nvars_, 0);
    bool coprime = true;
    for (const auto& m : gens)
      for (std::size_t i = 0; i < nvars_; ++i)
        if (m[i] > 0 && ++count[i] > 1) coprime = false;
    if (coprime) {
      UPoly r{1};
      for (const auto& m : gens) {
        UPoly f(static_cast<std::size_t>(m.degree()) + 1);
        f[0] = 1;
        f[static_cast<std::size_t>(m.degree())] -= 1;
        r = upoly_mul(r, f);
      }
      return r;
    }
    std::size_t var = 0;
    for (std::size_t i = 1; i < nvars_; ++i)
      if (count[i] > count[var]) var = i;
    int e = 0;
    for (const auto& m : gens)
      if (m[var] > 0 && (e == 0 || m[var] < e)) e = m[var];
    Monomial pivot(nvars_);
    pivot.set(var, e);
    // N(M) = N(M + (p)) + t^deg(p) N(M : p)
    std::vector<Monomial> with = gens;
    with.push_back(pivot);
    std::vector<Monomial> colon;
    for (const auto& m : gens) {
      Monomial q = m;
      q.set(var, std::max(0, m[var] - e));
      colon.push_back(q);
    }
    UPoly shifted((*this)(std::move(colon)));
    shifted.insert(shifted.begin(), static_cast<std::size_t>(e), Integer(0));
    return upoly_add((*this)(std::move(with)), shifted);
  }

  std::size_t nvars_;
  std::map<std::vector<Monomial>, UPoly, MonomialListLess> memo_;
};

}  // namespace

AffineHilbert monomial_hilbert(std::span<const Monomial> generators, std::size_t nvars) {
  std::vector<Monomial> gens(generators.begin(), generators.end());
  for (const auto& m : gens)
    if (m.is_one()) return {};
  UPoly num = HilbertNumerator(nvars)(std::move(gens));
  // strip factors (1 - t)
  int c = 0;
  for (;;) {
    Integer at_one = 0;
    for (const auto& a : num) at_one += a;
    if (at_one != 0) {
      return {static_cast<int>(nvars) - c, at_one};
    }
    // synthetic division by (1 - t): q_i = sum_{j<=i} a_j, then negate
    UPoly q(num.size() - 1);
    Integer acc = 0;
    for (std::size_t i = 0; i + 1 < num.size(); ++i) {
      acc += num[i];
      q[i] = acc;
    }
    num = std::move(q);
    ++c;
  }
}

std::vector<Integer> hilbert_numerator(const Ideal& ideal) {
  if (!ideal.is_homogeneous())
    throw Error(ErrorCode::invalid_argument, "Hilbert data needs a homogeneous ideal");
  auto gb = grevlex_basis(ideal);
  std::vector<Monomial> leads;
  for (std::size_t i = 0; i < gb->basis().size(); ++i) {
    if (gb->leading_monomial(i).is_one()) return {};
    leads.push_back(gb->leading_monomial(i));
  }
  return HilbertNumerator(ideal.ring()->num_vars())(std::move(leads));
}

HilbertData hilbert_dim_degree(const Ideal& ideal) {
  if (!ideal.is_homogeneous())
    throw Error(ErrorCode::invalid_argument, "Hilbert data needs a homogeneous ideal");
  auto gb = grevlex_basis(ideal);
  std::vector<Monomial> leads;
  for (std::size_t i = 0; i < gb->basis().size(); ++i) leads.push_back(gb->leading_monomial(i));
  AffineHilbert h = monomial_hilbert(leads, ideal.ring()->num_vars());
  if (h.krull_dim <= 0) return {-1, 0};
  return {h.krull_dim - 1, h.multiplicity};
}

// ---------------------------------------------------------------------------
// Tangent cones

Ideal tangent_cone(const Ideal& ideal, std::span<const Rational> point) {
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->num_vars();
  if (point.size() != n)
    throw Error(ErrorCode::invalid_argument, "point has " + std::to_string(point.size()) +
                                                 " coordinates, ring has " + std::to_string(n));
  if (!ideal.is_homogeneous())
    throw Error(ErrorCode::invalid_argument, "tangent cones need a homogeneous ideal");
  std::size_t chart = n;
  for (std::size_t i = n; i-- > 0;)
    if (point[i] != 0) {
      chart = i;
      break;
    }
  if (chart == n) throw Error(ErrorCode::invalid_argument, "all point coordinates are zero");
  for (const auto& g : ideal.generators())
    if (g.evaluate(point) != 0)
      throw Error(ErrorCode::invalid_argument, "point does not lie on V(I)");

  // x_i -> x_i + (p_i/p_c) t for i != c, x_c -> t, with t appended last
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    if (i != chart) names.push_back(ring->variables()[i]);
  names.push_back(fresh_name(*ring, "t"));
  const RingPtr hom = Ring::make(ring->name() + "/chart", names);
  const Polynomial t = Polynomial::variable(hom, n - 1);
  std::vector<Polynomial> images;
  for (std::size_t i = 0, k = 0; i < n; ++i) {
    if (i == chart) {
      images.push_back(t);
      continue;
    }
    images.push_back(Polynomial::variable(hom, k++) + t.scaled(point[i] / point[chart]));
  }
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(substitute_linear(g, images, hom));
  GroebnerBasis gb = buchberger(Ideal(hom, std::move(gens)), MonomialOrder::local_homogenized());

  std::vector<std::string> cone_names(names.begin(), names.end() - 1);
  if (cone_names.empty()) cone_names.push_back("_u");
  const RingPtr cone = Ring::make(ring->name() + "/cone", cone_names);
  std::vector<int> map(n, -1);
  for (std::size_t i = 0; i + 1 < n; ++i) map[i] = static_cast<int>(i);
  std::vector<Polynomial> lowest;
  for (const auto& g : gb.basis()) {
    int top = 0;
    for (const auto& term : g.terms()) top = std::max(top, term.monomial[n - 1]);
    std::vector<RawTerm> part;
    for (const auto& term : g.terms()) {
      if (term.monomial[n - 1] != top) continue;
      Monomial m = term.monomial;
      m.set(n - 1, 0);
      Monomial mapped(cone->num_vars());
      for (std::size_t i = 0; i + 1 < n; ++i) mapped.set(i, m[i]);
      part.push_back({cone, mapped, term.coeff});
    }
    lowest.push_back(poly_normalize(cone, std::move(part)));
  }
  return Ideal(cone, std::move(lowest));
}

Integer tangent_cone_multiplicity(const Ideal& ideal, std::span<const Rational> point) {
  Ideal cone = tangent_cone(ideal, point);
  auto gb = grevlex_basis(cone);
  std::vector<Monomial> leads;
  for (std::size_t i = 0; i < gb->basis().size(); ++i) leads.push_back(gb->leading_monomial(i));
  const std::size_t nvars = point.size() > 1 ? point.size() - 1 : 1;
  AffineHilbert h = monomial_hilbert(leads, nvars);
  if (h.krull_dim < 0)
    throw Error(ErrorCode::internal_consistency, "tangent cone is the unit ideal");
  return h.multiplicity;
}

// ---------------------------------------------------------------------------
// Images

Ideal image_under_map(const Ideal& ideal, std::span<const Polynomial> forms,
                      const RingPtr& target) {
  const RingPtr& src = ideal.ring();
  if (forms.size() != target->num_vars())
    throw Error(ErrorCode::invalid_argument, "need one form per target variable");
  if (forms.empty()) throw Error(ErrorCode::invalid_argument, "no forms given");
  int degree = -1;
  for (const auto& f : forms) {
    if (!same_ring(f.ring(), src)) throw Error(ErrorCode::ring_mismatch, "form from another ring");
    if (!f.is_zero() && !f.is_homogeneous())
      throw Error(ErrorCode::invalid_argument, "map forms must be homogeneous");
    if (f.is_zero()) continue;
    if (degree < 0) degree = f.total_degree();
    if (f.total_degree() != degree)
      throw Error(ErrorCode::invalid_argument, "map forms must share one degree");
  }
  if (degree < 1) throw Error(ErrorCode::invalid_argument, "map forms must have degree >= 1");

  std::vector<Polynomial> base = ideal.generators();
  base.insert(base.end(), forms.begin(), forms.end());
  std::vector<Polynomial> irrelevant;
  for (std::size_t i = 0; i < src->num_vars(); ++i) irrelevant.push_back(Polynomial::variable(src, i));
  if (!is_unit_ideal(saturate(Ideal(src, std::move(base)), Ideal(src, std::move(irrelevant)))))
    throw Error(ErrorCode::not_a_morphism, "the forms have a common zero on V(I)");

  // graph ideal in k[source vars, target vars], then eliminate the source
  const std::size_t ns = src->num_vars(), nt = target->num_vars();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < ns; ++i) names.push_back("_s" + std::to_string(i));
  for (std::size_t j = 0; j < nt; ++j) names.push_back("_y" + std::to_string(j));
  const RingPtr graph = Ring::make("graph", names);
  const auto src_map = shift_map(ns, 0);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(remap_variables(g, graph, src_map));
  for (std::size_t j = 0; j < nt; ++j)
    gens.push_back(Polynomial::variable(graph, ns + j) - remap_variables(forms[j], graph, src_map));
  GroebnerBasis gb = buchberger(Ideal(graph, std::move(gens)), MonomialOrder::elimination(ns));
  return restrict_elimination(gb, ns, target);
}

}  // namespace segtool
