#include "segtool/poly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "segtool/error.hpp"

namespace segtool {

Ring::Ring(std::string name, std::vector<std::string> variables)
    : name_(std::move(name)), vars_(std::move(variables)) {
  if (vars_.empty())
    throw Error(ErrorCode::invalid_argument, "ring '" + name_ + "' has no variables");
  if (vars_.size() > kMaxVars)
    throw Error(ErrorCode::unsupported,
                "ring '" + name_ + "' has more than " +
                    std::to_string(kMaxVars) + " variables");
  std::unordered_set<std::string> seen;
  for (const auto& v : vars_)
    if (!seen.insert(v).second)
      throw Error(ErrorCode::invalid_argument,
                  "duplicate variable '" + v + "' in ring '" + name_ + "'");
}

std::shared_ptr<const Ring> Ring::make(std::string name,
                                       std::vector<std::string> variables) {
  return std::make_shared<const Ring>(std::move(name), std::move(variables));
}

std::optional<std::size_t> Ring::index_of(std::string_view var) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == var) return i;
  return std::nullopt;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVars)
    throw Error(ErrorCode::unsupported, "too many variables for a monomial");
}

Monomial::Monomial(std::initializer_list<int> exps)
    : Monomial(std::span<const int>(exps.begin(), exps.size())) {}

Monomial::Monomial(std::span<const int> exps) : Monomial(exps.size()) {
  for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
}

void Monomial::set(std::size_t i, int e) {
  if (e < 0 || e > 0xffff)
    throw Error(ErrorCode::out_of_range, "monomial exponent out of range");
  degree_ = degree_ - exp_[i] + static_cast<std::uint32_t>(e);
  exp_[i] = static_cast<std::uint16_t>(e);
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const noexcept {
  Monomial r = *this;
  for (std::size_t i = 0; i < nvars_; ++i) r.exp_[i] += other.exp_[i];
  r.degree_ += other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const noexcept {
  Monomial r = *this;
  for (std::size_t i = 0; i < nvars_; ++i) r.exp_[i] -= divisor.exp_[i];
  r.degree_ -= divisor.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const noexcept {
  Monomial r(nvars_);
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < nvars_; ++i) {
    r.exp_[i] = std::max(exp_[i], other.exp_[i]);
    d += r.exp_[i];
  }
  r.degree_ = d;
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (std::size_t i = 0; i < nvars_; ++i) {
    h ^= exp_[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Orders

namespace {

// Reverse-lex tiebreak on indices [lo, hi): the monomial with the smaller
// exponent in the last differing variable is greater.
std::strong_ordering revlex(const Monomial& a, const Monomial& b, std::size_t lo,
                            std::size_t hi) noexcept {
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i])
      return a[i] < b[i] ? std::strong_ordering::greater
                         : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

int partial_degree(const Monomial& m, std::size_t lo, std::size_t hi) noexcept {
  int d = 0;
  for (std::size_t i = lo; i < hi; ++i) d += m[i];
  return d;
}

}  // namespace

std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b,
                                      const MonomialOrder& order) noexcept {
  const std::size_t n = a.size();
  switch (order.kind) {
    case MonomialOrder::Kind::grevlex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return revlex(a, b, 0, n);
    case MonomialOrder::Kind::lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
      return std::strong_ordering::equal;
    case MonomialOrder::Kind::block_elimination: {
      const std::size_t k = std::min(order.block, n);
      const int da = partial_degree(a, 0, k), db = partial_degree(b, 0, k);
      if (da != db) return da <=> db;
      if (auto c = revlex(a, b, 0, k); c != 0) return c;
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return revlex(a, b, k, n);
    }
    case MonomialOrder::Kind::local_homogenized:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      if (n > 0 && a[n - 1] != b[n - 1]) return a[n - 1] <=> b[n - 1];
      return revlex(a, b, 0, n == 0 ? 0 : n - 1);
    case MonomialOrder::Kind::weighted_last: {
      const int extra = static_cast<int>(order.block) - 1;
      const int wa = a.degree() + (n > 0 ? extra * a[n - 1] : 0);
      const int wb = b.degree() + (n > 0 ? extra * b[n - 1] : 0);
      if (wa != wb) return wa <=> wb;
      return revlex(a, b, 0, n);
    }
  }
  return std::strong_ordering::equal;
}

namespace {

struct GrevlexGreater {
  bool operator()(const Term& a, const Term& b) const noexcept {
    return monomial_compare(a.monomial, b.monomial, MonomialOrder::grevlex()) > 0;
  }
};

std::vector<Term> collect(std::unordered_map<Monomial, Rational, MonomialHash>& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, std::move(c)});
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Polynomial

void require_same_ring(const Polynomial& f, const Polynomial& g) {
  if (!same_ring(f.ring(), g.ring()))
    throw Error(ErrorCode::ring_mismatch,
                "polynomials belong to different rings ('" + f.ring()->name() +
                    "' vs '" + g.ring()->name() + "')");
}

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({Monomial(ring->num_vars()), c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Monomial m(ring->num_vars());
  m.set(index, 1);
  return from_monomial(std::move(ring), m, 1);
}

Polynomial Polynomial::from_monomial(RingPtr ring, Monomial m, const Rational& c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

int Polynomial::total_degree() const noexcept {
  // grevlex sorts by degree first
  return terms_.empty() ? -1 : terms_.front().monomial.degree();
}

int Polynomial::min_degree() const noexcept {
  return terms_.empty() ? -1 : terms_.back().monomial.degree();
}

bool Polynomial::is_homogeneous() const noexcept {
  return terms_.empty() || total_degree() == min_degree();
}

bool Polynomial::uses_variable(std::size_t index) const noexcept {
  for (const auto& t : terms_)
    if (t.monomial[index] != 0) return true;
  return false;
}

Polynomial Polynomial::homogeneous_part(int degree) const {
  Polynomial p(ring_);
  for (const auto& t : terms_)
    if (t.monomial.degree() == degree) p.terms_.push_back(t);
  return p;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != ring_->num_vars())
    throw Error(ErrorCode::invalid_argument, "point has wrong number of coordinates");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (int e = 0; e < t.monomial[i]; ++e) v *= point[i];
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_ring(*this, other);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + other.terms_.size());
  auto i = terms_.begin(), j = other.terms_.begin();
  const auto order = MonomialOrder::grevlex();
  while (i != terms_.end() && j != other.terms_.end()) {
    auto c = monomial_compare(i->monomial, j->monomial, order);
    if (c > 0) {
      r.terms_.push_back(*i++);
    } else if (c < 0) {
      r.terms_.push_back(*j++);
    } else {
      Rational s = i->coeff + j->coeff;
      if (s != 0) r.terms_.push_back({i->monomial, std::move(s)});
      ++i, ++j;
    }
  }
  r.terms_.insert(r.terms_.end(), i, terms_.end());
  r.terms_.insert(r.terms_.end(), j, other.terms_.end());
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return *this + (-other);
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  return poly_mul(*this, other);
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // multiplication by a monomial preserves grevlex order
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Rational inv = 1 / terms_.front().coeff;
  return scaled(inv);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size())
    return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) ||
        a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

std::string rational_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool wrote = false;
    if (c != 1 || t.monomial.is_one()) {
      os << rational_string(c);
      wrote = true;
    }
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      const int e = t.monomial[i];
      if (e == 0) continue;
      if (wrote) os << "*";
      os << ring_->variables()[i];
      if (e > 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

Polynomial poly_normalize(const RingPtr& ring, std::vector<RawTerm> terms) {
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  for (auto& t : terms) {
    if (!same_ring(t.ring, ring))
      throw Error(ErrorCode::ring_mismatch, "term from ring '" +
                                                (t.ring ? t.ring->name() : "?") +
                                                "' in a '" + ring->name() +
                                                "' polynomial");
    if (t.monomial.size() != ring->num_vars())
      throw Error(ErrorCode::ring_mismatch, "exponent vector length mismatch");
    t.coeff.canonicalize();
    acc[t.monomial] += t.coeff;
  }
  return Polynomial::from_sorted_terms(ring, collect(acc));
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring());
  if (g.size() == 1) return f.times_monomial(g.terms()[0].monomial, g.terms()[0].coeff);
  if (f.size() == 1) return g.times_monomial(f.terms()[0].monomial, f.terms()[0].coeff);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(f.size() * g.size());
  for (const auto& a : f.terms())
    for (const auto& b : g.terms()) acc[a.monomial * b.monomial] += a.coeff * b.coeff;
  return Polynomial::from_sorted_terms(f.ring(), collect(acc));
}

Polynomial substitute_linear(const Polynomial& f, std::span<const Polynomial> images,
                             const RingPtr& target) {
  const RingPtr& src = f.ring();
  if (images.size() != src->num_vars())
    throw Error(ErrorCode::invalid_argument,
                "substitution must assign every variable of ring '" + src->name() + "'");
  for (const auto& img : images) {
    if (!same_ring(img.ring(), target))
      throw Error(ErrorCode::ring_mismatch, "substitution image lives in another ring");
    if (img.total_degree() > 1)
      throw Error(ErrorCode::unsupported,
                  "non-linear substitution target: " + img.to_string());
  }
  // powers[i][e] = images[i]^e, filled lazily
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, int e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
    return cache[static_cast<std::size_t>(e)];
  };
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  for (const auto& t : f.terms()) {
    Polynomial prod = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < src->num_vars() && !prod.is_zero(); ++i)
      if (t.monomial[i] > 0) prod = prod * power(i, t.monomial[i]);
    for (const auto& pt : prod.terms()) acc[pt.monomial] += pt.coeff;
  }
  return Polynomial::from_sorted_terms(target, collect(acc));
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  if (g.is_zero())
    throw Error(ErrorCode::invalid_argument, "division by the zero polynomial");
  Polynomial rem = f;
  Polynomial quot(f.ring());
  const Term& lead = g.terms().front();
  while (!rem.is_zero()) {
    const Term& r = rem.terms().front();
    if (!lead.monomial.divides(r.monomial)) return std::nullopt;
    Monomial m = r.monomial / lead.monomial;
    Rational c = r.coeff / lead.coeff;
    quot = quot + Polynomial::from_monomial(f.ring(), m, c);
    rem = rem - g.times_monomial(m, c);
  }
  return quot;
}

}  // namespace segtool
