#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace segtool {

using Integer = mpz_class;
using Rational = mpq_class;

/// Upper bound on the number of variables in any ring. Elimination rings for
/// the re-embedding jobs are the largest users (source + target variables).
inline constexpr std::size_t kMaxVars = 24;

/// A named polynomial ring k[x_0, ..., x_n] over the rationals, viewed as the
/// homogeneous coordinate ring of P^n.
class Ring {
 public:
  Ring(std::string name, std::vector<std::string> variables);

  static std::shared_ptr<const Ring> make(std::string name,
                                          std::vector<std::string> variables);

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& variables() const noexcept { return vars_; }
  std::size_t num_vars() const noexcept { return vars_.size(); }
  int ambient_dim() const noexcept { return static_cast<int>(vars_.size()) - 1; }
  std::optional<std::size_t> index_of(std::string_view var) const;

  /// Structural equality: same name and same variable list.
  friend bool operator==(const Ring& a, const Ring& b) {
    return a.name_ == b.name_ && a.vars_ == b.vars_;
  }

 private:
  std::string name_;
  std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

bool same_ring(const RingPtr& a, const RingPtr& b);

/// Exponent vector with inline storage.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<int> exps);
  explicit Monomial(std::span<const int> exps);

  std::size_t size() const noexcept { return nvars_; }
  int degree() const noexcept { return static_cast<int>(degree_); }
  int operator[](std::size_t i) const noexcept { return exp_[i]; }
  void set(std::size_t i, int e);

  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;
  bool is_one() const noexcept { return degree_ == 0; }

  Monomial operator*(const Monomial& other) const noexcept;
  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const noexcept;
  Monomial lcm(const Monomial& other) const noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.nvars_ == b.nvars_ && a.exp_ == b.exp_;
  }

  std::size_t hash() const noexcept;

 private:
  std::array<std::uint16_t, kMaxVars> exp_{};
  std::uint32_t degree_ = 0;
  std::uint8_t nvars_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Monomial orders. `block_elimination(k)` compares the degree in the first k
/// variables, then grevlex inside that block, then grevlex on the rest.
/// `local_homogenized` compares total degree, then prefers the larger exponent
/// of the last variable, then grevlex on the others; with the last variable
/// as homogenizing variable it simulates a local degree order.
/// `weighted_last(w)` is grevlex after giving the last variable weight w.
struct MonomialOrder {
  enum class Kind { grevlex, lex, block_elimination, local_homogenized, weighted_last };

  Kind kind = Kind::grevlex;
  std::size_t block = 0;

  static MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
  static MonomialOrder lex() { return {Kind::lex, 0}; }
  static MonomialOrder elimination(std::size_t k) {
    return {Kind::block_elimination, k};
  }
  static MonomialOrder local_homogenized() {
    return {Kind::local_homogenized, 0};
  }

  static MonomialOrder weighted_last(std::size_t weight) {
    return {Kind::weighted_last, weight};
  }

  bool degree_compatible() const noexcept {
    return kind == Kind::grevlex || kind == Kind::local_homogenized;
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b,
                                      const MonomialOrder& order) noexcept;

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Input to poly_normalize: a term tagged with the ring it came from.
struct RawTerm {
  RingPtr ring;
  Monomial monomial;
  Rational coeff;
};

/// Sparse polynomial with nonzero rational coefficients, terms sorted in
/// decreasing grevlex order. Immutable in practice: all arithmetic returns new
/// values.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial from_monomial(RingPtr ring, Monomial m, const Rational& c);
  /// Takes ownership of terms that are already nonzero, distinct and sorted.
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// -1 for the zero polynomial.
  int total_degree() const noexcept;
  int min_degree() const noexcept;
  bool is_homogeneous() const noexcept;
  bool uses_variable(std::size_t index) const noexcept;
  /// Homogeneous component of the given degree.
  Polynomial homogeneous_part(int degree) const;

  Rational evaluate(std::span<const Rational> point) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial times_monomial(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned e) const;

  /// Scales so the grevlex-leading coefficient is 1. Zero stays zero.
  Polynomial monic() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial poly_normalize(const RingPtr& ring, std::vector<RawTerm> terms);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);

/// Substitutes images[i] for variable i of f's ring. Every image must be a
/// linear form (or constant) in the target ring.
Polynomial substitute_linear(const Polynomial& f,
                             std::span<const Polynomial> images,
                             const RingPtr& target);

/// Exact quotient f / g, or nullopt when g does not divide f.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

/// Formats a rational as "p" or "p/q".
std::string rational_string(const Rational& q);

void require_same_ring(const Polynomial& f, const Polynomial& g);

}  // namespace segtool
