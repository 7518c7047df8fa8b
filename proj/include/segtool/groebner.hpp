#pragma once

#include <memory>
#include <span>
#include <vector>

#include "segtool/poly.hpp"

namespace segtool {

class GroebnerBasis;

/// Finitely generated ideal. Zero generators are dropped on construction, so
/// the zero ideal has an empty generator list.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal unit(RingPtr ring);
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  /// Ideal generated by a reduced grevlex basis; keeps the basis cached.
  static Ideal from_basis(const GroebnerBasis& basis);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  bool is_homogeneous() const noexcept { return homogeneous_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  /// True when some generator is a nonzero constant.
  bool has_unit_generator() const noexcept;

  /// The cached grevlex basis, if this ideal was produced from one.
  const std::shared_ptr<const GroebnerBasis>& cached_basis() const noexcept {
    return basis_;
  }

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  bool homogeneous_ = true;
  std::shared_ptr<const GroebnerBasis> basis_;
};

/// Reduced Groebner basis: monic elements, no leading monomial divides another.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<Polynomial> basis);

  const RingPtr& ring() const noexcept { return ring_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<Polynomial>& basis() const noexcept { return basis_; }
  bool is_unit() const noexcept;
  bool is_zero() const noexcept { return basis_.empty(); }
  /// Leading monomial of basis element i under order().
  const Monomial& leading_monomial(std::size_t i) const { return leads_[i]; }

 private:
  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Polynomial> basis_;
  std::vector<Monomial> leads_;
};

struct HilbertData {
  int projective_dim = -1;  // -1: empty scheme
  Integer degree = 0;
};

struct Division {
  Polynomial remainder;
  std::vector<Polynomial> cofactors;  // f = sum cofactors[i] * basis[i] + remainder
};

/// Buchberger with the Gebauer-Moeller criteria and normal (sugar) selection.
GroebnerBasis buchberger(const Ideal& ideal,
                         const MonomialOrder& order = MonomialOrder::grevlex());

/// Grevlex basis, reusing the cached one when available.
std::shared_ptr<const GroebnerBasis> grevlex_basis(const Ideal& ideal);

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);
Division divide(const Polynomial& f, const GroebnerBasis& basis);
bool reduces_to_zero(const Polynomial& f, const GroebnerBasis& basis);

/// Leading monomial of f under an arbitrary order.
Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order);

/// Checks that every S-polynomial of basis pairs reduces to zero.
bool s_pairs_reduce_to_zero(const GroebnerBasis& basis);

bool ideal_contains(const Ideal& big, const Ideal& small);
bool ideal_equal(const Ideal& a, const Ideal& b);
bool is_unit_ideal(const Ideal& ideal);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
/// (I : f). Throws invalid_argument when f is zero.
Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f);
/// (I : J^inf) as the intersection over generators f of J of the stabilized
/// chains I, (I:f), (I:f^2), ...
Ideal saturate(const Ideal& ideal, const Ideal& by);
/// (I : f^inf) for homogeneous I and f, from one basis of (I, y - f) with
/// y a new last variable of weight deg f.
Ideal saturate_principal(const Ideal& ideal, const Polynomial& f);
/// I intersected with the subring not involving the given variables. The
/// result lives in the same ring.
Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> variables);

/// Projective dimension and degree of Proj(R/I) for homogeneous I.
HilbertData hilbert_dim_degree(const Ideal& ideal);

/// Numerator N(t) of the Hilbert series N(t) / (1 - t)^{#vars} of R/I, lowest
/// degree first; empty for the unit ideal.
std::vector<Integer> hilbert_numerator(const Ideal& ideal);

/// Krull dimension and multiplicity (leading Hilbert coefficient) of R/M for a
/// monomial ideal M given by generators; the zero ring reports dimension -1.
struct AffineHilbert {
  int krull_dim = -1;
  Integer multiplicity = 0;
};
AffineHilbert monomial_hilbert(std::span<const Monomial> generators, std::size_t nvars);

/// Multiplicity of the projective scheme V(I) at a rational point.
Integer tangent_cone_multiplicity(const Ideal& ideal, std::span<const Rational> point);

/// Ideal of lowest-degree forms at the point, in the affine chart that sets
/// the largest-index nonzero coordinate to one and moves the point to 0.
Ideal tangent_cone(const Ideal& ideal, std::span<const Rational> point);

/// Homogeneous ideal of the closure of the image of V(I) under the morphism
/// given by forms of one common degree. `target` must have one variable per
/// form.
Ideal image_under_map(const Ideal& ideal, std::span<const Polynomial> forms,
                      const RingPtr& target);

/// Re-indexes variables: source variable i becomes target variable
/// new_index[i]. Variables mapped to a negative index must not occur.
Polynomial remap_variables(const Polynomial& f, const RingPtr& target,
                           std::span<const int> new_index);

}  // namespace segtool
