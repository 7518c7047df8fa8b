#include "segtool/segre.hpp"

#include <algorithm>
#include <future>
#include <optional>

#include "segtool/error.hpp"
#include "segtool/random.hpp"

namespace segtool {

SchemeSpec::SchemeSpec(Ideal ideal_, std::string label_)
    : ideal(std::move(ideal_)), label(std::move(label_)) {
  if (!ideal.is_homogeneous())
    throw Error(ErrorCode::inhomogeneous, "ideal '" + label + "' is not homogeneous");
  if (ideal.is_zero())
    throw Error(ErrorCode::invalid_argument, "ideal '" + label + "' is the zero ideal");
  // also rejects irrelevant ideals such as (x, y, z) in P^2
  if (hilbert_dim_degree(ideal).projective_dim < 0)
    throw Error(ErrorCode::invalid_argument, "ideal '" + label + "' defines the empty scheme");
}

std::string method_name(SegreMethod method) {
  return method == SegreMethod::projective_degrees ? "projective-degrees" : "regular-oracle";
}

namespace {

int max_generator_degree(const Ideal& ideal) {
  int d = 0;
  for (const auto& g : ideal.generators()) d = std::max(d, g.total_degree());
  return d;
}

// sum_j c_j g_j f_j of degree d; a random scalar when deg f_j = d.
Polynomial generic_combination(const Ideal& ideal, int d, SeededRng& rng) {
  Polynomial sum(ideal.ring());
  for (const auto& f : ideal.generators()) {
    const int gap = d - f.total_degree();
    if (gap == 0)
      sum = sum + f.scaled(rng.coefficient());
    else
      sum = sum + rng.form(ideal.ring(), gap) * f;
  }
  return sum;
}

// Images of x_0..x_n under a generic parametrization of an i-plane:
// x_k = u_k for k <= i, x_k = generic linear form in u for k > i.
std::vector<Polynomial> generic_plane(const RingPtr& lambda, int n, SeededRng& rng) {
  const int i = lambda->ambient_dim();
  std::vector<Polynomial> images;
  for (int k = 0; k <= n; ++k) {
    if (k <= i) {
      images.push_back(Polynomial::variable(lambda, static_cast<std::size_t>(k)));
    } else {
      images.push_back(rng.form(lambda, 1));
    }
  }
  return images;
}

RingPtr plane_ring(int i) {
  std::vector<std::string> vars;
  for (int k = 0; k <= i; ++k) vars.push_back("u" + std::to_string(k));
  return Ring::make("plane" + std::to_string(i), std::move(vars));
}

using Series = std::vector<Integer>;  // Hilbert numerator over (1 - t)^{#vars}

// Hilbert polynomial of N_a/(1-t)^v minus that of N_b/(1-t)^v. Returns the
// constant when the difference is constant, nullopt when it grows.
std::optional<Integer> constant_difference(const Series& a, const Series& b, std::size_t v) {
  Series diff(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < a.size(); ++k) diff[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) diff[k] -= b[k];
  while (!diff.empty() && diff.back() == 0) diff.pop_back();
  std::size_t power = v;
  while (!diff.empty() && power > 0) {
    Integer at_one = 0;
    for (const auto& c : diff) at_one += c;
    if (at_one != 0) break;
    // divide by (1 - t)
    Series q(diff.size() - 1);
    Integer acc = 0;
    for (std::size_t k = 0; k + 1 < diff.size(); ++k) q[k] = acc += diff[k];
    diff = std::move(q);
    --power;
  }
  if (diff.empty() || power == 0) return Integer(0);
  if (power > 1) return std::nullopt;
  Integer at_one = 0;
  for (const auto& c : diff) at_one += c;
  return at_one;
}

// (1 - t^d)^i: numerator of a complete intersection of i forms of degree d.
Series complete_intersection_series(int i, int d) {
  Series r{1};
  for (int k = 0; k < i; ++k) {
    Series next(r.size() + static_cast<std::size_t>(d));
    for (std::size_t j = 0; j < r.size(); ++j) {
      next[j] += r[j];
      next[j + static_cast<std::size_t>(d)] -= r[j];
    }
    r = std::move(next);
  }
  return r;
}

constexpr int kMaxThickening = 6;

// Residual of V(P) outside V(J), measured without computing its ideal:
// Q_1 = P + J, Q_{k+1} = P + J Q_k stabilizes (up to saturation) exactly at
// the part of P along V(J), and the Hilbert polynomials then differ by the
// residual degree. nullopt: no stabilization within the cap; a result with
// projective_dim 1 flags a positive-dimensional residual.
std::optional<HilbertData> residual_by_thickening(const Ideal& cut, const Ideal& by, int d,
                                                  SeededRng& rng) {
  const RingPtr& ring = cut.ring();
  const std::size_t v = ring->num_vars();
  const int i = ring->ambient_dim();
  Series whole;
  bool finite = false;
  if (static_cast<int>(cut.generators().size()) == i) {
    std::vector<Polynomial> sliced = cut.generators();
    sliced.push_back(rng.form(ring, 1));
    finite = hilbert_dim_degree(Ideal(ring, std::move(sliced))).projective_dim < 0;
  }
  // finite V(P) from i equations in P^i: a complete intersection
  whole = finite ? complete_intersection_series(i, d) : hilbert_numerator(cut);

  auto thicken = [&](const std::vector<Polynomial>& extra) {
    std::vector<Polynomial> gens = cut.generators();
    gens.insert(gens.end(), extra.begin(), extra.end());
    Ideal q(ring, std::move(gens));
    q = Ideal::from_basis(*grevlex_basis(q));
    Series series = hilbert_numerator(q);
    return std::pair{std::move(q), std::move(series)};
  };
  auto [q, series] = thicken(by.generators());
  if (constant_difference(whole, series, v) == Integer(0)) return HilbertData{-1, 0};
  for (int k = 1; k <= kMaxThickening; ++k) {
    std::vector<Polynomial> products;
    for (const auto& a : q.generators())
      for (const auto& b : by.generators()) products.push_back(a * b);
    auto [next, next_series] = thicken(products);
    const bool stable = constant_difference(series, next_series, v) == Integer(0);
    q = std::move(next);
    series = std::move(next_series);
    if (!stable) continue;
    const auto residual = constant_difference(whole, series, v);
    if (!residual) return HilbertData{1, 0};
    if (*residual == 0) return HilbertData{-1, 0};
    return HilbertData{0, *residual};
  }
  return std::nullopt;
}

struct StepResult {
  Integer value;
  int retries = 0;
};

// g_i: degree of V(P_1..P_i) on a generic i-plane, away from X.
StepResult projective_degree_step(const SchemeSpec& x, int i, int d, std::uint64_t seed,
                                  int max_retries) {
  const int n = x.ambient_dim();
  const RingPtr& ring = x.ring();
  StepResult out;
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    SeededRng rng(derive_seed(derive_seed(seed, static_cast<std::uint64_t>(i)),
                              static_cast<std::uint64_t>(attempt)));
    std::vector<Polynomial> combos;
    for (int t = 0; t < i; ++t) combos.push_back(generic_combination(x.ideal, d, rng));

    RingPtr target = ring;
    std::vector<Polynomial> base = x.ideal.generators();
    if (i < n) {
      target = plane_ring(i);
      const auto images = generic_plane(target, n, rng);
      for (auto& p : combos) p = substitute_linear(p, images, target);
      for (auto& g : base) g = substitute_linear(g, images, target);
    }
    Ideal by(target, std::move(base));
    if (by.is_zero()) {
      // the plane lies inside X
      ++out.retries;
      continue;
    }
    Ideal cut(target, std::move(combos));
    auto residual = residual_by_thickening(cut, by, d, rng);
    if (!residual) {
      // A generic element of J misses the residual points, so saturating by
      // it agrees with saturating by J whenever the residual is finite.
      const Polynomial witness = generic_combination(by, d, rng);
      residual = hilbert_dim_degree(saturate_principal(cut, witness));
    }
    if (residual->projective_dim <= 0) {
      out.value = residual->degree;
      return out;
    }
    ++out.retries;
  }
  throw GenericityFailure(i, "projective degree g_" + std::to_string(i) + " of '" + x.label +
                                 "': residual scheme stayed positive-dimensional after " +
                                 std::to_string(max_retries) + " retries");
}

}  // namespace

Ideal raise_to_common_degree(const Ideal& ideal, std::uint64_t seed) {
  const int d = max_generator_degree(ideal);
  bool common = true;
  for (const auto& g : ideal.generators()) common = common && g.total_degree() == d;
  if (common) return ideal;
  SeededRng rng(seed);
  const std::size_t count = ideal.ring()->num_vars() + ideal.generators().size();
  std::vector<Polynomial> gens;
  for (std::size_t k = 0; k < count; ++k) gens.push_back(generic_combination(ideal, d, rng));
  return Ideal(ideal.ring(), std::move(gens));
}

ProjectiveDegrees projective_degrees(const SchemeSpec& x, std::uint64_t seed,
                                     const SegreOptions& options) {
  const int n = x.ambient_dim();
  ProjectiveDegrees pd;
  pd.common_degree = max_generator_degree(x.ideal);
  pd.seed = seed;
  std::vector<StepResult> steps(static_cast<std::size_t>(n) + 1);
  if (options.parallel) {
    std::vector<std::future<StepResult>> futures;
    for (int i = 0; i <= n; ++i)
      futures.push_back(std::async(std::launch::async, projective_degree_step, std::cref(x), i,
                                   pd.common_degree, seed, options.max_retries));
    // merge in index order; get() rethrows the first failure by index
    for (int i = 0; i <= n; ++i) steps[static_cast<std::size_t>(i)] = futures[static_cast<std::size_t>(i)].get();
  } else {
    for (int i = 0; i <= n; ++i)
      steps[static_cast<std::size_t>(i)] =
          projective_degree_step(x, i, pd.common_degree, seed, options.max_retries);
  }
  for (auto& s : steps) {
    pd.g.push_back(std::move(s.value));
    pd.retries_used += s.retries;
  }
  return pd;
}

ChowClass segre_from_projective_degrees(const ProjectiveDegrees& degrees, int ambient_dim) {
  const int n = ambient_dim;
  ChowClass base = ChowClass::one(n);
  if (n >= 1) base = base + ChowClass::power_of_h(n, 1, degrees.common_degree);
  const ChowClass inv = class_inv(base);
  ChowClass sum(n);
  ChowClass power = inv;  // (1 + d h)^{-(i+1)}
  for (int i = 0; i <= n && i < static_cast<int>(degrees.g.size()); ++i) {
    const Integer& g = degrees.g[static_cast<std::size_t>(i)];
    if (g != 0) sum = sum + class_mul(ChowClass::power_of_h(n, i, Rational(g)), power);
    power = class_mul(power, inv);
  }
  return ChowClass::one(n) - sum;
}

SegreResult segre_class(const SchemeSpec& x, std::uint64_t seed, const SegreOptions& options) {
  const int n = x.ambient_dim();
  SegreResult result{ChowClass(n), {}, 0, SegreMethod::projective_degrees};
  result.dim_x = hilbert_dim_degree(x.ideal).projective_dim;
  result.degrees = projective_degrees(x, seed, options);
  result.cls = segre_from_projective_degrees(result.degrees, n);
  if (!result.cls.is_integral())
    throw Error(ErrorCode::internal_consistency,
                "Segre class of '" + x.label + "' has a non-integer coefficient: " +
                    result.cls.to_string());
  if (options.check_second_seed) {
    SegreOptions once = options;
    once.check_second_seed = false;
    const ProjectiveDegrees other = projective_degrees(x, derive_seed(seed, 0x5e9e), once);
    const ChowClass again = segre_from_projective_degrees(other, n);
    if (!(again == result.cls))
      throw Error(ErrorCode::internal_consistency,
                  "Segre class of '" + x.label + "' depends on the seed: " +
                      result.cls.to_string() + " vs " + again.to_string());
    result.degrees.retries_used += other.retries_used;
  }
  return result;
}

SegreResult regular_segre_oracle(int dim_x, const Integer& deg_x, const SplitBundle& normal,
                                 int ambient_dim) {
  if (dim_x < 0 || dim_x > ambient_dim)
    throw Error(ErrorCode::out_of_range, "dimension outside 0..n");
  if (normal.rank() != ambient_dim - dim_x)
    throw Error(ErrorCode::rank_mismatch,
                "normal bundle rank " + std::to_string(normal.rank()) + " != codimension " +
                    std::to_string(ambient_dim - dim_x));
  const ChowClass fundamental = ChowClass::power_of_h(ambient_dim, ambient_dim - dim_x, Rational(deg_x));
  SegreResult r{class_mul(class_inv(normal.chern_class(ambient_dim)), fundamental), {}, dim_x,
                SegreMethod::regular_oracle};
  r.degrees.common_degree = 0;
  return r;
}

Integer point_segre_multiplicity(const SchemeSpec& y, std::span<const Rational> point) {
  return tangent_cone_multiplicity(y.ideal, point);
}

}  // namespace segtool
