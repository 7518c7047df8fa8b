#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "segtool/chow.hpp"
#include "segtool/groebner.hpp"

namespace segtool {

/// A proper, nonempty subscheme X of P^n given by a homogeneous ideal.
struct SchemeSpec {
  Ideal ideal;
  std::string label;

  /// Validates: homogeneous, neither zero nor the unit ideal.
  SchemeSpec(Ideal ideal, std::string label);

  const RingPtr& ring() const noexcept { return ideal.ring(); }
  int ambient_dim() const noexcept { return ideal.ring()->ambient_dim(); }
};

struct ProjectiveDegrees {
  int common_degree = 1;
  std::vector<Integer> g;  // g_0 .. g_n
  std::uint64_t seed = 0;
  int retries_used = 0;
};

enum class SegreMethod { projective_degrees, regular_oracle };

struct SegreResult {
  ChowClass cls;  // pushforward of s(X, P^n) to P^n
  ProjectiveDegrees degrees;
  int dim_x = 0;
  SegreMethod method = SegreMethod::projective_degrees;
};

struct SegreOptions {
  int max_retries = 5;
  bool parallel = true;
  /// Recompute with a derived seed and require an identical class.
  bool check_second_seed = true;
};

/// Generic combinations sum_j c_j g_j f_j of common degree max deg f_j, with
/// g_j random forms of degree d - deg f_j. Returns the generators unchanged
/// when they already share one degree; otherwise n+1+k combinations.
Ideal raise_to_common_degree(const Ideal& ideal, std::uint64_t seed);

ProjectiveDegrees projective_degrees(const SchemeSpec& x, std::uint64_t seed,
                                     const SegreOptions& options = {});

/// s(X, P^n) = 1 - sum_i g_i h^i (1 + d h)^{-(i+1)}.
ChowClass segre_from_projective_degrees(const ProjectiveDegrees& degrees, int ambient_dim);

SegreResult segre_class(const SchemeSpec& x, std::uint64_t seed,
                        const SegreOptions& options = {});

/// c(N)^{-1} cap [X] for a regular embedding with split normal bundle N.
SegreResult regular_segre_oracle(int dim_x, const Integer& deg_x, const SplitBundle& normal,
                                 int ambient_dim);

/// Multiplicity of Y at a rational point, via its tangent cone.
Integer point_segre_multiplicity(const SchemeSpec& y, std::span<const Rational> point);

std::string method_name(SegreMethod method);

}  // namespace segtool
