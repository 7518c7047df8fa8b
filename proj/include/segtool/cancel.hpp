#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "segtool/segre.hpp"

namespace segtool {

/// X inside a complete intersection Y inside P^n.
struct CancellationInput {
  SchemeSpec x;
  /// Degrees of the hypersurfaces cutting Y; empty means Y = P^n.
  SplitBundle y_degrees;
  int dim_x = 0;
  /// The user asserts Y is smooth along X (or locally looks like a section).
  bool hypothesis_asserted = false;
  /// Equations of Y. Enables the containment check and, for a point, the
  /// tangent-cone comparison.
  std::optional<Ideal> y;
  /// Coordinates of X when X is a rational point.
  std::optional<std::vector<Rational>> point;
};

struct CancellationReport {
  SegreResult sxz;
  DimIndexedClass sxy;
  std::optional<Integer> direct_check;
  std::optional<bool> agrees;  // set iff direct_check is
  bool hypothesis_asserted = false;
  std::vector<std::uint64_t> seeds;

  /// "cancellation value" or "formal pipeline value".
  std::string label() const;
};

/// s(X, Y) = c(N_Y P^n |_X) cap s(X, P^n), re-indexed by dimension.
CancellationReport cancel_segre(const CancellationInput& in, std::uint64_t seed,
                                const SegreOptions& options = {});

struct IndependenceReport {
  bool agree = false;
  CancellationReport first;
  CancellationReport second;
};

/// Runs the pipeline for one pair (X, Y) presented in two ambient spaces.
IndependenceReport verify_independence(const CancellationInput& a, const CancellationInput& b,
                                       std::uint64_t seed, const SegreOptions& options = {});

/// The same pair (X, Y) inside the hyperplane t = l of P^{n+1}, where t is a new
/// last coordinate and l a linear form. Y gains the equation t - l.
CancellationInput embed_in_hyperplane(const CancellationInput& in, const Polynomial& l);

struct CompositionReport {
  bool holds = false;
  ChowClass lhs;  // c(N_X Y) cap s(X, Z)
  ChowClass rhs;  // s(Y, Z) restricted to X
};

/// Flag X (dim r) in Y (dim m) in Z = P^n, each a split complete intersection
/// in the next. Both sides are pushed forward to P^n.
CompositionReport verify_composition(int r, int m, int n, const SplitBundle& degrees_y_in_z,
                                     const SplitBundle& degrees_x_in_y);

}  // namespace segtool
