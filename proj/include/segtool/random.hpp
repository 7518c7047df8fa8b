#pragma once

#include <cstdint>
#include <random>

#include "segtool/poly.hpp"

namespace segtool {

/// Bound on generic integer coefficients: draws are uniform in [-kCoeffBound, kCoeffBound].
inline constexpr long kCoeffBound = 10000;

/// splitmix64 finalizer; derives independent child seeds from (seed, stream).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Deterministic source of generic choices.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  SeededRng split(std::uint64_t stream) const { return SeededRng(derive_seed(seed_, stream)); }

  long uniform(long lo, long hi);
  /// Nonzero generic coefficient.
  long coefficient();
  /// Form of the given degree with every monomial carrying a generic coefficient.
  Polynomial form(const RingPtr& ring, int degree);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// All exponent vectors of the given total degree in nvars variables, in
/// decreasing grevlex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

}  // namespace segtool
