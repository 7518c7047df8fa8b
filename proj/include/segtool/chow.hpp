#pragma once

#include <map>
#include <string>
#include <vector>

#include "segtool/poly.hpp"

namespace segtool {

/// Element of A_*(P^n) = Z[h]/(h^{n+1}) (with rational coefficients), stored
/// by codimension: coeffs()[i] is the coefficient of h^i.
class ChowClass {
 public:
  ChowClass() : ChowClass(0) {}
  explicit ChowClass(int ambient_dim);
  ChowClass(int ambient_dim, std::vector<Rational> coeffs);

  static ChowClass one(int ambient_dim);
  /// c * h^codim
  static ChowClass power_of_h(int ambient_dim, int codim, const Rational& c = 1);

  int ambient_dim() const noexcept { return n_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  const Rational& operator[](int codim) const { return coeffs_.at(static_cast<std::size_t>(codim)); }

  ChowClass operator+(const ChowClass& other) const;
  ChowClass operator-(const ChowClass& other) const;
  ChowClass scaled(const Rational& c) const;
  bool is_integral() const;
  /// Smallest codimension with a nonzero coefficient, or ambient_dim()+1.
  int lowest_codim() const;

  friend bool operator==(const ChowClass& a, const ChowClass& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

  /// "2 h - 4 h^2"; "0" for the zero class.
  std::string to_string() const;

 private:
  int n_;
  std::vector<Rational> coeffs_;
};

/// A class indexed by cycle dimension, independent of any ambient space.
class DimIndexedClass {
 public:
  DimIndexedClass() = default;
  explicit DimIndexedClass(std::map<int, Rational> entries);

  const std::map<int, Rational>& entries() const noexcept { return entries_; }
  /// Coefficient in dimension d (zero when absent).
  Rational at(int dim) const;

  friend bool operator==(const DimIndexedClass& a, const DimIndexedClass& b) {
    return a.entries_ == b.entries_;
  }

  std::string to_string() const;

 private:
  std::map<int, Rational> entries_;  // zero entries are kept only if explicit
};

/// Direct sum of line bundles O(d_1) + ... + O(d_c).
struct SplitBundle {
  std::vector<int> degrees;

  int rank() const noexcept { return static_cast<int>(degrees.size()); }
  /// prod (1 + d_j h) truncated at h^{n+1}
  ChowClass chern_class(int ambient_dim) const;
  SplitBundle operator+(const SplitBundle& other) const;
};

ChowClass class_mul(const ChowClass& a, const ChowClass& b);
ChowClass class_inv(const ChowClass& a);
/// (1 + h)^k on P^n, for any integer k.
ChowClass binom_power(long k, int ambient_dim);
ChowClass cap_with_bundle(const SplitBundle& bundle, const ChowClass& a);
/// Re-index a class supported on a dim_x-dimensional subscheme by dimension.
/// Keeps every entry 0 <= d <= dim_x, including zeros.
DimIndexedClass to_dim_indexed(const ChowClass& a, int dim_x);
/// Inverse of to_dim_indexed on P^n.
ChowClass from_dim_indexed(const DimIndexedClass& c, int ambient_dim);
Rational class_degree(const ChowClass& a, int codim);

/// Exact binomial coefficient C(n, k) with C(n, k) = 0 outside 0 <= k <= n.
Integer binomial(long n, long k);

}  // namespace segtool
