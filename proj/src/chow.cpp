#include "segtool/chow.hpp"

#include <sstream>

#include "segtool/error.hpp"

namespace segtool {

namespace {

void require_ambient(const ChowClass& a, const ChowClass& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorCode::ambient_mismatch,
                "classes live on P^" + std::to_string(a.ambient_dim()) + " and P^" +
                    std::to_string(b.ambient_dim()));
}

}  // namespace

ChowClass::ChowClass(int ambient_dim) : n_(ambient_dim) {
  if (ambient_dim < 0) throw Error(ErrorCode::out_of_range, "negative ambient dimension");
  coeffs_.assign(static_cast<std::size_t>(ambient_dim) + 1, Rational(0));
}

ChowClass::ChowClass(int ambient_dim, std::vector<Rational> coeffs) : ChowClass(ambient_dim) {
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i < coeffs_.size()) {
      coeffs_[i] = std::move(coeffs[i]);
    } else if (coeffs[i] != 0) {
      throw Error(ErrorCode::out_of_range, "coefficient beyond h^" + std::to_string(n_));
    }
  }
}

ChowClass ChowClass::one(int ambient_dim) { return power_of_h(ambient_dim, 0); }

ChowClass ChowClass::power_of_h(int ambient_dim, int codim, const Rational& c) {
  ChowClass r(ambient_dim);
  if (codim < 0) throw Error(ErrorCode::out_of_range, "negative codimension");
  if (codim <= ambient_dim) r.coeffs_[static_cast<std::size_t>(codim)] = c;
  return r;
}

ChowClass ChowClass::operator+(const ChowClass& other) const {
  require_ambient(*this, other);
  ChowClass r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += other.coeffs_[i];
  return r;
}

ChowClass ChowClass::operator-(const ChowClass& other) const {
  return *this + other.scaled(-1);
}

ChowClass ChowClass::scaled(const Rational& c) const {
  ChowClass r = *this;
  for (auto& a : r.coeffs_) a *= c;
  return r;
}

bool ChowClass::is_integral() const {
  for (const auto& a : coeffs_)
    if (a.get_den() != 1) return false;
  return true;
}

int ChowClass::lowest_codim() const {
  for (int i = 0; i <= n_; ++i)
    if (coeffs_[static_cast<std::size_t>(i)] != 0) return i;
  return n_ + 1;
}

std::string ChowClass::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= n_; ++i) {
    Rational c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (c < 0) c = -c;
    first = false;
    if (i == 0) {
      os << rational_string(c);
      continue;
    }
    if (c != 1) os << rational_string(c) << " ";
    os << "h";
    if (i > 1) os << "^" << i;
  }
  return first ? "0" : os.str();
}

DimIndexedClass::DimIndexedClass(std::map<int, Rational> entries) : entries_(std::move(entries)) {
  for (const auto& [d, c] : entries_)
    if (d < 0) throw Error(ErrorCode::invalid_class, "negative cycle dimension");
}

Rational DimIndexedClass::at(int dim) const {
  auto it = entries_.find(dim);
  return it == entries_.end() ? Rational(0) : it->second;
}

std::string DimIndexedClass::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    if (!first) os << ", ";
    first = false;
    os << "dim" << it->first << ": " << rational_string(it->second);
  }
  os << "}";
  return os.str();
}

ChowClass SplitBundle::chern_class(int ambient_dim) const {
  ChowClass c = ChowClass::one(ambient_dim);
  for (int d : degrees) {
    ChowClass factor = ChowClass::one(ambient_dim);
    if (ambient_dim >= 1) factor = factor + ChowClass::power_of_h(ambient_dim, 1, d);
    c = class_mul(c, factor);
  }
  return c;
}

SplitBundle SplitBundle::operator+(const SplitBundle& other) const {
  SplitBundle r = *this;
  r.degrees.insert(r.degrees.end(), other.degrees.begin(), other.degrees.end());
  return r;
}

ChowClass class_mul(const ChowClass& a, const ChowClass& b) {
  require_ambient(a, b);
  const int n = a.ambient_dim();
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) out[static_cast<std::size_t>(i + j)] += a[i] * b[j];
  }
  return ChowClass(n, std::move(out));
}

ChowClass class_inv(const ChowClass& a) {
  const int n = a.ambient_dim();
  if (a[0] == 0) throw Error(ErrorCode::non_invertible, "class with zero constant term");
  // b_0 = 1/a_0, b_k = -(1/a_0) sum_{i=1..k} a_i b_{k-i}
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1, Rational(0));
  const Rational inv0 = 1 / a[0];
  b[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    Rational s = 0;
    for (int i = 1; i <= k; ++i) s += a[i] * b[static_cast<std::size_t>(k - i)];
    b[static_cast<std::size_t>(k)] = -inv0 * s;
  }
  return ChowClass(n, std::move(b));
}

ChowClass binom_power(long k, int ambient_dim) {
  // (1+h)^k = sum_i C(k, i) h^i with generalized binomials for k < 0
  std::vector<Rational> c(static_cast<std::size_t>(ambient_dim) + 1, Rational(0));
  for (int i = 0; i <= ambient_dim; ++i) {
    if (k >= 0) {
      c[static_cast<std::size_t>(i)] = Rational(binomial(k, i));
    } else {
      // C(k, i) = (-1)^i C(i - k - 1, i)
      Integer v = binomial(static_cast<long>(i) - k - 1, i);
      c[static_cast<std::size_t>(i)] = Rational(i % 2 ? Integer(-v) : v);
    }
  }
  return ChowClass(ambient_dim, std::move(c));
}

ChowClass cap_with_bundle(const SplitBundle& bundle, const ChowClass& a) {
  return class_mul(bundle.chern_class(a.ambient_dim()), a);
}

DimIndexedClass to_dim_indexed(const ChowClass& a, int dim_x) {
  const int n = a.ambient_dim();
  if (dim_x < 0 || dim_x > n)
    throw Error(ErrorCode::invalid_class, "dimension " + std::to_string(dim_x) +
                                              " outside 0.." + std::to_string(n));
  for (int i = 0; i < n - dim_x; ++i)
    if (a[i] != 0)
      throw Error(ErrorCode::invalid_class,
                  "class " + a.to_string() + " is not supported in dimension <= " +
                      std::to_string(dim_x));
  std::map<int, Rational> entries;
  for (int d = 0; d <= dim_x; ++d) entries[d] = a[n - d];
  return DimIndexedClass(std::move(entries));
}

ChowClass from_dim_indexed(const DimIndexedClass& c, int ambient_dim) {
  ChowClass r(ambient_dim);
  for (const auto& [d, v] : c.entries()) {
    if (d > ambient_dim) {
      if (v != 0) throw Error(ErrorCode::invalid_class, "dimension exceeds the ambient space");
      continue;
    }
    r = r + ChowClass::power_of_h(ambient_dim, ambient_dim - d, v);
  }
  return r;
}

Rational class_degree(const ChowClass& a, int codim) {
  if (codim < 0 || codim > a.ambient_dim())
    throw Error(ErrorCode::out_of_range, "codimension " + std::to_string(codim) +
                                             " outside 0.." + std::to_string(a.ambient_dim()));
  return a[codim];
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace segtool
