#include "segtool/random.hpp"

#include <algorithm>

namespace segtool {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

long SeededRng::uniform(long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  return dist(engine_);
}

long SeededRng::coefficient() {
  long c = 0;
  while (c == 0) c = uniform(-kCoeffBound, kCoeffBound);
  return c;
}

Polynomial SeededRng::form(const RingPtr& ring, int degree) {
  std::vector<Term> terms;
  for (auto& m : monomials_of_degree(ring->num_vars(), degree))
    terms.push_back({std::move(m), Rational(coefficient())});
  return Polynomial::from_sorted_terms(ring, std::move(terms));
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  std::vector<int> exps(nvars, 0);
  // enumerate compositions of degree into nvars parts
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == nvars) {
      exps[i] = left;
      out.emplace_back(std::span<const int>(exps));
      return;
    }
    for (int e = left; e >= 0; --e) {
      exps[i] = e;
      self(self, i + 1, left - e);
    }
  };
  if (nvars > 0 && degree >= 0) rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return monomial_compare(a, b, MonomialOrder::grevlex()) > 0;
  });
  return out;
}

}  // namespace segtool
