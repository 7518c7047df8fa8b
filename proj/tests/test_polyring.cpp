#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "segtool/error.hpp"
#include "test_helpers.hpp"

using namespace segtool;
using testing::poly;

namespace {

const RingPtr R = Ring::make("P", {"x", "y", "z"});

Monomial mono(std::initializer_list<int> e) { return Monomial(e); }

}  // namespace

TEST_CASE("rationals are kept in lowest terms") {
  Rational q(2, 4);
  q.canonicalize();
  CHECK(q.get_num() == 1);
  CHECK(q.get_den() == 2);
  Rational r(-6, 3);
  r.canonicalize();
  CHECK(rational_string(r) == "-2");
  CHECK(rational_string(Rational(3, 4)) == "3/4");
}

TEST_CASE("poly_normalize") {
  const Polynomial half_x =
      poly_normalize(R, {{R, mono({1, 0, 0}), Rational(2, 4)}, {R, mono({0, 1, 0}), 0}});
  CHECK(half_x.to_string() == "1/2*x");
  CHECK(half_x.size() == 1);

  const Polynomial two_x =
      poly_normalize(R, {{R, mono({1, 0, 0}), 1}, {R, mono({1, 0, 0}), 1}});
  CHECK(two_x == poly(R, "2*x"));

  CHECK(poly_normalize(R, {}).is_zero());

  const RingPtr other = Ring::make("Q", {"x", "y", "z"});
  CHECK_THROWS_AS(poly_normalize(R, {{R, mono({1, 0, 0}), 1}, {other, mono({0, 1, 0}), 1}}),
                  Error);
  try {
    poly_normalize(R, {{other, mono({1, 0, 0}), 1}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ring_mismatch);
  }
}

TEST_CASE("poly_mul") {
  CHECK(poly(R, "x + y") * poly(R, "x - y") == poly(R, "x^2 - y^2"));
  const Polynomial f = poly(R, "3*x^2*z - 1/2*y");
  CHECK(poly_mul(f, poly(R, "1")) == f);
  CHECK(poly_mul(f, Polynomial(R)).is_zero());
  CHECK_THROWS_AS(poly_mul(f, Polynomial::variable(Ring::make("Q", {"a", "b"}), 0)), Error);
}

TEST_CASE("monomial_compare") {
  const auto grevlex = MonomialOrder::grevlex();
  const auto lex = MonomialOrder::lex();
  CHECK(monomial_compare(mono({2, 0, 0}), mono({1, 1, 0}), grevlex) > 0);
  CHECK(monomial_compare(mono({1, 0, 0}), mono({0, 2, 0}), lex) > 0);
  CHECK(monomial_compare(mono({1, 2, 3}), mono({1, 2, 3}), grevlex) == 0);
  // revlex tiebreak: the smaller last exponent wins
  CHECK(monomial_compare(mono({1, 1, 0}), mono({2, 0, 0}), lex) < 0);
  CHECK(monomial_compare(mono({0, 2, 0}), mono({1, 0, 1}), grevlex) > 0);
}

TEST_CASE("substitute_linear") {
  const Polynomial f = poly(R, "y^2*z - x^3 - x^2*z");
  std::vector<Polynomial> id = {poly(R, "x"), poly(R, "y"), poly(R, "z")};
  CHECK(substitute_linear(f, id, R) == f);

  // dehomogenize at z = 1: affine ring with a constant image for z
  const RingPtr A = Ring::make("A", {"x", "y"});
  std::vector<Polynomial> chart = {poly(A, "x"), poly(A, "y"), poly(A, "1")};
  CHECK(substitute_linear(f, chart, A) == poly(A, "y^2 - x^3 - x^2"));

  std::vector<Polynomial> shear = {poly(R, "x + y"), poly(R, "y"), poly(R, "z")};
  CHECK(substitute_linear(poly(R, "x"), shear, R) == poly(R, "x + y"));

  std::vector<Polynomial> bad = {poly(R, "x^2"), poly(R, "y"), poly(R, "z")};
  try {
    substitute_linear(f, bad, R);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unsupported);
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const Polynomial a = testing::random_poly(R, rng);
    const Polynomial b = testing::random_poly(R, rng);
    const Polynomial c = testing::random_poly(R, rng);
    REQUIRE(a * b == b * a);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a + b == b + a);
    REQUIRE((a - a).is_zero());
  }
}

TEST_CASE("poly_normalize is idempotent") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const Polynomial p = testing::random_poly(R, rng, 3, 8);
    std::vector<RawTerm> raw;
    for (const auto& t : p.terms()) raw.push_back({R, t.monomial, t.coeff});
    REQUIRE(poly_normalize(R, raw) == p);
  }
}

TEST_CASE("monomial orders are multiplicative total orders") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> e(0, 3);
  auto rand_mono = [&] { return Monomial({e(rng), e(rng), e(rng), e(rng)}); };
  for (const auto& order : {MonomialOrder::grevlex(), MonomialOrder::lex(),
                            MonomialOrder::elimination(2), MonomialOrder::weighted_last(3)}) {
    for (int i = 0; i < 2000; ++i) {
      const Monomial a = rand_mono(), b = rand_mono(), c = rand_mono();
      const auto ab = monomial_compare(a, b, order);
      REQUIRE(monomial_compare(b, a, order) == (0 <=> ab));
      REQUIRE((ab == 0) == (a == b));
      if (ab < 0 && monomial_compare(b, c, order) < 0)
        REQUIRE(monomial_compare(a, c, order) < 0);
      if (ab < 0) REQUIRE(monomial_compare(a * c, b * c, order) < 0);
    }
  }
}

TEST_CASE("exact arithmetic never rounds") {
  Polynomial p = poly(R, "1/3*x");
  Polynomial sum(R);
  for (int i = 0; i < 3; ++i) sum = sum + p;
  CHECK(sum == poly(R, "x"));
  CHECK(poly(R, "1/10*x").scaled(Rational(10)) == poly(R, "x"));
}
