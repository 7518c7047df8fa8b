#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "segtool/cancel.hpp"
#include "segtool/error.hpp"
#include "test_helpers.hpp"

using namespace segtool;
using testing::ideal;
using testing::poly;

namespace {

const RingPtr R = Ring::make("P", {"x", "y", "z"});
const RingPtr S = Ring::make("S", {"x", "y", "z", "w"});

CancellationInput input(const Ideal& x, const std::optional<Ideal>& y, std::vector<int> degs,
                        int dim, bool asserted = true,
                        std::optional<std::vector<Rational>> pt = std::nullopt) {
  return {SchemeSpec(x, "X"), SplitBundle{std::move(degs)}, dim, asserted, y, std::move(pt)};
}

DimIndexedClass dims(std::map<int, Rational> e) { return DimIndexedClass(std::move(e)); }

Polynomial sum_of_vars(const RingPtr& ring) {
  Polynomial l(ring);
  for (std::size_t i = 0; i < ring->num_vars(); ++i) l = l + Polynomial::variable(ring, i);
  return l;
}

}  // namespace

TEST_CASE("point on a smooth conic") {
  const auto rep = cancel_segre(input(ideal(R, {"y", "z"}), ideal(R, {"x*z - y^2"}), {2}, 0,
                                      true, std::vector<Rational>{1, 0, 0}),
                                0);
  CHECK(rep.sxy == dims({{0, 1}}));
  REQUIRE(rep.direct_check);
  CHECK(*rep.direct_check == 1);
  CHECK(rep.agrees == true);
  CHECK(rep.label() == "cancellation value");
}

TEST_CASE("line on the smooth quadric surface") {
  // (1+2h)(h^2 - 2h^3) = h^2, from tests/oracles/derive.py
  const auto rep =
      cancel_segre(input(ideal(S, {"z", "w"}), ideal(S, {"x*w - y*z"}), {2}, 1), 0);
  CHECK(rep.sxy == dims({{1, 1}, {0, 0}}));
  CHECK(!rep.direct_check);
  CHECK(!rep.agrees);
}

TEST_CASE("node of the nodal cubic: the formula fails without the hypothesis") {
  const auto rep = cancel_segre(input(ideal(R, {"x", "y"}), ideal(R, {"y^2*z - x^3 - x^2*z"}),
                                      {3}, 0, false, std::vector<Rational>{0, 0, 1}),
                                0);
  CHECK(rep.sxy == dims({{0, 1}}));
  REQUIRE(rep.direct_check);
  CHECK(*rep.direct_check == 2);
  CHECK(rep.sxy.at(0) != Rational(*rep.direct_check));
  CHECK(rep.agrees == false);
  CHECK(rep.label() == "formal pipeline value");
}

TEST_CASE("empty bundle re-indexes s(X, Z)") {
  const auto rep = cancel_segre(input(ideal(S, {"z", "w"}), std::nullopt, {}, 1), 0);
  CHECK(rep.sxy == dims({{1, 1}, {0, -2}}));
}

TEST_CASE("cancellation agrees with the oracle of X in Y on smooth pairs") {
  struct Case {
    Ideal x;
    Ideal y;
    std::vector<int> y_degrees;
    int dim;
    Integer deg_x;
    int c1;  // deg c_1(N_X Y)
  };
  const std::vector<Case> cases = {
      // line on quadric: c1(N_L Q) = 2 - 2
      {ideal(S, {"z", "w"}), ideal(S, {"x*w - y*z"}), {2}, 1, 1, 0},
      // conic in a plane: N = O(2)|_C has degree 4
      {ideal(S, {"w", "x*z - y^2"}), ideal(S, {"w"}), {1}, 1, 2, 4},
      // plane section of the quadric: a conic, N = O(1)|_C of degree 2
      {ideal(S, {"x*w - y*z", "x - w"}), ideal(S, {"x*w - y*z"}), {2}, 1, 2, 2},
      // line in a plane in P^3: N = O(1)|_L of degree 1
      {ideal(S, {"z", "w"}), ideal(S, {"w"}), {1}, 1, 1, 1},
  };
  for (const auto& c : cases) {
    const auto rep = cancel_segre(input(c.x, c.y, c.y_degrees, c.dim), 0);
    CHECK(rep.sxy == dims({{1, Rational(c.deg_x)}, {0, -c.c1}}));
  }
}

TEST_CASE("containment and rank errors") {
  try {
    cancel_segre(input(ideal(S, {"x", "y"}), ideal(S, {"x*w - y*z + z^2"}), {2}, 1), 0);
    FAIL("expected containment error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::containment);
  }
  try {
    cancel_segre(input(ideal(R, {"x", "y"}), std::nullopt, {1, 1, 1}, 0), 0);
    FAIL("expected rank error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::rank_mismatch);
  }
  try {
    cancel_segre(input(ideal(S, {"z", "w"}), ideal(S, {"x*w - y*z"}), {2}, 0), 0);
    FAIL("expected a dimension complaint");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_argument);
  }
}

TEST_CASE("verify_independence") {
  struct Case {
    Ideal x;
    Ideal y;
    std::vector<int> degs;
    int dim;
    std::map<int, Rational> want;
  };
  const std::vector<Case> cases = {
      {ideal(S, {"z", "w"}), ideal(S, {"x*w - y*z"}), {2}, 1, {{1, 1}, {0, 0}}},
      {ideal(R, {"y", "z"}), ideal(R, {"x*z - y^2"}), {2}, 0, {{0, 1}}},
      {ideal(R, {"x*z - y^2"}), ideal(R, {"x*z - y^2"}), {2}, 1, {{1, 2}, {0, 0}}},
  };
  for (const auto& c : cases) {
    const CancellationInput a = input(c.x, c.y, c.degs, c.dim);
    const CancellationInput b = embed_in_hyperplane(a, sum_of_vars(c.x.ring()));
    CHECK(b.x.ambient_dim() == a.x.ambient_dim() + 1);
    CHECK(b.y_degrees.rank() == a.y_degrees.rank() + 1);
    const auto rep = verify_independence(a, b, 0);
    CHECK(rep.agree);
    CHECK(rep.first.sxy == dims(c.want));
    CHECK(rep.second.sxy == dims(c.want));
  }
  // (1+3h+2h^2)(h^3 - 3h^4) = h^3 on P^4, from tests/oracles/derive.py
  const CancellationInput a = input(ideal(S, {"z", "w"}), ideal(S, {"x*w - y*z"}), {2}, 1);
  const auto rep = verify_independence(a, embed_in_hyperplane(a, sum_of_vars(S)), 0);
  CHECK(rep.second.sxz.cls == ChowClass(4, {0, 0, 0, 1, -3}));

  CancellationInput other = a;
  other.dim_x = 0;
  try {
    verify_independence(a, other, 0);
    FAIL("expected invalid comparison");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_comparison);
  }
}

TEST_CASE("verify_composition") {
  const auto flag = verify_composition(1, 2, 4, SplitBundle{{1, 1}}, SplitBundle{{1}});
  CHECK(flag.holds);
  CHECK(flag.lhs == ChowClass(4, {0, 0, 0, 1, -2}));
  CHECK(verify_composition(2, 2, 4, SplitBundle{{2, 1}}, SplitBundle{}).holds);
  CHECK(verify_composition(1, 3, 3, SplitBundle{}, SplitBundle{{1, 1}}).holds);
  for (int n = 0; n <= 5; ++n)
    for (int m = 0; m <= n; ++m)
      for (int r = 0; r <= m; ++r)
        REQUIRE(verify_composition(r, m, n, SplitBundle{std::vector<int>(n - m, 2)},
                                   SplitBundle{std::vector<int>(m - r, 2)})
                    .holds);
  try {
    verify_composition(1, 2, 4, SplitBundle{{1}}, SplitBundle{{1}});
    FAIL("expected rank mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::rank_mismatch);
  }
}
