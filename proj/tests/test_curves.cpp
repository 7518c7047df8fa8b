#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "segtool/curves.hpp"
#include "segtool/error.hpp"

using namespace segtool;

TEST_CASE("rkf_multiplicity") {
  CHECK(rkf_multiplicity({3, 2, 1, 1, {}}) == 2);
  CHECK(rkf_multiplicity({3, 2, 1, 2, {}}) == 4);
  for (long p = 0; p <= 6; ++p)
    for (long d = 0; d <= p; ++d) CHECK(rkf_multiplicity({p, d, 0, 1, {}}) == 1);
  try {
    rkf_multiplicity({1, 5, 1, 1, {}});
    FAIL("expected out of range");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::out_of_range);
  }
}

TEST_CASE("generalized_rkf_class") {
  CHECK(generalized_rkf_class({3, 2, 1, 2, {}}) == ChowClass(1, {2, 4}));
  CHECK(generalized_rkf_class({2, 3, 1, 3, {}}) == ChowClass(1, {3, 0}));
  // smooth case: exactly (1+h)^{g-d+r}
  CHECK(generalized_rkf_class({4, 3, 2, 1, {}}) == binom_power(3, 2));
}

TEST_CASE("class degree matches the multiplicity") {
  for (long r = 0; r <= 5; ++r)
    for (long e = r; e <= 8; ++e)
      for (int m = 1; m <= 4; ++m) {
        const RKFInput in{e + 2, 2 + r, r, m, {}};  // p - d + r = e
        REQUIRE(class_degree(generalized_rkf_class(in), static_cast<int>(r)) ==
                Rational(rkf_multiplicity(in)));
      }
}

TEST_CASE("d = p - 1 gives r + 1") {
  for (long p = 1; p <= 10; ++p)
    for (long r = 0; r <= 5; ++r) CHECK(rkf_multiplicity({p, p - 1, r, 1, {}}) == r + 1);
  const auto notes = rkf_discrepancy_notes({4, 3, 2, 1, {}});
  REQUIRE(notes.size() == 2);
  CHECK(notes[0].find("r = 2") != std::string::npos);
  CHECK(notes[0].find("gives 3") != std::string::npos);
  CHECK(rkf_discrepancy_notes({4, 2, 1, 1, {}}).empty());
  const auto pr = planar_readings(2, 3);
  CHECK(pr.as_printed == 4);
  CHECK(pr.from_formula == 6);
}

TEST_CASE("cmk_multiplicities") {
  auto m = cmk_multiplicities(1, 1);
  CHECK(m.mult_pic == 2);
  CHECK(m.mult_theta == 2);
  m = cmk_multiplicities(0, 7);
  CHECK(m.mult_pic == 1);
  CHECK(m.mult_theta == 7);
  m = cmk_multiplicities(2, 3);
  CHECK(m.mult_pic == 4);
  CHECK(m.mult_theta == 12);
  for (long n = 0; n <= 6; ++n)
    for (long h0 = 1; h0 <= 6; ++h0)
      CHECK(cmk_multiplicities(n, h0).mult_theta == cmk_multiplicities(n, 1).mult_pic * h0);
  CHECK_THROWS_AS(cmk_multiplicities(-1, 1), Error);
  CHECK_THROWS_AS(cmk_multiplicities(1, 0), Error);
}

TEST_CASE("proof_chain_check") {
  const auto rep = proof_chain_check({3, 2, 1, 1, 3});
  CHECK(rep.holds);
  REQUIRE(rep.steps.size() == 3);
  CHECK(rep.steps[2].rhs == binom_power(2, 1));
  CHECK(proof_chain_check({3, 2, 1, 5, 3}).holds);
  CHECK(proof_chain_check({3, 3, 0, 2, 2}).holds);
  for (const auto& st : proof_chain_check({3, 3, 0, 2, 2}).steps) CHECK(st.lhs.ambient_dim() == 0);
  try {
    proof_chain_check({3, 2, 1, 1, 2});
    FAIL("expected precondition failure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::precondition);
  }
  CHECK_THROWS_AS(proof_chain_check({3, 2, 1, 1, {}}), Error);
}

TEST_CASE("proof chain over the grid") {
  for (long p = 0; p <= 10; ++p)
    for (long d = 0; d <= 2 * p; ++d)
      for (long r = 0; r <= 5; ++r) {
        if (p - d + r < 0) continue;
        for (int m = 1; m <= 3; ++m)
          REQUIRE(proof_chain_check({p, d, r, m, minimal_raise(p, d)}).holds);
      }
  CHECK(minimal_raise(3, 2) == 3);
  CHECK(minimal_raise(3, 9) == 0);
}
