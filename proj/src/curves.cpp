#include "segtool/curves.hpp"

#include "segtool/error.hpp"

namespace segtool {

namespace {

long exponent(const RKFInput& in) {
  if (in.genus < 0 || in.d < 0 || in.r < 0)
    throw Error(ErrorCode::out_of_range, "p, d, r must be non-negative");
  if (in.mult_z < 1) throw Error(ErrorCode::out_of_range, "mult_z must be positive");
  const long e = in.genus - in.d + in.r;
  if (e < 0)
    throw Error(ErrorCode::out_of_range,
                "p - d + r = " + std::to_string(e) + " is negative");
  if (in.r > 1000) throw Error(ErrorCode::out_of_range, "r too large");
  return e;
}

}  // namespace

Integer rkf_multiplicity(const RKFInput& in) {
  const long e = exponent(in);
  return in.mult_z * binomial(e, in.r);
}

ChowClass generalized_rkf_class(const RKFInput& in) {
  const long e = exponent(in);
  return binom_power(e, static_cast<int>(in.r)).scaled(Rational(in.mult_z));
}

CMKMultiplicities cmk_multiplicities(long n_nodes, const Integer& h0) {
  if (n_nodes < 0) throw Error(ErrorCode::out_of_range, "number of nodes must be non-negative");
  if (h0 < 1) throw Error(ErrorCode::out_of_range, "h0 must be positive");
  if (n_nodes > 100000) throw Error(ErrorCode::out_of_range, "number of nodes too large");
  Integer pic;
  mpz_ui_pow_ui(pic.get_mpz_t(), 2, static_cast<unsigned long>(n_nodes));
  return {pic, pic * h0};
}

long minimal_raise(long genus, long d) { return std::max(0L, 2 * genus - 1 - d); }

ChainReport proof_chain_check(const RKFInput& in) {
  const long e = exponent(in);
  if (!in.s) throw Error(ErrorCode::precondition, "chain check needs the degree raise s");
  const long s = *in.s;
  if (s < 0) throw Error(ErrorCode::out_of_range, "s must be non-negative");
  if (in.d + s < 2 * in.genus - 1)
    throw Error(ErrorCode::precondition,
                "d + s = " + std::to_string(in.d + s) + " < 2p - 1 = " +
                    std::to_string(2 * in.genus - 1) +
                    "; the Abel map is only a projective bundle in degree >= 2p - 1");

  const int r = static_cast<int>(in.r);
  const Rational m(in.mult_z);
  const long big = in.d + s - in.genus - in.r;  // fiber dim of the bundle in degree d+s, minus r

  ChainReport out;
  // In degree d + s the Abel map is a bundle, so (1+h)^{big} S = mult_z [P^r].
  const ChowClass solved = class_mul(class_inv(binom_power(big, r)), ChowClass::one(r).scaled(m));
  const ChowClass expected = binom_power(-big, r).scaled(m);
  out.steps.push_back({"large degree", class_mul(binom_power(big, r), solved),
                       ChowClass::one(r).scaled(m), false});
  out.steps.push_back({"comparing degrees", solved, expected, false});
  // Cancel the divisor directions: N = O(1)^s restricted to |D|.
  out.steps.push_back({"cancellation", class_mul(binom_power(s, r), solved),
                       binom_power(e, r).scaled(m), false});
  out.holds = true;
  for (auto& step : out.steps) {
    step.holds = step.lhs == step.rhs;
    out.holds = out.holds && step.holds;
  }
  return out;
}

std::vector<std::string> rkf_discrepancy_notes(const RKFInput& in) {
  std::vector<std::string> notes;
  if (in.d == in.genus - 1) {
    notes.push_back("d = g - 1: the text says the multiplicity is r = " + std::to_string(in.r) +
                    ", the binomial C(r+1, r) gives " + std::to_string(in.r + 1));
    const PlanarReadings pr = planar_readings(in.mult_z, in.r + 1);
    notes.push_back("planar corollary: mult_x P0 (h1 - 1) = " + pr.as_printed.get_str() +
                    ", general formula mult_x P0 h1 = " + pr.from_formula.get_str());
  }
  return notes;
}

PlanarReadings planar_readings(const Integer& mult_z, long h1) {
  if (h1 < 1) throw Error(ErrorCode::out_of_range, "h1 must be positive");
  return {mult_z * (h1 - 1), mult_z * h1};
}

}  // namespace segtool
