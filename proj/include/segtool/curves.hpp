#pragma once

#include <optional>
#include <string>
#include <vector>

#include "segtool/chow.hpp"

namespace segtool {

/// Numerical data of a fiber |D| = P^r of the Abel map in degree d on a curve
/// of arithmetic genus p, with mult_z the multiplicity of the base point.
struct RKFInput {
  long genus = 0;
  long d = 0;
  long r = 0;
  Integer mult_z = 1;
  std::optional<long> s;  // degree raise for the chain check
};

/// mult_z * C(p - d + r, r).
Integer rkf_multiplicity(const RKFInput& in);

/// mult_z (1 + h)^{p - d + r} on P^r.
ChowClass generalized_rkf_class(const RKFInput& in);

struct CMKMultiplicities {
  Integer mult_pic;
  Integer mult_theta;
};

/// (2^n, 2^n h0) for a sheaf failing to be locally free at n nodes.
CMKMultiplicities cmk_multiplicities(long n_nodes, const Integer& h0);

struct ChainStep {
  std::string name;
  ChowClass lhs;
  ChowClass rhs;
  bool holds = false;
};

struct ChainReport {
  bool holds = false;
  std::vector<ChainStep> steps;
};

/// Checks the degree-raising argument as identities in Z[h]/(h^{r+1}).
/// Requires s with d + s >= 2p - 1.
ChainReport proof_chain_check(const RKFInput& in);

/// Smallest s >= 0 with d + s >= 2p - 1.
long minimal_raise(long genus, long d);

/// Notes where the prose around the formula reads differently from it.
std::vector<std::string> rkf_discrepancy_notes(const RKFInput& in);

/// Planar-case readings with h1 = r + 1: mult_z (h1 - 1) as printed in the
/// corollary, mult_z h1 from the general formula.
struct PlanarReadings {
  Integer as_printed;
  Integer from_formula;
};
PlanarReadings planar_readings(const Integer& mult_z, long h1);

}  // namespace segtool
