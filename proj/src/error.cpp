#include "segtool/error.hpp"

namespace segtool {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ring_mismatch: return "ring-mismatch";
    case ErrorCode::unsupported: return "unsupported";
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::non_invertible: return "non-invertible";
    case ErrorCode::ambient_mismatch: return "ambient-mismatch";
    case ErrorCode::invalid_class: return "invalid-class";
    case ErrorCode::out_of_range: return "out-of-range";
    case ErrorCode::genericity_failure: return "genericity-failure";
    case ErrorCode::internal_consistency: return "internal-consistency";
    case ErrorCode::rank_mismatch: return "rank-mismatch";
    case ErrorCode::containment: return "containment";
    case ErrorCode::not_a_morphism: return "not-a-morphism";
    case ErrorCode::invalid_comparison: return "invalid-comparison";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::syntax: return "syntax";
    case ErrorCode::undefined_identifier: return "undefined-identifier";
    case ErrorCode::inhomogeneous: return "inhomogeneous";
    case ErrorCode::duplicate_ring: return "duplicate-ring";
    case ErrorCode::no_ring: return "no-ring";
    case ErrorCode::io: return "io";
    case ErrorCode::usage: return "usage";
  }
  return "unknown";
}

}  // namespace segtool
