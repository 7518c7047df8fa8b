#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace segtool {

/// Machine-readable error categories. Each maps to a distinct code string in
/// JSON diagnostics and a distinct process exit status.
enum class ErrorCode {
  ring_mismatch = 10,
  unsupported = 11,
  invalid_argument = 12,
  non_invertible = 13,
  ambient_mismatch = 14,
  invalid_class = 15,
  out_of_range = 16,
  genericity_failure = 17,
  internal_consistency = 18,
  rank_mismatch = 19,
  containment = 20,
  not_a_morphism = 21,
  invalid_comparison = 22,
  precondition = 23,
  syntax = 30,
  undefined_identifier = 31,
  inhomogeneous = 32,
  duplicate_ring = 33,
  no_ring = 34,
  io = 40,
  usage = 41,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when generic choices keep landing on a special configuration.
class GenericityFailure : public Error {
 public:
  GenericityFailure(int index, const std::string& what)
      : Error(ErrorCode::genericity_failure, what), index_(index) {}

  /// The projective-degree index that failed.
  int index() const noexcept { return index_; }

 private:
  int index_;
};

}  // namespace segtool
