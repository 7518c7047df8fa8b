#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "segtool/jobs.hpp"

namespace segtool {

struct SuiteItem {
  std::string name;  // sorts items; prefixed by criterion
  int criterion = 0;
  bool passed = false;
  Json detail;
};

/// Runs the acceptance catalog (criteria 1 to 10). Items may run
/// concurrently; the result is ordered by name.
std::vector<SuiteItem> run_suite(std::uint64_t seed, bool parallel = true);

}  // namespace segtool
