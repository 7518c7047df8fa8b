#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "segtool/program.hpp"

namespace segtool {

using Json = nlohmann::json;  // std::map objects: keys come out sorted

inline constexpr const char* kSchemaVersion = "1";

struct JobSpec {
  std::string command;
  std::vector<std::string> targets;
  std::optional<std::vector<int>> degrees;
  std::optional<long> p, d, r, s, nodes;
  std::optional<Integer> multz, h0;
  std::optional<std::string> point;
  bool assert_hypothesis = false;
  std::uint64_t seed = 0;
};

/// Commands accepted by run_job.
const std::vector<std::string>& job_commands();

/// Runs one job. Never throws: failures become a document with ok = false and
/// one diagnostic carrying the error code. `program` may be null for jobs that
/// take no source.
Json run_job(const SourceProgram* program, const JobSpec& job);

/// Document for an error raised before a job could run (I/O, parsing).
Json error_document(const JobSpec& job, const Error& e);

/// 0 on success, otherwise the numeric error code of the first diagnostic.
int exit_status(const Json& doc);

std::string emit_json(const Json& doc);
/// Classes as "2 h - 4 h^2", one "key: value" line per result.
std::string emit_text(const Json& doc);

/// JSON value for an exact rational: integers as numbers, others as "p/q".
Json rational_json(const Rational& q);

}  // namespace segtool
