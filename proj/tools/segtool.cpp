// segtool: Segre classes, cancellation and multiplicity formulas from the
// command line. stdout carries the document, stderr carries logs.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "segtool/jobs.hpp"

using namespace segtool;

namespace {

std::vector<int> parse_degrees(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int d = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(d);
    } catch (const std::exception&) {
      throw Error(ErrorCode::usage, "bad --degrees entry '" + item + "'");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Segre classes of projective schemes and the cancellation formula"};
  app.set_version_flag("--version", "segtool 1.0");

  JobSpec job;
  std::string input, degrees, multz, h0;
  bool json = false;

  app.add_option("--input", input, "source file (ring, ideal and point definitions)");
  app.add_option("--job", job.command, "segre | cancel | independence | multiplicity | rkf | "
                                       "cmk | chain-check | verify-suite")
      ->required();
  app.add_option("--seed", job.seed, "seed for generic choices (default 0)");
  app.add_flag("--json", json, "emit JSON instead of text");
  app.add_option("--degrees", degrees, "hypersurface degrees of Y, e.g. 2,1");
  app.add_option("--p", job.p, "arithmetic genus");
  app.add_option("--d", job.d, "degree");
  app.add_option("--r", job.r, "fiber dimension");
  app.add_option("--s", job.s, "degree raise (default: minimal with d + s >= 2p - 1)");
  app.add_option("--multz", multz, "multiplicity of Z at the base point (default 1)");
  app.add_option("--nodes", job.nodes, "number of nodes");
  app.add_option("--h0", h0, "h^0 of the sheaf");
  app.add_option("--point", job.point, "name of a point in the source");
  app.add_flag("--assert-hypothesis", job.assert_hypothesis,
               "assert Y is smooth along X (cancellation hypothesis)");
  app.add_option("targets", job.targets, "ideal names from the source");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(ErrorCode::usage);
  }

  auto emit = [&](const Json& doc) {
    std::cout << (json ? emit_json(doc) : emit_text(doc));
    const int status = exit_status(doc);
    if (status != 0 && !json) std::cerr << "segtool: job failed (status " << status << ")\n";
    return status;
  };

  try {
    if (!degrees.empty()) job.degrees = parse_degrees(degrees);
    auto integer = [](const std::string& text, const char* flag) {
      Integer v;
      if (v.set_str(text, 10) != 0)
        throw Error(ErrorCode::usage, std::string("bad ") + flag + " value '" + text + "'");
      return v;
    };
    if (!multz.empty()) job.multz = integer(multz, "--multz");
    if (!h0.empty()) job.h0 = integer(h0, "--h0");

    std::optional<SourceProgram> program;
    if (!input.empty()) {
      std::ifstream in(input, std::ios::binary);
      if (!in) throw Error(ErrorCode::io, "cannot read '" + input + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      program = parse_source(buf.str());
    }
    return emit(run_job(program ? &*program : nullptr, job));
  } catch (const Error& e) {
    return emit(error_document(job, e));
  }
}
