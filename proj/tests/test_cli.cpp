#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "segtool/jobs.hpp"

using namespace segtool;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ErrorCode parse_code(const std::string& src) {
  try {
    parse_source(src);
  } catch (const ParseError& e) {
    return e.code();
  }
  FAIL("expected a parse error");
  return ErrorCode::internal_consistency;
}

JobSpec job(std::string cmd, std::vector<std::string> targets = {}) {
  JobSpec j;
  j.command = std::move(cmd);
  j.targets = std::move(targets);
  return j;
}

}  // namespace

TEST_CASE("parse_source examples") {
  const auto p = parse_source("ring P vars x y z; ideal C = y^2*z - x^3 - x^2*z;");
  REQUIRE(p.ring);
  CHECK(p.ring->num_vars() == 3);
  REQUIRE(p.ideals.size() == 1);
  CHECK(p.ideals[0].generators.size() == 1);
  CHECK(p.ideals[0].generators[0].total_degree() == 3);

  try {
    parse_source("ideal X = x, y;");
    FAIL("expected no ring");
  } catch (const ParseError& e) {
    CHECK(e.code() == ErrorCode::no_ring);
    CHECK(std::string(e.what()) == "no ring in scope");
    CHECK(e.line() == 1);
    CHECK(e.column() == 1);
  }

  const auto b = parse_source("ring P vars x y z; ideal B = x + 1;");
  try {
    b.projective_ideal("B");
    FAIL("expected inhomogeneity");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::inhomogeneous);
    CHECK(std::string(e.what()).find("'B'") != std::string::npos);
  }
}

TEST_CASE("expression grammar") {
  const auto p = parse_source(
      "ring R vars a b c;\n"
      "ideal F = (a - 1/2*b)^2 - 3/4*c^2, -(a + b)*c, -a^2, 2/6*a;\n"
      "point q = (1/2 : -3 : 0);");
  const auto& g = p.ideals[0].generators;
  CHECK(g[0].to_string() == "a^2 - a*b + 1/4*b^2 - 3/4*c^2");
  CHECK(g[1].to_string() == "-a*c - b*c");
  CHECK(g[2].to_string() == "-a^2");
  CHECK(g[3].to_string() == "1/3*a");
  CHECK(p.points[0].coords == std::vector<Rational>{Rational(1, 2), -3, 0});
}

TEST_CASE("errors carry line and column") {
  try {
    parse_source("ring P vars x y z;\n# comment\nideal X = x + q;");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.code() == ErrorCode::undefined_identifier);
    CHECK(e.line() == 3);
    CHECK(e.column() == 15);
  }
  CHECK(parse_code("ring P vars x y z; ring Q vars a b;") == ErrorCode::duplicate_ring);
  CHECK(parse_code("ring P vars x y z; ideal X = x y;") == ErrorCode::syntax);
  CHECK(parse_code("ring P vars x y z; ideal X = x^;") == ErrorCode::syntax);
  CHECK(parse_code("ring P vars x x;") == ErrorCode::syntax);
  CHECK(parse_code("ring P vars x y; ideal x = y;") == ErrorCode::syntax);
  CHECK(parse_code("ring P vars x y; point p = (0 : 0);") == ErrorCode::syntax);
}

TEST_CASE("corpus round-trips and error fixtures fail as annotated") {
  int files = 0, errors = 0;
  const std::regex expect(R"(# expect: ([a-z-]+) (\d+):(\d+))");
  for (const auto& entry : fs::recursive_directory_iterator(SEGTOOL_CORPUS_DIR)) {
    if (entry.path().extension() != ".sgr") continue;
    ++files;
    const std::string src = slurp(entry.path());
    std::smatch m;
    INFO(entry.path().string());
    if (std::regex_search(src, m, expect)) {
      ++errors;
      try {
        parse_source(src);
        FAIL("fixture parsed");
      } catch (const ParseError& e) {
        CHECK(std::string(error_code_name(e.code())) == m[1].str());
        CHECK(e.line() == std::stoi(m[2].str()));
        CHECK(e.column() == std::stoi(m[3].str()));
      }
      continue;
    }
    const SourceProgram p = parse_source(src);
    const std::string printed = pretty_print(p);
    const SourceProgram again = parse_source(printed);
    CHECK(again == p);
    CHECK(pretty_print(again) == printed);
  }
  CHECK(files >= 10);
  CHECK(errors >= 5);
}

TEST_CASE("segre job on the conic") {
  const auto p = parse_source("ring P vars x y z; ideal C = x*z - y^2;");
  const Json doc = run_job(&p, job("segre", {"C"}));
  CHECK(doc["ok"] == true);
  CHECK(doc["results"]["class"] == Json::parse(R"({"h^1": 2, "h^2": -4})"));
  CHECK(doc["diagnostics"] == Json::array());
  CHECK(emit_json(doc).find("\"diagnostics\": []") != std::string::npos);
  CHECK(emit_text(doc).find("class: 2 h - 4 h^2\n") != std::string::npos);
  CHECK(exit_status(doc) == 0);
}

TEST_CASE("cancel job at the node") {
  const auto p = parse_source(
      "ring P vars x y z; ideal N = x, y; ideal Y = y^2*z - x^3 - x^2*z; point o = (0 : 0 : 1);");
  JobSpec j = job("cancel", {"N", "Y"});
  j.point = "o";
  const Json doc = run_job(&p, j);
  CHECK(doc["ok"] == true);
  CHECK(doc["results"]["agrees"] == false);
  CHECK(doc["results"]["pipeline"] == 1);
  CHECK(doc["results"]["direct_check"] == 2);
  CHECK(doc["results"]["label"] == "formal pipeline value");
}

TEST_CASE("rkf job") {
  JobSpec j = job("rkf");
  j.p = 3;
  j.d = 2;
  j.r = 1;
  j.multz = Integer(1);
  const Json doc = run_job(nullptr, j);
  CHECK(doc["results"]["multiplicity"] == 2);
}

TEST_CASE("rationals in JSON") {
  CHECK(rational_json(Rational(3)) == Json(3));
  CHECK(rational_json(Rational(-1, 2)) == Json("-1/2"));
  CHECK(rational_json(Rational(Integer("123456789012345678901234567890"))) ==
        Json("123456789012345678901234567890"));
}

TEST_CASE("output is deterministic") {
  const auto p = parse_source(
      "ring P vars x y z w; ideal C = x*z - y^2, x*w - y*z, y*w - z^2; ideal Q = x*w - y*z;");
  for (const auto& j : {job("segre", {"C"}), job("independence", {"C"})}) {
    const Json a = run_job(&p, j), b = run_job(&p, j);
    CHECK(emit_json(a) == emit_json(b));
    CHECK(emit_text(a) == emit_text(b));
  }
}

TEST_CASE("errors become documents with distinct codes") {
  const auto p = parse_source("ring P vars x y z; ideal B = x + 1; ideal C = x*z - y^2;");
  std::set<int> statuses;
  auto status_of = [&](const Json& doc) {
    CHECK(doc["ok"] == false);
    REQUIRE(doc["diagnostics"].size() == 1);
    CHECK(doc["diagnostics"][0]["kind"] == "error");
    const int s = exit_status(doc);
    CHECK(s != 0);
    CHECK(doc["diagnostics"][0]["status"] == s);
    statuses.insert(s);
    return s;
  };
  CHECK(status_of(run_job(&p, job("segre", {"B"}))) == 32);
  CHECK(status_of(run_job(&p, job("segre", {"nope"}))) == 31);
  CHECK(status_of(run_job(&p, job("segre"))) == 41);
  CHECK(status_of(run_job(&p, job("frobnicate"))) == 41);
  JobSpec bad = job("rkf");
  bad.p = 1;
  bad.d = 5;
  bad.r = 0;
  CHECK(status_of(run_job(nullptr, bad)) == 16);
  JobSpec chain = job("chain-check");
  chain.p = 3;
  chain.d = 2;
  chain.r = 1;
  chain.s = 1;
  CHECK(status_of(run_job(nullptr, chain)) == 23);
  const auto q = parse_source("ring P vars x y z; ideal L = x; ideal Y = y*z;");
  CHECK(status_of(run_job(&q, job("cancel", {"L", "Y"}))) == 20);
  CHECK(statuses.size() == 6);

  const Json doc = error_document(job("segre"), ParseError(ErrorCode::syntax, "boom", 4, 2));
  CHECK(doc["diagnostics"][0]["line"] == 4);
  CHECK(doc["diagnostics"][0]["column"] == 2);
  CHECK(doc["diagnostics"][0]["code"] == "syntax");
}

TEST_CASE("class text omits zero terms") {
  const auto p = parse_source("ring P vars x y z w; ideal L = z, w;");
  const Json doc = run_job(&p, job("segre", {"L"}));
  CHECK(emit_text(doc).find("class: h^2 - 2 h^3\n") != std::string::npos);
  CHECK(emit_text(doc).find("class_by_dim: dim1 1, dim0 -2\n") != std::string::npos);
}
