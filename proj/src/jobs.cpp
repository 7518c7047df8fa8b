#include "segtool/jobs.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "segtool/cancel.hpp"
#include "segtool/curves.hpp"
#include "segtool/random.hpp"
#include "segtool/suite.hpp"

namespace segtool {

namespace {

Json class_json(const ChowClass& c) {
  Json out = Json::object();
  for (int i = 0; i <= c.ambient_dim(); ++i)
    if (c[i] != 0) out["h^" + std::to_string(i)] = rational_json(c[i]);
  return out;
}

Json dim_json(const DimIndexedClass& c) {
  Json out = Json::object();
  for (const auto& [d, v] : c.entries()) out["dim" + std::to_string(d)] = rational_json(v);
  return out;
}

Json note(const std::string& kind, const std::string& message) {
  return Json{{"kind", kind}, {"message", message}};
}

[[noreturn]] void usage(const std::string& msg) { throw Error(ErrorCode::usage, msg); }

const SourceProgram& need_program(const SourceProgram* program, const JobSpec& job) {
  if (!program || !program->ring) usage("job '" + job.command + "' needs --input with a ring");
  return *program;
}

void need_targets(const JobSpec& job, std::size_t lo, std::size_t hi) {
  if (job.targets.size() < lo || job.targets.size() > hi)
    usage("job '" + job.command + "' takes " +
          (lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi)) +
          " target name(s), got " + std::to_string(job.targets.size()));
}

template <class T>
const T& need(const std::optional<T>& v, const char* flag, const JobSpec& job) {
  if (!v) usage("job '" + job.command + "' needs " + flag);
  return *v;
}

Json command_echo(const JobSpec& job) {
  Json params = Json::object();
  if (job.degrees) params["degrees"] = *job.degrees;
  if (job.p) params["p"] = *job.p;
  if (job.d) params["d"] = *job.d;
  if (job.r) params["r"] = *job.r;
  if (job.s) params["s"] = *job.s;
  if (job.nodes) params["nodes"] = *job.nodes;
  if (job.multz) params["multz"] = rational_json(Rational(*job.multz));
  if (job.h0) params["h0"] = rational_json(Rational(*job.h0));
  if (job.point) params["point"] = *job.point;
  if (job.assert_hypothesis) params["assert_hypothesis"] = true;
  return Json{{"job", job.command}, {"targets", job.targets}, {"params", params}};
}

Json base_document(const JobSpec& job) {
  return Json{{"schema_version", kSchemaVersion},
              {"command", command_echo(job)},
              {"seed", job.seed},
              {"results", Json::object()},
              {"diagnostics", Json::array()},
              {"ok", true}};
}

bool vanishes_at(const Ideal& ideal, const std::vector<Rational>& point) {
  for (const auto& g : ideal.generators())
    if (g.evaluate(point) != 0) return false;
  return true;
}

// --- jobs ---------------------------------------------------------------

void segre_job(const SourceProgram& prog, const JobSpec& job, Json& doc) {
  need_targets(job, 1, 1);
  const SchemeSpec x(prog.projective_ideal(job.targets[0]), job.targets[0]);
  const SegreResult s = segre_class(x, job.seed);
  Json& r = doc["results"];
  r["ambient_dim"] = x.ambient_dim();
  r["class"] = class_json(s.cls);
  r["class_by_dim"] = dim_json(to_dim_indexed(s.cls, s.dim_x));
  r["dim"] = s.dim_x;
  r["method"] = method_name(s.method);
  r["common_degree"] = s.degrees.common_degree;
  Json g = Json::array();
  for (const auto& v : s.degrees.g) g.push_back(rational_json(Rational(v)));
  r["projective_degrees"] = g;
  r["retries"] = s.degrees.retries_used;
  r["check_seed"] = derive_seed(job.seed, 0x5e9e);
  if (s.degrees.retries_used > 0)
    doc["diagnostics"].push_back(
        note("retries", std::to_string(s.degrees.retries_used) + " generic choice(s) redrawn"));
}

CancellationInput cancellation_input(const SourceProgram& prog, const JobSpec& job) {
  need_targets(job, 1, 2);
  SchemeSpec x(prog.projective_ideal(job.targets[0]), job.targets[0]);
  const HilbertData hx = hilbert_dim_degree(x.ideal);
  CancellationInput in{x, {}, hx.projective_dim, job.assert_hypothesis, std::nullopt,
                       std::nullopt};
  if (job.targets.size() == 2) {
    in.y = prog.projective_ideal(job.targets[1]);
    for (const auto& g : in.y->generators()) in.y_degrees.degrees.push_back(g.total_degree());
  }
  if (job.degrees) {
    if (in.y && job.degrees->size() != in.y_degrees.degrees.size())
      usage("--degrees lists " + std::to_string(job.degrees->size()) + " degrees but '" +
            job.targets[1] + "' has " + std::to_string(in.y_degrees.degrees.size()) +
            " equations");
    in.y_degrees.degrees = *job.degrees;
  }
  if (job.point) {
    if (hx.projective_dim != 0)
      throw Error(ErrorCode::invalid_argument,
                  "--point given but '" + x.label + "' is not a point");
    std::vector<Rational> p = prog.point(*job.point);
    if (!vanishes_at(x.ideal, p))
      throw Error(ErrorCode::invalid_argument,
                  "point '" + *job.point + "' is not on '" + x.label + "'");
    in.point = std::move(p);
  }
  return in;
}

Json report_json(const CancellationReport& rep) {
  Json r;
  r["sXZ"] = class_json(rep.sxz.cls);
  r["sXY"] = dim_json(rep.sxy);
  r["label"] = rep.label();
  r["hypothesis_asserted"] = rep.hypothesis_asserted;
  r["seeds"] = rep.seeds;
  if (rep.direct_check) {
    r["direct_check"] = rational_json(Rational(*rep.direct_check));
    r["agrees"] = *rep.agrees;
    r["pipeline"] = rational_json(rep.sxy.at(0));
  }
  return r;
}

void cancel_notes(const CancellationReport& rep, Json& doc) {
  if (!rep.hypothesis_asserted)
    doc["diagnostics"].push_back(note(
        "hypothesis", "hypothesis not asserted: sXY is a formal pipeline value, not a claim"));
  if (rep.agrees && !*rep.agrees)
    doc["diagnostics"].push_back(note("disagreement", "pipeline value " +
                                                          rational_string(rep.sxy.at(0)) +
                                                          " differs from multiplicity " +
                                                          rep.direct_check->get_str()));
}

void cancel_job(const SourceProgram& prog, const JobSpec& job, Json& doc) {
  const CancellationReport rep = cancel_segre(cancellation_input(prog, job), job.seed);
  doc["results"] = report_json(rep);
  cancel_notes(rep, doc);
}

void independence_job(const SourceProgram& prog, const JobSpec& job, Json& doc) {
  const CancellationInput a = cancellation_input(prog, job);
  Polynomial l(prog.ring);
  for (std::size_t i = 0; i < prog.ring->num_vars(); ++i)
    l = l + Polynomial::variable(prog.ring, i);
  const CancellationInput b = embed_in_hyperplane(a, l);
  const IndependenceReport rep = verify_independence(a, b, job.seed);
  Json& r = doc["results"];
  r["agree"] = rep.agree;
  r["first"] = report_json(rep.first);
  r["first"]["ambient_dim"] = a.x.ambient_dim();
  r["first"]["degrees"] = a.y_degrees.degrees;
  r["second"] = report_json(rep.second);
  r["second"]["ambient_dim"] = b.x.ambient_dim();
  r["second"]["degrees"] = b.y_degrees.degrees;
  r["second"]["X"] = b.x.ideal.to_string();
  cancel_notes(rep.first, doc);
}

void multiplicity_job(const SourceProgram& prog, const JobSpec& job, Json& doc) {
  need_targets(job, 1, 1);
  const SchemeSpec y(prog.projective_ideal(job.targets[0]), job.targets[0]);
  const std::string& pname = need(job.point, "--point", job);
  const std::vector<Rational> p = prog.point(pname);
  if (!vanishes_at(y.ideal, p))
    throw Error(ErrorCode::precondition, "point '" + pname + "' is not on '" + y.label + "'");
  doc["results"]["multiplicity"] = rational_json(Rational(point_segre_multiplicity(y, p)));
}

RKFInput rkf_input(const JobSpec& job) {
  RKFInput in;
  in.genus = need(job.p, "--p", job);
  in.d = need(job.d, "--d", job);
  in.r = need(job.r, "--r", job);
  in.mult_z = job.multz.value_or(Integer(1));
  in.s = job.s;
  return in;
}

void rkf_job(const JobSpec& job, Json& doc) {
  need_targets(job, 0, 0);
  const RKFInput in = rkf_input(job);
  Json& r = doc["results"];
  r["multiplicity"] = rational_json(Rational(rkf_multiplicity(in)));
  r["class"] = class_json(generalized_rkf_class(in));
  r["exponent"] = in.genus - in.d + in.r;
  for (const auto& n : rkf_discrepancy_notes(in)) doc["diagnostics"].push_back(note("discrepancy", n));
}

void cmk_job(const JobSpec& job, Json& doc) {
  need_targets(job, 0, 0);
  const CMKMultiplicities m = cmk_multiplicities(need(job.nodes, "--nodes", job),
                                                 need(job.h0, "--h0", job));
  doc["results"]["mult_pic"] = rational_json(Rational(m.mult_pic));
  doc["results"]["mult_theta"] = rational_json(Rational(m.mult_theta));
}

void chain_job(const JobSpec& job, Json& doc) {
  need_targets(job, 0, 0);
  RKFInput in = rkf_input(job);
  if (!in.s) in.s = minimal_raise(in.genus, in.d);
  const ChainReport rep = proof_chain_check(in);
  Json& r = doc["results"];
  r["holds"] = rep.holds;
  r["s"] = *in.s;
  Json steps = Json::array();
  for (const auto& st : rep.steps)
    steps.push_back(Json{{"name", st.name},
                         {"lhs", class_json(st.lhs)},
                         {"rhs", class_json(st.rhs)},
                         {"holds", st.holds}});
  r["steps"] = steps;
  for (const auto& n : rkf_discrepancy_notes(in)) doc["diagnostics"].push_back(note("discrepancy", n));
}

void suite_job(const JobSpec& job, Json& doc) {
  need_targets(job, 0, 0);
  const std::vector<SuiteItem> items = run_suite(job.seed);
  Json arr = Json::array();
  int passed = 0;
  for (const auto& it : items) {
    arr.push_back(Json{{"name", it.name},
                       {"criterion", it.criterion},
                       {"passed", it.passed},
                       {"detail", it.detail}});
    passed += it.passed ? 1 : 0;
  }
  Json& r = doc["results"];
  r["items"] = arr;
  r["passed"] = passed;
  r["failed"] = static_cast<int>(items.size()) - passed;
  if (passed != static_cast<int>(items.size()))
    throw Error(ErrorCode::internal_consistency,
                std::to_string(items.size() - passed) + " catalog item(s) failed");
}

// --- text rendering -------------------------------------------------------

bool is_class_object(const Json& j) {
  if (!j.is_object() || j.empty()) return false;
  for (const auto& [k, v] : j.items())
    if (k.rfind("h^", 0) != 0) return false;
  return true;
}

Rational json_rational(const Json& v) {
  if (v.is_string()) {
    Rational q(v.get<std::string>());
    q.canonicalize();
    return q;
  }
  return Rational(Integer(v.dump()));
}

std::string class_text(const Json& j) {
  std::map<int, Rational> terms;
  int top = 0;
  for (const auto& [k, v] : j.items()) {
    const int e = std::stoi(k.substr(2));
    terms[e] = json_rational(v);
    top = std::max(top, e);
  }
  std::vector<Rational> c(static_cast<std::size_t>(top) + 1, Rational(0));
  for (const auto& [e, v] : terms) c[static_cast<std::size_t>(e)] = v;
  return ChowClass(top, std::move(c)).to_string();
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render(std::ostream& os, const std::string& key, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (v.is_object() && v.contains("name") && v.contains("passed")) {
    os << pad << (v["passed"].get<bool>() ? "pass " : "FAIL ") << v["name"].get<std::string>()
       << '\n';
    return;
  }
  if (v.is_object() && (v.empty() || is_class_object(v))) {
    os << pad << key << ": " << (v.empty() ? "0" : class_text(v)) << '\n';
  } else if (v.is_object()) {
    bool dims = true;
    for (const auto& [k, _] : v.items()) dims = dims && k.rfind("dim", 0) == 0;
    if (dims) {
      os << pad << key << ":";
      bool first = true;
      for (auto it = v.rbegin(); it != v.rend(); ++it) {
        os << (first ? " " : ", ") << it.key() << " " << scalar_text(it.value());
        first = false;
      }
      os << '\n';
      return;
    }
    os << pad << key << ":\n";
    for (const auto& [k, sub] : v.items()) render(os, k, sub, indent + 1);
  } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) {
               return e.is_primitive();
             })) {
    os << pad << key << ": [";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar_text(v[i]);
    os << "]\n";
  } else if (v.is_array()) {
    os << pad << key << ":\n";
    for (std::size_t i = 0; i < v.size(); ++i) render(os, key + "[" + std::to_string(i) + "]", v[i], indent + 1);
  } else {
    os << pad << key << ": " << scalar_text(v) << '\n';
  }
}

}  // namespace

const std::vector<std::string>& job_commands() {
  static const std::vector<std::string> cmds = {"segre", "cancel", "independence",
                                                "multiplicity", "rkf", "cmk",
                                                "chain-check", "verify-suite"};
  return cmds;
}

Json rational_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return Json(q.get_num().get_si());
  return Json(rational_string(q));
}

Json error_document(const JobSpec& job, const Error& e) {
  Json doc = base_document(job);
  doc["ok"] = false;
  Json d{{"kind", "error"},
         {"code", std::string(error_code_name(e.code()))},
         {"status", static_cast<int>(e.code())},
         {"message", e.what()}};
  if (const auto* pe = dynamic_cast<const ParseError*>(&e); pe && pe->line() > 0) {
    d["line"] = pe->line();
    if (pe->column() > 0) d["column"] = pe->column();
  }
  if (const auto* ge = dynamic_cast<const GenericityFailure*>(&e)) d["index"] = ge->index();
  doc["diagnostics"].push_back(d);
  return doc;
}

Json run_job(const SourceProgram* program, const JobSpec& job) {
  Json doc = base_document(job);
  try {
    const std::string& c = job.command;
    if (c == "segre") {
      segre_job(need_program(program, job), job, doc);
    } else if (c == "cancel") {
      cancel_job(need_program(program, job), job, doc);
    } else if (c == "independence") {
      independence_job(need_program(program, job), job, doc);
    } else if (c == "multiplicity") {
      multiplicity_job(need_program(program, job), job, doc);
    } else if (c == "rkf") {
      rkf_job(job, doc);
    } else if (c == "cmk") {
      cmk_job(job, doc);
    } else if (c == "chain-check") {
      chain_job(job, doc);
    } else if (c == "verify-suite") {
      suite_job(job, doc);
    } else {
      usage("unknown job '" + c + "'");
    }
  } catch (const Error& e) {
    Json err = error_document(job, e);
    // keep partial results (the suite item table) for inspection
    err["results"] = doc["results"];
    return err;
  } catch (const std::exception& e) {
    return error_document(job, Error(ErrorCode::internal_consistency, e.what()));
  }
  return doc;
}

int exit_status(const Json& doc) {
  if (doc.value("ok", false)) return 0;
  for (const auto& d : doc["diagnostics"])
    if (d.contains("status")) return d["status"].get<int>();
  return static_cast<int>(ErrorCode::internal_consistency);
}

std::string emit_json(const Json& doc) { return doc.dump(2) + "\n"; }

std::string emit_text(const Json& doc) {
  std::ostringstream os;
  const Json& cmd = doc["command"];
  os << cmd["job"].get<std::string>();
  for (const auto& t : cmd["targets"]) os << ' ' << t.get<std::string>();
  os << " (seed " << doc["seed"].dump() << ")\n";
  for (const auto& [k, v] : doc["results"].items()) render(os, k, v, 0);
  for (const auto& d : doc["diagnostics"]) {
    if (d["kind"] == "error") {
      os << "error [" << d["code"].get<std::string>() << "]";
      if (d.contains("line"))
        os << " line " << d["line"].dump() << (d.contains("column") ? ", column " + d["column"].dump() : "");
      os << ": " << d["message"].get<std::string>() << '\n';
    } else {
      os << d["kind"].get<std::string>() << ": " << d["message"].get<std::string>() << '\n';
    }
  }
  return os.str();
}

}  // namespace segtool
