// trusslab: verify algebra documents, enumerate skew trusses, run pipelines.
//
// Exit codes: 0 all checks pass, 1 an axiom fails, 2 input or usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>

#include "trusslab/trusslab.hpp"

using namespace trusslab;
using nlohmann::json;

namespace {

constexpr int kPass  = 0;
constexpr int kFail  = 1;
constexpr int kInput = 2;

void print_text(std::ostream& os, VerificationReport const& r) {
  for (auto const& c : r.checks()) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name << " [" << c.anchor << "]";
    if (!c.note.empty()) {
      os << " " << c.note;
    }
    os << "\n";
  }
  for (auto const& [n, v] : r.properties()) {
    os << "property " << n << " = " << (v ? "true" : "false") << "\n";
  }
}

int emit_report(VerificationReport const& r, std::string const& format) {
  if (format == "json") {
    std::cout << report_json(r).dump(2) << "\n";
  } else {
    print_text(std::cout, r);
    std::cout << "result: " << (r.passed() ? "pass" : "fail") << "\n";
  }
  return r.passed() ? kPass : kFail;
}

void write_output(std::string const& text, std::string const& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) {
    throw ParseError("cannot write \"" + out + "\"");
  }
  f << text;
}

int cmd_verify(std::string const& path, std::string const& kind, std::string const& format) {
  auto doc = read_algfile(path);
  if (!kind.empty()) {
    auto const& kinds = algfile_kinds();
    if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) {
      throw ParseError("unknown kind \"" + kind + "\"");
    }
    doc.kind = kind;
  }
  return emit_report(verify_algfile(doc), format);
}

FiniteGroup group_from_arg(std::string const& arg) {
  std::ifstream in(arg);
  if (!in) {
    return builtin_group(arg);
  }
  std::stringstream ss;
  ss << in.rdbuf();
  json j;
  try {
    j = json::parse(ss.str());
  } catch (json::parse_error const& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  json const* t = nullptr;
  if (j.contains("tables") && j["tables"].contains("group")) {
    t = &j["tables"]["group"];
  } else if (j.contains("group")) {
    t = &j["group"];
  } else {
    throw ParseError("group file needs a \"group\" table");
  }
  auto table = detail::parse_table("group", *t);
  try {
    return FiniteGroup::from_table(std::move(table));
  } catch (InvalidStructure const& e) {
    throw ParseError(std::string("not a group: ") + e.what());
  }
}

int cmd_enumerate(std::string const& group, std::size_t bound, std::string const& out) {
  auto g  = group_from_arg(group);
  auto ts = enumerate_skew_trusses(g, bound);
  json arr = json::array();
  for (auto const& t : ts) {
    arr.push_back(algfile_json(to_algfile(t)));
  }
  arr.push_back({{"kind", "summary"}, {"group", group}, {"count", ts.size()}});
  write_output(to_compact_string(arr), out);
  return kPass;
}

////////////////////////////////////////////////////////////////////////////////
// pipeline
////////////////////////////////////////////////////////////////////////////////

using Stage = std::variant<SkewTruss, HopfTruss, GIC, TrussHopfModule>;

struct Pipeline {
  Stage                    stage;
  FieldSpec                field;
  std::optional<HopfTruss> before_E;
  json                     log = json::array();
  std::string              format;

  void record(std::string const& step, VerificationReport const& r, std::string const& detail = {}) {
    json e = {{"step", step}, {"pass", r.passed()}};
    if (!detail.empty()) {
      e["detail"] = detail;
    }
    e["report"] = report_json(r);
    log.push_back(std::move(e));
    if (format != "json") {
      std::cout << "step " << step << ": " << (r.passed() ? "pass" : "fail");
      if (!detail.empty()) {
        std::cout << " (" << detail << ")";
      }
      std::cout << "\n";
      if (!r.passed()) {
        print_text(std::cout, r);
      }
    }
  }

  template <class T>
  T const& need(std::string const& step, char const* what) const {
    if (auto const* p = std::get_if<T>(&stage)) {
      return *p;
    }
    throw ParseError("step \"" + step + "\" needs " + what);
  }

  // Returns false when the step fails.
  bool run(std::string const& step) {
    if (step == "linearize") {
      auto t = need<SkewTruss>(step, "a settruss");
      auto r = verify_skew_truss(t);
      record(step, r, "n = " + std::to_string(t.size()));
      if (!r.passed()) {
        return false;
      }
      stage = linearize(t, field);
      return true;
    }
    if (step == "verify") {
      VerificationReport r;
      if (auto const* t = std::get_if<SkewTruss>(&stage)) {
        r = verify_skew_truss(*t);
      } else if (auto const* h = std::get_if<HopfTruss>(&stage)) {
        r = verify_hopf_truss(*h);
      } else if (auto const* c = std::get_if<GIC>(&stage)) {
        r = verify_gic(*c);
      } else {
        r = verify_truss_hopf_module(std::get<TrussHopfModule>(stage));
      }
      record(step, r);
      return r.passed();
    }
    if (step == "E") {
      auto h = need<HopfTruss>(step, "a Hopf truss");
      auto r = verify_hopf_truss(h);
      record(step, r);
      if (!r.passed()) {
        return false;
      }
      before_E = h;
      stage    = functor_E(h);
      return true;
    }
    if (step == "Q") {
      auto c = need<GIC>(step, "a generalized invertible 1-cocycle");
      auto r = verify_gic(c);
      if (!r.passed()) {
        record(step, r);
        return false;
      }
      auto q = functor_Q(c);
      if (before_E) {
        r.expect("QE.identity", "Theorem EGIHT", q == *before_E, "Q(E(h)) against h");
      }
      record(step, r, before_E ? "Q(E(h)) compared with h" : "");
      stage = q;
      return r.passed();
    }
    if (step == "roundtrip") {
      GIC c;
      if (auto const* h = std::get_if<HopfTruss>(&stage)) {
        c = functor_E(*h);
      } else {
        c = need<GIC>(step, "a Hopf truss or a generalized invertible 1-cocycle");
      }
      auto r = roundtrip_report(c);
      record(step, r);
      return r.passed();
    }
    if (step == "fundamental") {
      auto m  = need<TrussHopfModule>(step, "a trusshopfmodule");
      auto rv = verify_truss_hopf_module(m);
      if (!rv.passed()) {
        record(step, rv);
        return false;
      }
      auto fi = fundamental_iso(m);
      record(step, fi.report,
             "theta: " + std::to_string(fi.theta.dom()) + " -> " + std::to_string(fi.theta.cod())
                 + ", coinvariants of dimension "
                 + std::to_string(fi.theta.dom() / m.truss.dim()));
      return fi.report.passed();
    }
    throw ParseError("unknown step \"" + step + "\"");
  }
};

int cmd_pipeline(std::string const& path, std::string const& steps, std::string const& format) {
  auto     doc = read_algfile(path);
  Pipeline p{SkewTruss{}, doc.field, std::nullopt, json::array(), format};
  if (doc.kind == "settruss") {
    p.stage = skew_truss_of(doc);
    auto& t = std::get<SkewTruss>(p.stage);
    try {
      t.g = FiniteGroup::from_table(t.g.table);
    } catch (InvalidStructure const& e) {
      throw ParseError(std::string("not a group: ") + e.what());
    }
    if (t.omega.empty()) {
      t.omega = derive_omega(t.g, t.s);
    }
  } else if (doc.kind == "hopftruss") {
    p.stage = hopf_truss_of(doc);
  } else if (doc.kind == "gic") {
    p.stage = gic_of(doc);
  } else if (doc.kind == "trusshopfmodule") {
    p.stage = truss_hopf_module_of(doc);
  } else {
    throw ParseError("pipelines start from settruss, hopftruss, gic or trusshopfmodule, not \""
                     + doc.kind + "\"");
  }

  std::vector<std::string> list;
  std::stringstream        ss(steps);
  for (std::string s; std::getline(ss, s, ',');) {
    if (!s.empty()) {
      list.push_back(s);
    }
  }
  if (list.empty()) {
    throw ParseError("no steps given");
  }
  bool ok = true;
  for (auto const& s : list) {
    if (!p.run(s)) {
      ok = false;
      break;
    }
  }
  if (format == "json") {
    std::cout << json{{"steps", p.log}, {"passed", ok}}.dump(2) << "\n";
  } else {
    std::cout << "result: " << (ok ? "pass" : "fail") << "\n";
  }
  return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Hopf trusses, cocycles and their modules"};
  app.require_subcommand(1);

  std::string path, kind, format = "text", group, out, steps;
  std::size_t bound = 4;

  auto* verify = app.add_subcommand("verify", "run the verifier for a document");
  verify->add_option("path", path, "algfile document")->required();
  verify->add_option("--kind", kind, "override the document kind");
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* enumerate = app.add_subcommand("enumerate", "list the skew trusses on a group");
  enumerate->add_option("--group", group, "Z<n>, S3 or a JSON file with a group table")
      ->required();
  enumerate->add_option("--max", bound, "largest group order to enumerate");
  enumerate->add_option("--out", out, "output file (default stdout)");

  auto* pipeline = app.add_subcommand("pipeline", "chain constructions, verifying each step");
  pipeline->add_option("path", path, "algfile document")->required();
  pipeline->add_option("--steps", steps, "comma-separated: linearize, verify, E, Q, roundtrip, fundamental")
      ->required();
  pipeline->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (verify->parsed()) {
      return cmd_verify(path, kind, format);
    }
    if (enumerate->parsed()) {
      return cmd_enumerate(group, bound, out);
    }
    return cmd_pipeline(path, steps, format);
  } catch (VerificationFailed const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  } catch (ParseError const& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (DimensionMismatch const& e) {
    std::cerr << "shape error: " << e.what() << "\n";
    return kInput;
  } catch (FieldError const& e) {
    std::cerr << "field error: " << e.what() << "\n";
    return kInput;
  } catch (BoundExceeded const& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return kInput;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
}
