// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "support.hpp"
#include "trusslab/trusslab.hpp"

using namespace trusslab;

namespace {

using testsupport::F5;
using testsupport::Q;
using testsupport::unimodular;

// Fixture trusses named by the axiom-suite criterion: the brace and the
// trivial and projection linearizations on Z2, Z3, S3 over Q and F5.
std::vector<fixtures::NamedTruss> criterion_trusses() {
  std::vector<fixtures::NamedTruss> out;
  for (auto& t : fixtures::trusses(false)) {
    if (t.name.find("opposite") == std::string::npos) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

// Every fixture GIC: E(h) and a transport along a unimodular relabelling.
std::vector<std::pair<std::string, GIC>> fixture_gics() {
  std::vector<std::pair<std::string, GIC>> out;
  for (auto const& [name, h] : fixtures::trusses()) {
    auto c = functor_E(h);
    out.emplace_back(name, c);
    out.emplace_back(name + " transported", transport_gic(c, unimodular(h.field(), h.dim())));
  }
  return out;
}

struct Outcome {
  bool        pass = true;
  std::string detail;
  std::string failure;

  void require(bool ok, std::string const& what) {
    if (!ok && pass) {
      failure = what;
    }
    pass = pass && ok;
  }
};

void report(int n, std::string const& title, Outcome const& o) {
  std::cout << "criterion " << n << " [" << (o.pass ? "PASS" : "FAIL") << "] " << title;
  if (!o.detail.empty()) {
    std::cout << ": " << o.detail;
  }
  if (!o.pass) {
    std::cout << " (first failure: " << o.failure << ")";
  }
  std::cout << std::endl;
}

////////////////////////////////////////////////////////////////////////////////

struct Perturbation {
  std::string                         label;
  std::function<HopfTruss()>          base;
  std::function<LinMap&(HopfTruss&)>  map;
  std::size_t                         row;
  std::size_t                         col;
};

Outcome axiom_suites() {
  Outcome o;
  auto    ts = criterion_trusses();
  for (auto const& [name, h] : ts) {
    o.require(verify_hopf_truss(h).passed(), name);
  }
  auto brace = [] { return trivial_truss(group_algebra(Q, cyclic_group(2))); };
  o.require(verify_hopf_truss(brace(), brace().lambda).passed(), "brace with s2");

  auto z3r  = [] { return linearize(right_projection_skew_truss(cyclic_group(3)), Q); };
  auto z3l  = [] { return linearize(left_projection_skew_truss(cyclic_group(3)), F5); };
  auto s3t  = [] { return linearize(trivial_skew_truss(symmetric_group3()), Q); };
  auto s3r  = [] { return linearize(right_projection_skew_truss(symmetric_group3()), F5); };
  auto z2l  = [] { return linearize(left_projection_skew_truss(cyclic_group(2)), F5); };
  auto delta   = [](HopfTruss& h) -> LinMap& { return h.comonoid.delta; };
  auto epsilon = [](HopfTruss& h) -> LinMap& { return h.comonoid.epsilon; };
  auto eta     = [](HopfTruss& h) -> LinMap& { return h.eta; };
  auto mu1     = [](HopfTruss& h) -> LinMap& { return h.mu1; };
  auto mu2     = [](HopfTruss& h) -> LinMap& { return h.mu2; };
  auto lambda  = [](HopfTruss& h) -> LinMap& { return h.lambda; };
  auto sigma   = [](HopfTruss& h) -> LinMap& { return h.sigma; };

  std::vector<Perturbation> ps = {
      {"brace delta(0,0)", brace, delta, 0, 0},     {"brace epsilon(0,1)", brace, epsilon, 0, 1},
      {"brace eta(1,0)", brace, eta, 1, 0},         {"brace mu1(1,3)", brace, mu1, 1, 3},
      {"brace mu2(0,1)", brace, mu2, 0, 1},         {"brace lambda(0,1)", brace, lambda, 0, 1},
      {"brace sigma(1,0)", brace, sigma, 1, 0},     {"Z3 right delta(4,1)", z3r, delta, 4, 1},
      {"Z3 right mu1(2,4)", z3r, mu1, 2, 4},        {"Z3 right mu2(0,4)", z3r, mu2, 0, 4},
      {"Z3 right sigma(2,2)", z3r, sigma, 2, 2},    {"Z3 right lambda(1,1)", z3r, lambda, 1, 1},
      {"F5 Z3 left mu2(1,7)", z3l, mu2, 1, 7},      {"F5 Z3 left epsilon(0,2)", z3l, epsilon, 0, 2},
      {"F5 Z3 left eta(0,0)", z3l, eta, 0, 0},      {"S3 trivial mu1(5,20)", s3t, mu1, 5, 20},
      {"S3 trivial mu2(3,35)", s3t, mu2, 3, 35},    {"S3 trivial lambda(4,4)", s3t, lambda, 4, 4},
      {"F5 S3 right mu2(2,13)", s3r, mu2, 2, 13},   {"F5 S3 right sigma(0,3)", s3r, sigma, 0, 3},
      {"F5 Z2 left delta(1,0)", z2l, delta, 1, 0},  {"F5 Z2 left mu1(0,0)", z2l, mu1, 0, 0},
  };
  std::size_t caught = 0;
  for (auto const& p : ps) {
    auto h = p.base();
    auto& m = p.map(h);
    m.add_to(p.row, p.col, Scalar::one(h.field()));
    bool detected = !verify_hopf_truss(h).passed();
    caught += detected ? 1 : 0;
    o.require(detected, "perturbation " + p.label + " undetected");
  }
  o.detail = std::to_string(ts.size()) + " fixtures verified, " + std::to_string(caught) + "/"
             + std::to_string(ps.size()) + " perturbations caught";
  return o;
}

Outcome functor_round_trip() {
  Outcome     o;
  std::size_t nt = 0, ng = 0;
  for (auto const& [name, h] : fixtures::trusses()) {
    o.require(functor_Q(functor_E(h)) == h, "Q(E(h)) != h for " + name);
    ++nt;
  }
  for (auto const& [name, c] : fixture_gics()) {
    auto r = roundtrip_report(c);
    o.require(r.passed() && r.passed("iso.invertible"), "roundtrip of " + name);
    ++ng;
  }
  o.detail = std::to_string(nt) + " trusses, " + std::to_string(ng) + " cocycles";
  return o;
}

Outcome grouplike_unit() {
  Outcome     o;
  std::size_t n = 0;
  for (auto const& g : {cyclic_group(2), cyclic_group(3)}) {
    for (auto const& t : enumerate_skew_trusses(g)) {
      for (auto const& f : {Q, F5}) {
        auto back = truss_of_grouplikes(linearize(t, f));
        o.require(back.g.table == t.g.table && back.s.table == t.s.table && back.omega == t.omega,
                  "grouplike truss differs on Z" + std::to_string(g.n));
      }
      ++n;
    }
  }
  o.detail = std::to_string(n) + " enumerated trusses, over Q and F5";
  return o;
}

Outcome enumeration_oracle() {
  Outcome     o;
  std::string d;
  for (auto const& g : {cyclic_group(2), cyclic_group(3)}) {
    auto lib = enumerate_skew_trusses(g);
    auto ref = testoracle::all_skew_truss_tables(g);
    std::set<Table> a, b(ref.begin(), ref.end());
    for (auto const& t : lib) {
      a.insert(t.s.table);
    }
    o.require(lib.size() == ref.size() && a == b, "mismatch on Z" + std::to_string(g.n));
    d += (d.empty() ? "" : ", ") + std::string("Z") + std::to_string(g.n) + ": "
         + std::to_string(lib.size()) + " = " + std::to_string(ref.size());
  }
  o.detail = d;
  return o;
}

std::vector<PiModule> fixture_pi_modules(GIC const& c) {
  auto q    = functor_Q(c);
  auto id_h = LinMap::identity(c.field(), c.H.dim());
  return {regular_pi_module(c), trivial_pi_module(c),
          conjugate_pi_module(regular_pi_module(c), unimodular(c.field(), c.B.dim())),
          restrict_along({c.pi, id_h}, c, functor_G_H(induction_module(q, 2)))};
}

Outcome module_equivalence() {
  Outcome     o;
  std::size_t n = 0;
  for (auto const& [name, c] : fixture_gics()) {
    auto id_h = LinMap::identity(c.field(), c.H.dim());
    auto Bi   = LinMap::identity(c.field(), c.B.dim());
    for (auto const& p : fixture_pi_modules(c)) {
      auto t    = functor_H_tr_pi(p);
      auto back = restrict_along({c.pi, id_h}, c, functor_G_H(t));
      o.require(functor_H_tr_pi(back) == t, "H o M o G != id over " + name);
      auto id_m = LinMap::identity(c.field(), p.mdim);
      PiModule want{c, p.mdim, p.mdim, p.phiM, p.varphiM,
                    compose(p.gamma, p.phiN, kron(Bi, invert(p.gamma))), id_m};
      o.require(back == want, "reverse composite shape over " + name);
      o.require(verify_pi_module_morphism(id_m, p.gamma, p, back).passed(),
                "(id, gamma) over " + name);
      ++n;
    }
  }
  o.detail = std::to_string(n) + " modules over " + std::to_string(fixture_gics().size())
             + " cocycles";
  return o;
}

Outcome fundamental_theorem() {
  Outcome     o;
  std::size_t n = 0;
  for (auto const& [name, h] : fixtures::trusses()) {
    for (std::size_t x : {1u, 2u, 3u}) {
      auto m  = induction_functor(h, x);
      auto fi = fundamental_iso(m);
      o.require(fi.report.passed() && fi.report.size() == 5, "theta for " + name);
      auto co = coinvariants(m.h1());
      auto X  = LinMap::identity(h.field(), x);
      o.require(co.codim == x && co.j == kron(h.eta, X), "coinvariants for " + name);
      ++n;
    }
  }
  o.detail = std::to_string(n) + " regular and induced modules";
  return o;
}

Outcome adjunction() {
  Outcome     o;
  std::size_t n = 0;
  for (auto const& [name, h] : fixtures::trusses()) {
    std::vector<TrussHopfModule> ms = {induction_functor(h, 1), induction_functor(h, 2)};
    auto k  = unimodular(h.field(), 2 * h.dim());
    auto ki = invert(k);
    auto H  = LinMap::identity(h.field(), h.dim());
    auto c  = ms[1];
    c.psi1  = compose(ki, c.psi1, kron(H, k));
    c.psi2  = compose(ki, c.psi2, kron(H, k));
    c.rho   = compose(kron(H, ki), c.rho, k);
    ms.push_back(c);
    for (std::size_t x : {1u, 2u}) {
      for (auto const& m : ms) {
        auto r = adjunction_check(h, x, m);
        o.require(r.passed() && r.passed("triangle.F") && r.passed("triangle.W"),
                  "adjunction for " + name);
        ++n;
      }
    }
  }
  o.detail = std::to_string(n) + " (truss, X, module) triples";
  return o;
}

Outcome derived_identities() {
  Outcome     o;
  std::size_t n = 0;
  for (auto const& [name, h] : fixtures::trusses()) {
    auto r = verify_hopf_truss(h);
    for (auto const* c : {"sigma.cocycle1", "gamma.bmm1", "gamma.bmm2"}) {
      o.require(r.passed(c), std::string(c) + " for " + name);
    }
    auto a = antipode_identities(h.H1());
    for (auto const& c : a.checks()) {
      o.require(c.pass, c.name + " for " + name);
    }
    for (auto const& m : {regular_module(h), trivial_module(h), induction_module(h, 2)}) {
      auto rm = verify_truss_module(m);
      o.require(rm.passed("mod-l1") && rm.passed("mod-l1p") && rm.passed("GMH1"),
                "module identities for " + name);
    }
    n += 1;
  }
  std::size_t np = 0;
  for (auto const& [name, c] : fixture_gics()) {
    for (auto const& p : fixture_pi_modules(c)) {
      auto r = verify_pi_module(p);
      o.require(r.passed("req-g1") && r.passed("req-g2"), "req-g for " + name);
      ++np;
    }
  }
  o.detail = std::to_string(n) + " trusses, " + std::to_string(np) + " pi-modules";
  return o;
}

struct Run {
  int         code = -1;
  std::string out;
};

Run run_cli(std::string const& args) {
  std::string cmd = std::string(TRUSSLAB_CLI) + " " + args + " 2>/dev/null";
  Run         r;
  FILE*       p = ::popen(cmd.c_str(), "r");
  if (!p) {
    return r;
  }
  char buf[4096];
  for (std::size_t k; (k = std::fread(buf, 1, sizeof buf, p)) > 0;) {
    r.out.append(buf, k);
  }
  int status = ::pclose(p);
  r.code     = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Outcome determinism() {
  Outcome     o;
  std::string data = TRUSSLAB_TEST_DATA;
  auto        dir  = std::filesystem::temp_directory_path() / "trusslab-acceptance";
  std::filesystem::create_directories(dir);
  std::vector<std::string> cmds = {
      "verify --format json " + data + "/hopftruss-z2-brace.json",
      "verify --format json " + data + "/hopftruss-z2-bad-sigma.json",
      "verify --format json " + data + "/pimodule-z3-regular.json",
      "pipeline --format json " + data + "/settruss-s3-opposite.json --steps linearize,E,Q,roundtrip",
      "pipeline --format json " + data + "/trusshopfmodule-z3-right.json --steps fundamental",
  };
  for (auto const& c : cmds) {
    auto a = run_cli(c);
    auto b = run_cli(c);
    o.require(a.code >= 0 && !a.out.empty() && a.out == b.out, c);
  }
  for (auto const* g : {"Z2", "Z3", "S3"}) {
    std::string const bound = std::string(g) == "S3" ? " --max 6" : "";
    auto fa = (dir / (std::string(g) + "-a.json")).string();
    auto fb = (dir / (std::string(g) + "-b.json")).string();
    auto a  = run_cli(std::string("enumerate --group ") + g + bound + " --out " + fa);
    auto b  = run_cli(std::string("enumerate --group ") + g + bound + " --out " + fb);
    std::ifstream     ia(fa, std::ios::binary), ib(fb, std::ios::binary);
    std::stringstream sa, sb;
    sa << ia.rdbuf();
    sb << ib.rdbuf();
    o.require(a.code == 0 && b.code == 0 && !sa.str().empty() && sa.str() == sb.str(),
              std::string("enumerate ") + g);
  }
  o.detail = std::to_string(cmds.size() + 3) + " commands run twice";
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"axiom suites and mutation coverage", axiom_suites},
      {"Q(E(h)) = h and (pi, id) round trip", functor_round_trip},
      {"grouplikes of a linearized truss recover it", grouplike_unit},
      {"enumeration agrees with brute force", enumeration_oracle},
      {"truss modules and pi-modules are equivalent", module_equivalence},
      {"fundamental theorem of Hopf modules", fundamental_theorem},
      {"induction-coinvariants adjunction", adjunction},
      {"derived identities hold exactly", derived_identities},
      {"CLI output is deterministic", determinism},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (std::exception const& e) {
      o.pass    = false;
      o.failure = std::string("exception: ") + e.what();
    }
    report(static_cast<int>(i + 1), criteria[i].first, o);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
