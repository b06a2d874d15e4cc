#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include <json.hpp>

#include "trusslab/hopf_modules.hpp"
#include "trusslab/set_truss.hpp"

namespace trusslab {

// One document of any kind: field, named dimensions, named matrices and
// named Cayley tables. Matrices are rows of scalar strings.
struct AlgFile {
  std::string                        kind;
  FieldSpec                          field = FieldSpec::rationals();
  std::map<std::string, std::size_t> dims;
  std::map<std::string, DenseMatrix> maps;
  std::map<std::string, Table>       tables;

  std::size_t dim(std::string const& name) const {
    auto it = dims.find(name);
    if (it == dims.end()) {
      throw ParseError("missing dimension \"" + name + "\"");
    }
    return it->second;
  }

  bool has_map(std::string const& name) const { return maps.count(name) != 0; }

  LinMap map(std::string const& name, std::size_t cod, std::size_t dom) const {
    auto it = maps.find(name);
    if (it == maps.end()) {
      throw ParseError("missing map \"" + name + "\"");
    }
    try {
      return LinMap::from_rows(field, cod, dom, it->second);
    } catch (DimensionMismatch const& e) {
      throw DimensionMismatch("map \"" + name + "\": " + e.what());
    }
  }

  Table const& table(std::string const& name) const {
    auto it = tables.find(name);
    if (it == tables.end()) {
      throw ParseError("missing table \"" + name + "\"");
    }
    return it->second;
  }

  void put(std::string const& name, LinMap const& m) { maps[name] = m.to_dense(); }
};

inline std::size_t max_dim() {
  if (char const* env = std::getenv("TRUSSLAB_MAX_DIM")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (std::exception const&) {
      throw ParseError("TRUSSLAB_MAX_DIM is not a number");
    }
  }
  return 16;
}

inline std::vector<std::string> const& algfile_kinds() {
  static std::vector<std::string> const kinds = {
      "comonoid", "monoid",   "bimonoid",   "hopf",       "hopftruss",      "gic",
      "trussmodule", "pimodule", "hopfmodule", "trusshopfmodule", "settruss"};
  return kinds;
}

////////////////////////////////////////////////////////////////////////////////
// JSON
////////////////////////////////////////////////////////////////////////////////

namespace detail {

using nlohmann::json;

inline FieldSpec parse_field(json const& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw ParseError("field must be {\"kind\": \"Q\"} or {\"kind\": \"Fp\", \"p\": int}");
  }
  auto k = j["kind"].get<std::string>();
  if (k == "Q") {
    return FieldSpec::rationals();
  }
  if (k == "Fp") {
    if (!j.contains("p") || !j["p"].is_number_unsigned()) {
      throw ParseError("Fp field needs a positive integer p");
    }
    try {
      return FieldSpec::prime(j["p"].get<std::uint64_t>());
    } catch (FieldError const& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("unknown field kind \"" + k + "\"");
}

inline json field_json(FieldSpec const& f) {
  if (f.is_rational()) {
    return {{"kind", "Q"}};
  }
  return {{"kind", "Fp"}, {"p", f.p}};
}

inline DenseMatrix parse_matrix(FieldSpec const& f, std::string const& name, json const& j) {
  if (!j.is_array()) {
    throw ParseError("map \"" + name + "\" must be an array of rows");
  }
  DenseMatrix out;
  for (auto const& row : j) {
    if (!row.is_array()) {
      throw ParseError("map \"" + name + "\" has a row that is not an array");
    }
    std::vector<Scalar> r;
    for (auto const& x : row) {
      if (x.is_string()) {
        r.push_back(Scalar::parse(f, x.get<std::string>()));
      } else if (x.is_number_integer()) {
        r.push_back(Scalar::from_int(f, x.get<long>()));
      } else {
        throw ParseError("map \"" + name + "\" has an entry that is not a scalar string");
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

inline Table parse_table(std::string const& name, json const& j) {
  if (!j.is_array()) {
    throw ParseError("table \"" + name + "\" must be an array of rows");
  }
  Table out;
  for (auto const& row : j) {
    if (!row.is_array()) {
      throw ParseError("table \"" + name + "\" has a row that is not an array");
    }
    std::vector<std::size_t> r;
    for (auto const& x : row) {
      if (!x.is_number_unsigned()) {
        throw ParseError("table \"" + name + "\" has an entry that is not an index");
      }
      r.push_back(x.get<std::size_t>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace detail

inline AlgFile parse_algfile(std::string const& text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (json::parse_error const& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw ParseError("document must be a JSON object");
  }
  AlgFile doc;
  if (!j.contains("kind") || !j["kind"].is_string()) {
    throw ParseError("document needs a string \"kind\"");
  }
  doc.kind = j["kind"].get<std::string>();
  auto const& kinds = algfile_kinds();
  if (std::find(kinds.begin(), kinds.end(), doc.kind) == kinds.end()) {
    throw ParseError("unknown kind \"" + doc.kind + "\"");
  }
  if (!j.contains("field")) {
    throw ParseError("document needs a \"field\"");
  }
  doc.field = detail::parse_field(j["field"]);
  auto cap  = max_dim();
  if (j.contains("dims")) {
    if (!j["dims"].is_object()) {
      throw ParseError("\"dims\" must be an object");
    }
    for (auto const& [k, v] : j["dims"].items()) {
      if (!v.is_number_unsigned()) {
        throw ParseError("dimension \"" + k + "\" must be a non-negative integer");
      }
      auto d = v.get<std::size_t>();
      if (d > cap) {
        throw ParseError("dimension \"" + k + "\" = " + std::to_string(d)
                         + " exceeds TRUSSLAB_MAX_DIM = " + std::to_string(cap));
      }
      doc.dims[k] = d;
    }
  }
  if (j.contains("maps")) {
    if (!j["maps"].is_object()) {
      throw ParseError("\"maps\" must be an object");
    }
    for (auto const& [k, v] : j["maps"].items()) {
      doc.maps[k] = detail::parse_matrix(doc.field, k, v);
    }
  }
  if (j.contains("tables")) {
    if (!j["tables"].is_object()) {
      throw ParseError("\"tables\" must be an object");
    }
    for (auto const& [k, v] : j["tables"].items()) {
      doc.tables[k] = detail::parse_table(k, v);
    }
  }
  return doc;
}

inline AlgFile read_algfile(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot read \"" + path + "\"");
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algfile(ss.str());
}

inline nlohmann::json algfile_json(AlgFile const& doc) {
  using nlohmann::json;
  json maps = json::object();
  for (auto const& [k, m] : doc.maps) {
    json rows = json::array();
    for (auto const& row : m) {
      json r = json::array();
      for (auto const& x : row) {
        r.push_back(x.to_string());
      }
      rows.push_back(std::move(r));
    }
    maps[k] = std::move(rows);
  }
  json out = {{"kind", doc.kind}, {"field", detail::field_json(doc.field)}, {"dims", doc.dims},
              {"maps", maps}};
  if (!doc.tables.empty()) {
    out["tables"] = doc.tables;
  }
  return out;
}

namespace detail {

// Objects indented, arrays of scalars kept on one line.
inline void write_compact(std::ostream& os, nlohmann::json const& j, int indent) {
  auto pad = [&](int n) { os << std::string(static_cast<std::size_t>(n), ' '); };
  auto flat = [](nlohmann::json const& a) {
    return a.is_array() && std::none_of(a.begin(), a.end(), [](auto const& x) {
             return x.is_array() || x.is_object();
           });
  };
  if (j.is_object() && !j.empty()) {
    os << "{\n";
    std::size_t k = 0;
    for (auto const& [key, v] : j.items()) {
      pad(indent + 2);
      os << nlohmann::json(key).dump() << ": ";
      write_compact(os, v, indent + 2);
      os << (++k < j.size() ? ",\n" : "\n");
    }
    pad(indent);
    os << "}";
  } else if (j.is_array() && !j.empty() && !flat(j)) {
    os << "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      pad(indent + 2);
      write_compact(os, j[k], indent + 2);
      os << (k + 1 < j.size() ? ",\n" : "\n");
    }
    pad(indent);
    os << "]";
  } else if (j.is_array()) {
    os << "[";
    for (std::size_t k = 0; k < j.size(); ++k) {
      os << (k ? ", " : "") << j[k].dump();
    }
    os << "]";
  } else {
    os << j.dump();
  }
}

}  // namespace detail

inline std::string to_compact_string(nlohmann::json const& j) {
  std::ostringstream os;
  detail::write_compact(os, j, 0);
  os << "\n";
  return os.str();
}

// Keys sorted, matrix rows on one line, trailing newline.
inline std::string write_algfile(AlgFile const& doc) { return to_compact_string(algfile_json(doc)); }

////////////////////////////////////////////////////////////////////////////////
// Typed views
////////////////////////////////////////////////////////////////////////////////

namespace detail {

inline std::string pre(std::string const& p, std::string const& name) {
  return p.empty() ? name : p + "." + name;
}

inline void put_comonoid(AlgFile& d, ComonoidData const& c, std::string const& p = {}) {
  d.put(pre(p, "delta"), c.delta);
  d.put(pre(p, "epsilon"), c.epsilon);
}

inline ComonoidData get_comonoid(AlgFile const& d, std::size_t n, std::string const& p = {}) {
  return {n, d.map(pre(p, "delta"), n * n, n), d.map(pre(p, "epsilon"), 1, n)};
}

inline HopfMonoidData get_hopf(AlgFile const& d, std::size_t n, std::string const& p = {}) {
  return {get_comonoid(d, n, p), d.map(pre(p, "eta"), n, 1), d.map(pre(p, "mu"), n, n * n),
          d.map(pre(p, "lambda"), n, n)};
}

inline void put_hopf(AlgFile& d, HopfMonoidData const& h, std::string const& p = {}) {
  put_comonoid(d, h.comonoid, p);
  d.put(pre(p, "eta"), h.eta);
  d.put(pre(p, "mu"), h.mu);
  d.put(pre(p, "lambda"), h.lambda);
}

inline HopfTruss get_truss(AlgFile const& d, std::size_t n) {
  return {get_comonoid(d, n),          d.map("eta", n, 1),        d.map("mu1", n, n * n),
          d.map("mu2", n, n * n),      d.map("lambda", n, n),     d.map("sigma", n, n)};
}

inline void put_truss(AlgFile& d, HopfTruss const& h) {
  put_comonoid(d, h.comonoid);
  d.put("eta", h.eta);
  d.put("mu1", h.mu1);
  d.put("mu2", h.mu2);
  d.put("lambda", h.lambda);
  d.put("sigma", h.sigma);
}

inline GIC get_gic(AlgFile const& d) {
  auto b = d.dim("B");
  auto h = d.dim("H");
  return {{get_comonoid(d, b, "B"), d.map("B.mu", b, b * b)},
          get_hopf(d, h, "H"),
          d.map("pi", h, b),
          d.map("theta", b, b),
          d.map("phiH", h, b * h)};
}

inline void put_gic(AlgFile& d, GIC const& c) {
  d.dims["B"] = c.B.dim();
  d.dims["H"] = c.H.dim();
  put_comonoid(d, c.B.comonoid, "B");
  d.put("B.mu", c.B.mu);
  put_hopf(d, c.H, "H");
  d.put("pi", c.pi);
  d.put("theta", c.theta);
  d.put("phiH", c.phiH);
}

inline AlgFile blank(std::string kind, FieldSpec const& f) {
  AlgFile d;
  d.kind  = std::move(kind);
  d.field = f;
  return d;
}

}  // namespace detail

inline AlgFile to_algfile(ComonoidData const& c) {
  auto d       = detail::blank("comonoid", c.field());
  d.dims["H"]  = c.dim;
  detail::put_comonoid(d, c);
  return d;
}

inline AlgFile to_algfile(MonoidData const& m) {
  auto d      = detail::blank("monoid", m.mu.field());
  d.dims["H"] = m.dim;
  d.put("eta", m.eta);
  d.put("mu", m.mu);
  return d;
}

inline AlgFile to_algfile(NonUnitalBimonoidData const& b) {
  auto d      = detail::blank("bimonoid", b.field());
  d.dims["H"] = b.dim();
  detail::put_comonoid(d, b.comonoid);
  d.put("mu", b.mu);
  return d;
}

inline AlgFile to_algfile(HopfMonoidData const& h) {
  auto d      = detail::blank("hopf", h.field());
  d.dims["H"] = h.dim();
  detail::put_hopf(d, h);
  return d;
}

inline AlgFile to_algfile(HopfTruss const& h, std::optional<LinMap> const& s2 = {}) {
  auto d      = detail::blank("hopftruss", h.field());
  d.dims["H"] = h.dim();
  detail::put_truss(d, h);
  if (s2) {
    d.put("s2", *s2);
  }
  return d;
}

inline AlgFile to_algfile(GIC const& c) {
  auto d = detail::blank("gic", c.field());
  detail::put_gic(d, c);
  return d;
}

inline AlgFile to_algfile(TrussModule const& m) {
  auto d      = to_algfile(m.truss);
  d.kind      = "trussmodule";
  d.dims["M"] = m.mdim;
  d.put("psi1", m.psi1);
  d.put("psi2", m.psi2);
  return d;
}

inline AlgFile to_algfile(PiModule const& m) {
  auto d      = to_algfile(m.gic);
  d.kind      = "pimodule";
  d.dims["M"] = m.mdim;
  d.dims["N"] = m.ndim;
  d.put("phiM", m.phiM);
  d.put("varphiM", m.varphiM);
  d.put("phiN", m.phiN);
  d.put("gamma", m.gamma);
  return d;
}

inline AlgFile to_algfile(HopfModuleData const& m) {
  auto d      = to_algfile(m.hopf);
  d.kind      = "hopfmodule";
  d.dims["M"] = m.mdim;
  d.put("varphi", m.varphi);
  d.put("rho", m.rho);
  return d;
}

inline AlgFile to_algfile(TrussHopfModule const& m) {
  auto d = to_algfile(m.module());
  d.kind = "trusshopfmodule";
  d.put("rho", m.rho);
  return d;
}

// Settruss documents carry only tables; the field is Q by convention.
inline AlgFile to_algfile(SkewTruss const& t) {
  auto d                = detail::blank("settruss", FieldSpec::rationals());
  d.dims["n"]           = t.size();
  d.tables["group"]     = t.g.table;
  d.tables["semigroup"] = t.s.table;
  d.tables["omega"]     = {t.omega};
  return d;
}

namespace detail {

inline void expect_kind(AlgFile const& d, std::string const& kind) {
  if (d.kind != kind) {
    throw ParseError("expected a \"" + kind + "\" document, got \"" + d.kind + "\"");
  }
}

}  // namespace detail

inline ComonoidData comonoid_of(AlgFile const& d) {
  detail::expect_kind(d, "comonoid");
  return detail::get_comonoid(d, d.dim("H"));
}

inline MonoidData monoid_of(AlgFile const& d) {
  detail::expect_kind(d, "monoid");
  auto n = d.dim("H");
  return {n, d.map("eta", n, 1), d.map("mu", n, n * n)};
}

inline NonUnitalBimonoidData bimonoid_of(AlgFile const& d) {
  detail::expect_kind(d, "bimonoid");
  auto n = d.dim("H");
  return {detail::get_comonoid(d, n), d.map("mu", n, n * n)};
}

inline HopfMonoidData hopf_of(AlgFile const& d) {
  detail::expect_kind(d, "hopf");
  return detail::get_hopf(d, d.dim("H"));
}

inline HopfTruss hopf_truss_of(AlgFile const& d) {
  detail::expect_kind(d, "hopftruss");
  return detail::get_truss(d, d.dim("H"));
}

inline std::optional<LinMap> brace_antipode_of(AlgFile const& d) {
  if (!d.has_map("s2")) {
    return std::nullopt;
  }
  auto n = d.dim("H");
  return d.map("s2", n, n);
}

inline GIC gic_of(AlgFile const& d) {
  detail::expect_kind(d, "gic");
  return detail::get_gic(d);
}

inline TrussModule truss_module_of(AlgFile const& d) {
  detail::expect_kind(d, "trussmodule");
  auto n = d.dim("H");
  auto m = d.dim("M");
  return {detail::get_truss(d, n), m, d.map("psi1", m, n * m), d.map("psi2", m, n * m)};
}

inline PiModule pi_module_of(AlgFile const& d) {
  detail::expect_kind(d, "pimodule");
  auto b = d.dim("B");
  auto h = d.dim("H");
  auto m = d.dim("M");
  auto n = d.dim("N");
  return {detail::get_gic(d),          m, n, d.map("phiM", m, b * m), d.map("varphiM", m, h * m),
          d.map("phiN", n, b * n), d.map("gamma", m, n)};
}

inline HopfModuleData hopf_module_of(AlgFile const& d) {
  detail::expect_kind(d, "hopfmodule");
  auto n = d.dim("H");
  auto m = d.dim("M");
  return {detail::get_hopf(d, n), m, d.map("varphi", m, n * m), d.map("rho", n * m, m)};
}

inline TrussHopfModule truss_hopf_module_of(AlgFile const& d) {
  detail::expect_kind(d, "trusshopfmodule");
  auto n = d.dim("H");
  auto m = d.dim("M");
  return {detail::get_truss(d, n), m, d.map("psi1", m, n * m), d.map("psi2", m, n * m),
          d.map("rho", n * m, m)};
}

// Tables are checked for shape and range here; group and truss axioms are
// left to the verifier.
inline SkewTruss skew_truss_of(AlgFile const& d) {
  detail::expect_kind(d, "settruss");
  auto n     = d.dim("n");
  auto check = [&](Table const& t, std::string const& name, std::size_t rows) {
    if (t.size() != rows) {
      throw ParseError("table \"" + name + "\" has the wrong number of rows");
    }
    for (auto const& r : t) {
      if (r.size() != n) {
        throw ParseError("table \"" + name + "\" has a row of the wrong length");
      }
      for (auto x : r) {
        if (x >= n) {
          throw ParseError("table \"" + name + "\" has an entry out of range");
        }
      }
    }
  };
  auto const& g = d.table("group");
  auto const& s = d.table("semigroup");
  check(g, "group", n);
  check(s, "semigroup", n);
  SkewTruss t;
  t.g = {n, g, 0, std::vector<std::size_t>(n, 0)};
  t.s = {n, s};
  if (d.tables.count("omega")) {
    auto const& w = d.table("omega");
    check(w, "omega", 1);
    t.omega = w[0];
  }
  return t;
}

////////////////////////////////////////////////////////////////////////////////
// Verification and reports
////////////////////////////////////////////////////////////////////////////////

// Runs the verifier of the document's kind.
inline VerificationReport verify_algfile(AlgFile const& d) {
  auto const& k = d.kind;
  if (k == "comonoid") return verify_structure(comonoid_of(d));
  if (k == "monoid") return verify_structure(monoid_of(d));
  if (k == "bimonoid") return verify_structure(bimonoid_of(d));
  if (k == "hopf") return verify_structure(hopf_of(d));
  if (k == "hopftruss") return verify_hopf_truss(hopf_truss_of(d), brace_antipode_of(d));
  if (k == "gic") return verify_gic(gic_of(d));
  if (k == "trussmodule") return verify_truss_module(truss_module_of(d));
  if (k == "pimodule") return verify_pi_module(pi_module_of(d));
  if (k == "hopfmodule") return verify_hopf_module(hopf_module_of(d));
  if (k == "trusshopfmodule") return verify_truss_hopf_module(truss_hopf_module_of(d));
  if (k == "settruss") {
    auto t = skew_truss_of(d);
    try {
      t.g = FiniteGroup::from_table(t.g.table);
    } catch (InvalidStructure const& e) {
      VerificationReport r;
      r.expect("group", "group axioms", false, e.what());
      return r;
    }
    if (t.omega.empty()) {
      t.omega = derive_omega(t.g, t.s);
    }
    return verify_skew_truss(t);
  }
  throw ParseError("unknown kind \"" + k + "\"");
}

inline nlohmann::json report_json(VerificationReport const& r) {
  using nlohmann::json;
  json checks = json::array();
  for (auto const& c : r.checks()) {
    json e = {{"name", c.name}, {"anchor", c.anchor}, {"pass", c.pass},
              {"residual_zero", c.pass}};
    if (!c.note.empty()) {
      e["note"] = c.note;
    }
    checks.push_back(std::move(e));
  }
  json props = json::object();
  for (auto const& [n, v] : r.properties()) {
    props[n] = v;
  }
  return {{"checks", checks}, {"passed", r.passed()}, {"properties", props}};
}

}  // namespace trusslab
