#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "trusslab/linmap.hpp"

namespace trusslab {

// One law checked by a verifier. When the law is an identity of maps the
// residual lhs - rhs is kept for failures.
struct Check {
  std::string           name;
  std::string           anchor;
  bool                  pass = false;
  std::optional<LinMap> residual;
  std::string           note;
};

class VerificationReport {
 public:
  // Record lhs == rhs. Shapes must agree; a shape disagreement is a bug in
  // the caller, not a failed law.
  VerificationReport& expect_equal(std::string   name,
                                   std::string   anchor,
                                   LinMap const& lhs,
                                   LinMap const& rhs) {
    LinMap diff = lhs - rhs;
    Check  c{std::move(name), std::move(anchor), diff.is_zero(), {}, {}};
    if (!c.pass) {
      c.residual = std::move(diff);
    }
    checks_.push_back(std::move(c));
    return *this;
  }

  VerificationReport& expect(std::string name,
                             std::string anchor,
                             bool        pass,
                             std::string note = {}) {
    checks_.push_back(
        {std::move(name), std::move(anchor), pass, {}, std::move(note)});
    return *this;
  }

  // Informational attribute; never affects passed().
  VerificationReport& property(std::string name, bool value) {
    properties_.emplace_back(std::move(name), value);
    return *this;
  }

  // Append every check of other, prefixing names with "prefix.".
  VerificationReport& merge(std::string const&        prefix,
                            VerificationReport const& other) {
    for (auto const& c : other.checks_) {
      Check copy = c;
      copy.name  = prefix.empty() ? c.name : prefix + "." + c.name;
      checks_.push_back(std::move(copy));
    }
    for (auto const& [n, v] : other.properties_) {
      properties_.emplace_back(prefix.empty() ? n : prefix + "." + n, v);
    }
    return *this;
  }

  bool passed() const {
    return std::all_of(checks_.begin(), checks_.end(), [](Check const& c) {
      return c.pass;
    });
  }

  std::vector<Check> const& checks() const noexcept { return checks_; }

  std::vector<std::pair<std::string, bool>> const& properties() const noexcept {
    return properties_;
  }

  std::vector<Check> failures() const {
    std::vector<Check> out;
    std::copy_if(checks_.begin(),
                 checks_.end(),
                 std::back_inserter(out),
                 [](Check const& c) { return !c.pass; });
    return out;
  }

  Check const* find(std::string const& name) const {
    for (auto const& c : checks_) {
      if (c.name == name) {
        return &c;
      }
    }
    return nullptr;
  }

  std::optional<bool> find_property(std::string const& name) const {
    for (auto const& [n, v] : properties_) {
      if (n == name) {
        return v;
      }
    }
    return std::nullopt;
  }

  // Pass flag of the named check; throws if there is no such check.
  bool passed(std::string const& name) const {
    auto const* c = find(name);
    if (c == nullptr) {
      throw Error("no check named \"" + name + "\"");
    }
    return c->pass;
  }

  std::size_t size() const noexcept { return checks_.size(); }

 private:
  std::vector<Check>                        checks_;
  std::vector<std::pair<std::string, bool>> properties_;
};

inline std::ostream& operator<<(std::ostream& os, VerificationReport const& r) {
  for (auto const& c : r.checks()) {
    os << (c.pass ? "  pass  " : "  FAIL  ") << c.name;
    if (!c.anchor.empty()) {
      os << "  [" << c.anchor << "]";
    }
    if (!c.note.empty()) {
      os << "  " << c.note;
    }
    os << '\n';
    if (c.residual) {
      os << "        residual " << c.residual->cod() << "x"
         << c.residual->dom() << ", " << c.residual->nnz()
         << " nonzero entries\n";
    }
  }
  for (auto const& [n, v] : r.properties()) {
    os << "  prop  " << n << " = " << (v ? "true" : "false") << '\n';
  }
  return os;
}

// Thrown by constructions whose input fails verification.
class VerificationFailed : public InvalidStructure {
 public:
  VerificationFailed(std::string const& what, VerificationReport report)
      : InvalidStructure(what + summary(report)), report_(std::move(report)) {}

  VerificationReport const& report() const noexcept { return report_; }

 private:
  static std::string summary(VerificationReport const& r) {
    std::string s;
    for (auto const& c : r.checks()) {
      if (!c.pass) {
        s += s.empty() ? ": failing " : ", ";
        s += c.name;
      }
    }
    return s;
  }

  VerificationReport report_;
};

}  // namespace trusslab
