#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trusslab/catalog.hpp"
#include "trusslab/hopf_truss.hpp"
#include "trusslab/set_truss.hpp"

namespace fixtures {

using namespace trusslab;

struct NamedTruss {
  std::string name;
  HopfTruss   truss;
};

// The Q[Z/2] Hopf brace, the trivial and projection linearizations over Z/2,
// Z/3 and S3 in Q and F5, and the projection trusses on Sweedler's algebra.
inline std::vector<NamedTruss> trusses(bool with_sweedler = true) {
  std::vector<NamedTruss> out;
  auto                    q  = FieldSpec::rationals();
  auto                    f5 = FieldSpec::prime(5);
  out.push_back({"Q[Z2] brace", trivial_truss(group_algebra(q, cyclic_group(2)))});
  std::vector<std::pair<std::string, FiniteGroup>> groups = {
      {"Z2", cyclic_group(2)}, {"Z3", cyclic_group(3)}, {"S3", symmetric_group3()}};
  for (auto const& field : {q, f5}) {
    for (auto const& [gname, g] : groups) {
      auto prefix = field.to_string() + "[" + gname + "] ";
      out.push_back({prefix + "trivial", linearize(trivial_skew_truss(g), field)});
      out.push_back({prefix + "left", linearize(left_projection_skew_truss(g), field)});
      out.push_back({prefix + "right", linearize(right_projection_skew_truss(g), field)});
    }
  }
  out.push_back({"Q[S3] opposite", linearize(opposite_skew_truss(symmetric_group3()), q)});
  if (with_sweedler) {
    for (auto const& field : {q, f5}) {
      auto h      = sweedler_h4(field);
      auto prefix = "H4/" + field.to_string() + " ";
      out.push_back({prefix + "trivial", trivial_truss(h)});
      out.push_back({prefix + "left", left_projection_truss(h)});
      out.push_back({prefix + "right", right_projection_truss(h)});
    }
  }
  return out;
}

}  // namespace fixtures
