#pragma once

#include <cctype>
#include <string>

#include "trusslab/coalgebra.hpp"
#include "trusslab/set_truss.hpp"

namespace trusslab {

// Sweedler's four-dimensional Hopf algebra with basis 1, g, x, gx:
// g^2 = 1, x^2 = 0, xg = -gx, delta(x) = x (x) 1 + g (x) x.
inline HopfMonoidData sweedler_h4(FieldSpec const& f) {
  // g^a x^b has index a + 2b.
  auto idx = [](std::size_t a, std::size_t b) { return a + 2 * b; };
  LinMap mu(f, 4, 16);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      for (std::size_t c = 0; c < 2; ++c) {
        for (std::size_t d = 0; d < 2; ++d) {
          if (b + d > 1) {
            continue;
          }
          long sign = (b * c) % 2 ? -1 : 1;
          mu.set(idx((a + c) % 2, b + d), idx(a, b) * 4 + idx(c, d),
                 Scalar::from_int(f, sign));
        }
      }
    }
  }
  LinMap delta(f, 16, 4);
  auto   one = Scalar::one(f);
  delta.set(0 * 4 + 0, 0, one);
  delta.set(1 * 4 + 1, 1, one);
  delta.set(2 * 4 + 0, 2, one);  // x (x) 1
  delta.set(1 * 4 + 2, 2, one);  // g (x) x
  delta.set(3 * 4 + 1, 3, one);  // gx (x) g
  delta.set(0 * 4 + 3, 3, one);  // 1 (x) gx
  auto epsilon = LinMap::from_ints(f, 1, 4, {{1, 1, 0, 0}});
  auto lambda  = LinMap::from_ints(f, 4, 4,
                                  {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
  return {{4, delta, epsilon}, LinMap::basis_vector(f, 4, 0), mu, lambda};
}

// "Z<n>" for the cyclic group of order n, or "S3".
inline FiniteGroup builtin_group(std::string const& name) {
  if (name == "S3") {
    return symmetric_group3();
  }
  if (name.size() >= 2 && name[0] == 'Z'
      && name.find_first_not_of("0123456789", 1) == std::string::npos) {
    auto n = std::stoul(name.substr(1));
    if (n >= 1 && n <= 64) {
      return cyclic_group(n);
    }
  }
  throw ParseError("unknown group \"" + name + "\"");
}

}  // namespace trusslab
