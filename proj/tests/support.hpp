#pragma once

#include <random>

#include "trusslab/linmap.hpp"

namespace testsupport {

using trusslab::FieldSpec;
using trusslab::LinMap;
using trusslab::Scalar;

inline FieldSpec const Q  = FieldSpec::rationals();
inline FieldSpec const F5 = FieldSpec::prime(5);

// A map with small random entries; over Q some entries are fractions.
inline LinMap random_map(FieldSpec const& f,
                         std::size_t      cod,
                         std::size_t      dom,
                         std::mt19937&    rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  LinMap                             m(f, cod, dom);
  for (std::size_t i = 0; i < cod; ++i) {
    for (std::size_t j = 0; j < dom; ++j) {
      mpq_class q(num(rng), den(rng));
      q.canonicalize();
      m.set(i, j, Scalar::from_rational(f, q));
    }
  }
  return m;
}

// Upper times lower unitriangular: invertible over every field.
inline LinMap unimodular(FieldSpec const& f, std::size_t n) {
  auto u = LinMap::identity(f, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    u.set(i, i + 1, Scalar::from_int(f, static_cast<long>(i) + 1));
  }
  auto l = LinMap::identity(f, n);
  if (n > 1) {
    l.set(n - 1, 0, Scalar::from_int(f, 2));
  }
  return compose(u, l);
}

}  // namespace testsupport
