#pragma once

#include "trusslab/coalgebra.hpp"
#include "trusslab/hopf_truss.hpp"

namespace trusslab {

// A generalized invertible 1-cocycle pi: B -> H with theta and phiH.
struct GIC {
  NonUnitalBimonoidData B;
  HopfMonoidData        H;
  LinMap                pi;     // B -> H
  LinMap                theta;  // B -> B
  LinMap                phiH;   // B (x) H -> H

  FieldSpec const& field() const noexcept { return H.field(); }

  friend bool operator==(GIC const&, GIC const&) = default;
};

struct GICMorphism {
  LinMap f;  // B -> B'
  LinMap g;  // H -> H'
};

inline void check_shape(GIC const& c) {
  check_shape(c.B);
  check_shape(c.H);
  detail::same_field(c.B.field(), c.H.field());
  auto b = c.B.dim();
  auto h = c.H.dim();
  detail::expect_shape(c.pi, h, b, "pi");
  detail::expect_shape(c.theta, b, b, "theta");
  detail::expect_shape(c.phiH, h, b * h, "phiH");
}

namespace detail {

// B is Hopf for some unit, theta = id and phiH is unital.
inline bool is_invertible_1_cocycle(GIC const& c) {
  if (!c.theta.is_identity()) {
    return false;
  }
  auto unit = find_unit(c.B.mu, c.B.dim());
  if (!unit || !verify_unital_bimonoid(c.B, *unit).passed()) {
    return false;
  }
  if (!try_convolution_inverse(LinMap::identity(c.field(), c.B.dim()),
                               c.B.comonoid,
                               {c.B.dim(), *unit, c.B.mu})) {
    return false;
  }
  auto I = LinMap::identity(c.field(), c.H.dim());
  return compose(c.phiH, kron(*unit, I)) == I;
}

}  // namespace detail

inline VerificationReport verify_gic(GIC const& c) {
  check_shape(c);
  auto const&        f = c.field();
  auto const&        B = c.B;
  auto const&        H = c.H;
  VerificationReport r;
  r.merge("B", verify_structure(B));
  r.merge("H", verify_structure(H));
  r.merge("pi", verify_comonoid_morphism(c.pi, B.comonoid, H.comonoid));
  r.expect("pi.invertible", "Definition 1-cocy", is_invertible(c.pi));
  r.merge("theta", verify_comonoid_morphism(c.theta, B.comonoid, B.comonoid));
  r.merge("phi", verify_module_monoid(B, H.monoid(), c.phiH));
  r.expect_equal("1-c",
                 "Eq.(1-c)",
                 compose(c.pi, B.mu),
                 compose(H.mu,
                         kron(compose(c.pi, c.theta), c.phiH),
                         kron(B.comonoid.delta, LinMap::identity(f, H.dim())),
                         kron(LinMap::identity(f, B.dim()), c.pi)));
  r.property("invertible_1_cocycle", r.passed() && detail::is_invertible_1_cocycle(c));
  return r;
}

inline VerificationReport verify_gic_morphism(GICMorphism const& m,
                                              GIC const&         src,
                                              GIC const&         dst) {
  check_shape(src);
  check_shape(dst);
  detail::expect_shape(m.f, dst.B.dim(), src.B.dim(), "f");
  detail::expect_shape(m.g, dst.H.dim(), src.H.dim(), "g");
  VerificationReport r;
  r.merge("f", verify_bimonoid_morphism(m.f, src.B, dst.B));
  r.merge("g", verify_hopf_morphism(m.g, src.H, dst.H));
  r.expect_equal("1-c1", "Eq.(1-c1)", compose(m.f, src.theta), compose(dst.theta, m.f));
  r.expect_equal("1-c2", "Eq.(1-c2)", compose(m.g, src.pi), compose(dst.pi, m.f));
  r.expect_equal("1-c3",
                 "Eq.(1-c3)",
                 compose(m.g, src.phiH),
                 compose(dst.phiH, kron(m.f, m.g)));
  return r;
}

namespace detail {

inline HopfTruss build_Q(GIC const& c) {
  auto pi_inv = invert(c.pi);
  auto mu_pi  = compose(c.pi, c.B.mu, kron(pi_inv, pi_inv));
  auto sigma  = compose(c.pi, c.theta, pi_inv);
  return {c.H.comonoid, c.H.eta, c.H.mu, mu_pi, c.H.lambda, sigma};
}

inline GIC build_E(HopfTruss const& h) {
  return {h.H2(), h.H1(), LinMap::identity(h.field(), h.dim()), h.sigma, gamma_action(h)};
}

}  // namespace detail

// (id: H2 -> H1, theta = sigma) with phiH = Gamma.
inline GIC functor_E(HopfTruss const& h) {
  auto r = verify_hopf_truss(h);
  if (!r.passed()) {
    throw VerificationFailed("functor E needs a Hopf truss", r);
  }
  return detail::build_E(h);
}

// The Hopf truss on H with mu2 = pi mu_B (pi^-1 (x) pi^-1) and
// sigma = pi theta pi^-1.
inline HopfTruss functor_Q(GIC const& c) {
  auto r = verify_gic(c);
  if (!r.passed()) {
    throw VerificationFailed("functor Q needs a generalized invertible 1-cocycle", r);
  }
  return detail::build_Q(c);
}

// Builds Q(c) and E(Q(c)) and certifies (pi, id_H): c -> E(Q(c)) as an
// isomorphism. An invalid c is reported rather than thrown.
inline VerificationReport roundtrip_report(GIC const& c) {
  check_shape(c);
  VerificationReport r;
  r.merge("gic", verify_gic(c));
  if (!is_invertible(c.pi)) {
    r.expect("pi.invertible", "Theorem EGIHT", false, "pi is singular");
    return r;
  }
  auto q = detail::build_Q(c);
  r.merge("Q", verify_hopf_truss(q));
  auto eq = detail::build_E(q);
  r.merge("EQ", verify_gic(eq));
  auto id_h = LinMap::identity(c.field(), c.H.dim());
  r.merge("iso", verify_gic_morphism({c.pi, id_h}, c, eq));
  r.expect("iso.invertible", "Theorem EGIHT", is_invertible(c.pi));
  r.expect_equal("gamma.closing",
                 "Theorem EGIHT",
                 compose(gamma_action(q), kron(c.pi, id_h)),
                 c.phiH);
  return r;
}

// The same cocycle with B relabelled along an isomorphism kappa: B' -> B.
inline GIC transport_gic(GIC const& c, LinMap const& kappa) {
  check_shape(c);
  detail::expect_shape(kappa, c.B.dim(), c.B.dim(), "kappa");
  auto                  ki = invert(kappa);
  auto const&           B  = c.B;
  NonUnitalBimonoidData b2{{B.dim(),
                            compose(kron(ki, ki), B.comonoid.delta, kappa),
                            compose(B.comonoid.epsilon, kappa)},
                           compose(ki, B.mu, kron(kappa, kappa))};
  auto id_h = LinMap::identity(c.field(), c.H.dim());
  return {b2,
          c.H,
          compose(c.pi, kappa),
          compose(ki, c.theta, kappa),
          compose(c.phiH, kron(kappa, id_h))};
}

}  // namespace trusslab
