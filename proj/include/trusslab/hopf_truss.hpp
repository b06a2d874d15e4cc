#pragma once

#include <optional>

#include "trusslab/coalgebra.hpp"

namespace trusslab {

// (H, eta, mu1, mu2, epsilon, delta, lambda, sigma). H1 is the Hopf side,
// H2 the non-unital bimonoid side, sigma the cocycle.
struct HopfTruss {
  ComonoidData comonoid;
  LinMap       eta;
  LinMap       mu1;
  LinMap       mu2;
  LinMap       lambda;
  LinMap       sigma;

  std::size_t      dim() const noexcept { return comonoid.dim; }
  FieldSpec const& field() const noexcept { return comonoid.field(); }

  HopfMonoidData H1() const { return {comonoid, eta, mu1, lambda}; }

  NonUnitalBimonoidData H2() const { return {comonoid, mu2}; }

  friend bool operator==(HopfTruss const&, HopfTruss const&) = default;
};

inline void check_shape(HopfTruss const& h) {
  check_shape(h.H1());
  auto n = h.dim();
  detail::expect_shape(h.mu2, n, n * n, "mu2");
  detail::expect_shape(h.sigma, n, n, "sigma");
  detail::expect_field(h.field(), h.mu2, "mu2");
  detail::expect_field(h.field(), h.sigma, "sigma");
}

inline LinMap derive_sigma(LinMap const& mu2, LinMap const& eta) {
  auto n = eta.cod();
  detail::expect_shape(mu2, n, n * n, "mu2");
  detail::expect_shape(eta, n, 1, "eta");
  return compose(mu2, kron(LinMap::identity(mu2.field(), n), eta));
}

// Gamma = mu1 o ((lambda o sigma) (x) mu2) o (delta (x) H).
inline LinMap gamma_action(HopfTruss const& h) {
  check_shape(h);
  auto I = LinMap::identity(h.field(), h.dim());
  return compose(h.mu1,
                 kron(compose(h.lambda, h.sigma), h.mu2),
                 kron(h.comonoid.delta, I));
}

// (A, phi) as a left module over the product mu_b: phi o (B (x) phi) =
// phi o (mu_b (x) A), plus phi o (eta_b (x) A) = id when a unit is given.
inline VerificationReport verify_module(LinMap const&                mu_b,
                                        LinMap const&                phi,
                                        std::size_t                  bdim,
                                        std::size_t                  adim,
                                        std::optional<LinMap> const& eta_b = {}) {
  detail::expect_shape(mu_b, bdim, bdim * bdim, "product");
  detail::expect_shape(phi, adim, bdim * adim, "action");
  auto const&        f = phi.field();
  auto               B = LinMap::identity(f, bdim);
  auto               A = LinMap::identity(f, adim);
  VerificationReport r;
  r.expect_equal("action.associative",
                 "left module",
                 compose(phi, kron(B, phi)),
                 compose(phi, kron(mu_b, A)));
  if (eta_b) {
    r.expect_equal("action.unital", "left module", compose(phi, kron(*eta_b, A)), A);
  }
  return r;
}

// (A, phi) as a non-unital left B-module monoid.
inline VerificationReport verify_module_monoid(NonUnitalBimonoidData const& b,
                                               MonoidData const&            a,
                                               LinMap const&                phi) {
  check_shape(b);
  check_shape(a);
  auto const&        f  = phi.field();
  auto               B  = LinMap::identity(f, b.dim());
  auto               A  = LinMap::identity(f, a.dim);
  VerificationReport r  = verify_module(b.mu, phi, b.dim(), a.dim);
  r.expect_equal("bmm1",
                 "Eq.(bmm1)",
                 compose(phi, kron(B, a.eta)),
                 kron(b.comonoid.epsilon, a.eta));
  r.expect_equal("bmm2",
                 "Eq.(bmm2)",
                 compose(phi, kron(B, a.mu)),
                 compose(a.mu,
                         kron(phi, phi),
                         kron(B, swap(b.dim(), a.dim, f), A),
                         kron(b.comonoid.delta, A, A)));
  return r;
}

// With s2 given, also checks that (eta, mu2, epsilon, delta, s2) is a Hopf
// monoid, i.e. that h is a Hopf brace.
inline VerificationReport verify_hopf_truss(HopfTruss const&             h,
                                            std::optional<LinMap> const& s2 = {}) {
  check_shape(h);
  auto const&        f = h.field();
  auto               n = h.dim();
  auto               I = LinMap::identity(f, n);
  auto const&        c = h.comonoid;
  VerificationReport r;
  r.merge("H1", verify_structure(h.H1()));
  r.merge("H2", verify_structure(h.H2()));
  r.merge("sigma", verify_comonoid_morphism(h.sigma, c, c));

  auto gamma = gamma_action(h);
  r.expect_equal("compatibility",
                 "H-truss (iii)",
                 compose(h.mu2, kron(I, h.mu1)),
                 compose(h.mu1,
                         kron(h.mu2, gamma),
                         kron(I, swap(n, n, f), I),
                         kron(c.delta, I, I)));
  r.expect_equal("sigma.derived", "Eq.(cocycle)", h.sigma, derive_sigma(h.mu2, h.eta));
  r.expect_equal("sigma.cocycle1",
                 "Eq.(cocycle1)",
                 compose(h.sigma, h.mu2),
                 compose(h.mu2, kron(I, h.sigma)));
  r.merge("gamma", verify_module_monoid(h.H2(), h.H1().monoid(), gamma));
  if (s2) {
    r.merge("H2.brace", verify_structure(HopfMonoidData{c, h.eta, h.mu2, *s2}));
  }
  r.property("cocommutative", is_cocommutative(c));
  r.property("sigma.identity", h.sigma.is_identity());
  return r;
}

// f: src -> dst is a Hopf monoid morphism on the H1 side and a non-unital
// bimonoid morphism on the H2 side; the sigma intertwining follows.
inline VerificationReport verify_truss_morphism(LinMap const&    f,
                                                HopfTruss const& src,
                                                HopfTruss const& dst) {
  check_shape(src);
  check_shape(dst);
  detail::expect_shape(f, dst.dim(), src.dim(), "truss morphism");
  VerificationReport r;
  r.merge("H1", verify_hopf_morphism(f, src.H1(), dst.H1()));
  r.merge("H2", verify_multiplicative(f, src.mu2, dst.mu2));
  r.expect_equal("sigma", "Eq.(mortruss)", compose(dst.sigma, f), compose(f, src.sigma));
  return r;
}

////////////////////////////////////////////////////////////////////////////////
// Trusses available on any Hopf monoid
////////////////////////////////////////////////////////////////////////////////

// mu2 = mu1, sigma = id: a Hopf brace with s2 = lambda.
inline HopfTruss trivial_truss(HopfMonoidData const& h) {
  auto I = LinMap::identity(h.field(), h.dim());
  return {h.comonoid, h.eta, h.mu, h.mu, h.lambda, I};
}

// mu2 = H (x) epsilon, so sigma = id.
inline HopfTruss left_projection_truss(HopfMonoidData const& h) {
  auto I = LinMap::identity(h.field(), h.dim());
  return {h.comonoid, h.eta, h.mu, kron(I, h.comonoid.epsilon), h.lambda, I};
}

// mu2 = epsilon (x) H, so sigma = eta o epsilon.
inline HopfTruss right_projection_truss(HopfMonoidData const& h) {
  auto I = LinMap::identity(h.field(), h.dim());
  return {h.comonoid,
          h.eta,
          h.mu,
          kron(h.comonoid.epsilon, I),
          h.lambda,
          compose(h.eta, h.comonoid.epsilon)};
}

}  // namespace trusslab
