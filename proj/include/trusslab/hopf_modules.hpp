#pragma once

#include <optional>

#include "trusslab/modules.hpp"

namespace trusslab {

// (M, rho) over a comonoid.
struct ComoduleData {
  ComonoidData comonoid;
  std::size_t  mdim = 0;
  LinMap       rho;  // M -> H (x) M

  friend bool operator==(ComoduleData const&, ComoduleData const&) = default;
};

// (M, varphi, rho) over a Hopf monoid.
struct HopfModuleData {
  HopfMonoidData hopf;
  std::size_t    mdim = 0;
  LinMap         varphi;  // H (x) M -> M
  LinMap         rho;     // M -> H (x) M

  ComoduleData comodule() const { return {hopf.comonoid, mdim, rho}; }

  friend bool operator==(HopfModuleData const&, HopfModuleData const&) = default;
};

// (M, psi1, psi2, rho) over a Hopf truss.
struct TrussHopfModule {
  HopfTruss   truss;
  std::size_t mdim = 0;
  LinMap      psi1;
  LinMap      psi2;
  LinMap      rho;

  TrussModule    module() const { return {truss, mdim, psi1, psi2}; }
  HopfModuleData h1() const { return {truss.H1(), mdim, psi1, rho}; }
  ComoduleData   comodule() const { return {truss.comonoid, mdim, rho}; }

  friend bool operator==(TrussHopfModule const&, TrussHopfModule const&) = default;
};

// Coinvariants M^co with j: M^co -> M, t: M -> M^co, q = j o t and the
// splitting q = i o p through I(q), omega = t o i: I(q) -> M^co.
struct CoinvariantData {
  std::size_t codim = 0;
  LinMap      j;
  LinMap      t;
  LinMap      q;
  LinMap      p;
  LinMap      i;
  LinMap      omega;
};

struct FundamentalIso {
  LinMap             theta;      // H (x) M^co -> M
  LinMap             theta_inv;  // M -> H (x) M^co
  VerificationReport report;
};

inline void check_shape(ComoduleData const& c) {
  check_shape(c.comonoid);
  detail::expect_shape(c.rho, c.comonoid.dim * c.mdim, c.mdim, "rho");
}

inline void check_shape(HopfModuleData const& m) {
  check_shape(m.hopf);
  auto n = m.hopf.dim();
  detail::expect_shape(m.varphi, m.mdim, n * m.mdim, "varphi");
  detail::expect_shape(m.rho, n * m.mdim, m.mdim, "rho");
}

inline void check_shape(TrussHopfModule const& m) {
  check_shape(m.module());
  detail::expect_shape(m.rho, m.truss.dim() * m.mdim, m.mdim, "rho");
}

inline VerificationReport verify_comodule(ComoduleData const& c) {
  check_shape(c);
  auto const&        d = c.comonoid;
  auto               H = LinMap::identity(d.field(), d.dim);
  auto               M = LinMap::identity(d.field(), c.mdim);
  VerificationReport r;
  r.expect_equal("counit", "left comodule", compose(kron(d.epsilon, M), c.rho), M);
  r.expect_equal("coassociativity",
                 "left comodule",
                 compose(kron(H, c.rho), c.rho),
                 compose(kron(d.delta, M), c.rho));
  return r;
}

namespace detail {

// rho o phi = (mu (x) phi) o (B (x) c_{B,B} (x) M) o (delta (x) rho).
inline VerificationReport hmod_law(NonUnitalBimonoidData const& b,
                                   std::size_t                  mdim,
                                   LinMap const&                phi,
                                   LinMap const&                rho) {
  auto const&        f = b.field();
  auto               n = b.dim();
  auto               B = LinMap::identity(f, n);
  auto               M = LinMap::identity(f, mdim);
  VerificationReport r;
  r.expect_equal("HMOD",
                 "Eq.(HMOD)",
                 compose(rho, phi),
                 compose(kron(b.mu, phi),
                         kron(B, swap(n, n, f), M),
                         kron(b.comonoid.delta, rho)));
  return r;
}

}  // namespace detail

// Non-unital Hopf module over a non-unital bimonoid.
inline VerificationReport verify_hopf_module(NonUnitalBimonoidData const& b,
                                             std::size_t                  mdim,
                                             LinMap const&                phi,
                                             LinMap const&                rho) {
  check_shape(b);
  VerificationReport r;
  r.merge("module", verify_module(b.mu, phi, b.dim(), mdim));
  r.merge("comodule", verify_comodule({b.comonoid, mdim, rho}));
  r.merge("", detail::hmod_law(b, mdim, phi, rho));
  return r;
}

inline VerificationReport verify_hopf_module(HopfModuleData const& m) {
  check_shape(m);
  auto const&        h = m.hopf;
  VerificationReport r;
  r.merge("module", verify_module(h.mu, m.varphi, h.dim(), m.mdim, h.eta));
  r.merge("comodule", verify_comodule(m.comodule()));
  r.merge("", detail::hmod_law(h.bimonoid(), m.mdim, m.varphi, m.rho));
  return r;
}

// Equalizer of rho and e (x) M for a point e: K -> D.
inline LinMap coinvariant_inclusion(ComoduleData const& c, LinMap const& e) {
  check_shape(c);
  detail::expect_shape(e, c.comonoid.dim, 1, "point");
  return kernel_inclusion(c.rho - kron(e, LinMap::identity(c.comonoid.field(), c.mdim)));
}

inline LinMap coinvariant_inclusion(HopfModuleData const& m) {
  return coinvariant_inclusion(m.comodule(), m.hopf.eta);
}

// q = varphi o (lambda (x) M) o rho.
inline LinMap coinvariant_projector(HopfModuleData const& m) {
  check_shape(m);
  return compose(m.varphi,
                 kron(m.hopf.lambda, LinMap::identity(m.hopf.field(), m.mdim)),
                 m.rho);
}

inline VerificationReport verify_coinvariants(HopfModuleData const&  m,
                                              CoinvariantData const& c) {
  check_shape(m);
  auto const&        h  = m.hopf;
  auto const&        f  = h.field();
  auto               C  = LinMap::identity(f, c.codim);
  auto               eq = [&](LinMap const& x) { return kron(h.eta, x); };
  VerificationReport r;
  r.expect_equal("equalizer", "Definition coinv", compose(m.rho, c.j), eq(c.j));
  r.expect("equalizer.injective", "Definition coinv", rank(c.j) == c.codim);
  r.expect_equal("q.idempotent", "q_M", compose(c.q, c.q), c.q);
  r.expect_equal("q.coinvariant", "q_M", compose(m.rho, c.q), eq(c.q));
  r.expect_equal("q.factors", "t_M", compose(c.j, c.t), c.q);
  r.expect_equal("split.retract", "split idempotent", compose(c.p, c.i),
                 LinMap::identity(f, c.p.cod()));
  r.expect_equal("split.section", "split idempotent", compose(c.i, c.p), c.q);
  bool square = c.omega.is_square();
  r.expect("omega.invertible", "omega_M", square && is_invertible(c.omega));
  if (square) {
    r.expect_equal("omega.inverse.left", "omega_M", compose(c.p, c.j, c.omega),
                   LinMap::identity(f, c.omega.dom()));
    r.expect_equal("omega.inverse.right", "omega_M", compose(c.omega, c.p, c.j), C);
  }
  r.expect_equal("coequalizer",
                 "t_M",
                 compose(c.t, m.varphi),
                 kron(h.comonoid.epsilon, c.t));
  return r;
}

inline CoinvariantData coinvariants(HopfModuleData const& m) {
  auto rv = verify_hopf_module(m);
  if (!rv.passed()) {
    throw VerificationFailed("coinvariants need a Hopf module", rv);
  }
  CoinvariantData c;
  c.j     = coinvariant_inclusion(m);
  c.codim = c.j.dom();
  c.q     = coinvariant_projector(m);
  auto sp = split_idempotent(c.q);
  c.p     = std::move(sp.p);
  c.i     = std::move(sp.i);
  auto t  = solve(c.j, c.q);
  if (!t) {
    throw InvalidStructure("q does not factor through the coinvariants");
  }
  c.t     = std::move(*t);
  c.omega = compose(c.t, c.i);
  auto rc = verify_coinvariants(m, c);
  if (!rc.passed()) {
    throw VerificationFailed("coinvariant data is inconsistent", rc);
  }
  return c;
}

inline VerificationReport verify_truss_hopf_module(TrussHopfModule const& m) {
  check_shape(m);
  auto const&        h = m.truss;
  VerificationReport r;
  r.merge("module", verify_truss_module(m.module()));
  r.merge("H1", verify_hopf_module(m.h1()));
  r.merge("H2", verify_hopf_module(h.H2(), m.mdim, m.psi2, m.rho));
  auto j = coinvariant_inclusion(m.comodule(), h.eta);
  r.expect_equal("iv",
                 "Definition deHmod (iv)",
                 compose(m.psi1, kron(h.sigma, j)),
                 compose(m.psi2, kron(LinMap::identity(h.field(), h.dim()), j)));
  return r;
}

inline VerificationReport verify_truss_hopf_module_morphism(LinMap const&          fm,
                                                            TrussHopfModule const& src,
                                                            TrussHopfModule const& dst) {
  check_shape(src);
  check_shape(dst);
  auto               r = verify_truss_module_morphism(fm, src.module(), dst.module());
  auto               H = LinMap::identity(src.truss.field(), src.truss.dim());
  r.expect_equal("rho", "left comodule morphism",
                 compose(dst.rho, fm), compose(kron(H, fm), src.rho));
  return r;
}

namespace detail {

// theta against the induction module on the coinvariants: two-sided
// inverse and the three structure maps.
inline VerificationReport theta_report(TrussHopfModule const& m,
                                       std::size_t            codim,
                                       LinMap const&          theta,
                                       LinMap const&          theta_inv) {
  auto const&        h = m.truss;
  auto const&        f = h.field();
  auto               n = h.dim();
  auto               H = LinMap::identity(f, n);
  auto               C = LinMap::identity(f, codim);
  VerificationReport r;
  if (n * codim != m.mdim) {
    r.expect("theta.square", "Theorem fun", false, "H (x) M^co and M differ in dimension");
    return r;
  }
  r.expect_equal("theta.left_inverse", "Theorem fun", compose(theta_inv, theta),
                 LinMap::identity(f, n * codim));
  r.expect_equal("theta.right_inverse", "Theorem fun", compose(theta, theta_inv),
                 LinMap::identity(f, m.mdim));
  r.expect_equal("theta.psi1", "Theorem fun", compose(theta, kron(h.mu1, C)),
                 compose(m.psi1, kron(H, theta)));
  r.expect_equal("theta.psi2", "Theorem fun", compose(theta, kron(h.mu2, C)),
                 compose(m.psi2, kron(H, theta)));
  r.expect_equal("theta.rho", "Theorem fun", compose(m.rho, theta),
                 compose(kron(H, theta), kron(h.comonoid.delta, C)));
  return r;
}

}  // namespace detail

// theta = psi1 o (H (x) j), theta^-1 = (H (x) t) o rho.
inline FundamentalIso fundamental_iso(TrussHopfModule const& m) {
  auto rv = verify_truss_hopf_module(m);
  if (!rv.passed()) {
    throw VerificationFailed("the fundamental isomorphism needs a truss Hopf module", rv);
  }
  auto co = coinvariants(m.h1());
  auto H  = LinMap::identity(m.truss.field(), m.truss.dim());
  auto th = compose(m.psi1, kron(H, co.j));
  auto ti = compose(kron(H, co.t), m.rho);
  auto r  = detail::theta_report(m, co.codim, th, ti);
  return {std::move(th), std::move(ti), std::move(r)};
}

// F(X) = (H (x) X, mu1 (x) X, mu2 (x) X, delta (x) X).
inline TrussHopfModule induction_functor(HopfTruss const& h, std::size_t xdim) {
  auto r = verify_hopf_truss(h);
  if (!r.passed()) {
    throw VerificationFailed("the induction functor needs a Hopf truss", r);
  }
  auto X = LinMap::identity(h.field(), xdim);
  return {h, h.dim() * xdim, kron(h.mu1, X), kron(h.mu2, X), kron(h.comonoid.delta, X)};
}

// F(f) = H (x) f.
inline LinMap induction_morphism(HopfTruss const& h, LinMap const& f) {
  return kron(LinMap::identity(h.field(), h.dim()), f);
}

// Unit alpha = id with W(F(X)) = X, counit beta = theta, and both
// triangle identities. Failures of m are reported, not thrown.
inline VerificationReport adjunction_check(HopfTruss const&       h,
                                           std::size_t            xdim,
                                           TrussHopfModule const& m) {
  check_shape(m);
  auto const&        f  = h.field();
  auto               H  = LinMap::identity(f, h.dim());
  auto               X  = LinMap::identity(f, xdim);
  auto               fx = induction_functor(h, xdim);
  VerificationReport r;

  auto jx = coinvariant_inclusion(fx.comodule(), h.eta);
  r.expect("unit.codim", "Theorem prin2", jx.dom() == xdim);
  auto ex = kron(h.eta, X);
  r.expect("unit.j", "Theorem prin2", jx.dom() == xdim && jx == ex);

  // beta_{F(X)} o F(alpha_X) = id.
  r.expect_equal("triangle.F", "Theorem prin2", compose(fx.psi1, kron(H, ex)),
                 LinMap::identity(f, fx.mdim));

  auto j     = coinvariant_inclusion(m.comodule(), h.eta);
  auto codim = j.dom();
  auto beta  = compose(m.psi1, kron(H, j));
  auto q     = coinvariant_projector(m.h1());
  auto t     = solve(j, q);
  if (t) {
    r.merge("counit", detail::theta_report(m, codim, beta, compose(kron(H, *t), m.rho)));
  } else {
    r.expect("counit.t", "Theorem fun", false, "q does not factor through the coinvariants");
  }

  // W(beta_M) o alpha_{W(M)} = id, with W(beta) the map induced on coinvariants.
  auto C  = LinMap::identity(f, codim);
  auto wb = solve(j, compose(beta, kron(h.eta, C)));
  r.expect("triangle.W", "Theorem prin2", wb && *wb == C);
  return r;
}

}  // namespace trusslab
