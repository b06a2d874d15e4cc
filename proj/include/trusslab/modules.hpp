#pragma once

#include "trusslab/cocycle.hpp"
#include "trusslab/hopf_truss.hpp"

namespace trusslab {

// (M, psi1, psi2) over a Hopf truss.
struct TrussModule {
  HopfTruss   truss;
  std::size_t mdim = 0;
  LinMap      psi1;  // H (x) M -> M
  LinMap      psi2;  // H (x) M -> M

  friend bool operator==(TrussModule const&, TrussModule const&) = default;
};

// (M, N, phiM, varphiM, phiN, gamma) over a generalized invertible 1-cocycle.
struct PiModule {
  GIC         gic;
  std::size_t mdim = 0;
  std::size_t ndim = 0;
  LinMap      phiM;     // B (x) M -> M
  LinMap      varphiM;  // H (x) M -> M
  LinMap      phiN;     // B (x) N -> N
  LinMap      gamma;    // N -> M

  friend bool operator==(PiModule const&, PiModule const&) = default;
};

inline void check_shape(TrussModule const& m) {
  check_shape(m.truss);
  auto n = m.truss.dim();
  detail::expect_shape(m.psi1, m.mdim, n * m.mdim, "psi1");
  detail::expect_shape(m.psi2, m.mdim, n * m.mdim, "psi2");
}

inline void check_shape(PiModule const& m) {
  check_shape(m.gic);
  auto b = m.gic.B.dim();
  auto h = m.gic.H.dim();
  detail::expect_shape(m.phiM, m.mdim, b * m.mdim, "phiM");
  detail::expect_shape(m.varphiM, m.mdim, h * m.mdim, "varphiM");
  detail::expect_shape(m.phiN, m.ndim, b * m.ndim, "phiN");
  detail::expect_shape(m.gamma, m.mdim, m.ndim, "gamma");
}

// Gamma_M = psi1 o ((lambda o sigma) (x) psi2) o (delta (x) M).
inline LinMap gamma_module(TrussModule const& m) {
  auto const& h = m.truss;
  return compose(m.psi1,
                 kron(compose(h.lambda, h.sigma), m.psi2),
                 kron(h.comonoid.delta, LinMap::identity(h.field(), m.mdim)));
}

// Lambda = mu1 o (mu2 (x) (lambda o sigma)) o (H (x) c) o (delta (x) H).
inline LinMap lambda_map(HopfTruss const& h) {
  auto const& f = h.field();
  auto        n = h.dim();
  auto        I = LinMap::identity(f, n);
  return compose(h.mu1,
                 kron(h.mu2, compose(h.lambda, h.sigma)),
                 kron(I, swap(n, n, f)),
                 kron(h.comonoid.delta, I));
}

namespace detail {

// (H (x) c_{H,H} (x) M) o (delta (x) H (x) M): h (x) k (x) m -> h1 (x) k (x) h2 (x) m.
inline LinMap spread(ComonoidData const& c, std::size_t kdim, std::size_t mdim) {
  auto const& f = c.field();
  auto        H = LinMap::identity(f, c.dim);
  auto        K = LinMap::identity(f, kdim);
  auto        M = LinMap::identity(f, mdim);
  return compose(kron(H, swap(c.dim, kdim, f), M), kron(c.delta, K, M));
}

}  // namespace detail

inline VerificationReport verify_truss_module(TrussModule const& m) {
  check_shape(m);
  auto const&        h  = m.truss;
  auto const&        f  = h.field();
  auto               n  = h.dim();
  auto               H  = LinMap::identity(f, n);
  auto               gm = gamma_module(m);
  auto               sp = detail::spread(h.comonoid, n, m.mdim);
  VerificationReport r;
  r.merge("psi1", verify_module(h.mu1, m.psi1, n, m.mdim, h.eta));
  r.merge("psi2", verify_module(h.mu2, m.psi2, n, m.mdim));
  auto lhs = compose(m.psi2, kron(H, m.psi1));
  r.expect_equal("mod-l1", "Eq.(mod-l1)", lhs, compose(m.psi1, kron(h.mu2, gm), sp));
  r.expect_equal("mod-l1p",
                 "Eq.(mod-l1p)",
                 lhs,
                 compose(m.psi1, kron(lambda_map(h), m.psi2), sp));
  r.expect_equal("GMH1",
                 "Eq.(GMH1)",
                 compose(gm, kron(H, m.psi1)),
                 compose(m.psi1, kron(gamma_action(h), gm), sp));
  return r;
}

inline VerificationReport verify_pi_module(PiModule const& m) {
  check_shape(m);
  auto const&        c  = m.gic;
  auto const&        f  = c.field();
  auto               b  = c.B.dim();
  auto               h  = c.H.dim();
  auto               Bi = LinMap::identity(f, b);
  auto               pt = compose(c.pi, c.theta);
  VerificationReport r;
  r.merge("varphiM", verify_module(c.H.mu, m.varphiM, h, m.mdim, c.H.eta));
  r.merge("phiN", verify_module(c.B.mu, m.phiN, b, m.ndim));
  r.expect_equal("p-v",
                 "Eq.(p-v)",
                 compose(m.phiM, kron(Bi, m.varphiM)),
                 compose(m.varphiM,
                         kron(c.phiH, m.phiM),
                         detail::spread(c.B.comonoid, h, m.mdim)));
  bool invertible = is_invertible(m.gamma);
  r.expect("gamma.invertible", "Definition def-pi-module (v)", invertible);
  auto d_gamma = kron(c.B.comonoid.delta, m.gamma);
  r.expect_equal("eq-gamma",
                 "Eq.(eq-gamma)",
                 compose(m.gamma, m.phiN),
                 compose(m.varphiM, kron(pt, m.phiM), d_gamma));
  if (invertible) {
    auto gi = invert(m.gamma);
    r.expect_equal("req-g1",
                   "Eq.(req-g1)",
                   m.phiN,
                   compose(gi, m.varphiM, kron(pt, m.phiM), d_gamma));
    r.expect_equal("req-g2",
                   "Eq.(req-g2)",
                   m.phiM,
                   compose(m.varphiM,
                           kron(compose(c.H.lambda, pt), compose(m.gamma, m.phiN)),
                           kron(c.B.comonoid.delta, gi)));
  } else {
    r.expect("req-g1", "Eq.(req-g1)", false, "gamma is singular");
    r.expect("req-g2", "Eq.(req-g2)", false, "gamma is singular");
  }
  return r;
}

inline VerificationReport verify_pi_module_morphism(LinMap const&   hm,
                                                    LinMap const&   l,
                                                    PiModule const& src,
                                                    PiModule const& dst) {
  check_shape(src);
  check_shape(dst);
  detail::expect_shape(hm, dst.mdim, src.mdim, "h");
  detail::expect_shape(l, dst.ndim, src.ndim, "l");
  auto const&        f = src.gic.field();
  auto               B = LinMap::identity(f, src.gic.B.dim());
  auto               H = LinMap::identity(f, src.gic.H.dim());
  VerificationReport r;
  r.expect_equal("h.phiM", "Definition def-pi-mor (i)",
                 compose(hm, src.phiM), compose(dst.phiM, kron(B, hm)));
  r.expect_equal("h.varphiM", "Definition def-pi-mor (i)",
                 compose(hm, src.varphiM), compose(dst.varphiM, kron(H, hm)));
  r.expect_equal("l.phiN", "Definition def-pi-mor (ii)",
                 compose(l, src.phiN), compose(dst.phiN, kron(B, l)));
  r.expect_equal("fg-g", "Eq.(fg-g)", compose(hm, src.gamma), compose(dst.gamma, l));
  if (is_invertible(dst.gamma)) {
    r.expect_equal("l.determined", "Definition def-pi-mor",
                   l, compose(invert(dst.gamma), hm, src.gamma));
  } else {
    r.expect("l.determined", "Definition def-pi-mor", false, "gamma' is singular");
  }
  return r;
}

// Truss-module morphism: linear for both actions.
inline VerificationReport verify_truss_module_morphism(LinMap const&      fm,
                                                       TrussModule const& src,
                                                       TrussModule const& dst) {
  detail::expect_shape(fm, dst.mdim, src.mdim, "module morphism");
  auto               H = LinMap::identity(src.truss.field(), src.truss.dim());
  VerificationReport r;
  r.expect_equal("psi1", "Definition l-mod",
                 compose(fm, src.psi1), compose(dst.psi1, kron(H, fm)));
  r.expect_equal("psi2", "Definition l-mod",
                 compose(fm, src.psi2), compose(dst.psi2, kron(H, fm)));
  return r;
}

////////////////////////////////////////////////////////////////////////////////
// Functors
////////////////////////////////////////////////////////////////////////////////

namespace detail {

inline PiModule pull_back(GICMorphism const& fg, GIC const& src, PiModule const& m) {
  auto const& f = src.field();
  auto        P = LinMap::identity(f, m.mdim);
  auto        Q = LinMap::identity(f, m.ndim);
  return {src,
          m.mdim,
          m.ndim,
          compose(m.phiM, kron(fg.f, P)),
          compose(m.varphiM, kron(fg.g, P)),
          compose(m.phiN, kron(fg.f, Q)),
          m.gamma};
}

inline TrussModule build_H_tr_pi(PiModule const& m) {
  auto const& c      = m.gic;
  auto        pi_inv = invert(c.pi);
  auto        g_inv  = invert(m.gamma);
  return {detail::build_Q(c),
          m.mdim,
          m.varphiM,
          compose(m.gamma, m.phiN, kron(pi_inv, g_inv))};
}

}  // namespace detail

// M_(f,g): modules over the target of (f, g) become modules over its source.
inline PiModule restrict_along(GICMorphism const& fg, GIC const& src, PiModule const& m) {
  auto rm = verify_gic_morphism(fg, src, m.gic);
  if (!rm.passed()) {
    throw VerificationFailed("restrict_along needs a cocycle morphism", rm);
  }
  auto rp = verify_pi_module(m);
  if (!rp.passed()) {
    throw VerificationFailed("restrict_along needs a module", rp);
  }
  return detail::pull_back(fg, src, m);
}

// G_H(M, psi1, psi2) = (M, M, Gamma_M, psi1, psi2, id) over E(H).
inline PiModule functor_G_H(TrussModule const& m) {
  auto r = verify_truss_module(m);
  if (!r.passed()) {
    throw VerificationFailed("functor G_H needs a truss module", r);
  }
  return {detail::build_E(m.truss),
          m.mdim,
          m.mdim,
          gamma_module(m),
          m.psi1,
          m.psi2,
          LinMap::identity(m.truss.field(), m.mdim)};
}

// Gamma_M^{sigma_pi} of H_tr^pi(m) against phiM o (pi^-1 (x) M).
inline VerificationReport pHpi1_report(PiModule const& m) {
  auto               t = detail::build_H_tr_pi(m);
  VerificationReport r;
  r.expect_equal("pHpi1",
                 "Eq.(pHpi1)",
                 gamma_module(t),
                 compose(m.phiM,
                         kron(invert(m.gic.pi), LinMap::identity(m.gic.field(), m.mdim))));
  return r;
}

// H_tr^pi(M, N, phiM, varphiM, phiN, gamma) = (M, varphiM,
// gamma o phiN o (pi^-1 (x) gamma^-1)) over Q(c).
inline TrussModule functor_H_tr_pi(PiModule const& m) {
  auto r = verify_pi_module(m);
  if (!r.passed()) {
    throw VerificationFailed("functor H_tr^pi needs a module", r);
  }
  auto out = detail::build_H_tr_pi(m);
  auto ro  = verify_truss_module(out);
  ro.merge("", pHpi1_report(m));
  if (!ro.passed()) {
    throw VerificationFailed("H_tr^pi produced an invalid truss module", ro);
  }
  return out;
}

////////////////////////////////////////////////////////////////////////////////
// Standard modules
////////////////////////////////////////////////////////////////////////////////

inline TrussModule regular_module(HopfTruss const& h) {
  return {h, h.dim(), h.mu1, h.mu2};
}

inline TrussModule trivial_module(HopfTruss const& h) {
  return {h, 1, h.comonoid.epsilon, h.comonoid.epsilon};
}

// (H (x) X, mu1 (x) X, mu2 (x) X) for X of dimension xdim.
inline TrussModule induction_module(HopfTruss const& h, std::size_t xdim) {
  auto X = LinMap::identity(h.field(), xdim);
  return {h, h.dim() * xdim, kron(h.mu1, X), kron(h.mu2, X)};
}

// (H, B, phiH, mu_H, mu_B, pi).
inline PiModule regular_pi_module(GIC const& c) {
  return {c, c.H.dim(), c.B.dim(), c.phiH, c.H.mu, c.B.mu, c.pi};
}

// (K, K, epsilon_B, epsilon_H, epsilon_B, id).
inline PiModule trivial_pi_module(GIC const& c) {
  auto one = LinMap::identity(c.field(), 1);
  return {c, 1, 1, c.B.comonoid.epsilon, c.H.comonoid.epsilon, c.B.comonoid.epsilon, one};
}

// The same module with N relabelled along an isomorphism kappa: N' -> N.
inline PiModule conjugate_pi_module(PiModule const& m, LinMap const& kappa) {
  detail::expect_shape(kappa, m.ndim, m.ndim, "kappa");
  auto out  = m;
  auto B    = LinMap::identity(m.gic.field(), m.gic.B.dim());
  out.phiN  = compose(invert(kappa), m.phiN, kron(B, kappa));
  out.gamma = compose(m.gamma, kappa);
  return out;
}

}  // namespace trusslab
