#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "support.hpp"
#include "trusslab/hopf_truss.hpp"

using namespace trusslab;
using testsupport::Q;

namespace {

HopfTruss brace_z2() { return trivial_truss(group_algebra(Q, cyclic_group(2))); }

}  // namespace

TEST_CASE("every fixture truss verifies", "[hopftruss]") {
  for (auto const& [name, h] : fixtures::trusses()) {
    INFO(name);
    auto r = verify_hopf_truss(h);
    CHECK(r.passed());
    CHECK(r.find("sigma.derived")->anchor == "Eq.(cocycle)");
    CHECK(derive_sigma(h.mu2, h.eta) == h.sigma);
  }
}

TEST_CASE("Hopf brace flag", "[hopftruss]") {
  auto h = brace_z2();
  auto r = verify_hopf_truss(h, h.lambda);
  CHECK(r.passed("H2.brace.antipode.left"));
  CHECK(*r.find_property("sigma.identity"));
  CHECK(*r.find_property("cocommutative"));

  CHECK_FALSE(verify_hopf_truss(h, LinMap::zero(Q, 2, 2)).passed());
  CHECK_FALSE(verify_hopf_truss(h).find("H2.brace.antipode.left"));

  auto h4 = trivial_truss(sweedler_h4(Q));
  CHECK_FALSE(*verify_hopf_truss(h4).find_property("cocommutative"));
}

TEST_CASE("derive_sigma and gamma_action", "[hopftruss]") {
  auto h = brace_z2();
  CHECK(derive_sigma(h.mu1, h.eta) == LinMap::identity(Q, 2));

  auto gamma = gamma_action(h);
  auto I     = LinMap::identity(Q, 2);
  CHECK(compose(gamma, kron(h.eta, I)) == I);
  CHECK(compose(gamma, kron(I, h.eta)) == kron(h.comonoid.epsilon, h.eta));

  for (auto const& [name, t] : fixtures::trusses()) {
    INFO(name);
    auto n = t.dim();
    auto g = gamma_action(t);
    CHECK(compose(g, kron(LinMap::identity(t.field(), n), t.eta))
          == kron(t.comonoid.epsilon, t.eta));
  }

  // Left projection a * b = a: Gamma(a (x) b) = a^{-1} a = 1.
  auto g3 = cyclic_group(3);
  auto lp = linearize(left_projection_skew_truss(g3), Q);
  auto gl = gamma_action(lp);
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      auto in = kron(LinMap::basis_vector(Q, 3, a), LinMap::basis_vector(Q, 3, b));
      CHECK(compose(gl, in) == lp.eta);
    }
  }
  CHECK(gl == compose(lp.eta, kron(lp.comonoid.epsilon, lp.comonoid.epsilon)));

  // Right projection a * b = b: Gamma(a (x) b) = 1^{-1} b = b.
  auto rp = linearize(right_projection_skew_truss(g3), Q);
  CHECK(gamma_action(rp) == kron(rp.comonoid.epsilon, LinMap::identity(Q, 3)));

  // Right projection: sigma is the rank-one map onto eta.
  CHECK(derive_sigma(rp.mu2, rp.eta) == compose(rp.eta, rp.comonoid.epsilon));
  CHECK(rank(rp.sigma) == 1);
}

TEST_CASE("perturbations are detected", "[hopftruss]") {
  auto h     = brace_z2();
  auto bad   = h;
  bad.sigma  = LinMap::from_ints(Q, 2, 2, {{0, 1}, {1, 0}});
  auto r     = verify_hopf_truss(bad);
  CHECK_FALSE(r.passed("sigma.derived"));
  CHECK(r.find("sigma.derived")->residual);

  auto z3     = linearize(right_projection_skew_truss(cyclic_group(3)), Q);
  auto bad2   = z3;
  bad2.mu2.set(0, 4, Scalar::from_int(Q, 1));
  CHECK_FALSE(verify_hopf_truss(bad2).passed());
}

TEST_CASE("truss morphisms", "[hopftruss]") {
  for (auto const& [name, h] : fixtures::trusses()) {
    INFO(name);
    auto I = LinMap::identity(h.field(), h.dim());
    CHECK(verify_truss_morphism(I, h, h).passed());
    auto z = verify_truss_morphism(LinMap::zero(h.field(), h.dim(), h.dim()), h, h);
    CHECK_FALSE(z.passed("H1.unital"));
  }

  // Linearized morphisms between enumerated trusses on Z/3 and Z/1.
  auto one = trivial_skew_truss(cyclic_group(1));
  for (auto const& t : enumerate_skew_trusses(cyclic_group(3))) {
    SetMorphism f{3, 1, {0, 0, 0}};
    REQUIRE(verify_set_morphism(f, t, one).passed());
    CHECK(verify_truss_morphism(linearize(f, Q), linearize(t, Q), linearize(one, Q)).passed());
  }
}

TEST_CASE("module monoid laws for Gamma", "[hopftruss]") {
  for (auto const& [name, h] : fixtures::trusses()) {
    INFO(name);
    auto r = verify_hopf_truss(h);
    CHECK(r.passed("gamma.bmm1"));
    CHECK(r.passed("gamma.bmm2"));
    CHECK(r.passed("gamma.action.associative"));
    CHECK(r.passed("sigma.cocycle1"));
  }
}
