#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trusslab/linmap.hpp"
#include "trusslab/report.hpp"

namespace trusslab {

////////////////////////////////////////////////////////////////////////////////
// Structure-constant bundles
////////////////////////////////////////////////////////////////////////////////

struct ComonoidData {
  std::size_t dim = 0;
  LinMap      delta;    // dim -> dim^2
  LinMap      epsilon;  // dim -> 1

  FieldSpec const& field() const noexcept { return delta.field(); }

  friend bool operator==(ComonoidData const&, ComonoidData const&) = default;
};

struct MonoidData {
  std::size_t dim = 0;
  LinMap      eta;  // 1 -> dim
  LinMap      mu;   // dim^2 -> dim

  FieldSpec const& field() const noexcept { return mu.field(); }

  friend bool operator==(MonoidData const&, MonoidData const&) = default;
};

struct NonUnitalBimonoidData {
  ComonoidData comonoid;
  LinMap       mu;

  std::size_t      dim() const noexcept { return comonoid.dim; }
  FieldSpec const& field() const noexcept { return comonoid.field(); }

  friend bool operator==(NonUnitalBimonoidData const&,
                         NonUnitalBimonoidData const&) = default;
};

struct HopfMonoidData {
  ComonoidData comonoid;
  LinMap       eta;
  LinMap       mu;
  LinMap       lambda;

  std::size_t      dim() const noexcept { return comonoid.dim; }
  FieldSpec const& field() const noexcept { return comonoid.field(); }

  MonoidData monoid() const { return {comonoid.dim, eta, mu}; }

  NonUnitalBimonoidData bimonoid() const { return {comonoid, mu}; }

  friend bool operator==(HopfMonoidData const&,
                         HopfMonoidData const&) = default;
};

namespace detail {

inline LinMap id(FieldSpec const& f, std::size_t n) {
  return LinMap::identity(f, n);
}

inline void expect_shape(LinMap const&      m,
                         std::size_t        cod,
                         std::size_t        dom,
                         std::string const& what) {
  if (m.cod() != cod || m.dom() != dom) {
    throw DimensionMismatch(what + " is " + std::to_string(m.cod()) + "x"
                            + std::to_string(m.dom()) + ", expected "
                            + std::to_string(cod) + "x" + std::to_string(dom));
  }
}

inline void expect_field(FieldSpec const&   f,
                         LinMap const&      m,
                         std::string const& what) {
  if (!(m.field() == f)) {
    throw FieldError(what + " is over " + m.field().to_string()
                     + " but the bundle is over " + f.to_string());
  }
}

}  // namespace detail

inline void check_shape(ComonoidData const& c) {
  auto n = c.dim;
  detail::expect_shape(c.delta, n * n, n, "delta");
  detail::expect_shape(c.epsilon, 1, n, "epsilon");
  detail::expect_field(c.field(), c.epsilon, "epsilon");
}

inline void check_shape(MonoidData const& m) {
  auto n = m.dim;
  detail::expect_shape(m.eta, n, 1, "eta");
  detail::expect_shape(m.mu, n, n * n, "mu");
  detail::expect_field(m.field(), m.eta, "eta");
}

inline void check_shape(NonUnitalBimonoidData const& b) {
  check_shape(b.comonoid);
  detail::expect_shape(b.mu, b.dim(), b.dim() * b.dim(), "mu");
  detail::expect_field(b.field(), b.mu, "mu");
}

inline void check_shape(HopfMonoidData const& h) {
  check_shape(h.comonoid);
  auto n = h.dim();
  detail::expect_shape(h.eta, n, 1, "eta");
  detail::expect_shape(h.mu, n, n * n, "mu");
  detail::expect_shape(h.lambda, n, n, "lambda");
  for (auto const* m : {&h.eta, &h.mu, &h.lambda}) {
    detail::expect_field(h.field(), *m, "structure map");
  }
}

// The coproduct of D (x) E: (D (x) c_{D,E} (x) E) o (delta_D (x) delta_E).
inline LinMap tensor_coproduct(ComonoidData const& d, ComonoidData const& e) {
  auto const& f = d.field();
  return compose(tensor_permutation(f, {d.dim, d.dim, e.dim, e.dim}, {0, 2, 1, 3}),
                 kron(d.delta, e.delta));
}

// The product of A (x) B: (mu_A (x) mu_B) o (A (x) c_{B,A} (x) B).
inline LinMap tensor_product_mu(MonoidData const& a, MonoidData const& b) {
  auto const& f = a.field();
  return compose(kron(a.mu, b.mu),
                 tensor_permutation(f, {a.dim, b.dim, a.dim, b.dim}, {0, 2, 1, 3}));
}

////////////////////////////////////////////////////////////////////////////////
// Verifiers
////////////////////////////////////////////////////////////////////////////////

inline VerificationReport verify_structure(ComonoidData const& c) {
  check_shape(c);
  auto const&        f  = c.field();
  auto               I  = detail::id(f, c.dim);
  VerificationReport r;
  r.expect_equal("counit.left", "comonoid", compose(kron(c.epsilon, I), c.delta), I);
  r.expect_equal("counit.right", "comonoid", compose(kron(I, c.epsilon), c.delta), I);
  r.expect_equal("coassociativity",
                 "comonoid",
                 compose(kron(c.delta, I), c.delta),
                 compose(kron(I, c.delta), c.delta));
  return r;
}

inline VerificationReport verify_structure(MonoidData const& m) {
  check_shape(m);
  auto const&        f = m.field();
  auto               I = detail::id(f, m.dim);
  VerificationReport r;
  r.expect_equal("unit.left", "monoid", compose(m.mu, kron(m.eta, I)), I);
  r.expect_equal("unit.right", "monoid", compose(m.mu, kron(I, m.eta)), I);
  r.expect_equal("associativity",
                 "monoid",
                 compose(m.mu, kron(I, m.mu)),
                 compose(m.mu, kron(m.mu, I)));
  return r;
}

namespace detail {

inline void bimonoid_laws(VerificationReport&         r,
                          NonUnitalBimonoidData const& b) {
  auto const& f = b.field();
  auto        I = id(f, b.dim());
  auto const& c = b.comonoid;
  r.expect_equal("associativity",
                 "monoid",
                 compose(b.mu, kron(I, b.mu)),
                 compose(b.mu, kron(b.mu, I)));
  r.expect_equal("counit.multiplicative",
                 "Eq.(et-mu-ep)",
                 compose(c.epsilon, b.mu),
                 kron(c.epsilon, c.epsilon));
  r.expect_equal("coproduct.multiplicative",
                 "Eq.(d-delta-et)",
                 compose(c.delta, b.mu),
                 compose(kron(b.mu, b.mu), tensor_coproduct(c, c)));
}

}  // namespace detail

inline VerificationReport verify_structure(NonUnitalBimonoidData const& b) {
  check_shape(b);
  VerificationReport r = verify_structure(b.comonoid);
  detail::bimonoid_laws(r, b);
  return r;
}

// Bimonoid laws including the unit (et-mu-ep1, d-delta-et1), no antipode.
inline VerificationReport verify_unital_bimonoid(NonUnitalBimonoidData const& b,
                                                 LinMap const& eta) {
  check_shape(b);
  detail::expect_shape(eta, b.dim(), 1, "eta");
  VerificationReport r = verify_structure(b.comonoid);
  auto const&        f = b.field();
  auto               I = detail::id(f, b.dim());
  r.expect_equal("unit.left", "monoid", compose(b.mu, kron(eta, I)), I);
  r.expect_equal("unit.right", "monoid", compose(b.mu, kron(I, eta)), I);
  detail::bimonoid_laws(r, b);
  r.expect_equal("counit.unit",
                 "Eq.(et-mu-ep1)",
                 compose(b.comonoid.epsilon, eta),
                 detail::id(f, 1));
  r.expect_equal("coproduct.unit",
                 "Eq.(d-delta-et1)",
                 compose(b.comonoid.delta, eta),
                 kron(eta, eta));
  return r;
}

inline LinMap convolution(LinMap const&       f,
                          LinMap const&       g,
                          ComonoidData const& d,
                          MonoidData const&   a) {
  detail::expect_shape(f, a.dim, d.dim, "convolution left factor");
  detail::expect_shape(g, a.dim, d.dim, "convolution right factor");
  return compose(a.mu, kron(f, g), d.delta);
}

inline VerificationReport verify_structure(HopfMonoidData const& h) {
  check_shape(h);
  VerificationReport r = verify_unital_bimonoid(h.bimonoid(), h.eta);
  auto const&        f     = h.field();
  auto               I     = detail::id(f, h.dim());
  auto               unit  = compose(h.eta, h.comonoid.epsilon);
  auto               m     = h.monoid();
  r.expect_equal("antipode.left",
                 "Eq.(antipode)",
                 convolution(I, h.lambda, h.comonoid, m),
                 unit);
  r.expect_equal("antipode.right",
                 "Eq.(antipode)",
                 convolution(h.lambda, I, h.comonoid, m),
                 unit);
  return r;
}

// Consequences of the antipode law: anti(co)multiplicativity and invariance
// of unit and counit. Involutivity is reported as a property.
inline VerificationReport antipode_identities(HopfMonoidData const& h) {
  check_shape(h);
  auto const&        f  = h.field();
  auto               n  = h.dim();
  auto               c  = swap(n, n, f);
  auto const&        lm = h.lambda;
  VerificationReport r;
  r.expect_equal("antipode.antimultiplicative",
                 "Hopf monoid",
                 compose(lm, h.mu),
                 compose(h.mu, kron(lm, lm), c));
  r.expect_equal("antipode.anticomultiplicative",
                 "Hopf monoid",
                 compose(h.comonoid.delta, lm),
                 compose(c, kron(lm, lm), h.comonoid.delta));
  r.expect_equal("antipode.unit", "Hopf monoid", compose(lm, h.eta), h.eta);
  r.expect_equal("antipode.counit",
                 "Hopf monoid",
                 compose(h.comonoid.epsilon, lm),
                 h.comonoid.epsilon);
  r.property("antipode.involutive", compose(lm, lm).is_identity());
  return r;
}

inline bool is_cocommutative(ComonoidData const& c) {
  return compose(swap(c.dim, c.dim, c.field()), c.delta) == c.delta;
}

inline bool is_commutative(LinMap const& mu, std::size_t dim) {
  return compose(mu, swap(dim, dim, mu.field())) == mu;
}

////////////////////////////////////////////////////////////////////////////////
// Morphism laws
////////////////////////////////////////////////////////////////////////////////

inline VerificationReport verify_comonoid_morphism(LinMap const&       f,
                                                   ComonoidData const& src,
                                                   ComonoidData const& dst) {
  detail::expect_shape(f, dst.dim, src.dim, "comonoid morphism");
  VerificationReport r;
  r.expect_equal("comultiplicative",
                 "comonoid morphism",
                 compose(kron(f, f), src.delta),
                 compose(dst.delta, f));
  r.expect_equal("counital", "comonoid morphism", compose(dst.epsilon, f), src.epsilon);
  return r;
}

inline VerificationReport verify_multiplicative(LinMap const& f,
                                                LinMap const& mu_src,
                                                LinMap const& mu_dst) {
  VerificationReport r;
  r.expect_equal("multiplicative",
                 "monoid morphism",
                 compose(mu_dst, kron(f, f)),
                 compose(f, mu_src));
  return r;
}

// Morphism of non-unital bimonoids: a multiplicative comonoid morphism.
inline VerificationReport verify_bimonoid_morphism(
    LinMap const&                f,
    NonUnitalBimonoidData const& src,
    NonUnitalBimonoidData const& dst) {
  VerificationReport r = verify_comonoid_morphism(f, src.comonoid, dst.comonoid);
  r.merge("", verify_multiplicative(f, src.mu, dst.mu));
  return r;
}

// Morphism of Hopf monoids, i.e. of bimonoids; the antipode intertwining is
// a consequence and is reported as an extra check.
inline VerificationReport verify_hopf_morphism(LinMap const&         f,
                                               HopfMonoidData const& src,
                                               HopfMonoidData const& dst) {
  VerificationReport r = verify_bimonoid_morphism(f, src.bimonoid(), dst.bimonoid());
  r.expect_equal("unital", "monoid morphism", compose(f, src.eta), dst.eta);
  r.expect_equal("antipode", "Eq.(morant)", compose(dst.lambda, f), compose(f, src.lambda));
  return r;
}

////////////////////////////////////////////////////////////////////////////////
// Convolution inverses and antipodes
////////////////////////////////////////////////////////////////////////////////

namespace detail {

// Column-stack a map into a vector: entry (i, j) goes to index i * dom + j.
inline void vec_into(LinMap const& m, LinMap& target, std::size_t col, std::size_t offset) {
  for (std::size_t j = 0; j < m.dom(); ++j) {
    for (auto const& e : m.column(j)) {
      target.set(offset + e.row * m.dom() + j, col, e.value);
    }
  }
}

}  // namespace detail

// The x with f * x = eta o epsilon = x * f, found by solving both equations
// jointly for the entries of x. nullopt when no (unique) solution exists.
inline std::optional<LinMap> try_convolution_inverse(LinMap const&       f,
                                                     ComonoidData const& d,
                                                     MonoidData const&   a) {
  check_shape(d);
  check_shape(a);
  detail::expect_shape(f, a.dim, d.dim, "convolution operand");
  auto const& fs    = d.field();
  std::size_t n     = a.dim * d.dim;
  LinMap      left  = compose(kron(f, detail::id(fs, d.dim)), d.delta);  // D -> A(x)D
  LinMap      right = compose(kron(detail::id(fs, d.dim), f), d.delta);  // D -> D(x)A
  LinMap      system(fs, 2 * n, n);
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t j = 0; j < d.dim; ++j) {
      LinMap unit_ij(fs, a.dim, d.dim);
      unit_ij.set(i, j, Scalar::one(fs));
      std::size_t u  = i * d.dim + j;
      auto        fx = compose(a.mu, kron(detail::id(fs, a.dim), unit_ij), left);
      auto        xf = compose(a.mu, kron(unit_ij, detail::id(fs, a.dim)), right);
      detail::vec_into(fx, system, u, 0);
      detail::vec_into(xf, system, u, n);
    }
  }
  LinMap unit = compose(a.eta, d.epsilon);
  LinMap rhs(fs, 2 * n, 1);
  detail::vec_into(unit, rhs, 0, 0);
  detail::vec_into(unit, rhs, 0, n);
  auto sol = solve(system, rhs);
  if (!sol || rank(system) < n) {
    return std::nullopt;
  }
  LinMap x(fs, a.dim, d.dim);
  for (auto const& e : sol->column(0)) {
    x.set(e.row / d.dim, e.row % d.dim, e.value);
  }
  return x;
}

inline LinMap convolution_inverse(LinMap const&       f,
                                  ComonoidData const& d,
                                  MonoidData const&   a) {
  auto x = try_convolution_inverse(f, d, a);
  if (!x) {
    throw NotInvertible("map has no convolution inverse");
  }
  return *x;
}

// Promote a bimonoid with unit to a Hopf monoid by solving for its antipode.
inline HopfMonoidData solve_antipode(NonUnitalBimonoidData const& b,
                                     LinMap const&                eta) {
  auto laws = verify_unital_bimonoid(b, eta);
  if (!laws.passed()) {
    throw VerificationFailed("solve_antipode needs a bimonoid", laws);
  }
  auto lambda = try_convolution_inverse(
      detail::id(b.field(), b.dim()), b.comonoid, {b.dim(), eta, b.mu});
  if (!lambda) {
    throw NoAntipode("identity has no convolution inverse");
  }
  return {b.comonoid, eta, b.mu, *lambda};
}

// A two-sided unit for an associative product, if one exists.
inline std::optional<LinMap> find_unit(LinMap const& mu, std::size_t dim) {
  auto const& fs = mu.field();
  detail::expect_shape(mu, dim, dim * dim, "mu");
  auto   I  = detail::id(fs, dim);
  LinMap system(fs, 2 * dim * dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    auto e = LinMap::basis_vector(fs, dim, k);
    detail::vec_into(compose(mu, kron(e, I)), system, k, 0);
    detail::vec_into(compose(mu, kron(I, e)), system, k, dim * dim);
  }
  LinMap rhs(fs, 2 * dim * dim, 1);
  detail::vec_into(I, rhs, 0, 0);
  detail::vec_into(I, rhs, 0, dim * dim);
  return solve(system, rhs);
}

////////////////////////////////////////////////////////////////////////////////
// Grouplikes
////////////////////////////////////////////////////////////////////////////////

enum class GrouplikeMode { BasisScan, ExhaustiveFp };

struct GrouplikeResult {
  std::vector<LinMap> vectors;  // each dim x 1
  bool                complete = false;
};

inline bool is_grouplike(LinMap const& v, ComonoidData const& c) {
  return compose(c.delta, v) == kron(v, v)
         && compose(c.epsilon, v).at(0, 0).is_one();
}

// BasisScan returns the basis vectors that are grouplike; the list is known
// to be complete when every column i of delta is exactly e_i (x) e_i.
// ExhaustiveFp tries all p^dim vectors over a prime field.
inline GrouplikeResult grouplikes(ComonoidData const& c,
                                  GrouplikeMode       mode,
                                  std::uint64_t       bound = 1'000'000) {
  check_shape(c);
  auto const&     fs = c.field();
  GrouplikeResult out;
  if (mode == GrouplikeMode::BasisScan) {
    bool diagonal = true;
    for (std::size_t i = 0; i < c.dim; ++i) {
      auto const& col = c.delta.column(i);
      bool square = col.size() == 1 && col[0].row == i * c.dim + i
                    && col[0].value.is_one();
      diagonal = diagonal && square;
      if (square && c.epsilon.at(0, i).is_one()) {
        out.vectors.push_back(LinMap::basis_vector(fs, c.dim, i));
      }
    }
    out.complete = diagonal;
    return out;
  }
  if (fs.is_rational()) {
    throw FieldError("exhaustive grouplike search needs a prime field");
  }
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < c.dim; ++i) {
    if (total > bound / fs.p) {
      throw BoundExceeded("p^dim exceeds the exhaustive search bound "
                          + std::to_string(bound));
    }
    total *= fs.p;
  }
  std::vector<std::uint64_t> digits(c.dim, 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    std::uint64_t rem = k;
    for (std::size_t i = c.dim; i-- > 0;) {
      digits[i] = rem % fs.p;
      rem /= fs.p;
    }
    LinMap v(fs, c.dim, 1);
    for (std::size_t i = 0; i < c.dim; ++i) {
      v.set(i, 0, Scalar::from_int(fs, static_cast<long>(digits[i])));
    }
    if (is_grouplike(v, c)) {
      out.vectors.push_back(std::move(v));
    }
  }
  out.complete = true;
  return out;
}

////////////////////////////////////////////////////////////////////////////////
// Tensor products of bundles
////////////////////////////////////////////////////////////////////////////////

namespace detail {

inline void same_field(FieldSpec const& a, FieldSpec const& b) {
  if (!(a == b)) {
    throw FieldError("cannot tensor structures over " + a.to_string() + " and "
                     + b.to_string());
  }
}

}  // namespace detail

inline ComonoidData tensor_structure(ComonoidData const& x, ComonoidData const& y) {
  detail::same_field(x.field(), y.field());
  return {x.dim * y.dim, tensor_coproduct(x, y), kron(x.epsilon, y.epsilon)};
}

inline MonoidData tensor_structure(MonoidData const& x, MonoidData const& y) {
  detail::same_field(x.field(), y.field());
  return {x.dim * y.dim, kron(x.eta, y.eta), tensor_product_mu(x, y)};
}

inline NonUnitalBimonoidData tensor_structure(NonUnitalBimonoidData const& x,
                                              NonUnitalBimonoidData const& y) {
  detail::same_field(x.field(), y.field());
  auto const& f  = x.field();
  auto        mu = compose(kron(x.mu, y.mu),
                    tensor_permutation(f, {x.dim(), y.dim(), x.dim(), y.dim()},
                                       {0, 2, 1, 3}));
  return {tensor_structure(x.comonoid, y.comonoid), mu};
}

inline HopfMonoidData tensor_structure(HopfMonoidData const& x,
                                       HopfMonoidData const& y) {
  auto b = tensor_structure(x.bimonoid(), y.bimonoid());
  return {b.comonoid, kron(x.eta, y.eta), b.mu, kron(x.lambda, y.lambda)};
}

}  // namespace trusslab
