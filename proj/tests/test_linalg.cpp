#include <catch_amalgamated.hpp>

#include "support.hpp"
#include "trusslab/linmap.hpp"

using namespace trusslab;
using testsupport::F5;
using testsupport::Q;
using testsupport::random_map;

namespace {

// Entry-wise triple loop, independent of compose.
LinMap naive_product(LinMap const& g, LinMap const& f) {
  LinMap out(g.field(), g.cod(), f.dom());
  for (std::size_t i = 0; i < g.cod(); ++i) {
    for (std::size_t j = 0; j < f.dom(); ++j) {
      Scalar acc = Scalar::zero(g.field());
      for (std::size_t k = 0; k < g.dom(); ++k) {
        acc += g.at(i, k) * f.at(k, j);
      }
      out.set(i, j, acc);
    }
  }
  return out;
}

// Four-index Kronecker product, independent of kron.
LinMap naive_kron(LinMap const& f, LinMap const& g) {
  LinMap out(f.field(), f.cod() * g.cod(), f.dom() * g.dom());
  for (std::size_t a = 0; a < f.cod(); ++a) {
    for (std::size_t b = 0; b < f.dom(); ++b) {
      for (std::size_t c = 0; c < g.cod(); ++c) {
        for (std::size_t d = 0; d < g.dom(); ++d) {
          out.set(a * g.cod() + c, b * g.dom() + d, f.at(a, b) * g.at(c, d));
        }
      }
    }
  }
  return out;
}

LinMap elementary_add(FieldSpec const& f, std::size_t n, std::size_t i,
                      std::size_t j, long k) {
  auto e = LinMap::identity(f, n);
  e.set(i, j, Scalar::from_int(f, k));
  return e;
}

}  // namespace

TEST_CASE("scalar arithmetic is exact", "[scalar]") {
  auto a = Scalar::parse(Q, "3/4");
  auto b = Scalar::parse(Q, "-6/8");
  CHECK((a + b).is_zero());
  CHECK((a * a).to_string() == "9/16");
  CHECK(a.inverse().to_string() == "4/3");
  CHECK(Scalar::parse(Q, "4/2").to_string() == "2");

  auto x = Scalar::parse(F5, "3");
  CHECK((x * x).residue() == 4);
  CHECK(x.inverse().residue() == 2);
  CHECK(Scalar::parse(F5, "-1").residue() == 4);
  CHECK(Scalar::parse(F5, "1/2").residue() == 3);

  CHECK_THROWS_AS(Scalar::zero(Q).inverse(), NotInvertible);
  CHECK_THROWS_AS(a + x, FieldError);
  CHECK_THROWS_AS(Scalar::parse(Q, "1/x"), ParseError);
  CHECK_THROWS_AS(Scalar::parse(Q, ""), ParseError);
  CHECK_THROWS_AS(FieldSpec::prime(6), FieldError);
}

TEST_CASE("compose agrees with the triple-loop product", "[linalg]") {
  std::mt19937 rng(7);
  auto g = random_map(Q, 3, 2, rng);
  auto f = random_map(Q, 2, 4, rng);
  CHECK(compose(g, f) == naive_product(g, f));
  CHECK(compose(LinMap::identity(Q, 3), g) == g);
  CHECK(compose(g, LinMap::identity(Q, 2)) == g);
  CHECK_THROWS_AS(compose(f, g), DimensionMismatch);
  CHECK_THROWS_AS(compose(LinMap::identity(F5, 3), g), FieldError);

  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    std::size_t a = dim(rng), b = dim(rng), c = dim(rng), d = dim(rng);
    auto        h = random_map(trial % 2 ? F5 : Q, a, b, rng);
    auto        k = random_map(h.field(), b, c, rng);
    auto        l = random_map(h.field(), c, d, rng);
    CHECK(compose(compose(h, k), l) == compose(h, compose(k, l)));
    CHECK(compose(h, k) == naive_product(h, k));
  }
}

TEST_CASE("kron agrees with the four-index oracle", "[linalg]") {
  std::mt19937 rng(11);
  auto f = random_map(Q, 2, 2, rng);
  auto g = random_map(Q, 2, 2, rng);
  CHECK(kron(f, g) == naive_kron(f, g));
  CHECK(kron(LinMap::identity(Q, 2), LinMap::identity(Q, 3)) == LinMap::identity(Q, 6));

  auto h = random_map(Q, 3, 2, rng);
  auto k = random_map(Q, 2, 3, rng);
  CHECK(kron(h, k) == naive_kron(h, k));

  auto f1 = random_map(Q, 2, 2, rng), f2 = random_map(Q, 2, 2, rng);
  auto g1 = random_map(Q, 2, 2, rng), g2 = random_map(Q, 2, 2, rng);
  CHECK(kron(compose(f1, f2), compose(g1, g2)) == compose(kron(f1, g1), kron(f2, g2)));
  CHECK_THROWS_AS(kron(f, LinMap::identity(F5, 1)), FieldError);
}

TEST_CASE("swap is the symmetry of tensor factors", "[linalg]") {
  CHECK(swap(1, 4, Q) == LinMap::identity(Q, 4));
  CHECK(swap(4, 1, Q) == LinMap::identity(Q, 4));

  // e_i (x) e_j -> e_j (x) e_i for all four basis tensors of 2 (x) 2.
  auto s = swap(2, 2, Q);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      auto in  = kron(LinMap::basis_vector(Q, 2, i), LinMap::basis_vector(Q, 2, j));
      auto out = kron(LinMap::basis_vector(Q, 2, j), LinMap::basis_vector(Q, 2, i));
      CHECK(compose(s, in) == out);
    }
  }
  CHECK(s.at(0, 0).is_one());
  CHECK(s.at(3, 3).is_one());
  CHECK(s.at(2, 1).is_one());
  CHECK(s.at(1, 2).is_one());

  CHECK(compose(swap(3, 2, Q), swap(2, 3, Q)) == LinMap::identity(Q, 6));

  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = random_map(Q, 2, 3, rng);
    auto g = random_map(Q, 3, 1, rng);
    CHECK(compose(swap(2, 3, Q), kron(f, g)) == compose(kron(g, f), swap(3, 1, Q)));
  }
}

TEST_CASE("tensor permutations reorder factors", "[linalg]") {
  auto p = tensor_permutation(Q, {2, 3, 2}, {2, 0, 1});
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      for (std::size_t c = 0; c < 2; ++c) {
        auto in = kron(LinMap::basis_vector(Q, 2, a), LinMap::basis_vector(Q, 3, b),
                       LinMap::basis_vector(Q, 2, c));
        auto out = kron(LinMap::basis_vector(Q, 2, c), LinMap::basis_vector(Q, 2, a),
                        LinMap::basis_vector(Q, 3, b));
        CHECK(compose(p, in) == out);
      }
    }
  }
  CHECK_THROWS_AS(tensor_permutation(Q, {2, 2}, {0, 0}), DimensionMismatch);
}

TEST_CASE("nullspace", "[linalg]") {
  CHECK(nullspace(LinMap::identity(Q, 3)).empty());
  auto z = nullspace(LinMap::zero(Q, 2, 3));
  REQUIRE(z.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(z[i] == LinMap::basis_vector(Q, 3, i));
  }

  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_map(trial % 2 ? F5 : Q, 3, 2, rng);
    auto b = random_map(a.field(), 2, 5, rng);
    auto f = compose(a, b);
    auto n = nullspace(f);
    CHECK(n.size() == f.dom() - rank(f));
    for (auto const& v : n) {
      CHECK(compose(f, v).is_zero());
    }
    CHECK(rank(kernel_inclusion(f)) == n.size());
  }
}

TEST_CASE("invert", "[linalg]") {
  CHECK(invert(LinMap::identity(Q, 3)) == LinMap::identity(Q, 3));
  auto two = LinMap::identity(Q, 2).scaled(Scalar::from_int(Q, 2));
  CHECK(invert(two) == LinMap::identity(Q, 2).scaled(Scalar::parse(Q, "1/2")));

  // A unimodular matrix as a product of elementary matrices, and its inverse
  // as the reversed product of their inverses.
  std::vector<std::tuple<std::size_t, std::size_t, long>> ops = {
      {0, 1, 3}, {2, 0, -2}, {3, 2, 5}, {1, 3, -1}, {0, 3, 4}, {2, 1, 7}};
  auto u    = LinMap::identity(Q, 4);
  auto uinv = LinMap::identity(Q, 4);
  for (auto [i, j, k] : ops) {
    u    = compose(u, elementary_add(Q, 4, i, j, k));
    uinv = compose(elementary_add(Q, 4, i, j, -k), uinv);
  }
  CHECK(invert(u) == uinv);
  CHECK(compose(u, invert(u)) == LinMap::identity(Q, 4));
  CHECK(compose(invert(u), u) == LinMap::identity(Q, 4));

  CHECK_THROWS_AS(invert(LinMap::zero(Q, 2, 2)), NotInvertible);
  CHECK_THROWS_AS(invert(LinMap::zero(Q, 2, 3)), NotInvertible);
  auto singular = LinMap::from_ints(Q, 2, 2, {{1, 2}, {2, 4}});
  CHECK_THROWS_AS(invert(singular), NotInvertible);
  CHECK_FALSE(is_invertible(singular));
}

TEST_CASE("solve", "[linalg]") {
  auto a = LinMap::from_ints(Q, 3, 2, {{1, 0}, {0, 1}, {1, 1}});
  auto b = LinMap::from_ints(Q, 3, 1, {{2}, {3}, {5}});
  auto x = solve(a, b);
  REQUIRE(x);
  CHECK(compose(a, *x) == b);
  auto bad = LinMap::from_ints(Q, 3, 1, {{2}, {3}, {6}});
  CHECK_FALSE(solve(a, bad));
}

TEST_CASE("split_idempotent", "[linalg]") {
  auto s = split_idempotent(LinMap::identity(Q, 3));
  CHECK(s.p == LinMap::identity(Q, 3));
  CHECK(s.i == LinMap::identity(Q, 3));

  auto z = split_idempotent(LinMap::zero(Q, 2, 2));
  CHECK(z.p.cod() == 0);
  CHECK(z.i.dom() == 0);
  CHECK(compose(z.i, z.p) == LinMap::zero(Q, 2, 2));

  // A projection that is not orthogonal: onto span(1,1) along span(1,0).
  auto q  = LinMap::from_ints(Q, 2, 2, {{0, 1}, {0, 1}});
  auto sq = split_idempotent(q);
  CHECK(sq.p.cod() == 1);
  CHECK(compose(sq.i, sq.p) == q);
  CHECK(compose(sq.p, sq.i) == LinMap::identity(Q, 1));

  CHECK_THROWS_AS(split_idempotent(LinMap::from_ints(Q, 2, 2, {{2, 0}, {0, 0}})),
                  NotIdempotent);
}
