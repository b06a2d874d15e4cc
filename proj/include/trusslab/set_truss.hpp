#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "trusslab/coalgebra.hpp"
#include "trusslab/hopf_truss.hpp"

namespace trusslab {

using Table = std::vector<std::vector<std::size_t>>;

namespace detail {

inline void check_table(Table const& t, std::size_t n, std::string const& what) {
  if (t.size() != n) {
    throw DimensionMismatch(what + " has " + std::to_string(t.size())
                            + " rows, expected " + std::to_string(n));
  }
  for (auto const& row : t) {
    if (row.size() != n) {
      throw DimensionMismatch(what + " is not square");
    }
    for (auto v : row) {
      if (v >= n) {
        throw DimensionMismatch(what + " has an entry out of range");
      }
    }
  }
}

inline bool associative(Table const& t) {
  std::size_t n = t.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (t[t[a][b]][c] != t[a][t[b][c]]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace detail

struct FiniteGroup {
  std::size_t              n = 0;
  Table                    table;
  std::size_t              unit = 0;
  std::vector<std::size_t> inv;

  // Derives the unit and inverses; throws InvalidStructure if the table is
  // not a group.
  static FiniteGroup from_table(Table t) {
    std::size_t n = t.size();
    detail::check_table(t, n, "group table");
    if (n == 0) {
      throw InvalidStructure("a group is not empty");
    }
    if (!detail::associative(t)) {
      throw InvalidStructure("group table is not associative");
    }
    FiniteGroup g{n, std::move(t), n, std::vector<std::size_t>(n, n)};
    for (std::size_t e = 0; e < n && g.unit == n; ++e) {
      bool is_unit = true;
      for (std::size_t a = 0; a < n; ++a) {
        is_unit = is_unit && g.table[e][a] == a && g.table[a][e] == a;
      }
      if (is_unit) {
        g.unit = e;
      }
    }
    if (g.unit == n) {
      throw InvalidStructure("group table has no unit");
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (g.table[a][b] == g.unit && g.table[b][a] == g.unit) {
          g.inv[a] = b;
        }
      }
      if (g.inv[a] == n) {
        throw InvalidStructure("element " + std::to_string(a) + " has no inverse");
      }
    }
    return g;
  }

  std::size_t mul(std::size_t a, std::size_t b) const { return table[a][b]; }

  friend bool operator==(FiniteGroup const&, FiniteGroup const&) = default;
};

inline FiniteGroup cyclic_group(std::size_t n) {
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      t[a][b] = (a + b) % n;
    }
  }
  return FiniteGroup::from_table(std::move(t));
}

// Permutations of {0, 1, 2} in lexicographic order; (pq)(i) = p(q(i)).
inline FiniteGroup symmetric_group3() {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t>              p = {0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  Table t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      std::vector<std::size_t> c(3);
      for (std::size_t i = 0; i < 3; ++i) {
        c[i] = perms[a][perms[b][i]];
      }
      t[a][b] = static_cast<std::size_t>(
          std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return FiniteGroup::from_table(std::move(t));
}

struct FiniteSemigroup {
  std::size_t n = 0;
  Table       table;

  friend bool operator==(FiniteSemigroup const&, FiniteSemigroup const&) = default;
};

struct SkewTruss {
  FiniteGroup              g;
  FiniteSemigroup          s;
  std::vector<std::size_t> omega;

  std::size_t size() const noexcept { return g.n; }

  friend bool operator==(SkewTruss const&, SkewTruss const&) = default;
};

struct SetMorphism {
  std::size_t              src_n = 0;
  std::size_t              dst_n = 0;
  std::vector<std::size_t> map;
};

inline std::vector<std::size_t> derive_omega(FiniteGroup const&     g,
                                             FiniteSemigroup const& s) {
  if (g.n != s.n) {
    throw DimensionMismatch("group and semigroup sizes differ");
  }
  std::vector<std::size_t> omega(g.n);
  for (std::size_t a = 0; a < g.n; ++a) {
    omega[a] = s.table[a][g.unit];
  }
  return omega;
}

inline VerificationReport verify_group(FiniteGroup const& g) {
  detail::check_table(g.table, g.n, "group table");
  if (g.inv.size() != g.n || g.unit >= g.n) {
    throw DimensionMismatch("group unit or inverse vector has the wrong shape");
  }
  bool unit = true;
  bool inv  = true;
  for (std::size_t a = 0; a < g.n; ++a) {
    unit = unit && g.mul(g.unit, a) == a && g.mul(a, g.unit) == a;
    inv  = inv && g.inv[a] < g.n && g.mul(a, g.inv[a]) == g.unit
          && g.mul(g.inv[a], a) == g.unit;
  }
  VerificationReport r;
  r.expect("associativity", "group", detail::associative(g.table));
  r.expect("unit", "group", unit);
  r.expect("inverse", "group", inv);
  return r;
}

inline VerificationReport verify_skew_truss(SkewTruss const& t) {
  auto const& g = t.g;
  std::size_t n = g.n;
  detail::check_table(t.s.table, n, "semigroup table");
  if (t.s.n != n || t.omega.size() != n) {
    throw DimensionMismatch("skew truss components have different sizes");
  }
  VerificationReport r;
  r.merge("group", verify_group(g));
  r.expect("semigroup.associativity", "semigroup", detail::associative(t.s.table));

  auto const& s = t.s.table;
  bool        dia = true;
  std::string witness;
  for (std::size_t a = 0; a < n && dia; ++a) {
    for (std::size_t b = 0; b < n && dia; ++b) {
      for (std::size_t c = 0; c < n && dia; ++c) {
        std::size_t lhs = s[a][g.mul(b, c)];
        std::size_t rhs = g.mul(g.mul(s[a][b], g.inv[t.omega[a]]), s[a][c]);
        if (lhs != rhs) {
          dia     = false;
          witness = "first violation at (a, b, c) = (" + std::to_string(a) + ", "
                    + std::to_string(b) + ", " + std::to_string(c) + ")";
        }
      }
    }
  }
  r.expect("dia-dia", "Eq.(dia-dia)", dia, witness);
  r.expect("omega", "Eq.(cocycle)", derive_omega(g, t.s) == t.omega);
  return r;
}

inline VerificationReport verify_set_morphism(SetMorphism const& f,
                                              SkewTruss const&   src,
                                              SkewTruss const&   dst) {
  if (f.src_n != src.size() || f.dst_n != dst.size() || f.map.size() != f.src_n) {
    throw DimensionMismatch("set map does not match the truss sizes");
  }
  for (auto v : f.map) {
    if (v >= f.dst_n) {
      throw DimensionMismatch("set map value out of range");
    }
  }
  auto const& m     = f.map;
  bool        g_hom = true;
  bool        s_hom = true;
  bool        w     = true;
  for (std::size_t a = 0; a < f.src_n; ++a) {
    for (std::size_t b = 0; b < f.src_n; ++b) {
      g_hom = g_hom && m[src.g.mul(a, b)] == dst.g.mul(m[a], m[b]);
      s_hom = s_hom && m[src.s.table[a][b]] == dst.s.table[m[a]][m[b]];
    }
    w = w && dst.omega[m[a]] == m[src.omega[a]];
  }
  VerificationReport r;
  r.expect("group.hom", "skew truss morphism", g_hom);
  r.expect("semigroup.hom", "skew truss morphism", s_hom);
  r.expect("omega", "skew truss morphism", w);
  return r;
}

////////////////////////////////////////////////////////////////////////////////
// Standard skew trusses on a group
////////////////////////////////////////////////////////////////////////////////

inline SkewTruss make_skew_truss(FiniteGroup g, Table s) {
  std::size_t     n = g.n;
  FiniteSemigroup sg{n, std::move(s)};
  auto            omega = derive_omega(g, sg);
  return {std::move(g), std::move(sg), std::move(omega)};
}

inline SkewTruss trivial_skew_truss(FiniteGroup const& g) {
  return make_skew_truss(g, g.table);
}

// a * b = a
inline SkewTruss left_projection_skew_truss(FiniteGroup const& g) {
  Table s(g.n, std::vector<std::size_t>(g.n));
  for (std::size_t a = 0; a < g.n; ++a) {
    std::fill(s[a].begin(), s[a].end(), a);
  }
  return make_skew_truss(g, std::move(s));
}

// a * b = b
inline SkewTruss right_projection_skew_truss(FiniteGroup const& g) {
  Table s(g.n, std::vector<std::size_t>(g.n));
  for (auto& row : s) {
    std::iota(row.begin(), row.end(), std::size_t{0});
  }
  return make_skew_truss(g, std::move(s));
}

// a * b = b a, the opposite group; a skew brace with omega = id.
inline SkewTruss opposite_skew_truss(FiniteGroup const& g) {
  Table s(g.n, std::vector<std::size_t>(g.n));
  for (std::size_t a = 0; a < g.n; ++a) {
    for (std::size_t b = 0; b < g.n; ++b) {
      s[a][b] = g.mul(b, a);
    }
  }
  return make_skew_truss(g, std::move(s));
}

////////////////////////////////////////////////////////////////////////////////
// Enumeration
////////////////////////////////////////////////////////////////////////////////

namespace detail {

// Depth-first search over semigroup tables filled in row-major order with
// values ascending, so solutions come out in lexicographic order. Cells are
// indexed k = a * n + b; kUnset marks unfilled cells.
class TrussSearch {
 public:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  explicit TrussSearch(FiniteGroup const& g)
      : g_(g), n_(g.n), s_(n_, std::vector<std::size_t>(n_, kUnset)) {}

  std::vector<Table> run_from(std::size_t first_value) {
    out_.clear();
    if (n_ == 0) {
      return out_;
    }
    s_[0][0] = first_value;
    if (consistent(0)) {
      extend(1);
    }
    s_[0][0] = kUnset;
    return std::move(out_);
  }

 private:
  bool set(std::size_t a, std::size_t b) const { return s_[a][b] != kUnset; }

  // Checks every law instance that involves cell k and whose cells are all
  // filled.
  bool consistent(std::size_t k) const {
    std::size_t a0 = k / n_;
    std::size_t b0 = k % n_;
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        if (!set(a, b)) {
          continue;
        }
        for (std::size_t c = 0; c < n_; ++c) {
          std::size_t ab = s_[a][b];
          if (!set(b, c) || !set(ab, c)) {
            continue;
          }
          std::size_t bc = s_[b][c];
          if (!set(a, bc)) {
            continue;
          }
          bool touches = (a == a0 && (b == b0 || bc == b0)) || (b == a0 && c == b0)
                         || (ab == a0 && c == b0);
          if (touches && s_[ab][c] != s_[a][bc]) {
            return false;
          }
        }
      }
    }
    // dia-dia lives in row a0 alone.
    std::size_t a = a0;
    if (!set(a, g_.unit)) {
      return true;
    }
    std::size_t w_inv = g_.inv[s_[a][g_.unit]];
    for (std::size_t b = 0; b < n_; ++b) {
      if (!set(a, b)) {
        continue;
      }
      for (std::size_t c = 0; c < n_; ++c) {
        std::size_t bc = g_.mul(b, c);
        if (!set(a, c) || !set(a, bc)) {
          continue;
        }
        if (s_[a][bc] != g_.mul(g_.mul(s_[a][b], w_inv), s_[a][c])) {
          return false;
        }
      }
    }
    return true;
  }

  void extend(std::size_t k) {
    if (k == n_ * n_) {
      out_.push_back(s_);
      return;
    }
    std::size_t a = k / n_;
    std::size_t b = k % n_;
    for (std::size_t v = 0; v < n_; ++v) {
      s_[a][b] = v;
      if (consistent(k)) {
        extend(k + 1);
      }
    }
    s_[a][b] = kUnset;
  }

  FiniteGroup const& g_;
  std::size_t        n_;
  Table              s_;
  std::vector<Table> out_;
};

}  // namespace detail

// All skew trusses with group part g, in lexicographic order of the
// semigroup table. Work is split by the value of the first cell.
inline std::vector<SkewTruss> enumerate_skew_trusses(FiniteGroup const& g,
                                                     std::size_t        bound   = 4,
                                                     unsigned           workers = 1) {
  if (g.n > bound) {
    throw BoundExceeded("group of order " + std::to_string(g.n)
                        + " exceeds the enumeration bound " + std::to_string(bound));
  }
  if (!verify_group(g).passed()) {
    throw InvalidStructure("enumeration needs a group");
  }
  std::vector<std::vector<Table>> parts(g.n);
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(g.n)));
  if (workers == 1) {
    for (std::size_t v = 0; v < g.n; ++v) {
      parts[v] = detail::TrussSearch(g).run_from(v);
    }
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t v = w; v < g.n; v += workers) {
          parts[v] = detail::TrussSearch(g).run_from(v);
        }
      });
    }
    for (auto& t : pool) {
      t.join();
    }
  }
  std::vector<SkewTruss> out;
  for (auto& part : parts) {
    for (auto& s : part) {
      out.push_back(make_skew_truss(g, std::move(s)));
    }
  }
  return out;
}

// The lexicographically least relabelling of (group table, semigroup table)
// over all permutations of the underlying set.
inline SkewTruss canonical_form(SkewTruss const& t, std::size_t bound = 4) {
  std::size_t n = t.size();
  if (n > bound) {
    throw BoundExceeded("canonical form is limited to sets of size "
                        + std::to_string(bound));
  }
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::pair<Table, Table> best;
  bool                    first = true;
  do {
    Table g(n, std::vector<std::size_t>(n));
    Table s(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        g[p[a]][p[b]] = p[t.g.table[a][b]];
        s[p[a]][p[b]] = p[t.s.table[a][b]];
      }
    }
    std::pair<Table, Table> cand{std::move(g), std::move(s)};
    if (first || cand < best) {
      best  = std::move(cand);
      first = false;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return make_skew_truss(FiniteGroup::from_table(std::move(best.first)),
                         std::move(best.second));
}

// Representatives of the isomorphism classes in ts, in order of first
// appearance.
inline std::vector<SkewTruss> classify(std::vector<SkewTruss> const& ts,
                                       std::size_t                   bound = 4) {
  std::vector<SkewTruss> seen;
  std::vector<SkewTruss> reps;
  for (auto const& t : ts) {
    auto c = canonical_form(t, bound);
    if (std::find(seen.begin(), seen.end(), c) == seen.end()) {
      seen.push_back(std::move(c));
      reps.push_back(t);
    }
  }
  return reps;
}

////////////////////////////////////////////////////////////////////////////////
// Linearization and grouplikes
////////////////////////////////////////////////////////////////////////////////

inline LinMap table_product(FieldSpec const& f, Table const& t) {
  std::size_t              n = t.size();
  std::vector<std::size_t> images(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      images[a * n + b] = t[a][b];
    }
  }
  return LinMap::from_function(f, n, images);
}

// F[S]: every element grouplike.
inline ComonoidData set_coalgebra(FieldSpec const& f, std::size_t n) {
  std::vector<std::size_t> diag(n);
  for (std::size_t a = 0; a < n; ++a) {
    diag[a] = a * n + a;
  }
  return {n, LinMap::from_function(f, n * n, diag), LinMap::ones_row(f, n)};
}

inline NonUnitalBimonoidData semigroup_algebra(FieldSpec const& f, Table const& t) {
  return {set_coalgebra(f, t.size()), table_product(f, t)};
}

inline HopfMonoidData group_algebra(FieldSpec const& f, FiniteGroup const& g) {
  return {set_coalgebra(f, g.n),
          LinMap::basis_vector(f, g.n, g.unit),
          table_product(f, g.table),
          LinMap::from_function(f, g.n, g.inv)};
}

inline HopfTruss linearize(SkewTruss const& t, FieldSpec const& f) {
  auto report = verify_skew_truss(t);
  if (!report.passed()) {
    throw VerificationFailed("cannot linearize", report);
  }
  auto h = group_algebra(f, t.g);
  return {h.comonoid,
          h.eta,
          h.mu,
          table_product(f, t.s.table),
          h.lambda,
          LinMap::from_function(f, t.size(), t.omega)};
}

inline LinMap linearize(SetMorphism const& m, FieldSpec const& f) {
  return LinMap::from_function(f, m.dst_n, m.map);
}

// The skew truss carried by the grouplikes of h. Requires a complete list of
// grouplikes; elements are numbered in the order the extraction returns them.
inline SkewTruss truss_of_grouplikes(HopfTruss const& h,
                                     GrouplikeMode    mode = GrouplikeMode::BasisScan) {
  check_shape(h);
  auto gl = grouplikes(h.comonoid, mode);
  if (!gl.complete) {
    throw IncompleteGrouplikes("grouplike extraction is not known to be complete");
  }
  auto const& v = gl.vectors;
  std::size_t n = v.size();
  auto index_of = [&](LinMap const& x, char const* what) {
    for (std::size_t c = 0; c < n; ++c) {
      if (v[c] == x) {
        return c;
      }
    }
    throw InvalidStructure(std::string("grouplikes are not closed under ") + what);
  };
  Table g(n, std::vector<std::size_t>(n));
  Table s(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      g[a][b] = index_of(compose(h.mu1, kron(v[a], v[b])), "mu1");
      s[a][b] = index_of(compose(h.mu2, kron(v[a], v[b])), "mu2");
    }
  }
  std::vector<std::size_t> omega(n);
  for (std::size_t a = 0; a < n; ++a) {
    omega[a] = index_of(compose(h.sigma, v[a]), "sigma");
  }
  auto group = FiniteGroup::from_table(std::move(g));
  if (!(v[group.unit] == h.eta)) {
    throw InvalidStructure("the unit grouplike differs from eta");
  }
  return {std::move(group), FiniteSemigroup{n, std::move(s)}, std::move(omega)};
}

}  // namespace trusslab
