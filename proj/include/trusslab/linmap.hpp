#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "trusslab/error.hpp"
#include "trusslab/scalar.hpp"

namespace trusslab {

using DenseMatrix = std::vector<std::vector<Scalar>>;

// A linear map between finite-dimensional spaces, i.e. a cod x dom matrix.
// Entry (i, j) is the coefficient of codomain basis vector i in the image of
// domain basis vector j. Tensor products use the left-major convention:
// e_i (x) e_j sits at flat index i * dim(second) + j.
//
// Only nonzero entries are stored, column by column and sorted by row, so two
// maps are equal iff their stored data are equal.
class LinMap {
 public:
  struct Entry {
    std::size_t row;
    Scalar      value;

    friend bool operator==(Entry const&, Entry const&) = default;
  };
  using Column = std::vector<Entry>;

  LinMap() = default;

  LinMap(FieldSpec const& f, std::size_t cod, std::size_t dom)
      : field_(f), cod_(cod), dom_(dom), cols_(dom) {}

  static LinMap zero(FieldSpec const& f, std::size_t cod, std::size_t dom) {
    return LinMap(f, cod, dom);
  }

  static LinMap identity(FieldSpec const& f, std::size_t n) {
    LinMap m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m.cols_[i].push_back({i, Scalar::one(f)});
    }
    return m;
  }

  static LinMap from_rows(FieldSpec const&  f,
                          std::size_t       cod,
                          std::size_t       dom,
                          DenseMatrix const& rows) {
    if (rows.size() != cod) {
      throw DimensionMismatch("expected " + std::to_string(cod) + " rows, got "
                              + std::to_string(rows.size()));
    }
    LinMap m(f, cod, dom);
    for (std::size_t i = 0; i < cod; ++i) {
      if (rows[i].size() != dom) {
        throw DimensionMismatch("row " + std::to_string(i) + " has "
                                + std::to_string(rows[i].size())
                                + " entries, expected " + std::to_string(dom));
      }
      for (std::size_t j = 0; j < dom; ++j) {
        if (!(rows[i][j].field() == f)) {
          throw FieldError("entry field differs from matrix field");
        }
        if (!rows[i][j].is_zero()) {
          m.cols_[j].push_back({i, rows[i][j]});
        }
      }
    }
    return m;
  }

  static LinMap from_ints(FieldSpec const&                              f,
                          std::size_t                                   cod,
                          std::size_t                                   dom,
                          std::vector<std::vector<long>> const&         rows) {
    DenseMatrix d(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (long v : rows[i]) {
        d[i].push_back(Scalar::from_int(f, v));
      }
    }
    return from_rows(f, cod, dom, d);
  }

  // The column vector e_i in a space of dimension n.
  static LinMap basis_vector(FieldSpec const& f, std::size_t n, std::size_t i) {
    LinMap m(f, n, 1);
    m.set(i, 0, Scalar::one(f));
    return m;
  }

  // The 1 x n row with every entry equal to one.
  static LinMap ones_row(FieldSpec const& f, std::size_t n) {
    LinMap m(f, 1, n);
    for (std::size_t j = 0; j < n; ++j) {
      m.cols_[j].push_back({0, Scalar::one(f)});
    }
    return m;
  }

  // The matrix of a map of finite sets {0..dom-1} -> {0..cod-1}.
  static LinMap from_function(FieldSpec const&                f,
                              std::size_t                     cod,
                              std::vector<std::size_t> const& images) {
    LinMap m(f, cod, images.size());
    for (std::size_t j = 0; j < images.size(); ++j) {
      if (images[j] >= cod) {
        throw DimensionMismatch("function value out of range");
      }
      m.cols_[j].push_back({images[j], Scalar::one(f)});
    }
    return m;
  }

  FieldSpec const& field() const noexcept { return field_; }
  std::size_t      cod() const noexcept { return cod_; }
  std::size_t      dom() const noexcept { return dom_; }
  bool             is_square() const noexcept { return cod_ == dom_; }

  Column const& column(std::size_t j) const { return cols_.at(j); }

  Scalar at(std::size_t i, std::size_t j) const {
    check_index(i, j);
    auto const& c  = cols_[j];
    auto        it = std::lower_bound(
        c.begin(), c.end(), i, [](Entry const& e, std::size_t r) {
          return e.row < r;
        });
    if (it != c.end() && it->row == i) {
      return it->value;
    }
    return Scalar::zero(field_);
  }

  void set(std::size_t i, std::size_t j, Scalar const& v) {
    check_index(i, j);
    if (!(v.field() == field_)) {
      throw FieldError("entry field differs from matrix field");
    }
    auto& c  = cols_[j];
    auto  it = std::lower_bound(
        c.begin(), c.end(), i, [](Entry const& e, std::size_t r) {
          return e.row < r;
        });
    bool present = it != c.end() && it->row == i;
    if (v.is_zero()) {
      if (present) {
        c.erase(it);
      }
    } else if (present) {
      it->value = v;
    } else {
      c.insert(it, {i, v});
    }
  }

  void add_to(std::size_t i, std::size_t j, Scalar const& v) {
    set(i, j, at(i, j) + v);
  }

  std::size_t nnz() const noexcept {
    std::size_t n = 0;
    for (auto const& c : cols_) {
      n += c.size();
    }
    return n;
  }

  bool is_zero() const noexcept { return nnz() == 0; }

  bool is_identity() const {
    return *this == identity(field_, cod_);
  }

  DenseMatrix to_dense() const {
    DenseMatrix d(cod_, std::vector<Scalar>(dom_, Scalar::zero(field_)));
    for (std::size_t j = 0; j < dom_; ++j) {
      for (auto const& e : cols_[j]) {
        d[e.row][j] = e.value;
      }
    }
    return d;
  }

  // The submatrix of the given columns, in the given order.
  LinMap columns(std::vector<std::size_t> const& which) const {
    LinMap m(field_, cod_, which.size());
    for (std::size_t k = 0; k < which.size(); ++k) {
      m.cols_[k] = cols_.at(which[k]);
    }
    return m;
  }

  LinMap transpose() const {
    LinMap t(field_, dom_, cod_);
    for (std::size_t j = 0; j < dom_; ++j) {
      for (auto const& e : cols_[j]) {
        t.cols_[e.row].push_back({j, e.value});
      }
    }
    return t;
  }

  LinMap scaled(Scalar const& s) const {
    LinMap m(field_, cod_, dom_);
    if (s.is_zero()) {
      return m;
    }
    for (std::size_t j = 0; j < dom_; ++j) {
      m.cols_[j].reserve(cols_[j].size());
      for (auto const& e : cols_[j]) {
        m.cols_[j].push_back({e.row, e.value * s});
      }
    }
    return m;
  }

  LinMap operator-() const { return scaled(-Scalar::one(field_)); }

  friend LinMap operator+(LinMap const& a, LinMap const& b) {
    return combine(a, b, false);
  }

  friend LinMap operator-(LinMap const& a, LinMap const& b) {
    return combine(a, b, true);
  }

  friend bool operator==(LinMap const& a, LinMap const& b) {
    return a.field_ == b.field_ && a.cod_ == b.cod_ && a.dom_ == b.dom_
           && a.cols_ == b.cols_;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << cod_ << "x" << dom_ << " over " << field_ << " [";
    auto d = to_dense();
    for (std::size_t i = 0; i < cod_; ++i) {
      os << (i == 0 ? "[" : ", [");
      for (std::size_t j = 0; j < dom_; ++j) {
        os << (j == 0 ? "" : " ") << d[i][j];
      }
      os << "]";
    }
    os << "]";
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, LinMap const& m) {
    return os << m.to_string();
  }

 private:
  friend LinMap compose2(LinMap const& g, LinMap const& f);
  friend LinMap kron2(LinMap const& f, LinMap const& g);

  void check_index(std::size_t i, std::size_t j) const {
    if (i >= cod_ || j >= dom_) {
      throw DimensionMismatch("index (" + std::to_string(i) + ", "
                              + std::to_string(j) + ") outside "
                              + std::to_string(cod_) + "x"
                              + std::to_string(dom_));
    }
  }

  static LinMap combine(LinMap const& a, LinMap const& b, bool subtract) {
    if (!(a.field_ == b.field_)) {
      throw FieldError("cannot add maps over " + a.field_.to_string() + " and "
                       + b.field_.to_string());
    }
    if (a.cod_ != b.cod_ || a.dom_ != b.dom_) {
      throw DimensionMismatch("cannot add " + std::to_string(a.cod_) + "x"
                              + std::to_string(a.dom_) + " and "
                              + std::to_string(b.cod_) + "x"
                              + std::to_string(b.dom_));
    }
    LinMap m(a.field_, a.cod_, a.dom_);
    for (std::size_t j = 0; j < a.dom_; ++j) {
      auto const& x = a.cols_[j];
      auto const& y = b.cols_[j];
      auto&       z = m.cols_[j];
      std::size_t p = 0, q = 0;
      while (p < x.size() || q < y.size()) {
        if (q == y.size() || (p < x.size() && x[p].row < y[q].row)) {
          z.push_back(x[p++]);
        } else if (p == x.size() || y[q].row < x[p].row) {
          z.push_back({y[q].row, subtract ? -y[q].value : y[q].value});
          ++q;
        } else {
          Scalar v = subtract ? x[p].value - y[q].value
                              : x[p].value + y[q].value;
          if (!v.is_zero()) {
            z.push_back({x[p].row, v});
          }
          ++p;
          ++q;
        }
      }
    }
    return m;
  }

  FieldSpec           field_;
  std::size_t         cod_ = 0;
  std::size_t         dom_ = 0;
  std::vector<Column> cols_;
};

////////////////////////////////////////////////////////////////////////////////
// Composition and tensor products
////////////////////////////////////////////////////////////////////////////////

inline LinMap compose2(LinMap const& g, LinMap const& f) {
  if (!(g.field_ == f.field_)) {
    throw FieldError("cannot compose maps over " + g.field_.to_string()
                     + " and " + f.field_.to_string());
  }
  if (g.dom_ != f.cod_) {
    throw DimensionMismatch("cannot compose " + std::to_string(g.cod_) + "x"
                            + std::to_string(g.dom_) + " after "
                            + std::to_string(f.cod_) + "x"
                            + std::to_string(f.dom_));
  }
  LinMap              h(g.field_, g.cod_, f.dom_);
  std::vector<Scalar> acc;
  std::vector<char>   touched_flag;
  std::vector<std::size_t> touched;
  for (std::size_t j = 0; j < f.dom_; ++j) {
    auto const& fc = f.cols_[j];
    if (fc.empty()) {
      continue;
    }
    if (fc.size() == 1) {
      // Fast path: a basis-vector column just scales one column of g.
      auto const& gc = g.cols_[fc[0].row];
      auto&       hc = h.cols_[j];
      hc.reserve(gc.size());
      for (auto const& e : gc) {
        hc.push_back({e.row, e.value * fc[0].value});
      }
      continue;
    }
    if (acc.empty()) {
      acc.assign(g.cod_, Scalar::zero(g.field_));
      touched_flag.assign(g.cod_, 0);
    }
    touched.clear();
    for (auto const& fe : fc) {
      for (auto const& ge : g.cols_[fe.row]) {
        if (!touched_flag[ge.row]) {
          touched_flag[ge.row] = 1;
          touched.push_back(ge.row);
        }
        acc[ge.row].add_product(ge.value, fe.value);
      }
    }
    std::sort(touched.begin(), touched.end());
    auto& hc = h.cols_[j];
    for (auto r : touched) {
      if (!acc[r].is_zero()) {
        hc.push_back({r, acc[r]});
      }
      acc[r]          = Scalar::zero(g.field_);
      touched_flag[r] = 0;
    }
  }
  return h;
}

// compose(g, f) = g o f; compose(a, b, c) = a o b o c.
inline LinMap compose(LinMap const& g, LinMap const& f) {
  return compose2(g, f);
}

template <typename... Rest>
LinMap compose(LinMap const& a, LinMap const& b, Rest const&... rest) {
  return compose2(a, compose(b, rest...));
}

inline LinMap kron2(LinMap const& f, LinMap const& g) {
  if (!(f.field_ == g.field_)) {
    throw FieldError("cannot tensor maps over " + f.field_.to_string()
                     + " and " + g.field_.to_string());
  }
  LinMap h(f.field_, f.cod_ * g.cod_, f.dom_ * g.dom_);
  for (std::size_t i = 0; i < f.dom_; ++i) {
    for (std::size_t j = 0; j < g.dom_; ++j) {
      auto& hc = h.cols_[i * g.dom_ + j];
      hc.reserve(f.cols_[i].size() * g.cols_[j].size());
      for (auto const& a : f.cols_[i]) {
        for (auto const& b : g.cols_[j]) {
          hc.push_back({a.row * g.cod_ + b.row, a.value * b.value});
        }
      }
    }
  }
  return h;
}

// kron(f, g) = f (x) g in left-major order; kron(a, b, c) = a (x) b (x) c.
inline LinMap kron(LinMap const& f, LinMap const& g) {
  return kron2(f, g);
}

template <typename... Rest>
LinMap kron(LinMap const& a, LinMap const& b, Rest const&... rest) {
  return kron2(kron2(a, b), rest...);
}

// The permutation of tensor factors of V_0 (x) ... (x) V_{k-1} whose output
// factor t is input factor order[t].
inline LinMap tensor_permutation(FieldSpec const&                f,
                                 std::vector<std::size_t> const& dims,
                                 std::vector<std::size_t> const& order) {
  std::size_t const k = dims.size();
  if (order.size() != k) {
    throw DimensionMismatch("factor order has wrong length");
  }
  {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t t = 0; t < k; ++t) {
      if (sorted[t] != t) {
        throw DimensionMismatch("factor order is not a permutation");
      }
    }
  }
  std::size_t total = 1;
  for (auto d : dims) {
    total *= d;
  }
  std::vector<std::size_t> out_dims(k);
  for (std::size_t t = 0; t < k; ++t) {
    out_dims[t] = dims[order[t]];
  }
  std::vector<std::size_t> images(total);
  std::vector<std::size_t> idx(k, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rem = flat;
    for (std::size_t t = k; t-- > 0;) {
      idx[t] = rem % dims[t];
      rem /= dims[t];
    }
    std::size_t out = 0;
    for (std::size_t t = 0; t < k; ++t) {
      out = out * out_dims[t] + idx[order[t]];
    }
    images[flat] = out;
  }
  return LinMap::from_function(f, total, images);
}

// The symmetry c_{M,N}: M (x) N -> N (x) M, sending i*n + j to j*m + i.
inline LinMap swap(std::size_t m, std::size_t n, FieldSpec const& f) {
  return tensor_permutation(f, {m, n}, {1, 0});
}

////////////////////////////////////////////////////////////////////////////////
// Row reduction and friends
////////////////////////////////////////////////////////////////////////////////

struct RowEchelon {
  DenseMatrix              reduced;  // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

// Gauss-Jordan elimination. Pivot rule: scan columns left to right and take
// the first row (at or below the current one) holding a nonzero entry.
inline RowEchelon row_reduce(DenseMatrix a) {
  RowEchelon         out;
  std::size_t const  rows = a.size();
  std::size_t const  cols = rows == 0 ? 0 : a[0].size();
  std::size_t        r    = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c].is_zero()) {
      ++piv;
    }
    if (piv == rows) {
      continue;
    }
    std::swap(a[r], a[piv]);
    Scalar inv = a[r][c].inverse();
    for (std::size_t k = c; k < cols; ++k) {
      a[r][k] *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) {
        continue;
      }
      Scalar factor = a[i][c];
      for (std::size_t k = c; k < cols; ++k) {
        if (!a[r][k].is_zero()) {
          a[i][k].add_product(-factor, a[r][k]);
        }
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.reduced = std::move(a);
  return out;
}

inline RowEchelon row_reduce(LinMap const& m) {
  return row_reduce(m.to_dense());
}

inline std::size_t rank(LinMap const& m) {
  return row_reduce(m).pivots.size();
}

// A basis of {x : f(x) = 0}, one vector per non-pivot column of the reduced
// row echelon form of f, in increasing column order. Each vector has a one in
// its free column and zeros in the other free columns.
inline std::vector<LinMap> nullspace(LinMap const& f) {
  auto const&             fs = f.field();
  auto                    re = row_reduce(f);
  std::vector<char>       is_pivot(f.dom(), 0);
  for (auto c : re.pivots) {
    is_pivot[c] = 1;
  }
  std::vector<LinMap> basis;
  for (std::size_t j = 0; j < f.dom(); ++j) {
    if (is_pivot[j]) {
      continue;
    }
    LinMap v(fs, f.dom(), 1);
    v.set(j, 0, Scalar::one(fs));
    for (std::size_t r = 0; r < re.pivots.size(); ++r) {
      if (!re.reduced[r][j].is_zero()) {
        v.set(re.pivots[r], 0, -re.reduced[r][j]);
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Place column vectors side by side.
inline LinMap hstack(FieldSpec const&           f,
                     std::size_t                rows,
                     std::vector<LinMap> const& vectors) {
  LinMap m(f, rows, vectors.size());
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (vectors[k].cod() != rows || vectors[k].dom() != 1) {
      throw DimensionMismatch("hstack expects column vectors of length "
                              + std::to_string(rows));
    }
    for (auto const& e : vectors[k].column(0)) {
      m.set(e.row, k, e.value);
    }
  }
  return m;
}

// The inclusion of ker(f) into dom(f) whose columns are nullspace(f).
inline LinMap kernel_inclusion(LinMap const& f) {
  return hstack(f.field(), f.dom(), nullspace(f));
}

inline LinMap invert(LinMap const& f) {
  if (!f.is_square()) {
    throw NotInvertible("a " + std::to_string(f.cod()) + "x"
                        + std::to_string(f.dom()) + " map is not invertible");
  }
  std::size_t const n  = f.dom();
  auto const&       fs = f.field();
  DenseMatrix       aug = f.to_dense();
  for (std::size_t i = 0; i < n; ++i) {
    aug[i].resize(2 * n, Scalar::zero(fs));
    aug[i][n + i] = Scalar::one(fs);
  }
  auto re = row_reduce(std::move(aug));
  if (n > 0 && (re.pivots.size() < n || re.pivots[n - 1] != n - 1)) {
    throw NotInvertible("matrix is singular");
  }
  DenseMatrix inv(n, std::vector<Scalar>(n, Scalar::zero(fs)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      inv[i][j] = re.reduced[i][n + j];
    }
  }
  return LinMap::from_rows(fs, n, n, inv);
}

inline bool is_invertible(LinMap const& f) {
  return f.is_square() && rank(f) == f.dom();
}

// Some X with a o X = b, or nullopt when the system is inconsistent. Free
// unknowns are set to zero, so the answer is unique whenever a is injective.
inline std::optional<LinMap> solve(LinMap const& a, LinMap const& b) {
  if (a.cod() != b.cod()) {
    throw DimensionMismatch("solve: a and b have different codomains");
  }
  auto const&       fs = a.field();
  std::size_t const n  = a.dom();
  std::size_t const k  = b.dom();
  DenseMatrix       aug = a.to_dense();
  auto              bd  = b.to_dense();
  for (std::size_t i = 0; i < aug.size(); ++i) {
    aug[i].insert(aug[i].end(), bd[i].begin(), bd[i].end());
  }
  if (aug.empty()) {
    return LinMap(fs, n, k);
  }
  auto re = row_reduce(std::move(aug));
  if (!re.pivots.empty() && re.pivots.back() >= n) {
    return std::nullopt;
  }
  LinMap x(fs, n, k);
  for (std::size_t r = 0; r < re.pivots.size(); ++r) {
    for (std::size_t j = 0; j < k; ++j) {
      x.set(re.pivots[r], j, re.reduced[r][n + j]);
    }
  }
  return x;
}

struct Splitting {
  LinMap p;  // M -> I(q)
  LinMap i;  // I(q) -> M
};

// Split an idempotent q as q = i o p with p o i = id. The image basis is the
// set of pivot columns of q; p is the nonzero part of its reduced row echelon
// form.
inline Splitting split_idempotent(LinMap const& q) {
  if (!q.is_square()) {
    throw NotIdempotent("a non-square map is not idempotent");
  }
  if (!(compose(q, q) == q)) {
    throw NotIdempotent("q o q differs from q");
  }
  auto const& fs = q.field();
  auto        re = row_reduce(q);
  std::size_t r  = re.pivots.size();
  LinMap      p  = LinMap::from_rows(fs, r, q.dom(), re.reduced);
  LinMap      i  = q.columns(re.pivots);
  return {std::move(p), std::move(i)};
}

}  // namespace trusslab
