/*
 * Copyright 2026 The spbrauer authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "spbrauer/scalars.hpp"

namespace spb {

/// Dense row-major matrix over an arbitrary element type.
template <class T>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(int r, int c, T fill = T()) : rows(r), cols(c), a(size_t(r) * c, fill) {}

  T& at(int r, int c) { return a[size_t(r) * cols + c]; }
  const T& at(int r, int c) const { return a[size_t(r) * cols + c]; }
  bool operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

template <class R>
Mat<typename R::Elem> mat_identity(const R& ring, int n) {
  Mat<typename R::Elem> m(n, n, ring.zero());
  for (int i = 0; i < n; ++i) m.at(i, i) = ring.one();
  return m;
}

template <class R>
Mat<typename R::Elem> mat_mul(const R& ring, const Mat<typename R::Elem>& a,
                              const Mat<typename R::Elem>& b) {
  if (a.cols != b.rows) throw std::invalid_argument("mat_mul: shape mismatch");
  Mat<typename R::Elem> c(a.rows, b.cols, ring.zero());
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const auto& aik = a.at(i, k);
      if (ring.is_zero(aik)) continue;
      for (int j = 0; j < b.cols; ++j)
        c.at(i, j) = ring.add(c.at(i, j), ring.mul(aik, b.at(k, j)));
    }
  return c;
}

template <class R>
Mat<typename R::Elem> mat_sub(const R& ring, const Mat<typename R::Elem>& a,
                              const Mat<typename R::Elem>& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw std::invalid_argument("mat_sub: shape mismatch");
  Mat<typename R::Elem> c = a;
  for (size_t i = 0; i < c.a.size(); ++i) c.a[i] = ring.sub(c.a[i], b.a[i]);
  return c;
}

template <class R>
Mat<typename R::Elem> mat_transpose(const R&, const Mat<typename R::Elem>& a) {
  Mat<typename R::Elem> t(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) t.at(j, i) = a.at(i, j);
  return t;
}

template <class R>
bool mat_is_zero(const R& ring, const Mat<typename R::Elem>& a) {
  for (const auto& x : a.a)
    if (!ring.is_zero(x)) return false;
  return true;
}

/// Kronecker product; index blocks of b inside a.
template <class R>
Mat<typename R::Elem> kron(const R& ring, const Mat<typename R::Elem>& a,
                           const Mat<typename R::Elem>& b) {
  Mat<typename R::Elem> c(a.rows * b.rows, a.cols * b.cols, ring.zero());
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) {
      const auto& aij = a.at(i, j);
      if (ring.is_zero(aij)) continue;
      for (int k = 0; k < b.rows; ++k)
        for (int l = 0; l < b.cols; ++l)
          c.at(i * b.rows + k, j * b.cols + l) = ring.mul(aij, b.at(k, l));
    }
  return c;
}

/// Incremental reduced-echelon basis of a subspace, canonical for the row
/// space: pivots increase, pivot entries are 1, pivot columns are cleared.
/// Used over GF(p); the rational case is specialised below.
template <class F>
class SubspaceBasis {
 public:
  using Elem = typename F::Elem;

  SubspaceBasis(F field, int ambient) : field_(field), ambient_(ambient) {
    if (ambient <= 0) throw std::invalid_argument("SubspaceBasis: empty ambient");
  }

  int ambient() const { return ambient_; }
  int rank() const { return int(rows_.size()); }
  const std::vector<int>& pivots() const { return pivots_; }
  const std::vector<std::vector<Elem>>& rows() const { return rows_; }
  const F& field() const { return field_; }

  /// Inserts a vector; returns true if the rank grew.
  bool insert(std::vector<Elem> v) {
    if (int(v.size()) != ambient_)
      throw std::invalid_argument("SubspaceBasis: length mismatch");
    int c = reduce(v);
    if (c < 0) return false;
    // normalize pivot to 1
    Elem inv = field_.inv(v[c]);
    for (auto& x : v) x = field_.mul(x, inv);
    // clear column c in existing rows
    for (size_t i = 0; i < rows_.size(); ++i) {
      Elem f = rows_[i][c];
      if (field_.is_zero(f)) continue;
      for (int j = 0; j < ambient_; ++j)
        rows_[i][j] = field_.sub(rows_[i][j], field_.mul(f, v[j]));
    }
    size_t pos = std::lower_bound(pivots_.begin(), pivots_.end(), c) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, c);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

  /// Reduces v in place against the basis; returns the leading nonzero
  /// column of the residual, or -1 if v lies in the span.
  int reduce(std::vector<Elem>& v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
      Elem f = v[pivots_[i]];
      if (field_.is_zero(f)) continue;
      const auto& r = rows_[i];
      for (int j = 0; j < ambient_; ++j)
        v[j] = field_.sub(v[j], field_.mul(f, r[j]));
    }
    for (int j = 0; j < ambient_; ++j)
      if (!field_.is_zero(v[j])) return j;
    return -1;
  }

  bool contains(std::vector<Elem> v) const { return reduce(v) < 0; }

  bool contains(const SubspaceBasis& other) const {
    if (other.ambient_ != ambient_)
      throw std::invalid_argument("SubspaceBasis: ambient mismatch");
    for (const auto& r : other.rows_)
      if (!contains(r)) return false;
    return true;
  }

  bool equals(const SubspaceBasis& other) const {
    if (other.ambient_ != ambient_)
      throw std::invalid_argument("SubspaceBasis: ambient mismatch");
    return pivots_ == other.pivots_ && rows_ == other.rows_;
  }

 private:
  F field_;
  int ambient_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<int> pivots_;
};

/// Prime-field case. Same canonical reduced echelon as the generic
/// template, with two inner-loop refinements that the big modular
/// certificates need: reductions accumulate in 64 bits and reduce lazily
/// when the modulus is small enough, and row updates use the field's
/// Barrett reduction.
template <>
class SubspaceBasis<GF> {
 public:
  using Elem = GF::Elem;

  SubspaceBasis(GF field, int ambient) : field_(field), ambient_(ambient) {
    if (ambient <= 0) throw std::invalid_argument("SubspaceBasis: empty ambient");
    // lazy accumulation needs (p-1)^2 * pivots to stay well under 2^63
    lazy_ = field_.modulus() < (1u << 20) && std::uint64_t(ambient) < (1u << 20);
  }

  int ambient() const { return ambient_; }
  int rank() const { return int(rows_.size()); }
  const std::vector<int>& pivots() const { return pivots_; }
  const std::vector<std::vector<Elem>>& rows() const { return rows_; }
  const GF& field() const { return field_; }

  bool insert(std::vector<Elem> v) {
    if (int(v.size()) != ambient_)
      throw std::invalid_argument("SubspaceBasis: length mismatch");
    int c = reduce(v);
    if (c < 0) return false;
    Elem inv = field_.inv(v[c]);
    for (int j = c; j < ambient_; ++j) v[j] = field_.mul(v[j], inv);
    const std::uint32_t p = field_.modulus();
    for (size_t i = 0; i < rows_.size(); ++i) {
      Elem f = rows_[i][c];
      if (f == 0) continue;
      std::uint64_t mf = p - f;
      auto& r = rows_[i];
      for (int j = c; j < ambient_; ++j)
        r[j] = field_.reduce(r[j] + mf * v[j]);
    }
    size_t pos = std::lower_bound(pivots_.begin(), pivots_.end(), c) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, c);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

  int reduce(std::vector<Elem>& v) const {
    const std::uint32_t p = field_.modulus();
    if (lazy_) {
      std::vector<std::uint64_t> acc(v.begin(), v.end());
      for (size_t i = 0; i < rows_.size(); ++i) {
        const int c = pivots_[i];
        std::uint64_t f = field_.reduce(acc[c]);
        if (f == 0) {
          acc[c] = 0;
          continue;
        }
        std::uint64_t mf = p - f;
        const auto& r = rows_[i];
        for (int j = c; j < ambient_; ++j) acc[j] += mf * r[j];
      }
      for (int j = 0; j < ambient_; ++j) v[j] = field_.reduce(acc[j]);
    } else {
      for (size_t i = 0; i < rows_.size(); ++i) {
        const int c = pivots_[i];
        Elem f = v[c];
        if (f == 0) continue;
        std::uint64_t mf = p - f;
        const auto& r = rows_[i];
        for (int j = c; j < ambient_; ++j)
          v[j] = field_.reduce(v[j] + mf * r[j]);
      }
    }
    for (int j = 0; j < ambient_; ++j)
      if (v[j] != 0) return j;
    return -1;
  }

  bool contains(std::vector<Elem> v) const { return reduce(v) < 0; }

  bool contains(const SubspaceBasis& other) const {
    if (other.ambient_ != ambient_)
      throw std::invalid_argument("SubspaceBasis: ambient mismatch");
    for (const auto& r : other.rows_)
      if (!contains(r)) return false;
    return true;
  }

  bool equals(const SubspaceBasis& other) const {
    if (other.ambient_ != ambient_)
      throw std::invalid_argument("SubspaceBasis: ambient mismatch");
    return pivots_ == other.pivots_ && rows_ == other.rows_;
  }

 private:
  GF field_;
  int ambient_;
  bool lazy_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<int> pivots_;
};

/// Rational case: fraction-free. Rows are primitive integer vectors with a
/// positive pivot entry; zeros above and below each pivot. This scaled
/// reduced echelon form is canonical for the row space, so bases compare
/// bit-exactly and results do not depend on insertion order.
template <>
class SubspaceBasis<RatField> {
 public:
  SubspaceBasis(RatField, int ambient) : ambient_(ambient) {
    if (ambient <= 0) throw std::invalid_argument("SubspaceBasis: empty ambient");
  }

  int ambient() const { return ambient_; }
  int rank() const { return int(rows_.size()); }
  const std::vector<int>& pivots() const { return pivots_; }
  const std::vector<std::vector<Int>>& int_rows() const { return rows_; }
  RatField field() const { return RatField{}; }

  bool insert(const std::vector<Rat>& v) { return insert_int(clear_denominators(v)); }

  bool insert_int(std::vector<Int> v) {
    if (int(v.size()) != ambient_)
      throw std::invalid_argument("SubspaceBasis: length mismatch");
    int c = reduce_int(v);
    if (c < 0) return false;
    make_primitive(v, c);
    for (size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i][c] == 0) continue;
      cross_eliminate(rows_[i], v, c);
      make_primitive(rows_[i], pivots_[i]);
    }
    size_t pos = std::lower_bound(pivots_.begin(), pivots_.end(), c) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, c);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

  /// Fraction-free reduction; returns leading nonzero column or -1.
  int reduce_int(std::vector<Int>& v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
      if (v[pivots_[i]] == 0) continue;
      cross_eliminate(v, rows_[i], pivots_[i]);
      strip_content(v);
    }
    for (int j = 0; j < ambient_; ++j)
      if (v[j] != 0) return j;
    return -1;
  }

  bool contains(const std::vector<Rat>& v) const {
    auto w = clear_denominators(v);
    return reduce_int(w) < 0;
  }

  bool contains_int(std::vector<Int> v) const { return reduce_int(v) < 0; }

  bool contains(const SubspaceBasis& other) const {
    if (other.ambient_ != ambient_)
      throw std::invalid_argument("SubspaceBasis: ambient mismatch");
    for (const auto& r : other.rows_)
      if (!contains_int(r)) return false;
    return true;
  }

  bool equals(const SubspaceBasis& other) const {
    if (other.ambient_ != ambient_)
      throw std::invalid_argument("SubspaceBasis: ambient mismatch");
    return pivots_ == other.pivots_ && rows_ == other.rows_;
  }

  /// Rational reduced-echelon rows (pivot entries 1).
  std::vector<std::vector<Rat>> rat_rows() const {
    std::vector<std::vector<Rat>> out;
    out.reserve(rows_.size());
    for (size_t i = 0; i < rows_.size(); ++i) {
      std::vector<Rat> r(ambient_);
      Rat piv(rows_[i][pivots_[i]]);
      for (int j = 0; j < ambient_; ++j) {
        r[j] = Rat(rows_[i][j]) / piv;
        r[j].canonicalize();
      }
      out.push_back(std::move(r));
    }
    return out;
  }

  static std::vector<Int> clear_denominators(const std::vector<Rat>& v) {
    Int l = 1;
    for (const auto& x : v) l = lcm(l, x.get_den());
    std::vector<Int> w(v.size());
    for (size_t i = 0; i < v.size(); ++i)
      w[i] = v[i].get_num() * (l / v[i].get_den());
    return w;
  }

 private:
  // target := pivot_of_other * target - target[c] * other, zeroing column c
  static void cross_eliminate(std::vector<Int>& target,
                              const std::vector<Int>& other, int c) {
    Int f = target[c];
    Int p = other[c];
    Int g = gcd(f, p);
    if (g != 0) {
      f /= g;
      p /= g;
    }
    for (size_t j = 0; j < target.size(); ++j)
      target[j] = p * target[j] - f * other[j];
  }

  static void strip_content(std::vector<Int>& v) {
    Int g = 0;
    for (const auto& x : v) {
      g = gcd(g, x);
      if (g == 1) return;
    }
    if (g == 0 || g == 1) return;
    for (auto& x : v) x /= g;
  }

  static void make_primitive(std::vector<Int>& v, int pivot_col) {
    strip_content(v);
    if (v[pivot_col] < 0)
      for (auto& x : v) x = -x;
  }

  int ambient_;
  std::vector<std::vector<Int>> rows_;
  std::vector<int> pivots_;
};

/// Canonical reduced-echelon basis of the span of the given vectors.
template <class F>
SubspaceBasis<F> echelon_span(const F& field, int ambient,
                              const std::vector<std::vector<typename F::Elem>>& vectors) {
  SubspaceBasis<F> basis(field, ambient);
  for (const auto& v : vectors) basis.insert(v);
  return basis;
}

/// Null space of an already-echelonized constraint system: one basis vector
/// per free column. Asserts rank-nullity.
template <class F>
SubspaceBasis<F> kernel_of_constraints(const SubspaceBasis<F>& constraints) {
  const F& field = constraints.field();
  const int ambient = constraints.ambient();
  const int rk = constraints.rank();

  std::vector<char> is_pivot(ambient, 0);
  for (int p : constraints.pivots()) is_pivot[p] = 1;

  SubspaceBasis<F> result(field, ambient);
  std::vector<std::vector<typename F::Elem>> normalized;
  if constexpr (std::is_same_v<F, RatField>) {
    normalized = constraints.rat_rows();
  } else {
    normalized = constraints.rows();
  }
  for (int f = 0; f < ambient; ++f) {
    if (is_pivot[f]) continue;
    std::vector<typename F::Elem> v(ambient, field.zero());
    v[f] = field.one();
    for (int i = 0; i < rk; ++i)
      v[constraints.pivots()[i]] = field.neg(normalized[i][f]);
    result.insert(v);
  }
  if (result.rank() + rk != ambient)
    throw std::logic_error("kernel_of_constraints: rank-nullity violated");
  return result;
}

/// Null space of the system whose rows are linear constraints on the
/// ambient coordinates.
template <class F>
SubspaceBasis<F> kernel_of_rows(const F& field, int ambient,
                                const std::vector<std::vector<typename F::Elem>>& rows) {
  SubspaceBasis<F> constraints(field, ambient);
  for (const auto& r : rows) constraints.insert(r);
  return kernel_of_constraints(constraints);
}

/// Basis of {X : X M_i = M_i X for all i} inside the D*D coordinate space
/// (row-major flattening). Computed by iterated kernel restriction.
template <class F>
SubspaceBasis<F> commutant(const F& field, int dim,
                           const std::vector<Mat<typename F::Elem>>& mats) {
  using Elem = typename F::Elem;
  const int amb = dim * dim;
  // current solution space, as a list of basis matrices (starts as all of End)
  std::vector<std::vector<Elem>> basis;
  basis.reserve(amb);
  for (int i = 0; i < amb; ++i) {
    std::vector<Elem> e(amb, field.zero());
    e[i] = field.one();
    basis.push_back(std::move(e));
  }
  for (const auto& m : mats) {
    if (m.rows != dim || m.cols != dim)
      throw std::invalid_argument("commutant: matrices must be square of equal size");
    if (basis.empty()) break;
    const int d = int(basis.size());
    // rows of the map X -> X m - m X restricted to the current basis
    std::vector<std::vector<Elem>> rows(amb, std::vector<Elem>(d, field.zero()));
    for (int b = 0; b < d; ++b) {
      const auto& x = basis[b];
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
          Elem acc = field.zero();
          for (int k = 0; k < dim; ++k) {
            acc = field.add(acc, field.mul(x[size_t(i) * dim + k], m.at(k, j)));
            acc = field.sub(acc, field.mul(m.at(i, k), x[size_t(k) * dim + j]));
          }
          rows[size_t(i) * dim + j][b] = acc;
        }
    }
    SubspaceBasis<F> ker = kernel_of_rows(field, d, rows);
    std::vector<std::vector<Elem>> next;
    std::vector<std::vector<Elem>> coeffs;
    if constexpr (std::is_same_v<F, RatField>) {
      for (const auto& r : ker.int_rows()) {
        std::vector<Elem> c(r.size());
        for (size_t i = 0; i < r.size(); ++i) c[i] = Rat(r[i]);
        coeffs.push_back(std::move(c));
      }
    } else {
      coeffs = ker.rows();
    }
    for (const auto& c : coeffs) {
      std::vector<Elem> v(amb, field.zero());
      for (int b = 0; b < d; ++b) {
        if (field.is_zero(c[b])) continue;
        for (int i = 0; i < amb; ++i)
          v[i] = field.add(v[i], field.mul(c[b], basis[b][i]));
      }
      next.push_back(std::move(v));
    }
    basis = std::move(next);
  }
  return echelon_span(field, amb, basis);
}

/// Exact determinant of an integer matrix (Bareiss fraction-free pivoting).
Int det_bareiss(Mat<Int> a);

}  // namespace spb
