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

#include <map>
#include <utility>
#include <vector>

#include "spbrauer/diagrams.hpp"
#include "spbrauer/linalg.hpp"
#include "spbrauer/symplectic.hpp"

namespace spb {

// Index tuples (i_1,...,i_r), entries 1..n, are addressed lexicographically
// with i_1 most significant: code = sum (i_k - 1) n^{r-k}.
int encode_index(const std::vector<int>& tuple, int n);
std::vector<int> decode_index(int code, int r, int n);
int pow_int(int base, int exp);

/// Sparse integer matrix in coordinate form, sorted by (row, col) with
/// combined entries. Diagram images have entries +-1; products stay small.
struct SparseMatZ {
  struct Trip {
    int row, col;
    long long val;
  };
  int rows = 0, cols = 0;
  std::vector<Trip> nz;

  void normalize();  // sort, combine, drop zeros
};

SparseMatZ spmm(const SparseMatZ& a, const SparseMatZ& b);
SparseMatZ sp_scale(const SparseMatZ& a, long long c);
bool sp_equal(const SparseMatZ& a, const SparseMatZ& b);

template <class F>
Mat<typename F::Elem> sp_to_dense(const F& field, const SparseMatZ& a) {
  Mat<typename F::Elem> m(a.rows, a.cols, field.zero());
  for (const auto& t : a.nz)
    m.at(t.row, t.col) = field.add(m.at(t.row, t.col), field.from_int(long(t.val)));
  return m;
}

/// One block of the diagram representation: the matrix of E(D) as a map
/// from v-fold to u-fold tensors.
struct DiagramBlock {
  int u = 0, v = 0;
  SparseMatZ mat;
};

/// Pairing of two labelled slots, with covectors identified with vectors
/// through the form: two covector slots or two vector slots pair to
/// eps_i delta_{i,j'}, a covector against a vector to delta_{ij}, and the
/// reversed order picks up a minus sign. top_a selects the covector row.
int pair_value(const SympSpace& sp, bool top_a, int idx_a, bool top_b, int idx_b);

/// Value of the multilinear form of a diagram at basis covectors e*_i and
/// basis vectors e_j: the product over edges of the pairing of the edge's
/// initial and terminal labels. Always -1, 0 or 1.
int f_eval(const Diagram& d, const SympSpace& sp, const std::vector<int>& ivec,
           const std::vector<int>& jvec);

/// The block matrix of E(D): entries are the form values at basis tuples.
/// For c_r this is the identity on r-fold tensors.
DiagramBlock rep_matrix(const Diagram& d, const SympSpace& sp);

/// Place-permutation matrix of pi (1-based, size r) on r-fold tensors:
/// factor at position k moves to position pi_k.
SparseMatZ sym_action(const std::vector<int>& pi, int r, int n);

/// Endomorphism of the truncated tensor space, stored per (u,v) block;
/// absent blocks are zero.
template <class F>
struct BlockEndo {
  int n = 0, s = 0;
  std::map<std::pair<int, int>, Mat<typename F::Elem>> blocks;

  BlockEndo(int n_, int s_) : n(n_), s(s_) {}
};

template <class F>
BlockEndo<F> block_identity(const F& field, int n, int s) {
  BlockEndo<F> e(n, s);
  for (int r = 0; r <= s; ++r)
    e.blocks.emplace(std::make_pair(r, r), mat_identity(field, pow_int(n, r)));
  return e;
}

template <class F>
BlockEndo<F> diagram_endo(const F& field, const DiagramBlock& b, int n, int s) {
  BlockEndo<F> e(n, s);
  e.blocks.emplace(std::make_pair(b.u, b.v), sp_to_dense(field, b.mat));
  return e;
}

template <class F>
void block_add_scaled(const F& field, BlockEndo<F>& acc, const BlockEndo<F>& x,
                      const typename F::Elem& c) {
  for (const auto& [uv, m] : x.blocks) {
    auto it = acc.blocks.find(uv);
    if (it == acc.blocks.end()) {
      Mat<typename F::Elem> z(m.rows, m.cols, field.zero());
      it = acc.blocks.emplace(uv, std::move(z)).first;
    }
    for (size_t i = 0; i < m.a.size(); ++i)
      it->second.a[i] = field.add(it->second.a[i], field.mul(c, m.a[i]));
  }
}

template <class F>
BlockEndo<F> block_mul(const F& field, const BlockEndo<F>& x, const BlockEndo<F>& y) {
  BlockEndo<F> out(x.n, x.s);
  for (const auto& [uv, a] : x.blocks)
    for (const auto& [vw, b] : y.blocks) {
      if (uv.second != vw.first) continue;
      auto prod = mat_mul(field, a, b);
      auto key = std::make_pair(uv.first, vw.second);
      auto it = out.blocks.find(key);
      if (it == out.blocks.end()) {
        out.blocks.emplace(key, std::move(prod));
      } else {
        for (size_t i = 0; i < prod.a.size(); ++i)
          it->second.a[i] = field.add(it->second.a[i], prod.a[i]);
      }
    }
  return out;
}

template <class F>
bool block_is_zero(const F& field, const BlockEndo<F>& x) {
  for (const auto& [uv, m] : x.blocks)
    if (!mat_is_zero(field, m)) return false;
  return true;
}

template <class F>
bool block_equal(const F& field, const BlockEndo<F>& x, const BlockEndo<F>& y) {
  auto covered = [&](const BlockEndo<F>& a, const BlockEndo<F>& b) {
    for (const auto& [uv, m] : a.blocks) {
      auto it = b.blocks.find(uv);
      if (it == b.blocks.end()) {
        if (!mat_is_zero(field, m)) return false;
      } else if (!mat_is_zero(field, mat_sub(field, m, it->second))) {
        return false;
      }
    }
    return true;
  };
  return covered(x, y) && covered(y, x);
}

/// Kronecker-power action of a matrix on the truncated tensor space:
/// block r is the r-th tensor power, block 0 the 1x1 identity.
template <class F>
BlockEndo<F> group_rep(const F& field, const Mat<typename F::Elem>& a, int s) {
  BlockEndo<F> out(a.rows, s);
  Mat<typename F::Elem> acc = mat_identity(field, 1);
  out.blocks.emplace(std::make_pair(0, 0), acc);
  for (int r = 1; r <= s; ++r) {
    acc = kron(field, acc, a);
    out.blocks.emplace(std::make_pair(r, r), acc);
  }
  return out;
}

/// Commutation with every place permutation, checked on generators:
/// each diagonal block must commute with the adjacent transpositions of its
/// symmetric group. Off-diagonal blocks are not constrained.
template <class F>
bool is_bisymmetric(const F& field, const BlockEndo<F>& x) {
  for (int r = 2; r <= x.s; ++r) {
    auto it = x.blocks.find(std::make_pair(r, r));
    if (it == x.blocks.end()) continue;
    for (int i = 1; i < r; ++i) {
      std::vector<int> pi(r);
      for (int j = 0; j < r; ++j) pi[j] = j + 1;
      std::swap(pi[i - 1], pi[i]);
      auto p = sp_to_dense(field, sym_action(pi, r, x.n));
      if (!mat_is_zero(field, mat_sub(field, mat_mul(field, p, it->second),
                                      mat_mul(field, it->second, p))))
        return false;
    }
  }
  return true;
}

/// Coordinates on the space of block-diagonal endomorphisms whose blocks
/// commute with their symmetric-group action. The group permutes the
/// matrix-unit basis of each block, so over every field that commutant has
/// the orbit sums as a basis; coordinates are indexed per block by the
/// orbits of simultaneous place permutation on (row, column) index pairs.
class BisymCoords {
 public:
  BisymCoords(int n, int s);

  int n() const { return n_; }
  int s() const { return s_; }
  int total() const { return total_; }
  int orbit_count(int r) const { return int(reps_[r].size()); }
  int offset(int r) const { return offsets_[r]; }
  /// Global coordinate of the orbit of (row, col) in block r.
  int coord(int r, int row, int col) const {
    return offsets_[r] + orbit_of_[r][size_t(row) * dims_[r] + col];
  }
  /// Representative (row, col) of each orbit in block r.
  const std::vector<std::pair<int, int>>& reps(int r) const { return reps_[r]; }
  int block_dim(int r) const { return dims_[r]; }

  /// Reads off the orbit coordinates of a block-diagonal endomorphism
  /// (values at orbit representatives). Blocks absent from x count as zero.
  template <class F>
  std::vector<typename F::Elem> project(const F& field, const BlockEndo<F>& x) const {
    std::vector<typename F::Elem> out(total_, field.zero());
    for (int r = 0; r <= s_; ++r) {
      auto it = x.blocks.find(std::make_pair(r, r));
      if (it == x.blocks.end()) continue;
      for (size_t k = 0; k < reps_[r].size(); ++k)
        out[offsets_[r] + int(k)] = it->second.at(reps_[r][k].first, reps_[r][k].second);
    }
    return out;
  }

  /// Expands orbit coordinates back to the block-diagonal endomorphism.
  template <class F>
  BlockEndo<F> expand(const F& field, const std::vector<typename F::Elem>& coords) const {
    BlockEndo<F> out(n_, s_);
    for (int r = 0; r <= s_; ++r) {
      Mat<typename F::Elem> m(dims_[r], dims_[r], field.zero());
      for (int row = 0; row < dims_[r]; ++row)
        for (int col = 0; col < dims_[r]; ++col)
          m.at(row, col) = coords[coord(r, row, col)];
      out.blocks.emplace(std::make_pair(r, r), std::move(m));
    }
    return out;
  }

 private:
  int n_, s_, total_;
  std::vector<int> offsets_;
  std::vector<int> dims_;                          // n^r per block
  std::vector<std::vector<int>> orbit_of_;         // per r: (row*dim+col) -> local orbit
  std::vector<std::vector<std::pair<int, int>>> reps_;
};

/// All permutations of {1..r} in lexicographic order.
std::vector<std::vector<int>> all_permutations(int r);

}  // namespace spb
