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

#include "spbrauer/tensor.hpp"

#include <algorithm>
#include <numeric>

namespace spb {

int pow_int(int base, int exp) {
  int acc = 1;
  for (int i = 0; i < exp; ++i) acc *= base;
  return acc;
}

int encode_index(const std::vector<int>& tuple, int n) {
  int code = 0;
  for (int x : tuple) code = code * n + (x - 1);
  return code;
}

std::vector<int> decode_index(int code, int r, int n) {
  std::vector<int> t(r);
  for (int k = r - 1; k >= 0; --k) {
    t[k] = code % n + 1;
    code /= n;
  }
  return t;
}

void SparseMatZ::normalize() {
  std::sort(nz.begin(), nz.end(), [](const Trip& a, const Trip& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  std::vector<Trip> out;
  out.reserve(nz.size());
  for (const auto& t : nz) {
    if (!out.empty() && out.back().row == t.row && out.back().col == t.col)
      out.back().val += t.val;
    else
      out.push_back(t);
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const Trip& t) { return t.val == 0; }),
            out.end());
  nz = std::move(out);
}

SparseMatZ spmm(const SparseMatZ& a, const SparseMatZ& b) {
  if (a.cols != b.rows) throw std::invalid_argument("spmm: shape mismatch");
  // group b by row
  std::vector<std::pair<size_t, size_t>> brow(b.rows, {0, 0});
  {
    size_t i = 0;
    while (i < b.nz.size()) {
      size_t j = i;
      while (j < b.nz.size() && b.nz[j].row == b.nz[i].row) ++j;
      brow[b.nz[i].row] = {i, j};
      i = j;
    }
  }
  SparseMatZ c;
  c.rows = a.rows;
  c.cols = b.cols;
  for (const auto& ta : a.nz) {
    auto [lo, hi] = brow[ta.col];
    for (size_t k = lo; k < hi; ++k)
      c.nz.push_back({ta.row, b.nz[k].col, ta.val * b.nz[k].val});
  }
  c.normalize();
  return c;
}

SparseMatZ sp_scale(const SparseMatZ& a, long long c) {
  SparseMatZ out = a;
  for (auto& t : out.nz) t.val *= c;
  out.normalize();
  return out;
}

bool sp_equal(const SparseMatZ& a, const SparseMatZ& b) {
  if (a.rows != b.rows || a.cols != b.cols || a.nz.size() != b.nz.size())
    return false;
  for (size_t i = 0; i < a.nz.size(); ++i)
    if (a.nz[i].row != b.nz[i].row || a.nz[i].col != b.nz[i].col ||
        a.nz[i].val != b.nz[i].val)
      return false;
  return true;
}

int pair_value(const SympSpace& sp, bool top_a, int idx_a, bool top_b, int idx_b) {
  if (top_a && !top_b) return idx_a == idx_b ? 1 : 0;
  if (!top_a && top_b) return idx_a == idx_b ? -1 : 0;  // reversed covector-vector pairing
  return form_basis(sp, idx_a, idx_b);
}

int f_eval(const Diagram& d, const SympSpace& sp, const std::vector<int>& ivec,
           const std::vector<int>& jvec) {
  if (int(ivec.size()) != d.top() || int(jvec.size()) != d.bottom())
    throw std::invalid_argument("f_eval: index tuple length mismatch");
  int acc = 1;
  for (auto [p, q] : d.edges()) {
    int ia = d.is_top(p) ? ivec[d.pos(p)] : jvec[d.pos(p)];
    int ib = d.is_top(q) ? ivec[d.pos(q)] : jvec[d.pos(q)];
    int val = pair_value(sp, d.is_top(p), ia, d.is_top(q), ib);
    if (val == 0) return 0;
    acc *= val;
  }
  return acc;
}

DiagramBlock rep_matrix(const Diagram& d, const SympSpace& sp) {
  const int n = sp.n;
  const int u = d.top(), v = d.bottom();
  DiagramBlock out;
  out.u = u;
  out.v = v;
  out.mat.rows = pow_int(n, u);
  out.mat.cols = pow_int(n, v);
  const auto& edges = d.edges();
  const int ne = int(edges.size());
  // one free index per edge; initial vertex gets l, terminal gets the label
  // forced by the pairing (l for vertical edges, l' for horizontal ones)
  std::vector<int> ivec(u), jvec(v), choice(ne, 1);
  for (;;) {
    int sign = 1;
    for (int e = 0; e < ne; ++e) {
      auto [p, q] = edges[e];
      int l = choice[e];
      bool horizontal = d.is_top(p) == d.is_top(q);
      int lp = horizontal ? prime_index(sp, l) : l;
      if (horizontal) sign *= eps(sp, l);
      if (d.is_top(p))
        ivec[d.pos(p)] = l;
      else
        jvec[d.pos(p)] = l;
      if (d.is_top(q))
        ivec[d.pos(q)] = lp;
      else
        jvec[d.pos(q)] = lp;
    }
    out.mat.nz.push_back({encode_index(ivec, n), encode_index(jvec, n), sign});
    int e = ne - 1;
    while (e >= 0 && choice[e] == n) choice[e--] = 1;
    if (e < 0) break;
    ++choice[e];
  }
  out.mat.normalize();
  return out;
}

SparseMatZ sym_action(const std::vector<int>& pi, int r, int n) {
  if (int(pi.size()) != r) throw std::invalid_argument("sym_action: size mismatch");
  SparseMatZ out;
  out.rows = out.cols = pow_int(n, r);
  std::vector<int> dest(r);
  for (int code = 0; code < out.cols; ++code) {
    auto src = decode_index(code, r, n);
    // factor at position k moves to position pi_k
    for (int k = 0; k < r; ++k) dest[pi[k] - 1] = src[k];
    out.nz.push_back({encode_index(dest, n), code, 1});
  }
  out.normalize();
  return out;
}

std::vector<std::vector<int>> all_permutations(int r) {
  std::vector<int> pi(r);
  std::iota(pi.begin(), pi.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(pi);
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

BisymCoords::BisymCoords(int n, int s) : n_(n), s_(s), total_(0) {
  offsets_.resize(s + 1);
  dims_.resize(s + 1);
  orbit_of_.resize(s + 1);
  reps_.resize(s + 1);
  for (int r = 0; r <= s; ++r) {
    const int d = pow_int(n, r);
    dims_[r] = d;
    offsets_[r] = total_;
    orbit_of_[r].assign(size_t(d) * d, -1);
    const auto perms = all_permutations(r);
    std::vector<int> row_t(r), col_t(r), prow(r), pcol(r);
    for (int row = 0; row < d; ++row)
      for (int col = 0; col < d; ++col) {
        size_t key = size_t(row) * d + col;
        if (orbit_of_[r][key] >= 0) continue;
        int id = int(reps_[r].size());
        reps_[r].emplace_back(row, col);
        row_t = decode_index(row, r, n);
        col_t = decode_index(col, r, n);
        for (const auto& pi : perms) {
          for (int k = 0; k < r; ++k) {
            prow[pi[k] - 1] = row_t[k];
            pcol[pi[k] - 1] = col_t[k];
          }
          orbit_of_[r][size_t(encode_index(prow, n)) * d + encode_index(pcol, n)] = id;
        }
      }
    total_ += int(reps_[r].size());
  }
}

}  // namespace spb
