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

#include <vector>

#include "spbrauer/linalg.hpp"
#include "spbrauer/rng.hpp"
#include "spbrauer/scalars.hpp"

namespace spb {

/// Even-dimensional space k^n, n = 2m, carrying the standard symplectic
/// form <u,v> = sum_i eps_i u_i v_{i'} with i' = n+1-i.
struct SympSpace {
  int n;
  int m;
  explicit SympSpace(int n_) : n(n_), m(n_ / 2) {
    if (n < 2 || n % 2 != 0)
      throw std::invalid_argument("SympSpace: n must be even and >= 2");
  }
};

/// The index involution i' = n+1-i (1-based).
inline int prime_index(const SympSpace& sp, int i) {
  if (i < 1 || i > sp.n) throw std::out_of_range("prime_index: index out of range");
  return sp.n + 1 - i;
}

/// eps_i = +1 for i <= m, -1 for i > m.
inline int eps(const SympSpace& sp, int i) {
  if (i < 1 || i > sp.n) throw std::out_of_range("eps: index out of range");
  return i <= sp.m ? 1 : -1;
}

/// <e_i, e_j> = eps_i delta_{i,j'}; antisymmetric, values in {-1,0,1}.
inline int form_basis(const SympSpace& sp, int i, int j) {
  return j == prime_index(sp, i) ? eps(sp, i) : 0;
}

/// The Gram matrix J, J_{ij} = delta_{ij'} eps_i.
Mat<Int> symp_gram_int(const SympSpace& sp);

/// <u, v> = u^T J v for integer coordinate vectors.
Int symp_form_int(const SympSpace& sp, const std::vector<Int>& u,
                  const std::vector<Int>& v);

/// Transvection x -> x + c <x,v> v as an integer matrix, I + c v (Jv)^T.
Mat<Int> transvection_int(const SympSpace& sp, const std::vector<Int>& v, long c);

/// One random transvection with a small parameter; entries stay in [-2, 2].
Mat<Int> sample_transvection_int(const SympSpace& sp, Rng& rng);

/// Seeded products of integer symplectic transvections. Every returned
/// matrix satisfies A^T J A = J and A J A^T = J exactly; a violation
/// aborts, since it can only mean the generators are wrong.
std::vector<Mat<Int>> sample_symplectic_int(const SympSpace& sp, Rng& rng,
                                            int count);

template <class F>
Mat<typename F::Elem> mat_cast_int(const F& field, const Mat<Int>& a) {
  Mat<typename F::Elem> out(a.rows, a.cols, field.zero());
  for (size_t i = 0; i < a.a.size(); ++i) out.a[i] = field.from_bigint(a.a[i]);
  return out;
}

template <class F>
bool is_symplectic(const F& field, const SympSpace& sp,
                   const Mat<typename F::Elem>& a) {
  Mat<typename F::Elem> j = mat_cast_int(field, symp_gram_int(sp));
  auto at = mat_transpose(field, a);
  if (!(mat_mul(field, mat_mul(field, at, j), a) == j)) return false;
  return mat_mul(field, mat_mul(field, a, j), at) == j;
}

/// Exact matrices in Sp_n over the given field, from seeded transvection
/// products with small integer parameters.
template <class F>
std::vector<Mat<typename F::Elem>> sample_symplectic(const F& field,
                                                     const SympSpace& sp,
                                                     Rng& rng, int count) {
  auto ints = sample_symplectic_int(sp, rng, count);
  std::vector<Mat<typename F::Elem>> out;
  out.reserve(ints.size());
  for (const auto& a : ints) {
    auto cast = mat_cast_int(field, a);
    if (!is_symplectic(field, sp, cast))
      throw std::logic_error("sample_symplectic: generator produced a non-symplectic matrix");
    out.push_back(std::move(cast));
  }
  return out;
}

}  // namespace spb
