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

#include "spbrauer/symplectic.hpp"

namespace spb {

Mat<Int> symp_gram_int(const SympSpace& sp) {
  Mat<Int> j(sp.n, sp.n, Int(0));
  for (int i = 1; i <= sp.n; ++i) j.at(i - 1, prime_index(sp, i) - 1) = eps(sp, i);
  return j;
}

Int symp_form_int(const SympSpace& sp, const std::vector<Int>& u,
                  const std::vector<Int>& v) {
  if (int(u.size()) != sp.n || int(v.size()) != sp.n)
    throw std::invalid_argument("symp_form_int: bad vector length");
  Int acc = 0;
  for (int i = 1; i <= sp.n; ++i)
    acc += eps(sp, i) * u[i - 1] * v[prime_index(sp, i) - 1];
  return acc;
}

Mat<Int> transvection_int(const SympSpace& sp, const std::vector<Int>& v, long c) {
  // (Jv)^T x = <x, v>
  std::vector<Int> jv(sp.n, Int(0));
  for (int i = 1; i <= sp.n; ++i)
    jv[i - 1] = eps(sp, i) * v[prime_index(sp, i) - 1];
  Mat<Int> t(sp.n, sp.n, Int(0));
  for (int i = 0; i < sp.n; ++i) {
    t.at(i, i) = 1;
    for (int j = 0; j < sp.n; ++j) t.at(i, j) += c * v[i] * jv[j];
  }
  return t;
}

Mat<Int> sample_transvection_int(const SympSpace& sp, Rng& rng) {
  // directions e_i and e_i + e_j, small coefficients
  static const long coeffs[4] = {1, -1, 2, -2};
  std::vector<Int> v(sp.n, Int(0));
  int i = int(rng.below(sp.n));
  v[i] = 1;
  if (rng.below(2) == 1) {
    int j = int(rng.below(sp.n));
    if (j != i) v[j] = 1;
  }
  return transvection_int(sp, v, coeffs[rng.below(4)]);
}

std::vector<Mat<Int>> sample_symplectic_int(const SympSpace& sp, Rng& rng,
                                            int count) {
  if (count < 1) throw std::invalid_argument("sample_symplectic_int: count >= 1");
  IntRing zr;
  std::vector<Mat<Int>> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    // product lengths toward the upper end of the 3n budget; very short
    // products have large commutants and carry little span
    int len = 2 * sp.n + int(rng.below(std::uint64_t(sp.n + 1)));
    Mat<Int> acc = mat_identity(zr, sp.n);
    for (int step = 0; step < len; ++step)
      acc = mat_mul(zr, acc, sample_transvection_int(sp, rng));
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace spb
