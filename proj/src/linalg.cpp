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

#include "spbrauer/linalg.hpp"

namespace spb {

Int det_bareiss(Mat<Int> a) {
  if (a.rows != a.cols) throw std::invalid_argument("det_bareiss: not square");
  const int n = a.rows;
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        // exact by the Bareiss identity
        a.at(i, j) = num / prev;
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

}  // namespace spb
