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

#include "spbrauer/algebra.hpp"
#include "spbrauer/tensor.hpp"

namespace spb {

/// Linear extension of the diagram representation to algebra elements.
/// Meaningful as an algebra map when the element's parameter is the field
/// value n.
template <class F>
BlockEndo<F> rep_element(const F& field, const AlgebraElement<F>& x,
                         const SympSpace& sp, int s) {
  BlockEndo<F> out(sp.n, s);
  for (const auto& [d, c] : x.terms) {
    auto block = rep_matrix(d, sp);
    BlockEndo<F> e = diagram_endo(field, block, sp.n, s);
    block_add_scaled(field, out, e, c);
  }
  return out;
}

}  // namespace spb
