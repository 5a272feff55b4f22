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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spb {

/// A (u,v)-diagram: a perfect matching of u top vertices (covector slots)
/// and v bottom vertices (vector slots).
///
/// Vertices are coded 0..u-1 for the top row left to right and u..u+v-1 for
/// the bottom row. Each edge is stored (initial, terminal): for a horizontal
/// edge the left endpoint comes first, otherwise the top endpoint does. With
/// this coding that is simply (smaller, larger), and sorting the edge list
/// gives a canonical form.
class Diagram {
 public:
  Diagram() = default;
  Diagram(int u, int v, std::vector<std::pair<int, int>> edges);

  int top() const { return u_; }
  int bottom() const { return v_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool is_top(int vertex) const { return vertex < u_; }
  /// Position within its row, 0-based.
  int pos(int vertex) const { return vertex < u_ ? vertex : vertex - u_; }

  /// The identity (r,r)-diagram c_r; r = 0 gives the empty diagram.
  static Diagram identity(int r);
  /// b_r: the (r, r+2)-diagram with a bottom horizontal edge B1-B2 and
  /// Ti matched to B(i+2).
  static Diagram cup(int r);
  /// bbar_r: the (r+2, r)-diagram with a top horizontal edge T1-T2 and
  /// T(i+2) matched to Bi.
  static Diagram cap(int r);
  /// The (r,r)-diagram matching x_i with y_{pi[i]} (pi 1-based of size r).
  static Diagram from_permutation(const std::vector<int>& pi);

  std::string str() const;  // "u=U,v=V;[T1-B1,...]"

  bool operator==(const Diagram& o) const {
    return u_ == o.u_ && v_ == o.v_ && edges_ == o.edges_;
  }
  bool operator<(const Diagram& o) const {
    if (u_ != o.u_) return u_ < o.u_;
    if (v_ != o.v_) return v_ < o.v_;
    return edges_ < o.edges_;
  }

 private:
  int u_ = 0, v_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

/// N_{uv}: (u+v-1)!! when u = v mod 2, else 0.
std::uint64_t count_diagrams(int u, int v);

/// All (u,v)-diagrams in canonical form, lexicographic order on the sorted
/// edge lists. Empty when u+v is odd, matching N_{uv} = 0.
std::vector<Diagram> enumerate_diagrams(int u, int v);

/// Outcome of stacking one diagram on top of another: the cycle count
/// gamma(U), the product of the path and cycle signs, and the induced
/// (u, v')-diagram.
struct StackResult {
  int gamma = 0;
  int sign = 1;
  Diagram result;
};

/// Stacks a over b (a's bottom row identified with b's top row). Empty when
/// the interface sizes differ, in which case the algebra product is zero.
///
/// Paths and cycles of the stacked graph are traversed in their natural
/// orientation: an even-length path runs from its top endpoint to its bottom
/// endpoint, an odd-length path starts at its leftmost endpoint, and cycles
/// may be traversed either way. The sign of a path or cycle with p_lr
/// middle-row edges crossed left-to-right and p_rl crossed right-to-left is
///   (-1)^{|p_lr - p_rl|/2}     when p_lr + p_rl is even,
///   (-1)^{|p_lr - p_rl - 1|/2} when p_lr + p_rl is odd.
std::optional<StackResult> stack(const Diagram& a, const Diagram& b);

/// Sign of one path or cycle from its middle-row crossing counts.
int crossing_sign(int p_lr, int p_rl);

}  // namespace spb
