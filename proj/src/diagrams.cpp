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

#include "spbrauer/diagrams.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace spb {

Diagram::Diagram(int u, int v, std::vector<std::pair<int, int>> edges)
    : u_(u), v_(v), edges_(std::move(edges)) {
  if (u < 0 || v < 0 || (u + v) % 2 != 0)
    throw std::invalid_argument("Diagram: u+v must be even and nonnegative");
  if (int(edges_.size()) * 2 != u + v)
    throw std::invalid_argument("Diagram: not a perfect matching");
  std::vector<char> seen(u + v, 0);
  for (auto& e : edges_) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first < 0 || e.second >= u + v || e.first == e.second)
      throw std::invalid_argument("Diagram: bad vertex");
    if (seen[e.first] || seen[e.second])
      throw std::invalid_argument("Diagram: vertex matched twice");
    seen[e.first] = seen[e.second] = 1;
  }
  std::sort(edges_.begin(), edges_.end());
}

Diagram Diagram::identity(int r) {
  std::vector<std::pair<int, int>> e;
  e.reserve(r);
  for (int i = 0; i < r; ++i) e.emplace_back(i, r + i);
  return Diagram(r, r, std::move(e));
}

Diagram Diagram::cup(int r) {
  std::vector<std::pair<int, int>> e;
  e.reserve(r + 1);
  e.emplace_back(r, r + 1);  // B1-B2
  for (int i = 0; i < r; ++i) e.emplace_back(i, r + 2 + i);
  return Diagram(r, r + 2, std::move(e));
}

Diagram Diagram::cap(int r) {
  std::vector<std::pair<int, int>> e;
  e.reserve(r + 1);
  e.emplace_back(0, 1);  // T1-T2
  for (int i = 0; i < r; ++i) e.emplace_back(2 + i, r + 2 + i);
  return Diagram(r + 2, r, std::move(e));
}

Diagram Diagram::from_permutation(const std::vector<int>& pi) {
  const int r = int(pi.size());
  std::vector<char> hit(r + 1, 0);
  std::vector<std::pair<int, int>> e;
  e.reserve(r);
  for (int i = 1; i <= r; ++i) {
    int target = pi[i - 1];
    if (target < 1 || target > r || hit[target])
      throw std::invalid_argument("from_permutation: not a permutation");
    hit[target] = 1;
    e.emplace_back(target - 1, r + i - 1);  // y_{pi_i} - x_i
  }
  return Diagram(r, r, std::move(e));
}

std::string Diagram::str() const {
  std::string out = "u=" + std::to_string(u_) + ",v=" + std::to_string(v_) + ";[";
  for (size_t i = 0; i < edges_.size(); ++i) {
    if (i) out += ",";
    auto label = [&](int vtx) {
      return (is_top(vtx) ? "T" : "B") + std::to_string(pos(vtx) + 1);
    };
    out += label(edges_[i].first) + "-" + label(edges_[i].second);
  }
  out += "]";
  return out;
}

std::uint64_t count_diagrams(int u, int v) {
  if (u < 0 || v < 0) throw std::invalid_argument("count_diagrams: negative size");
  if ((u + v) % 2 != 0) return 0;
  std::uint64_t acc = 1;
  for (int k = u + v - 1; k > 1; k -= 2) acc *= std::uint64_t(k);
  return acc;
}

namespace {

void enumerate_rec(int total, std::vector<int>& mate,
                   std::vector<std::pair<int, int>>& edges, int u, int v,
                   std::vector<Diagram>& out) {
  int first = -1;
  for (int i = 0; i < total; ++i)
    if (mate[i] < 0) {
      first = i;
      break;
    }
  if (first < 0) {
    out.emplace_back(u, v, edges);
    return;
  }
  for (int j = first + 1; j < total; ++j) {
    if (mate[j] >= 0) continue;
    mate[first] = j;
    mate[j] = first;
    edges.emplace_back(first, j);
    enumerate_rec(total, mate, edges, u, v, out);
    edges.pop_back();
    mate[first] = mate[j] = -1;
  }
}

}  // namespace

std::vector<Diagram> enumerate_diagrams(int u, int v) {
  std::vector<Diagram> out;
  if (u < 0 || v < 0 || (u + v) % 2 != 0) return out;
  std::vector<int> mate(u + v, -1);
  std::vector<std::pair<int, int>> edges;
  enumerate_rec(u + v, mate, edges, u, v, out);
  return out;
}

int crossing_sign(int p_lr, int p_rl) {
  int d;
  if ((p_lr + p_rl) % 2 == 0)
    d = std::abs(p_lr - p_rl) / 2;
  else
    d = std::abs(p_lr - p_rl - 1) / 2;
  return d % 2 == 0 ? 1 : -1;
}

namespace {

// Rows of the stacked graph U.
enum class Row : std::uint8_t { kTop, kMid, kBot };

struct UVertex {
  Row row;
  int pos;  // 0-based within its row
};

struct UEdge {
  int a, b;       // global vertex ids
  bool from_top;  // edge of the upper diagram
};

}  // namespace

std::optional<StackResult> stack(const Diagram& a, const Diagram& b) {
  if (a.bottom() != b.top()) return std::nullopt;
  const int u = a.top(), mid = a.bottom(), w = b.bottom();
  // global ids: top 0..u-1, middle u..u+mid-1, bottom u+mid..u+mid+w-1
  auto vtx = [&](Row row, int pos) {
    switch (row) {
      case Row::kTop: return pos;
      case Row::kMid: return u + pos;
      default: return u + mid + pos;
    }
  };
  const int total = u + mid + w;
  std::vector<UVertex> verts(total);
  for (int i = 0; i < u; ++i) verts[i] = {Row::kTop, i};
  for (int i = 0; i < mid; ++i) verts[u + i] = {Row::kMid, i};
  for (int i = 0; i < w; ++i) verts[u + mid + i] = {Row::kBot, i};

  std::vector<UEdge> uedges;
  uedges.reserve(a.edges().size() + b.edges().size());
  for (auto [p, q] : a.edges())
    uedges.push_back({vtx(a.is_top(p) ? Row::kTop : Row::kMid, a.pos(p)),
                      vtx(a.is_top(q) ? Row::kTop : Row::kMid, a.pos(q)), true});
  for (auto [p, q] : b.edges())
    uedges.push_back({vtx(b.is_top(p) ? Row::kMid : Row::kBot, b.pos(p)),
                      vtx(b.is_top(q) ? Row::kMid : Row::kBot, b.pos(q)), false});

  // incidence lists; outer vertices have one edge, middle vertices two
  std::vector<std::vector<int>> inc(total);
  for (int e = 0; e < int(uedges.size()); ++e) {
    inc[uedges[e].a].push_back(e);
    inc[uedges[e].b].push_back(e);
  }

  std::vector<char> edge_used(uedges.size(), 0);
  auto is_mid_edge = [&](int e) {
    return verts[uedges[e].a].row == Row::kMid && verts[uedges[e].b].row == Row::kMid;
  };

  // Walks from `start` along unused edges, recording middle-row crossings.
  // Returns the final vertex and the number of edges walked.
  auto walk = [&](int start, int& p_lr, int& p_rl, int& length) {
    int cur = start;
    p_lr = p_rl = length = 0;
    for (;;) {
      int next_edge = -1;
      for (int e : inc[cur])
        if (!edge_used[e]) {
          next_edge = e;
          break;
        }
      if (next_edge < 0) return cur;
      edge_used[next_edge] = 1;
      int other = uedges[next_edge].a == cur ? uedges[next_edge].b : uedges[next_edge].a;
      if (is_mid_edge(next_edge)) {
        if (verts[other].pos > verts[cur].pos)
          ++p_lr;
        else
          ++p_rl;
      }
      ++length;
      cur = other;
    }
  };

  int sign = 1;
  std::vector<std::pair<int, int>> result_edges;
  // paths, traversed from each unvisited outer vertex in increasing id order
  std::vector<char> visited(total, 0);
  for (int s = 0; s < total; ++s) {
    if (verts[s].row == Row::kMid || visited[s]) continue;
    int p_lr, p_rl, length;
    int end = walk(s, p_lr, p_rl, length);
    visited[s] = visited[end] = 1;
    // natural orientation: even length runs top -> bottom; odd length runs
    // from the leftmost endpoint; re-walk backwards when we started wrong
    bool reorient = false;
    if (length % 2 == 0) {
      reorient = verts[s].row != Row::kTop;
    } else {
      reorient = verts[end].pos < verts[s].pos;
    }
    if (reorient) std::swap(p_lr, p_rl);
    sign *= crossing_sign(p_lr, p_rl);
    // endpoints induce one edge of the (u, w)-diagram
    auto code = [&](int vertex) {
      return verts[vertex].row == Row::kTop ? verts[vertex].pos : u + verts[vertex].pos;
    };
    result_edges.emplace_back(code(s), code(end));
  }
  // remaining middle-row components are cycles
  int gamma = 0;
  for (int s = 0; s < total; ++s) {
    if (verts[s].row != Row::kMid) continue;
    bool fresh = false;
    for (int e : inc[s])
      if (!edge_used[e]) fresh = true;
    if (!fresh) continue;
    int p_lr, p_rl, length;
    walk(s, p_lr, p_rl, length);
    sign *= crossing_sign(p_lr, p_rl);
    ++gamma;
  }

  StackResult res;
  res.gamma = gamma;
  res.sign = sign;
  res.result = Diagram(u, w, std::move(result_edges));
  return res;
}

}  // namespace spb
