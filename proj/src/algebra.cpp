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

#include "spbrauer/algebra.hpp"

#include "spbrauer/linalg.hpp"

namespace spb {

std::vector<Diagram> truncated_basis(int s) {
  std::vector<Diagram> out;
  for (int u = 0; u <= s; ++u)
    for (int v = 0; v <= s; ++v) {
      if ((u + v) % 2 != 0) continue;
      auto ds = enumerate_diagrams(u, v);
      out.insert(out.end(), ds.begin(), ds.end());
    }
  return out;
}

std::uint64_t truncated_dimension(int s) {
  std::uint64_t acc = 0;
  for (int u = 0; u <= s; ++u)
    for (int v = 0; v <= s; ++v) acc += count_diagrams(u, v);
  return acc;
}

SignTwist verify_sign_twist(int s) {
  SignTwist out;
  if (s < 1) throw std::invalid_argument("verify_sign_twist: s >= 1");
  const auto diagrams = enumerate_diagrams(s, s);
  const int n = int(diagrams.size());
  std::map<Diagram, int> index;
  for (int i = 0; i < n; ++i) index.emplace(diagrams[i], i);
  const Diagram cs = Diagram::identity(s);

  // Unknown exponents x_D with phi(D) = (-1)^{x_D}. Each product gives
  // x_D + x_D' + x_result = b over GF(2); the last column is the
  // right-hand side, pinned by x_{c_s} = 0.
  GF f2(2);
  SubspaceBasis<GF> system(f2, n + 1);
  std::vector<GF::Elem> row(n + 1, 0);
  row.assign(n + 1, 0);
  row[index.at(cs)] = 1;
  system.insert(row);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto st = stack(diagrams[i], diagrams[j]);
      // (s,s)-diagrams always stack
      int rhs_sign = st->sign * (st->gamma % 2 == 0 ? 1 : -1);
      row.assign(n + 1, 0);
      row[i] = f2.add(row[i], 1);
      row[j] = f2.add(row[j], 1);
      row[index.at(st->result)] = f2.add(row[index.at(st->result)], 1);
      row[n] = rhs_sign < 0 ? 1 : 0;
      system.insert(row);
    }

  for (size_t r = 0; r < system.rows().size(); ++r) {
    if (system.pivots()[r] == n) {
      out.found = false;
      out.conflict = "inconsistent sign constraints: reduced to 0 = 1";
      return out;
    }
  }
  // particular solution with free variables zero
  std::vector<int> x(n, 0);
  for (size_t r = 0; r < system.rows().size(); ++r)
    x[system.pivots()[r]] = int(system.rows()[r][n]);
  for (int i = 0; i < n; ++i)
    out.phi.emplace(diagrams[i], x[i] == 0 ? 1 : -1);
  // re-verify against the full table
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto st = stack(diagrams[i], diagrams[j]);
      int lhs = out.phi.at(st->result);
      int rhs = st->sign * (st->gamma % 2 == 0 ? 1 : -1) * out.phi.at(diagrams[i]) *
                out.phi.at(diagrams[j]);
      if (lhs != rhs)
        throw std::logic_error("verify_sign_twist: solution failed re-verification");
    }
  out.found = true;
  return out;
}

}  // namespace spb
