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

#include <json.hpp>

#include "spbrauer/linalg.hpp"
#include "spbrauer/tensor.hpp"

namespace spb {

/// Matrices render as row-major arrays of scalar strings.
template <class F>
nlohmann::ordered_json mat_to_json(const F& field, const Mat<typename F::Elem>& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int i = 0; i < m.rows; ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(field.str(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline nlohmann::ordered_json mat_to_json(const Mat<Int>& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int i = 0; i < m.rows; ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Echelon bases serialize as sparse row lists [{col: value-string}, ...].
inline nlohmann::ordered_json basis_to_json(const SubspaceBasis<RatField>& b) {
  nlohmann::ordered_json out;
  out["ambient"] = b.ambient();
  out["rank"] = b.rank();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : b.int_rows()) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (size_t k = 0; k < r.size(); ++k)
      if (r[k] != 0) row.push_back({{"col", k}, {"value", r[k].get_str()}});
    rows.push_back(std::move(row));
  }
  out["rows"] = rows;
  return out;
}

/// Block endomorphisms serialize as {n, s, blocks: {"u,v": [[row, col,
/// value-string], ...]}}: sparse triplets per block.
template <class F>
nlohmann::ordered_json block_endo_to_json(const F& field, const BlockEndo<F>& x) {
  nlohmann::ordered_json out;
  out["n"] = x.n;
  out["s"] = x.s;
  nlohmann::ordered_json blocks = nlohmann::ordered_json::object();
  for (const auto& [uv, m] : x.blocks) {
    nlohmann::ordered_json trips = nlohmann::ordered_json::array();
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j)
        if (!field.is_zero(m.at(i, j)))
          trips.push_back({i, j, field.str(m.at(i, j))});
    if (!trips.empty())
      blocks[std::to_string(uv.first) + "," + std::to_string(uv.second)] =
          std::move(trips);
  }
  out["blocks"] = blocks;
  return out;
}

}  // namespace spb
