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
#include <string>
#include <vector>

#include <json.hpp>

#include "spbrauer/algebra.hpp"
#include "spbrauer/invariants.hpp"
#include "spbrauer/rep.hpp"
#include "spbrauer/tensor.hpp"

namespace spb {

using Json = nlohmann::ordered_json;

/// Coefficient field selector for a verification run: the rationals ("q")
/// or a prime field ("gf:p").
struct FieldSpec {
  bool rational = true;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return FieldSpec{}; }
  static FieldSpec prime(std::uint32_t p) { return FieldSpec{false, p}; }
  static FieldSpec parse(const std::string& text);
  std::string str() const { return rational ? "q" : "gf:" + std::to_string(p); }
};

/// One verification scenario outcome. Reports are deterministic given the
/// parameters and seed; wall time is informational only and never written
/// to report files.
struct CheckReport {
  std::string check;
  Json params = Json::object();
  Json expected = Json::object();
  Json actual = Json::object();
  std::string status;  // "pass" | "fail" | "inconclusive"
  Json witnesses = Json::array();
  double wall_ms = 0.0;

  bool passed() const { return status == "pass"; }
};

/// Exhaustive check that stacking matches the representation: for every
/// composable basis pair, M(D) M(D') = sign * n^gamma * M(result). Also
/// verifies the chain and cycle contraction identities for paths of up to
/// four middle edges.
CheckReport check_rep_homomorphism(int n, int s);

/// Rank of the flattened diagram images over the rationals. For m >= s the
/// rank must equal the diagram count; for m < s the (s,s)-block map must
/// have a kernel, reproduced by the Pfaffian relation up to scalar.
CheckReport check_faithfulness(int n, int s);

/// Expands the 2s x 2s Pfaffian of the symbol pairing matrix into a signed
/// combination of (s,s)-diagrams and checks its image is exactly zero while
/// every single term is not. Requires m < s.
CheckReport check_pfaffian_dependence(int n, int s);

/// Pf(A)^2 = det(A) on seeded random alternating integer matrices of sizes
/// 2 through 8.
CheckReport check_pfaffian_det(std::uint64_t seed, int count);

/// The centraliser equalities on the truncated tensor space. Over the
/// rationals: the commutant of the sampled group action equals the diagram
/// image, the commutant of the diagram image equals both the sampled
/// enveloping span and the solution space of the contraction equations, and
/// that common dimension matches the tableaux formula. Over a prime field:
/// the commutant of the diagram image equals the equation solution space.
CheckReport check_double_centraliser(int n, int s, FieldSpec field,
                                     std::uint64_t seed);

/// Truncated ideal dimensions: the codimension of the span of shifted
/// generators times monomials inside the degree-bounded coefficient space
/// equals the tableaux formula and the enveloping-algebra dimension; the
/// per-degree homogeneous variant is checked for low degrees.
CheckReport check_ideal_property(int n, int s);

/// Grade-s only: the solution space of the homogeneous contraction
/// equations inside the bisymmetric space equals the span of sampled s-th
/// Kronecker powers of symplectic matrices (rationals only).
CheckReport check_homogeneous_envelope(int n, int s, FieldSpec field,
                                       std::uint64_t seed);

/// Span of sampled Kronecker powers of generic invertible matrices equals
/// the commutant of the place-permutation action, with the multiset-count
/// dimension, both on the top grade and blockwise on the whole space.
CheckReport check_schur(int n, int s, std::uint64_t seed);

/// Associativity of the diagram product over Z[t]: exhaustive basis triples
/// or seeded samples, associators identically zero.
CheckReport check_associativity(int s, bool exhaustive, int samples,
                                std::uint64_t seed);

/// Diagonal sign twist between the symplectic and orthogonal (s,s)-diagram
/// algebras under t -> -t.
CheckReport check_sign_twist(int s);

/// king_count(lambda, m) == weyl_dim_c(lambda, m) for all shapes with at
/// most m parts and at most max_l boxes, m up to max_m.
CheckReport check_tableaux(int max_l, int max_m);

/// Defining rows, over the rationals, of the enveloping algebra inside the
/// bisymmetric orbit coordinates. Shared by the centraliser and ideal
/// checks, which must agree on the resulting dimension.
std::vector<std::vector<Rat>> envelope_equation_rows_q(const SympSpace& sp,
                                                       const BisymCoords& co);

/// The default verification grid (the same set the acceptance suite runs).
std::vector<CheckReport> run_all(std::uint64_t seed);

/// Metadata for the CLI: check names with one-line descriptions.
std::vector<std::pair<std::string, std::string>> check_catalog();

Json reports_to_json(const std::vector<CheckReport>& reports);
std::string reports_to_csv(const std::vector<CheckReport>& reports);
std::string report_pretty(const CheckReport& report);

/// 0 when everything passed, 2 when anything was inconclusive, 1 on failure.
int reports_exit_code(const std::vector<CheckReport>& reports);

}  // namespace spb
