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
#include <map>
#include <string>
#include <vector>

#include "spbrauer/linalg.hpp"
#include "spbrauer/symplectic.hpp"

namespace spb {

/// Exponent vector over the n*n matrix entry variables x_11, x_12, ..., x_nn
/// (row-major). Monomials are ordered graded-lexicographically with x_11
/// most significant.
using Expo = std::vector<std::uint8_t>;

struct GradedLexLess {
  bool operator()(const Expo& a, const Expo& b) const;
};

int expo_degree(const Expo& e);

/// Polynomial in the matrix entry functions with exact rational
/// coefficients, stored sparsely by exponent vector.
class MatPoly {
 public:
  explicit MatPoly(int n) : n_(n) {}

  int n() const { return n_; }
  int degree() const;
  bool is_zero() const { return terms_.empty(); }
  const std::map<Expo, Rat, GradedLexLess>& terms() const { return terms_; }

  void add_term(const Expo& e, const Rat& c);

  static MatPoly constant(int n, const Rat& c);
  /// The entry function x_ij (1-based indices).
  static MatPoly variable(int n, int i, int j);

  MatPoly operator+(const MatPoly& o) const;
  MatPoly operator-(const MatPoly& o) const;
  MatPoly operator*(const MatPoly& o) const;
  MatPoly operator-() const;
  bool operator==(const MatPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  Rat eval(const Mat<Int>& a) const;

  std::string str() const;

 private:
  int n_;
  std::map<Expo, Rat, GradedLexLess> terms_;
};

/// g_ij = sum_l eps_l x_{li} x_{l'j}: the pairing of columns i and j.
/// Requires i < j.
MatPoly gen_g(int i, int j, int n);
/// gbar_ij = sum_l eps_l x_{il} x_{jl'}: the pairing of rows i and j.
MatPoly gen_gbar(int i, int j, int n);

/// Column pairing for arbitrary i != j; antisymmetric in (i, j).
MatPoly gen_g_any(int i, int j, int n);
MatPoly gen_gbar_any(int i, int j, int n);

/// The ideal generators g_ij - delta_{ij'} eps_i and the row variant.
MatPoly shifted_gen_g(int i, int j, int n);
MatPoly shifted_gen_gbar(int i, int j, int n);

/// Coefficient of dilation: the degree-2 form with A^T J A = d(A) J on the
/// symplectic monoid, taken as eps_1 g_{1,1'}. Equals eps_i g_{ii'} and
/// eps_i gbar_{ii'} on symplectic matrices for every i; value 1 on Sp_n.
MatPoly dilation(int n);

/// All monomials of degree <= d (respectively exactly d) over nvars
/// variables, in graded-lex order.
std::vector<Expo> monomials_up_to(int nvars, int d);
std::vector<Expo> monomials_exact(int nvars, int d);

enum class GenSet { kG, kGbar, kBoth };

struct IdealSpan {
  int ambient_dim;                 // dim of the degree-bounded coefficient space
  SubspaceBasis<RatField> basis;   // canonical echelon basis of the span
};

/// Span of (shifted generator) * (monomial of degree <= s-2) inside the
/// coefficient space of polynomials of degree <= s.
IdealSpan truncated_ideal_span(int n, int s, GenSet set);

/// Dimension of the degree-l homogeneous span of {g_ij, gbar_ij} times
/// monomials of degree l-2.
int graded_ideal_piece_dim(int n, int l);

/// Pfaffian of an alternating integer matrix: the signed sum over perfect
/// matchings {(a_1,b_1),...} with a_i < b_i and a_1 < a_2 < ..., each term
/// sgn(a_1 b_1 a_2 b_2 ...) prod A[a_i][b_i]. Throws unless A^T = -A with
/// zero diagonal.
Int pfaffian(const Mat<Int>& a);

using Partition = std::vector<int>;

/// Partitions of l with at most m parts, parts weakly decreasing,
/// lexicographically decreasing order.
std::vector<Partition> partitions_at_most(int l, int m);

/// Number of symplectic standard tableaux of the given shape over the
/// ordered alphabet 1 < 1' < 2 < 2' < ... < m < m': rows weakly increase,
/// columns strictly increase, and every entry in row i is at least the
/// unprimed symbol i.
long king_count(const Partition& shape, int m);

/// Dimension of the irreducible representation of the rank-m symplectic
/// group with highest weight lambda, by the Weyl dimension formula for the
/// type C root system. Independent oracle for king_count.
Int weyl_dim_c(const Partition& shape, int m);

/// Sum over partitions of l with at most n/2 parts of king_count squared:
/// the l-th graded dimension of the coordinate ring filtration.
Int graded_dim(int n, int l);

}  // namespace spb
