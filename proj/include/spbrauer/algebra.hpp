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

#include <map>
#include <string>
#include <vector>

#include "spbrauer/diagrams.hpp"
#include "spbrauer/scalars.hpp"

namespace spb {

/// Symplectic multiplication carries the path/cycle sign; the orthogonal
/// variant drops it.
enum class Flavor { kSymplectic, kOrthogonal };

/// Element of the truncated diagram algebra on all (u,v)-diagrams with
/// u,v <= s: a sparse scalar combination keyed by canonical diagrams.
template <class R>
struct AlgebraElement {
  using Elem = typename R::Elem;

  R ring;
  int s = 0;
  Flavor flavor = Flavor::kSymplectic;
  std::map<Diagram, Elem> terms;

  AlgebraElement(R r, int s_, Flavor f) : ring(r), s(s_), flavor(f) {}

  bool is_zero() const { return terms.empty(); }

  void add_term(const Diagram& d, const Elem& c) {
    if (d.top() > s || d.bottom() > s)
      throw std::invalid_argument("AlgebraElement: diagram exceeds truncation bound");
    if (ring.is_zero(c)) return;
    auto it = terms.find(d);
    if (it == terms.end()) {
      terms.emplace(d, c);
    } else {
      it->second = ring.add(it->second, c);
      if (ring.is_zero(it->second)) terms.erase(it);
    }
  }

  std::string str() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [d, c] : terms) {
      if (!out.empty()) out += " + ";
      out += ring.str(c) + " * " + d.str();
    }
    return out;
  }
};

template <class R>
void check_compatible(const AlgebraElement<R>& x, const AlgebraElement<R>& y) {
  if (!x.ring.same_ring(y.ring))
    throw std::invalid_argument("algebra: mixed scalar rings");
  if (x.s != y.s) throw std::invalid_argument("algebra: mixed truncation bounds");
  if (x.flavor != y.flavor) throw std::invalid_argument("algebra: mixed flavors");
}

template <class R>
AlgebraElement<R> basis_element(const R& ring, int s, Flavor f, const Diagram& d) {
  AlgebraElement<R> x(ring, s, f);
  x.add_term(d, ring.one());
  return x;
}

template <class R>
AlgebraElement<R> add(const AlgebraElement<R>& x, const AlgebraElement<R>& y) {
  check_compatible(x, y);
  AlgebraElement<R> out = x;
  for (const auto& [d, c] : y.terms) out.add_term(d, c);
  return out;
}

template <class R>
AlgebraElement<R> scale(const AlgebraElement<R>& x, const typename R::Elem& c) {
  AlgebraElement<R> out(x.ring, x.s, x.flavor);
  for (const auto& [d, t] : x.terms) out.add_term(d, x.ring.mul(t, c));
  return out;
}

template <class R>
AlgebraElement<R> sub(const AlgebraElement<R>& x, const AlgebraElement<R>& y) {
  check_compatible(x, y);
  AlgebraElement<R> out = x;
  for (const auto& [d, c] : y.terms) out.add_term(d, y.ring.neg(c));
  return out;
}

/// Bilinear extension of the diagram product with parameter t: a compatible
/// pair contributes sign * t^gamma times the stacked diagram, and the
/// orthogonal flavor replaces the sign by +1. Incompatible pairs vanish.
template <class R>
AlgebraElement<R> multiply(const AlgebraElement<R>& x, const AlgebraElement<R>& y,
                           const typename R::Elem& t) {
  check_compatible(x, y);
  AlgebraElement<R> out(x.ring, x.s, x.flavor);
  for (const auto& [dx, cx] : x.terms)
    for (const auto& [dy, cy] : y.terms) {
      auto st = stack(dx, dy);
      if (!st) continue;
      typename R::Elem c = x.ring.mul(cx, cy);
      if (x.flavor == Flavor::kSymplectic && st->sign < 0) c = x.ring.neg(c);
      c = x.ring.mul(c, ring_pow(x.ring, t, unsigned(st->gamma)));
      out.add_term(st->result, c);
    }
  return out;
}

/// The unit: sum of the identity diagrams c_0, ..., c_s.
template <class R>
AlgebraElement<R> unit(const R& ring, int s, Flavor f) {
  AlgebraElement<R> out(ring, s, f);
  for (int r = 0; r <= s; ++r) out.add_term(Diagram::identity(r), ring.one());
  return out;
}

/// Generating set: b_r and bbar_r for 0 <= r <= s-2, c_0, c_1, and the
/// embedded elementary transpositions of each symmetric group up to s.
template <class R>
std::vector<AlgebraElement<R>> generators(const R& ring, int s, Flavor f) {
  std::vector<AlgebraElement<R>> out;
  for (int r = 0; r + 2 <= s; ++r) {
    out.push_back(basis_element(ring, s, f, Diagram::cup(r)));
    out.push_back(basis_element(ring, s, f, Diagram::cap(r)));
  }
  out.push_back(basis_element(ring, s, f, Diagram::identity(0)));
  if (s >= 1) out.push_back(basis_element(ring, s, f, Diagram::identity(1)));
  for (int r = 2; r <= s; ++r)
    for (int i = 1; i < r; ++i) {
      std::vector<int> pi(r);
      for (int j = 0; j < r; ++j) pi[j] = j + 1;
      std::swap(pi[i - 1], pi[i]);
      out.push_back(basis_element(ring, s, f, Diagram::from_permutation(pi)));
    }
  return out;
}

/// All basis diagrams of the truncated algebra in a fixed order:
/// blocks (u,v) ordered lexicographically, then enumeration order.
std::vector<Diagram> truncated_basis(int s);

/// Dimension of the truncated algebra: sum of N_{uv} over u,v <= s.
std::uint64_t truncated_dimension(int s);

/// Diagonal sign assignment realizing the sign twist between the symplectic
/// and orthogonal (s,s)-diagram algebras under t -> -t, if one exists.
struct SignTwist {
  bool found = false;
  std::map<Diagram, int> phi;      // diagram -> +-1, phi(c_s) = +1
  std::string conflict;            // set when no assignment exists
};

/// Searches for phi with phi(result) = sgn(D,D') * (-1)^gamma * phi(D) phi(D')
/// over the full (s,s) multiplication table. The multiplicative constraints
/// are linear over GF(2) in the exponents, so the search is an exact
/// constraint solve, and any returned assignment is re-verified against
/// every product.
SignTwist verify_sign_twist(int s);

}  // namespace spb
