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
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace spb {

using Int = mpz_class;
using Rat = mpq_class;

std::string to_string(const Int& a);

/// Renders "a/b", or just "a" when the denominator is 1.
std::string to_string(const Rat& a);

/// num/den in lowest terms with positive denominator. The raw two-argument
/// mpq constructor does not canonicalize; always build fractions through
/// this.
Rat rat_frac(const Int& num, const Int& den);

/// The rationals. Stateless; elements are canonical mpq values
/// (lowest terms, positive denominator).
struct RatField {
  using Elem = Rat;

  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  Elem from_int(long v) const { return Rat(v); }
  Elem from_bigint(const Int& v) const { return Rat(v); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem div(const Elem& a, const Elem& b) const {
    if (is_zero(b)) throw std::domain_error("RatField: division by zero");
    return a / b;
  }
  Elem inv(const Elem& a) const { return div(one(), a); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool same_ring(const RatField&) const { return true; }
  std::string name() const { return "q"; }
  std::string str(const Elem& a) const { return to_string(a); }
};

/// Prime field GF(p), p < 2^31. Elements are raw residues in [0, p);
/// the field object carries the modulus, so products fit in 64 bits.
/// Reductions go through a precomputed Barrett constant, which matters in
/// the elimination inner loops.
class GF {
 public:
  using Elem = std::uint32_t;

  explicit GF(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem from_int(long v) const;
  Elem from_bigint(const Int& v) const;
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return Elem(s >= p_ ? s - p_ : s);
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : Elem(a + p_ - b); }
  /// Reduces any x < 2^63.
  Elem reduce(std::uint64_t x) const {
    std::uint64_t q = std::uint64_t((unsigned __int128)(x)*magic_ >> 64);
    std::uint64_t r = x - q * p_;
    while (r >= p_) r -= p_;
    return Elem(r);
  }
  Elem mul(Elem a, Elem b) const { return reduce(std::uint64_t(a) * b); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  bool eq(Elem a, Elem b) const { return a == b; }
  bool same_ring(const GF& other) const { return p_ == other.p_; }
  std::string name() const;
  std::string str(Elem a) const;  // "v mod p"

 private:
  std::uint32_t p_;
  std::uint64_t magic_ = 0;  // floor(2^64 / p)
};

/// Univariate integer polynomial in the indeterminate t.
/// Coefficient vector is trimmed: leading coefficient nonzero unless zero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(Int c);
  explicit IntPoly(long c) : IntPoly(Int(c)) {}
  static IntPoly t();
  static IntPoly t_pow(unsigned k);

  bool is_zero() const { return c_.empty(); }
  /// Degree of the zero polynomial is -1.
  int degree() const { return int(c_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(unsigned k) const { return k < c_.size() ? c_[k] : Int(0); }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator-() const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

  /// Evaluation homomorphism Z[t] -> F at t = t0.
  template <class F>
  typename F::Elem specialize(const F& field, const typename F::Elem& t0) const;

  std::string str() const;  // "c_d*t^d + ... + c_0"

 private:
  std::vector<Int> c_;
  void trim();
};

/// The ring of integers; used for exact integer matrix work.
struct IntRing {
  using Elem = Int;

  Elem zero() const { return Int(0); }
  Elem one() const { return Int(1); }
  Elem from_int(long v) const { return Int(v); }
  Elem from_bigint(const Int& v) const { return v; }
  bool is_zero(const Elem& a) const { return a == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool same_ring(const IntRing&) const { return true; }
  std::string name() const { return "z"; }
  std::string str(const Elem& a) const { return a.get_str(); }
};

/// The ring Z[t]. Not a field: no div.
struct PolyRingZ {
  using Elem = IntPoly;

  Elem zero() const { return IntPoly(); }
  Elem one() const { return IntPoly(Int(1)); }
  Elem from_int(long v) const { return IntPoly(Int(v)); }
  Elem from_bigint(const Int& v) const { return IntPoly(v); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool same_ring(const PolyRingZ&) const { return true; }
  std::string name() const { return "z[t]"; }
  std::string str(const Elem& a) const { return a.str(); }
};

template <class F>
typename F::Elem IntPoly::specialize(const F& field,
                                     const typename F::Elem& t0) const {
  typename F::Elem acc = field.zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = field.mul(acc, t0);
    acc = field.add(acc, field.from_bigint(*it));
  }
  return acc;
}

/// a^k by repeated squaring within a ring.
template <class F>
typename F::Elem ring_pow(const F& field, const typename F::Elem& a, unsigned k) {
  typename F::Elem acc = field.one();
  typename F::Elem base = a;
  while (k) {
    if (k & 1) acc = field.mul(acc, base);
    base = field.mul(base, base);
    k >>= 1;
  }
  return acc;
}

}  // namespace spb
