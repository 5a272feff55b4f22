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

#include "spbrauer/scalars.hpp"

namespace spb {

std::string to_string(const Int& a) { return a.get_str(); }

std::string to_string(const Rat& a) {
  if (a.get_den() == 1) return a.get_num().get_str();
  return a.get_num().get_str() + "/" + a.get_den().get_str();
}

Rat rat_frac(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rat_frac: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

GF::GF(std::uint32_t p) : p_(p) {
  if (p < 2 || p >= (1u << 31))
    throw std::invalid_argument("GF: modulus out of range");
  // trial division; moduli used here are tiny
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("GF: modulus not prime");
  magic_ = std::uint64_t(((unsigned __int128)(1) << 64) / p_);
}

GF::Elem GF::from_int(long v) const {
  long r = v % long(p_);
  if (r < 0) r += p_;
  return Elem(r);
}

GF::Elem GF::from_bigint(const Int& v) const {
  Int r = v % p_;
  if (r < 0) r += p_;
  return Elem(r.get_ui());
}

GF::Elem GF::inv(Elem a) const {
  if (a == 0) throw std::domain_error("GF: division by zero");
  // extended Euclid on (a, p)
  std::int64_t t = 0, nt = 1, r = p_, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p_;
  return Elem(t);
}

std::string GF::name() const { return "gf:" + std::to_string(p_); }

std::string GF::str(Elem a) const {
  return std::to_string(a) + " mod " + std::to_string(p_);
}

IntPoly::IntPoly(Int c) {
  if (c != 0) c_.push_back(std::move(c));
}

IntPoly IntPoly::t() { return t_pow(1); }

IntPoly IntPoly::t_pow(unsigned k) {
  IntPoly p;
  p.c_.assign(k + 1, Int(0));
  p.c_[k] = 1;
  return p;
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  IntPoly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.trim();
  return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  IntPoly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  r.trim();
  return r;
}

std::string IntPoly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k] == 0) continue;
    if (!out.empty()) out += " + ";
    if (k == 0) {
      out += c_[k].get_str();
    } else {
      out += c_[k].get_str() + "*t";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace spb
