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

#include "spbrauer/invariants.hpp"

#include <algorithm>
#include <functional>

namespace spb {

int expo_degree(const Expo& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

bool GradedLexLess::operator()(const Expo& a, const Expo& b) const {
  int da = expo_degree(a), db = expo_degree(b);
  if (da != db) return da < db;
  return a < b;  // x_11 most significant
}

int MatPoly::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, expo_degree(e));
  return d;
}

void MatPoly::add_term(const Expo& e, const Rat& c) {
  if (sgn(c) == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

MatPoly MatPoly::constant(int n, const Rat& c) {
  MatPoly p(n);
  p.add_term(Expo(size_t(n) * n, 0), c);
  return p;
}

MatPoly MatPoly::variable(int n, int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n)
    throw std::out_of_range("MatPoly::variable: index out of range");
  MatPoly p(n);
  Expo e(size_t(n) * n, 0);
  e[size_t(i - 1) * n + (j - 1)] = 1;
  p.add_term(e, Rat(1));
  return p;
}

MatPoly MatPoly::operator+(const MatPoly& o) const {
  if (n_ != o.n_) throw std::invalid_argument("MatPoly: size mismatch");
  MatPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

MatPoly MatPoly::operator-() const {
  MatPoly out(n_);
  for (const auto& [e, c] : terms_) out.add_term(e, -c);
  return out;
}

MatPoly MatPoly::operator-(const MatPoly& o) const { return *this + (-o); }

MatPoly MatPoly::operator*(const MatPoly& o) const {
  if (n_ != o.n_) throw std::invalid_argument("MatPoly: size mismatch");
  MatPoly out(n_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Expo e = ea;
      for (size_t k = 0; k < e.size(); ++k) e[k] = std::uint8_t(e[k] + eb[k]);
      out.add_term(e, ca * cb);
    }
  return out;
}

Rat MatPoly::eval(const Mat<Int>& a) const {
  if (a.rows != n_ || a.cols != n_)
    throw std::invalid_argument("MatPoly::eval: matrix size mismatch");
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        std::uint8_t k = e[size_t(i) * n_ + j];
        for (int rep = 0; rep < k; ++rep) term *= Rat(a.at(i, j));
      }
    acc += term;
  }
  return acc;
}

std::string MatPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  // highest monomials first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += to_string(it->second);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        std::uint8_t k = it->first[size_t(i) * n_ + j];
        if (k == 0) continue;
        out += "*x" + std::to_string(i + 1) + std::to_string(j + 1);
        if (k > 1) out += "^" + std::to_string(int(k));
      }
  }
  return out;
}

MatPoly gen_g_any(int i, int j, int n) {
  if (i == j || i < 1 || j < 1 || i > n || j > n)
    throw std::invalid_argument("gen_g: need distinct indices in range");
  SympSpace sp(n);
  MatPoly p(n);
  for (int l = 1; l <= n; ++l) {
    MatPoly term = MatPoly::variable(n, l, i) * MatPoly::variable(n, prime_index(sp, l), j);
    p = p + (eps(sp, l) > 0 ? term : -term);
  }
  return p;
}

MatPoly gen_gbar_any(int i, int j, int n) {
  if (i == j || i < 1 || j < 1 || i > n || j > n)
    throw std::invalid_argument("gen_gbar: need distinct indices in range");
  SympSpace sp(n);
  MatPoly p(n);
  for (int l = 1; l <= n; ++l) {
    MatPoly term = MatPoly::variable(n, i, l) * MatPoly::variable(n, j, prime_index(sp, l));
    p = p + (eps(sp, l) > 0 ? term : -term);
  }
  return p;
}

MatPoly gen_g(int i, int j, int n) {
  if (i >= j) throw std::invalid_argument("gen_g: requires i < j");
  return gen_g_any(i, j, n);
}

MatPoly gen_gbar(int i, int j, int n) {
  if (i >= j) throw std::invalid_argument("gen_gbar: requires i < j");
  return gen_gbar_any(i, j, n);
}

namespace {

MatPoly shift(const MatPoly& p, int i, int j, int n) {
  SympSpace sp(n);
  int c = j == prime_index(sp, i) ? eps(sp, i) : 0;
  return c == 0 ? p : p - MatPoly::constant(n, Rat(c));
}

}  // namespace

MatPoly shifted_gen_g(int i, int j, int n) { return shift(gen_g(i, j, n), i, j, n); }

MatPoly shifted_gen_gbar(int i, int j, int n) {
  return shift(gen_gbar(i, j, n), i, j, n);
}

MatPoly dilation(int n) {
  SympSpace sp(n);
  return gen_g(1, prime_index(sp, 1), n);  // eps_1 = +1
}

std::vector<Expo> monomials_up_to(int nvars, int d) {
  std::vector<Expo> out;
  Expo cur(nvars, 0);
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var == nvars) {
      out.push_back(cur);
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      cur[var] = std::uint8_t(k);
      rec(var + 1, remaining - k);
    }
    cur[var] = 0;
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), GradedLexLess{});
  return out;
}

std::vector<Expo> monomials_exact(int nvars, int d) {
  auto all = monomials_up_to(nvars, d);
  std::vector<Expo> out;
  for (auto& e : all)
    if (expo_degree(e) == d) out.push_back(std::move(e));
  return out;
}

namespace {

std::vector<Rat> coeff_vector(const MatPoly& p,
                              const std::map<Expo, int, GradedLexLess>& index) {
  std::vector<Rat> v(index.size(), Rat(0));
  for (const auto& [e, c] : p.terms()) {
    auto it = index.find(e);
    if (it == index.end())
      throw std::logic_error("coeff_vector: monomial outside the coefficient space");
    v[it->second] = c;
  }
  return v;
}

std::vector<MatPoly> shifted_generators(int n, GenSet set) {
  std::vector<MatPoly> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (set != GenSet::kGbar) gens.push_back(shifted_gen_g(i, j, n));
      if (set != GenSet::kG) gens.push_back(shifted_gen_gbar(i, j, n));
    }
  return gens;
}

}  // namespace

IdealSpan truncated_ideal_span(int n, int s, GenSet set) {
  if (s < 2) throw std::invalid_argument("truncated_ideal_span: s >= 2");
  const int nvars = n * n;
  auto basis_monomials = monomials_up_to(nvars, s);
  std::map<Expo, int, GradedLexLess> index;
  for (int i = 0; i < int(basis_monomials.size()); ++i)
    index.emplace(basis_monomials[i], i);

  RatField q;
  SubspaceBasis<RatField> span(q, int(basis_monomials.size()));
  auto multipliers = monomials_up_to(nvars, s - 2);
  for (const auto& h : shifted_generators(n, set))
    for (const auto& m : multipliers) {
      MatPoly mono(n);
      mono.add_term(m, Rat(1));
      span.insert(coeff_vector(h * mono, index));
    }
  return IdealSpan{int(basis_monomials.size()), std::move(span)};
}

int graded_ideal_piece_dim(int n, int l) {
  if (l < 2) return 0;
  const int nvars = n * n;
  auto basis_monomials = monomials_exact(nvars, l);
  std::map<Expo, int, GradedLexLess> index;
  for (int i = 0; i < int(basis_monomials.size()); ++i)
    index.emplace(basis_monomials[i], i);

  RatField q;
  SubspaceBasis<RatField> span(q, int(basis_monomials.size()));
  std::vector<MatPoly> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      gens.push_back(gen_g(i, j, n));
      gens.push_back(gen_gbar(i, j, n));
    }
  for (const auto& h : gens)
    for (const auto& m : monomials_exact(nvars, l - 2)) {
      MatPoly mono(n);
      mono.add_term(m, Rat(1));
      span.insert(coeff_vector(h * mono, index));
    }
  return span.rank();
}

Int pfaffian(const Mat<Int>& a) {
  if (a.rows != a.cols || a.rows % 2 != 0)
    throw std::invalid_argument("pfaffian: need an even-size square matrix");
  const int w = a.rows;
  for (int i = 0; i < w; ++i) {
    if (a.at(i, i) != 0) throw std::invalid_argument("pfaffian: nonzero diagonal");
    for (int j = 0; j < w; ++j)
      if (a.at(i, j) != -a.at(j, i))
        throw std::invalid_argument("pfaffian: matrix not alternating");
  }
  if (w == 0) return 1;
  Int total = 0;
  std::vector<int> seq;  // the permutation a_1 b_1 a_2 b_2 ... being built
  std::vector<char> used(w, 0);
  std::function<void(Int)> rec = [&](Int prod) {
    int first = -1;
    for (int i = 0; i < w; ++i)
      if (!used[i]) {
        first = i;
        break;
      }
    if (first < 0) {
      // sign by inversion count of seq
      int inv = 0;
      for (size_t x = 0; x < seq.size(); ++x)
        for (size_t y = x + 1; y < seq.size(); ++y)
          if (seq[x] > seq[y]) ++inv;
      total += (inv % 2 == 0 ? prod : -prod);
      return;
    }
    used[first] = 1;
    for (int j = first + 1; j < w; ++j) {
      if (used[j]) continue;
      if (a.at(first, j) == 0) continue;
      used[j] = 1;
      seq.push_back(first);
      seq.push_back(j);
      rec(prod * a.at(first, j));
      seq.pop_back();
      seq.pop_back();
      used[j] = 0;
    }
    used[first] = 0;
  };
  rec(Int(1));
  return total;
}

std::vector<Partition> partitions_at_most(int l, int m) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    if (int(cur.size()) == m) return;
    for (int part = std::min(cap, remaining); part >= 1; --part) {
      cur.push_back(part);
      rec(remaining - part, part);
      cur.pop_back();
    }
  };
  rec(l, l);
  return out;
}

long king_count(const Partition& shape, int m) {
  if (int(shape.size()) > m)
    throw std::invalid_argument("king_count: more parts than the rank");
  for (size_t i = 1; i < shape.size(); ++i)
    if (shape[i] > shape[i - 1])
      throw std::invalid_argument("king_count: parts must decrease");
  if (shape.empty()) return 1;
  const int rows = int(shape.size());
  // symbols 0..2m-1 stand for 1 < 1' < 2 < 2' < ... < m < m'
  std::vector<std::vector<int>> fill(rows);
  for (int r = 0; r < rows; ++r) fill[r].assign(shape[r], -1);
  long count = 0;
  std::function<void(int, int)> rec = [&](int r, int c) {
    if (r == rows) {
      ++count;
      return;
    }
    int nr = r, nc = c + 1;
    if (nc == shape[r]) {
      nr = r + 1;
      nc = 0;
    }
    int lo = 2 * r;  // the symplectic condition: entries in row r+1 are >= symbol r+1
    if (c > 0) lo = std::max(lo, fill[r][c - 1]);
    if (r > 0 && c < shape[r - 1]) lo = std::max(lo, fill[r - 1][c] + 1);
    for (int sym = lo; sym < 2 * m; ++sym) {
      fill[r][c] = sym;
      rec(nr, nc);
    }
    fill[r][c] = -1;
  };
  rec(0, 0);
  return count;
}

Int weyl_dim_c(const Partition& shape, int m) {
  if (int(shape.size()) > m)
    throw std::invalid_argument("weyl_dim_c: more parts than the rank");
  // l_i = lambda_i + m - i + 1 against rho_i = m - i + 1 (1-based i);
  // positive roots contribute l_i, l_i - l_j and l_i + l_j.
  std::vector<long> l(m), rho(m);
  for (int i = 0; i < m; ++i) {
    long lam = i < int(shape.size()) ? shape[i] : 0;
    rho[i] = m - i;
    l[i] = lam + rho[i];
  }
  Int num = 1, den = 1;
  for (int i = 0; i < m; ++i) {
    num *= l[i];
    den *= rho[i];
    for (int j = i + 1; j < m; ++j) {
      num *= (l[i] - l[j]) * (l[i] + l[j]);
      den *= (rho[i] - rho[j]) * (rho[i] + rho[j]);
    }
  }
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error("weyl_dim_c: non-integral dimension");
  return q;
}

Int graded_dim(int n, int l) {
  SympSpace sp(n);
  Int acc = 0;
  for (const auto& lam : partitions_at_most(l, sp.m)) {
    Int k(king_count(lam, sp.m));
    acc += k * k;
  }
  return acc;
}

}  // namespace spb
