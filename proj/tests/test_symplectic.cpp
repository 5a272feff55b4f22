#include <doctest.h>

#include "spbrauer/rng.hpp"
#include "spbrauer/symplectic.hpp"

using namespace spb;

TEST_CASE("index involution and signs") {
  SympSpace sp(4);
  CHECK(prime_index(sp, 1) == 4);
  CHECK(prime_index(sp, 3) == 2);
  CHECK(eps(sp, 2) == 1);
  CHECK(eps(sp, 3) == -1);
  int total = 0;
  for (int i = 1; i <= 4; ++i) {
    CHECK(prime_index(sp, prime_index(sp, i)) == i);
    CHECK(eps(sp, prime_index(sp, i)) == -eps(sp, i));
    total += eps(sp, i);
  }
  CHECK(total == 0);
  CHECK_THROWS_AS(prime_index(sp, 0), std::out_of_range);
  CHECK_THROWS_AS(eps(sp, 5), std::out_of_range);
  CHECK_THROWS_AS(SympSpace(3), std::invalid_argument);
}

TEST_CASE("basis form values") {
  SympSpace sp(4);
  CHECK(form_basis(sp, 1, 4) == 1);
  CHECK(form_basis(sp, 4, 1) == -1);
  CHECK(form_basis(sp, 1, 2) == 0);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) CHECK(form_basis(sp, i, j) == -form_basis(sp, j, i));
}

TEST_CASE("the Gram matrix is the signed antidiagonal") {
  for (int n : {2, 4, 6}) {
    SympSpace sp(n);
    Mat<Int> j = symp_gram_int(sp);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        Int expect = (c == n - 1 - r) ? Int(r < n / 2 ? 1 : -1) : Int(0);
        CHECK(j.at(r, c) == expect);
      }
  }
}

TEST_CASE("the Gram matrix itself is symplectic") {
  SympSpace sp(4);
  RatField q;
  auto j = mat_cast_int(q, symp_gram_int(sp));
  CHECK(is_symplectic(q, sp, j));
  // j squares to minus the identity
  IntRing zz;
  auto j2 = mat_mul(zz, symp_gram_int(sp), symp_gram_int(sp));
  auto minus_id = mat_identity(zz, 4);
  for (auto& x : minus_id.a) x = -x;
  CHECK(j2 == minus_id);
}

TEST_CASE("transvections preserve the form, symbolically in the parameter") {
  // T = I + t v (Jv)^T over Z[t] must satisfy T^T J T = J identically
  SympSpace sp(2);
  PolyRingZ zt;
  for (int vi = 0; vi < 2; ++vi) {
    std::vector<Int> v(2, Int(0));
    v[vi] = 1;
    std::vector<Int> jv(2, Int(0));
    for (int i = 1; i <= 2; ++i) jv[i - 1] = eps(sp, i) * v[prime_index(sp, i) - 1];
    Mat<IntPoly> t(2, 2, IntPoly());
    for (int i = 0; i < 2; ++i) {
      t.at(i, i) = IntPoly(Int(1));
      for (int j = 0; j < 2; ++j)
        t.at(i, j) = t.at(i, j) + IntPoly::t() * IntPoly(v[i] * jv[j]);
    }
    Mat<IntPoly> j(2, 2, IntPoly());
    auto jz = symp_gram_int(sp);
    for (int i = 0; i < 4; ++i) j.a[i] = IntPoly(jz.a[i]);
    auto lhs = mat_mul(zt, mat_mul(zt, mat_transpose(zt, t), j), t);
    CHECK(lhs == j);
  }
}

TEST_CASE("integer transvection matrices against direct vector action") {
  SympSpace sp(4);
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Int> v(4, Int(0));
    v[rng.below(4)] = 1;
    v[rng.below(4)] = 1;
    long c = rng.range(-2, 2);
    Mat<Int> t = transvection_int(sp, v, c);
    std::vector<Int> x(4), y(4);
    for (auto& e : x) e = rng.range(-5, 5);
    for (auto& e : y) e = rng.range(-5, 5);
    std::vector<Int> tx(4, Int(0)), ty(4, Int(0));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        tx[i] += t.at(i, j) * x[j];
        ty[i] += t.at(i, j) * y[j];
      }
    // direct definition x + c <x,v> v
    Int fx = symp_form_int(sp, x, v), fy = symp_form_int(sp, y, v);
    for (int i = 0; i < 4; ++i) {
      CHECK(tx[i] == x[i] + c * fx * v[i]);
      CHECK(ty[i] == y[i] + c * fy * v[i]);
    }
    CHECK(symp_form_int(sp, tx, ty) == symp_form_int(sp, x, y));
  }
}

TEST_CASE("sampled matrices are exactly symplectic over Q and GF(p)") {
  for (int n : {2, 4}) {
    SympSpace sp(n);
    RatField q;
    Rng rng(42);
    auto mats = sample_symplectic(q, sp, rng, 6);
    CHECK(mats.size() == 6);
    for (const auto& a : mats) CHECK(is_symplectic(q, sp, a));

    GF f5(5);
    Rng rng2(43);
    auto mats5 = sample_symplectic(f5, sp, rng2, 6);
    for (const auto& a : mats5) CHECK(is_symplectic(f5, sp, a));
  }
}

TEST_CASE("identity is symplectic; a shear is not") {
  SympSpace sp(2);
  RatField q;
  CHECK(is_symplectic(q, sp, mat_identity(q, 2)));
  Mat<Rat> bad = mat_identity(q, 2);
  bad.at(0, 0) = 2;  // determinant 2, cannot preserve the form
  CHECK_FALSE(is_symplectic(q, sp, bad));
}
