#include <doctest.h>

#include "spbrauer/invariants.hpp"
#include "spbrauer/rng.hpp"

using namespace spb;

TEST_CASE("the n = 2 column pairing is the determinant") {
  MatPoly g = gen_g(1, 2, 2);
  MatPoly det = MatPoly::variable(2, 1, 1) * MatPoly::variable(2, 2, 2) -
                MatPoly::variable(2, 2, 1) * MatPoly::variable(2, 1, 2);
  CHECK(g == det);
  CHECK(gen_gbar(1, 2, 2) == det);
  CHECK(g.degree() == 2);
  CHECK_THROWS_AS(gen_g(2, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(gen_g(1, 1, 2), std::invalid_argument);
}

TEST_CASE("column and row pairings evaluate to form values") {
  Rng rng(91);
  for (int n : {2, 4}) {
    SympSpace sp(n);
    for (int trial = 0; trial < 10; ++trial) {
      Mat<Int> a(n, n, Int(0));
      for (auto& x : a.a) x = rng.range(-4, 4);
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          std::vector<Int> ci(n), cj(n), ri(n), rj(n);
          for (int k = 0; k < n; ++k) {
            ci[k] = a.at(k, i - 1);
            cj[k] = a.at(k, j - 1);
            ri[k] = a.at(i - 1, k);
            rj[k] = a.at(j - 1, k);
          }
          CHECK(gen_g(i, j, n).eval(a) == Rat(symp_form_int(sp, ci, cj)));
          CHECK(gen_gbar(i, j, n).eval(a) == Rat(symp_form_int(sp, ri, rj)));
        }
    }
  }
}

TEST_CASE("pairings are antisymmetric in their indices") {
  for (int n : {2, 4}) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        CHECK(gen_g_any(j, i, n) == -gen_g_any(i, j, n));
        CHECK(gen_gbar_any(j, i, n) == -gen_gbar_any(i, j, n));
      }
  }
}

TEST_CASE("shifted generators vanish on symplectic samples") {
  Rng rng(92);
  for (int n : {2, 4}) {
    SympSpace sp(n);
    auto mats = sample_symplectic_int(sp, rng, 4);
    for (const auto& a : mats)
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          CHECK(shifted_gen_g(i, j, n).eval(a) == Rat(0));
          CHECK(shifted_gen_gbar(i, j, n).eval(a) == Rat(0));
        }
  }
}

TEST_CASE("coefficient of dilation") {
  Rng rng(93);
  for (int n : {2, 4}) {
    SympSpace sp(n);
    MatPoly d = dilation(n);
    CHECK(d.degree() == 2);
    auto mats = sample_symplectic_int(sp, rng, 4);
    for (const auto& a : mats) {
      CHECK(d.eval(a) == Rat(1));
      // all the diagonal pairings compute the same value on the group
      for (int i = 1; i <= n; ++i) {
        int ip = prime_index(sp, i);
        MatPoly gi = i < ip ? gen_g_any(i, ip, n) : -gen_g_any(ip, i, n);
        MatPoly gbi = i < ip ? gen_gbar_any(i, ip, n) : -gen_gbar_any(ip, i, n);
        CHECK(Rat(eps(sp, i)) * gi.eval(a) == Rat(1));
        CHECK(Rat(eps(sp, i)) * gbi.eval(a) == Rat(1));
      }
      // degree-2 homogeneity
      Mat<Int> scaled = a;
      for (auto& x : scaled.a) x *= 3;
      CHECK(d.eval(scaled) == Rat(9));
    }
    CHECK(d.eval(symp_gram_int(sp)) == Rat(1));
  }
}

TEST_CASE("monomial spaces") {
  CHECK(monomials_up_to(4, 2).size() == 15);
  CHECK(monomials_exact(4, 2).size() == 10);
  CHECK(monomials_exact(16, 2).size() == 136);
  CHECK(monomials_up_to(16, 2).size() == 153);
}

TEST_CASE("truncated ideal spans") {
  auto r22 = truncated_ideal_span(2, 2, GenSet::kBoth);
  CHECK(r22.ambient_dim == 15);
  CHECK(r22.basis.rank() == 1);

  auto r23 = truncated_ideal_span(2, 3, GenSet::kBoth);
  CHECK(r23.ambient_dim == 35);
  CHECK(r23.basis.rank() == 5);

  auto r42 = truncated_ideal_span(4, 2, GenSet::kBoth);
  CHECK(r42.ambient_dim == 153);
  CHECK(r42.basis.rank() == 11);
  CHECK(truncated_ideal_span(4, 2, GenSet::kG).basis.rank() == 6);
  CHECK_THROWS_AS(truncated_ideal_span(2, 1, GenSet::kBoth), std::invalid_argument);
}

TEST_CASE("graded ideal pieces at n = 2 follow the determinant") {
  // dimensions of det * (degree l-2 monomials)
  CHECK(graded_ideal_piece_dim(2, 0) == 0);
  CHECK(graded_ideal_piece_dim(2, 1) == 0);
  CHECK(graded_ideal_piece_dim(2, 2) == 1);
  CHECK(graded_ideal_piece_dim(2, 3) == 4);
  CHECK(graded_ideal_piece_dim(2, 4) == 10);
}

TEST_CASE("pfaffian base cases and the 4x4 expansion") {
  CHECK(pfaffian(Mat<Int>(0, 0)) == 1);
  Mat<Int> two(2, 2, Int(0));
  two.at(0, 1) = 7;
  two.at(1, 0) = -7;
  CHECK(pfaffian(two) == 7);

  Rng rng(94);
  for (int trial = 0; trial < 20; ++trial) {
    Mat<Int> a(4, 4, Int(0));
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        long v = rng.range(-5, 5);
        a.at(i, j) = v;
        a.at(j, i) = -v;
      }
    Int expect = a.at(0, 1) * a.at(2, 3) - a.at(0, 2) * a.at(1, 3) +
                 a.at(0, 3) * a.at(1, 2);
    CHECK(pfaffian(a) == expect);
  }

  Mat<Int> bad(2, 2, Int(1));
  CHECK_THROWS_AS(pfaffian(bad), std::invalid_argument);
  Mat<Int> odd(3, 3, Int(0));
  CHECK_THROWS_AS(pfaffian(odd), std::invalid_argument);
}

TEST_CASE("pfaffian squared is the determinant") {
  Rng rng(95);
  for (int trial = 0; trial < 30; ++trial) {
    int w = 2 * (1 + int(rng.below(4)));
    Mat<Int> a(w, w, Int(0));
    for (int i = 0; i < w; ++i)
      for (int j = i + 1; j < w; ++j) {
        long v = rng.range(-9, 9);
        a.at(i, j) = v;
        a.at(j, i) = -v;
      }
    Int pf = pfaffian(a);
    CHECK(pf * pf == det_bareiss(a));
  }
}

TEST_CASE("partitions with bounded length") {
  auto p21 = partitions_at_most(2, 1);
  REQUIRE(p21.size() == 1);
  CHECK(p21[0] == Partition{2});
  auto p42 = partitions_at_most(4, 2);
  REQUIRE(p42.size() == 3);
  CHECK(p42[0] == Partition{4});
  CHECK(p42[1] == Partition{3, 1});
  CHECK(p42[2] == Partition{2, 2});
  CHECK(partitions_at_most(0, 3).size() == 1);  // the empty shape
}

TEST_CASE("tableau counts at tiny shapes") {
  CHECK(king_count({}, 1) == 1);
  CHECK(king_count({1}, 1) == 2);
  CHECK(king_count({2}, 1) == 3);
  CHECK(king_count({1, 1}, 2) == 5);
  CHECK(king_count({1}, 2) == 4);
  CHECK_THROWS_AS(king_count({1, 1}, 1), std::invalid_argument);
}

TEST_CASE("tableau counts agree with the Weyl dimension formula") {
  for (int m = 1; m <= 3; ++m)
    for (int l = 0; l <= 4; ++l)
      for (const auto& lam : partitions_at_most(l, m))
        CHECK(Int(king_count(lam, m)) == weyl_dim_c(lam, m));
}

TEST_CASE("graded dimensions") {
  CHECK(graded_dim(2, 0) == 1);
  CHECK(graded_dim(2, 2) == 9);
  CHECK(graded_dim(4, 1) == 16);
  CHECK(graded_dim(4, 2) == 125);
  CHECK(graded_dim(4, 3) == 656);
}

TEST_CASE("polynomial rendering is stable") {
  CHECK(MatPoly(2).str() == "0");
  CHECK(gen_g(1, 2, 2).str() == "1*x11*x22 + -1*x12*x21");
  CHECK(shifted_gen_g(1, 2, 2).str() == "1*x11*x22 + -1*x12*x21 + -1");
}
