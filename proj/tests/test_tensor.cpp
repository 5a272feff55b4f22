#include <doctest.h>

#include "spbrauer/json_io.hpp"
#include "spbrauer/rep.hpp"
#include "spbrauer/rng.hpp"
#include "spbrauer/tensor.hpp"

using namespace spb;

TEST_CASE("index tuples encode lexicographically") {
  CHECK(encode_index({1, 1}, 2) == 0);
  CHECK(encode_index({1, 2}, 2) == 1);
  CHECK(encode_index({2, 1}, 2) == 2);
  CHECK(decode_index(5, 2, 4) == std::vector<int>{2, 2});
  for (int code = 0; code < 27; ++code)
    CHECK(encode_index(decode_index(code, 3, 3), 3) == code);
}

TEST_CASE("form evaluation on basis tuples") {
  SympSpace sp(2);
  // identity strand: delta
  Diagram c1 = Diagram::identity(1);
  CHECK(f_eval(c1, sp, {1}, {1}) == 1);
  CHECK(f_eval(c1, sp, {1}, {2}) == 0);
  // a single bottom arc: the form itself
  Diagram b0 = Diagram::cup(0);
  CHECK(f_eval(b0, sp, {}, {1, 2}) == 1);
  CHECK(f_eval(b0, sp, {}, {2, 1}) == -1);
  CHECK(f_eval(b0, sp, {}, {1, 1}) == 0);
  CHECK_THROWS_AS(f_eval(b0, sp, {1}, {1, 2}), std::invalid_argument);
}

TEST_CASE("form evaluation matches an edge-by-edge product on a big diagram") {
  // the (5,3)-diagram with edges T1-B2, T2-T5, T3-T4, B1-B3
  SympSpace sp(4);
  Diagram d(5, 3, {{0, 6}, {1, 4}, {2, 3}, {5, 7}});
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> iv(5), jv(3);
    for (auto& x : iv) x = 1 + int(rng.below(4));
    for (auto& x : jv) x = 1 + int(rng.below(4));
    int expect = pair_value(sp, true, iv[0], false, jv[1]) *
                 pair_value(sp, true, iv[1], true, iv[4]) *
                 pair_value(sp, true, iv[2], true, iv[3]) *
                 pair_value(sp, false, jv[0], false, jv[2]);
    CHECK(f_eval(d, sp, iv, jv) == expect);
  }
}

TEST_CASE("pairings are antisymmetric under edge reversal") {
  SympSpace sp(4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
          if (a == b && i == j) continue;  // same slot never pairs with itself
          CHECK(pair_value(sp, a, i, b, j) == -pair_value(sp, b, j, a, i));
        }
}

TEST_CASE("diagram matrices: identity, arc, and tensor factor structure") {
  SympSpace sp(2);
  auto c2 = rep_matrix(Diagram::identity(2), sp);
  CHECK(c2.mat.rows == 4);
  CHECK(c2.mat.nz.size() == 4);
  for (const auto& t : c2.mat.nz) {
    CHECK(t.row == t.col);
    CHECK(t.val == 1);
  }

  // the arc evaluates to the row (0, 1, -1, 0)
  auto b0 = rep_matrix(Diagram::cup(0), sp);
  CHECK(b0.mat.rows == 1);
  CHECK(b0.mat.cols == 4);
  RatField q;
  auto dense = sp_to_dense(q, b0.mat);
  CHECK(dense.at(0, 0) == Rat(0));
  CHECK(dense.at(0, 1) == Rat(1));
  CHECK(dense.at(0, 2) == Rat(-1));
  CHECK(dense.at(0, 3) == Rat(0));

  // the arc with r strands is the arc tensored with the identity
  auto b2 = rep_matrix(Diagram::cup(2), sp);
  auto expect = kron(q, dense, mat_identity(q, 4));
  CHECK(sp_to_dense(q, b2.mat) == expect);

  // the reversed arc produces the dual tensor
  auto bbar0 = rep_matrix(Diagram::cap(0), sp);
  auto col = sp_to_dense(q, bbar0.mat);
  CHECK(col.rows == 4);
  CHECK(col.at(1, 0) == Rat(1));
  CHECK(col.at(2, 0) == Rat(-1));
}

TEST_CASE("place permutations compose and match embedded diagrams") {
  const int n = 2;
  RatField q;
  for (int r : {2, 3}) {
    auto perms = all_permutations(r);
    for (const auto& pi : perms) {
      // the permutation diagram acts exactly as the place permutation
      auto from_diagram = rep_matrix(Diagram::from_permutation(pi), SympSpace(n));
      CHECK(sp_equal(from_diagram.mat, sym_action(pi, r, n)));
      for (const auto& sigma : perms) {
        std::vector<int> comp(r);
        for (int i = 0; i < r; ++i) comp[i] = pi[sigma[i] - 1];
        auto lhs = spmm(sym_action(pi, r, n), sym_action(sigma, r, n));
        CHECK(sp_equal(lhs, sym_action(comp, r, n)));
      }
    }
  }
}

TEST_CASE("stacking matches matrix products up to four strands") {
  // the deepest exhaustive pin of the sign and cycle rules: all composable
  // pairs with up to four points per row, where stackings produce up to two
  // closed loops and long middle chains
  SympSpace sp(2);
  const int n = 2;
  auto basis = truncated_basis(4);
  long checked = 0;
  for (const auto& a : basis)
    for (const auto& b : basis) {
      if (a.bottom() != b.top()) continue;
      auto st = stack(a, b);
      REQUIRE(st.has_value());
      long long factor = st->sign;
      for (int g = 0; g < st->gamma; ++g) factor *= n;
      auto prod = spmm(rep_matrix(a, sp).mat, rep_matrix(b, sp).mat);
      CHECK(sp_equal(prod, sp_scale(rep_matrix(st->result, sp).mat, factor)));
      ++checked;
    }
  CHECK(checked > 5000);
}

TEST_CASE("group action commutes with every diagram image") {
  SympSpace sp(2);
  RatField q;
  Rng rng(70);
  auto samples = sample_symplectic(q, sp, rng, 4);
  auto basis = truncated_basis(2);
  for (const auto& a : samples) {
    auto u = group_rep(q, a, 2);
    for (const auto& d : basis) {
      auto e = diagram_endo(q, rep_matrix(d, sp), 2, 2);
      auto lhs = block_mul(q, u, e);
      auto rhs = block_mul(q, e, u);
      CHECK(block_equal(q, lhs, rhs));
    }
  }
}

TEST_CASE("group representation blocks are Kronecker powers") {
  RatField q;
  Rng rng(71);
  Mat<Rat> a(2, 2, Rat(0));
  for (auto& x : a.a) x = Rat(rng.range(-3, 3));
  auto u = group_rep(q, a, 2);
  CHECK(u.blocks.at({0, 0}).at(0, 0) == Rat(1));
  CHECK(u.blocks.at({1, 1}) == a);
  const auto& b2 = u.blocks.at({2, 2});
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int j1 = 0; j1 < 2; ++j1)
        for (int j2 = 0; j2 < 2; ++j2)
          CHECK(b2.at(i1 * 2 + i2, j1 * 2 + j2) == a.at(i1, j1) * a.at(i2, j2));
  auto id = group_rep(q, mat_identity(q, 2), 2);
  CHECK(block_equal(q, id, block_identity(q, 2, 2)));
}

TEST_CASE("every diagram image is bisymmetric at s = 2") {
  SympSpace sp(2);
  RatField q;
  for (const auto& d : truncated_basis(2))
    CHECK(is_bisymmetric(q, diagram_endo(q, rep_matrix(d, sp), 2, 2)));
  // an asymmetric unit matrix on the (2,2) block is not
  BlockEndo<RatField> bad(2, 2);
  Mat<Rat> m(4, 4, Rat(0));
  m.at(0, 1) = 1;
  bad.blocks.emplace(std::make_pair(2, 2), m);
  CHECK_FALSE(is_bisymmetric(q, bad));
}

TEST_CASE("projections and unit representation") {
  SympSpace sp(2);
  RatField q;
  // the identity diagrams represent as idempotent projections killing
  // mismatched grades
  for (int r = 0; r <= 2; ++r) {
    auto er = diagram_endo(q, rep_matrix(Diagram::identity(r), sp), 2, 2);
    CHECK(block_equal(q, block_mul(q, er, er), er));
    for (int t = 0; t <= 2; ++t) {
      if (t == r) continue;
      auto et = diagram_endo(q, rep_matrix(Diagram::identity(t), sp), 2, 2);
      CHECK(block_is_zero(q, block_mul(q, er, et)));
    }
  }
  // the unit of the algebra represents as the identity
  auto one = unit(q, 2, Flavor::kSymplectic);
  auto rep = rep_element(q, one, sp, 2);
  CHECK(block_equal(q, rep, block_identity(q, 2, 2)));
}

TEST_CASE("linear extension knows the kernel element at n = 2") {
  SympSpace sp(2);
  RatField q;
  // nested - identity + swap maps to zero on the top grade
  AlgebraElement<RatField> x(q, 2, Flavor::kSymplectic);
  x.add_term(Diagram(2, 2, {{0, 1}, {2, 3}}), Rat(1));
  x.add_term(Diagram::identity(2), Rat(-1));
  x.add_term(Diagram::from_permutation({2, 1}), Rat(1));
  CHECK(block_is_zero(q, rep_element(q, x, sp, 2)));
}

TEST_CASE("orbit coordinates of the bisymmetric space") {
  BisymCoords co(2, 2);
  CHECK(co.orbit_count(0) == 1);
  CHECK(co.orbit_count(1) == 4);
  CHECK(co.orbit_count(2) == 10);
  CHECK(co.total() == 15);

  // and they agree with the raw commutant of the embedded permutation
  // operators with the grade projections
  RatField q;
  const int dims[3] = {1, 2, 4};
  int amb = 0;
  int offset[3];
  for (int r = 0; r < 3; ++r) {
    offset[r] = amb;
    amb += dims[r];
  }
  auto embed = [&](int r, const SparseMatZ& m) {
    Mat<Rat> out(7, 7, Rat(0));
    auto dm = sp_to_dense(q, m);
    for (int i = 0; i < dims[r]; ++i)
      for (int j = 0; j < dims[r]; ++j) out.at(offset[r] + i, offset[r] + j) = dm.at(i, j);
    return out;
  };
  std::vector<Mat<Rat>> ops;
  for (int r = 0; r <= 2; ++r) {
    SparseMatZ id;
    id.rows = id.cols = dims[r];
    for (int i = 0; i < dims[r]; ++i) id.nz.push_back({i, i, 1});
    ops.push_back(embed(r, id));  // grade projection
  }
  ops.push_back(embed(2, sym_action({2, 1}, 2, 2)));
  auto raw = commutant(q, 7, ops);
  CHECK(raw.rank() == co.total());

  // every orbit basis vector lies in the raw commutant
  for (int c = 0; c < co.total(); ++c) {
    std::vector<Rat> coords(co.total(), Rat(0));
    coords[c] = 1;
    auto x = co.expand(q, coords);
    std::vector<Rat> flat(49, Rat(0));
    for (int r = 0; r <= 2; ++r) {
      const auto& blk = x.blocks.at({r, r});
      for (int i = 0; i < dims[r]; ++i)
        for (int j = 0; j < dims[r]; ++j)
          flat[size_t(offset[r] + i) * 7 + (offset[r] + j)] = blk.at(i, j);
    }
    CHECK(raw.contains(flat));
  }
}

TEST_CASE("block endomorphism serialization golden form") {
  SympSpace sp(2);
  RatField q;
  auto e = diagram_endo(q, rep_matrix(Diagram::cup(0), sp), 2, 2);
  std::string expect =
      R"({"n":2,"s":2,"blocks":{"0,2":[[0,1,"1"],[0,2,"-1"]]}})";
  CHECK(block_endo_to_json(q, e).dump() == expect);
}

TEST_CASE("project and expand are mutually inverse on the orbit space") {
  BisymCoords co(2, 2);
  RatField q;
  Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rat> coords(co.total());
    for (auto& x : coords) x = Rat(rng.range(-5, 5));
    auto x = co.expand(q, coords);
    CHECK(co.project(q, x) == coords);
    CHECK(is_bisymmetric(q, x));
  }
}
