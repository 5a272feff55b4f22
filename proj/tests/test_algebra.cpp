#include <doctest.h>

#include <functional>
#include <set>

#include "spbrauer/algebra.hpp"
#include "spbrauer/linalg.hpp"
#include "spbrauer/rng.hpp"

using namespace spb;

namespace {

template <class R>
AlgebraElement<R> random_element(const R& ring, int s, Flavor f, Rng& rng) {
  auto basis = truncated_basis(s);
  AlgebraElement<R> x(ring, s, f);
  for (int k = 0; k < 4; ++k)
    x.add_term(basis[rng.below(basis.size())], ring.from_int(rng.range(-3, 3)));
  return x;
}

AlgebraElement<RatField> specialize_element(const AlgebraElement<PolyRingZ>& x,
                                            const Rat& t0) {
  RatField q;
  AlgebraElement<RatField> out(q, x.s, x.flavor);
  for (const auto& [d, c] : x.terms) out.add_term(d, c.specialize(q, t0));
  return out;
}

}  // namespace

TEST_CASE("unit laws") {
  RatField q;
  Rng rng(11);
  const Rat t0(5);
  for (int s : {1, 2, 3}) {
    auto e = unit(q, s, Flavor::kSymplectic);
    CHECK(multiply(e, e, t0).terms == e.terms);
    for (int trial = 0; trial < 10; ++trial) {
      auto x = random_element(q, s, Flavor::kSymplectic, rng);
      CHECK(multiply(e, x, t0).terms == x.terms);
      CHECK(multiply(x, e, t0).terms == x.terms);
    }
  }
}

TEST_CASE("products of the special elements") {
  PolyRingZ zt;
  const IntPoly t = IntPoly::t();
  const int s = 2;
  auto b0 = basis_element(zt, s, Flavor::kSymplectic, Diagram::cup(0));
  auto bbar0 = basis_element(zt, s, Flavor::kSymplectic, Diagram::cap(0));
  auto c0 = basis_element(zt, s, Flavor::kSymplectic, Diagram::identity(0));

  auto prod = multiply(b0, bbar0, t);
  REQUIRE(prod.terms.size() == 1);
  CHECK(prod.terms.begin()->first == Diagram::identity(0));
  CHECK(prod.terms.begin()->second == t);

  // c_r picks out matching blocks
  auto c2 = basis_element(zt, s, Flavor::kSymplectic, Diagram::identity(2));
  CHECK(multiply(c0, c2, t).is_zero());
  CHECK(multiply(c2, c2, t).terms == c2.terms);
}

TEST_CASE("the nested diagram eats the swap with a sign, orthogonal drops it") {
  PolyRingZ zt;
  const IntPoly t = IntPoly::t();
  Diagram swap = Diagram::from_permutation({2, 1});
  Diagram nested(2, 2, {{0, 1}, {2, 3}});

  auto sym = multiply(basis_element(zt, 2, Flavor::kSymplectic, swap),
                      basis_element(zt, 2, Flavor::kSymplectic, nested), t);
  REQUIRE(sym.terms.size() == 1);
  CHECK(sym.terms.at(nested) == -IntPoly(Int(1)));

  auto ort = multiply(basis_element(zt, 2, Flavor::kOrthogonal, swap),
                      basis_element(zt, 2, Flavor::kOrthogonal, nested), t);
  REQUIRE(ort.terms.size() == 1);
  CHECK(ort.terms.at(nested) == IntPoly(Int(1)));
}

TEST_CASE("bilinearity on random elements") {
  RatField q;
  Rng rng(23);
  const Rat t0(-2);
  for (int trial = 0; trial < 20; ++trial) {
    auto x = random_element(q, 2, Flavor::kSymplectic, rng);
    auto xp = random_element(q, 2, Flavor::kSymplectic, rng);
    auto y = random_element(q, 2, Flavor::kSymplectic, rng);
    auto lhs = multiply(add(x, xp), y, t0);
    auto rhs = add(multiply(x, y, t0), multiply(xp, y, t0));
    CHECK(lhs.terms == rhs.terms);
    auto lhs2 = multiply(y, add(x, xp), t0);
    auto rhs2 = add(multiply(y, x, t0), multiply(y, xp, t0));
    CHECK(lhs2.terms == rhs2.terms);
  }
}

TEST_CASE("(r,r)-diagrams are closed under multiplication") {
  RatField q;
  Rng rng(37);
  const Rat t0(3);
  for (int r : {1, 2, 3}) {
    auto ds = enumerate_diagrams(r, r);
    for (int trial = 0; trial < 10; ++trial) {
      const Diagram& a = ds[rng.below(ds.size())];
      const Diagram& b = ds[rng.below(ds.size())];
      auto prod = multiply(basis_element(q, 3, Flavor::kSymplectic, a),
                           basis_element(q, 3, Flavor::kSymplectic, b), t0);
      for (const auto& [d, c] : prod.terms) {
        CHECK(d.top() == r);
        CHECK(d.bottom() == r);
      }
    }
  }
}

TEST_CASE("base change: multiply over Z[t] then specialize") {
  PolyRingZ zt;
  const IntPoly t = IntPoly::t();
  Rng rng(41);
  for (Rat t0 : {Rat(2), Rat(-1), Rat(7)}) {
    for (int trial = 0; trial < 15; ++trial) {
      auto x = random_element(zt, 2, Flavor::kSymplectic, rng);
      auto y = random_element(zt, 2, Flavor::kSymplectic, rng);
      auto over_zt = specialize_element(multiply(x, y, t), t0);
      auto over_q =
          multiply(specialize_element(x, t0), specialize_element(y, t0), t0);
      CHECK(over_zt.terms == over_q.terms);
    }
  }
}

TEST_CASE("generators: stated set and span saturation") {
  RatField q;
  auto gens = generators(q, 2, Flavor::kSymplectic);
  std::set<Diagram> got;
  for (const auto& g : gens) {
    REQUIRE(g.terms.size() == 1);
    got.insert(g.terms.begin()->first);
  }
  std::set<Diagram> expect = {Diagram::cup(0), Diagram::cap(0), Diagram::identity(0),
                              Diagram::identity(1), Diagram::from_permutation({2, 1})};
  CHECK(got == expect);

  // closure of the generators under multiplication spans the whole algebra
  auto close_and_rank = [&](int s) {
    auto basis = truncated_basis(s);
    std::map<Diagram, int> index;
    for (int i = 0; i < int(basis.size()); ++i) index.emplace(basis[i], i);
    auto coords = [&](const AlgebraElement<RatField>& x) {
      std::vector<Rat> v(basis.size(), Rat(0));
      for (const auto& [d, c] : x.terms) v[index.at(d)] = c;
      return v;
    };
    std::vector<AlgebraElement<RatField>> pool = generators(q, s, Flavor::kSymplectic);
    SubspaceBasis<RatField> span(q, int(basis.size()));
    for (const auto& g : pool) span.insert(coords(g));
    const Rat t0(Rat(2 * s + 2));  // generic enough parameter
    for (int round = 0; round < 6; ++round) {
      int before = span.rank();
      std::vector<AlgebraElement<RatField>> next;
      for (const auto& a : pool)
        for (const auto& b : pool) {
          auto p = multiply(a, b, t0);
          if (!p.is_zero() && span.insert(coords(p))) next.push_back(p);
        }
      for (auto& x : next) pool.push_back(std::move(x));
      if (span.rank() == before) break;
    }
    return span.rank();
  };
  CHECK(close_and_rank(1) == 2);   // c_0 and c_1 only
  CHECK(close_and_rank(2) == 7);
  CHECK(truncated_dimension(2) == 7);
  CHECK(truncated_dimension(3) == 28);
}

TEST_CASE("mixing rings or bounds is an error") {
  GF f5(5), f7(7);
  auto x = basis_element(f5, 2, Flavor::kSymplectic, Diagram::identity(1));
  auto y = basis_element(f7, 2, Flavor::kSymplectic, Diagram::identity(1));
  CHECK_THROWS_AS(multiply(x, y, f5.one()), std::invalid_argument);
  auto z5 = basis_element(f5, 3, Flavor::kSymplectic, Diagram::identity(1));
  CHECK_THROWS_AS(add(x, z5), std::invalid_argument);
  RatField q;
  AlgebraElement<RatField> small(q, 1, Flavor::kSymplectic);
  CHECK_THROWS_AS(small.add_term(Diagram::identity(2), Rat(1)), std::invalid_argument);
}

namespace {

// Independent oracle for the orthogonal flavor: the diagram action built
// from the symmetric pairing delta_{ij} on k^3. Edge orientation cannot
// matter, and stacking must reproduce matrix products with factor n^gamma
// and no sign.
Mat<Rat> orth_rep(const Diagram& d, int n) {
  RatField q;
  auto pow_i = [&](int e) {
    int acc = 1;
    for (int k = 0; k < e; ++k) acc *= n;
    return acc;
  };
  Mat<Rat> m(pow_i(d.top()), pow_i(d.bottom()), Rat(0));
  std::vector<int> iv(d.top()), jv(d.bottom());
  std::function<void(int)> rec = [&](int slot) {
    if (slot == d.top() + d.bottom()) {
      int val = 1;
      for (auto [p, qq] : d.edges()) {
        int a = d.is_top(p) ? iv[d.pos(p)] : jv[d.pos(p)];
        int b = d.is_top(qq) ? iv[d.pos(qq)] : jv[d.pos(qq)];
        if (a != b) {
          val = 0;
          break;
        }
      }
      if (val) {
        int row = 0, col = 0;
        for (int x : iv) row = row * n + x;
        for (int x : jv) col = col * n + x;
        m.at(row, col) += 1;
      }
      return;
    }
    for (int x = 0; x < n; ++x) {
      if (slot < d.top())
        iv[slot] = x;
      else
        jv[slot - d.top()] = x;
      rec(slot + 1);
    }
  };
  rec(0);
  return m;
}

}  // namespace

TEST_CASE("the orthogonal flavor matches the symmetric-form representation") {
  const int n = 3;
  RatField q;
  auto basis = truncated_basis(2);
  for (const auto& a : basis)
    for (const auto& b : basis) {
      if (a.bottom() != b.top()) continue;
      auto st = stack(a, b);
      REQUIRE(st.has_value());
      auto prod = mat_mul(q, orth_rep(a, n), orth_rep(b, n));
      auto expect = orth_rep(st->result, n);
      Rat factor(1);
      for (int g = 0; g < st->gamma; ++g) factor *= n;
      for (auto& x : expect.a) x *= factor;
      CHECK(prod == expect);
    }
}

TEST_CASE("the orthogonal product is associative as well") {
  PolyRingZ zt;
  const IntPoly t = IntPoly::t();
  auto basis = truncated_basis(2);
  for (const auto& a : basis)
    for (const auto& b : basis)
      for (const auto& c : basis) {
        auto ea = basis_element(zt, 2, Flavor::kOrthogonal, a);
        auto eb = basis_element(zt, 2, Flavor::kOrthogonal, b);
        auto ec = basis_element(zt, 2, Flavor::kOrthogonal, c);
        auto lhs = multiply(multiply(ea, eb, t), ec, t);
        auto rhs = multiply(ea, multiply(eb, ec, t), t);
        CHECK(sub(lhs, rhs).is_zero());
      }
}

TEST_CASE("sign twist exists for small sizes and respects the table") {
  for (int s : {1, 2, 3, 4}) {
    auto tw = verify_sign_twist(s);
    CHECK(tw.found);
    CHECK(tw.phi.at(Diagram::identity(s)) == 1);
  }
  // s = 1 has no signs to fix at all
  auto tw1 = verify_sign_twist(1);
  for (const auto& [d, v] : tw1.phi) CHECK(v == 1);
}

TEST_CASE("sampled associators vanish at a larger truncation") {
  PolyRingZ zt;
  const IntPoly t = IntPoly::t();
  auto basis = truncated_basis(4);
  Rng rng(2026);
  for (int trial = 0; trial < 150; ++trial) {
    const Diagram& a = basis[rng.below(basis.size())];
    const Diagram& b = basis[rng.below(basis.size())];
    const Diagram& c = basis[rng.below(basis.size())];
    auto ea = basis_element(zt, 4, Flavor::kSymplectic, a);
    auto eb = basis_element(zt, 4, Flavor::kSymplectic, b);
    auto ec = basis_element(zt, 4, Flavor::kSymplectic, c);
    CHECK(sub(multiply(multiply(ea, eb, t), ec, t),
              multiply(ea, multiply(eb, ec, t), t))
              .is_zero());
  }
}
