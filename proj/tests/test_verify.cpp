#include <doctest.h>

#include <set>

#include "spbrauer/verify.hpp"

using namespace spb;

TEST_CASE("field specifications parse") {
  CHECK(FieldSpec::parse("q").rational);
  auto g = FieldSpec::parse("gf:7");
  CHECK_FALSE(g.rational);
  CHECK(g.p == 7);
  CHECK(g.str() == "gf:7");
  CHECK_THROWS_AS(FieldSpec::parse("float"), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::parse("gf:0"), std::invalid_argument);
}

TEST_CASE("homomorphism check passes at the smallest size") {
  auto r = check_rep_homomorphism(2, 2);
  CHECK(r.status == "pass");
  CHECK(r.actual["pairs_checked"].get<long>() == 21);
}

TEST_CASE("faithfulness thresholds") {
  auto faithful = check_faithfulness(4, 2);
  CHECK(faithful.status == "pass");
  CHECK(faithful.actual["rank"].get<long>() == 7);

  auto defective = check_faithfulness(2, 2);
  CHECK(defective.status == "pass");
  CHECK(defective.actual["rank"].get<long>() == 6);
  CHECK(defective.actual["top_grade_kernel_dim"].get<long>() == 1);
  CHECK(defective.actual["kernel_is_pfaffian_relation"].get<bool>());
}

TEST_CASE("double centraliser at (2,2): the textbook dimensions") {
  auto r = check_double_centraliser(2, 2, FieldSpec::rationals(), 7);
  CHECK(r.status == "pass");
  CHECK(r.actual["image_dim"].get<int>() == 6);
  CHECK(r.actual["bisymmetric_dim"].get<int>() == 15);
  CHECK(r.actual["equation_solution_dim"].get<int>() == 14);
  CHECK(r.actual["image_commutant_dim"].get<int>() == 14);
  CHECK(r.actual["sampled_envelope_dim"].get<int>() == 14);
  CHECK(r.actual["sampled_commutant_dim"].get<int>() == 6);

  auto gf2 = check_double_centraliser(2, 2, FieldSpec::prime(2), 7);
  CHECK(gf2.status == "pass");
  CHECK(gf2.actual["equation_solution_dim"].get<int>() == 14);
}

TEST_CASE("ideal dimensions tie out against the envelope") {
  auto r = check_ideal_property(2, 2);
  CHECK(r.status == "pass");
  CHECK(r.actual["poly_dim"].get<int>() == 15);
  CHECK(r.actual["ideal_dim_both"].get<int>() == 1);
  CHECK(r.actual["deficit"].get<int>() == 14);
  CHECK(r.actual["envelope_dim_equations"].get<int>() == 14);
}

TEST_CASE("schur dimensions") {
  auto r = check_schur(2, 2, 7);
  CHECK(r.status == "pass");
  CHECK(r.actual["permutation_commutant_dim"].get<int>() == 10);
  CHECK(r.actual["blockwise_commutant_dim"].get<int>() == 15);
}

TEST_CASE("homogeneous envelope at (2,2) fills the bisymmetric space") {
  auto r = check_homogeneous_envelope(2, 2, FieldSpec::rationals(), 7);
  CHECK(r.status == "pass");
  CHECK(r.actual["solution_dim"].get<int>() == 10);
  CHECK(r.actual["sampled_span_dim"].get<int>() == 10);
}

TEST_CASE("no equations at the lowest grade: the whole space survives") {
  auto env = check_homogeneous_envelope(2, 1, FieldSpec::rationals(), 7);
  CHECK(env.status == "pass");
  CHECK(env.actual["solution_dim"].get<int>() == 4);
  CHECK(env.actual["sampled_span_dim"].get<int>() == 4);

  auto schur = check_schur(2, 1, 7);
  CHECK(schur.status == "pass");
  CHECK(schur.actual["permutation_commutant_dim"].get<int>() == 4);
}

TEST_CASE("sampled checks are reproducible from the seed") {
  auto a = check_double_centraliser(2, 2, FieldSpec::rationals(), 99);
  auto b = check_double_centraliser(2, 2, FieldSpec::rationals(), 99);
  Json ja = reports_to_json({a}), jb = reports_to_json({b});
  CHECK(ja.dump() == jb.dump());
}

TEST_CASE("report serialization carries no timing") {
  auto r = check_sign_twist(2);
  Json j = reports_to_json({r});
  CHECK(j.is_array());
  CHECK(j[0].contains("check"));
  CHECK_FALSE(j[0].contains("wall_ms"));
  CHECK(reports_exit_code({r}) == 0);
  r.status = "inconclusive";
  CHECK(reports_exit_code({r}) == 2);
  r.status = "fail";
  CHECK(reports_exit_code({r}) == 1);
}

TEST_CASE("pfaffian dependence requires a small space") {
  CHECK_THROWS_AS(check_pfaffian_dependence(4, 2), std::invalid_argument);
  auto r = check_pfaffian_dependence(2, 2);
  CHECK(r.status == "pass");
  CHECK(r.actual["term_count"].get<int>() == 3);
}

TEST_CASE("the commutant of the commutant closes back onto the image") {
  // at (n,s) = (2,2), entirely through the generic commutant: the double
  // centraliser property as a single subspace equality in End coordinates
  SympSpace sp(2);
  RatField q;
  const int dims[3] = {1, 2, 4};
  int offset[3], total = 0;
  for (int r = 0; r < 3; ++r) {
    offset[r] = total;
    total += dims[r];
  }
  auto to_full = [&](const BlockEndo<RatField>& x) {
    Mat<Rat> m(total, total, Rat(0));
    for (const auto& [uv, blk] : x.blocks)
      for (int i = 0; i < blk.rows; ++i)
        for (int j = 0; j < blk.cols; ++j)
          m.at(offset[uv.first] + i, offset[uv.second] + j) = blk.at(i, j);
    return m;
  };
  std::vector<Mat<Rat>> images;
  SubspaceBasis<RatField> image_span(q, total * total);
  for (const auto& d : truncated_basis(2)) {
    auto m = to_full(diagram_endo(q, rep_matrix(d, sp), 2, 2));
    image_span.insert(m.a);
    images.push_back(std::move(m));
  }
  CHECK(image_span.rank() == 6);

  auto comm = commutant(q, total, images);
  CHECK(comm.rank() == 14);
  std::vector<Mat<Rat>> comm_mats;
  for (const auto& row : comm.int_rows()) {
    Mat<Rat> m(total, total, Rat(0));
    for (int k = 0; k < total * total; ++k) m.a[k] = Rat(row[k]);
    comm_mats.push_back(std::move(m));
  }
  auto closure = commutant(q, total, comm_mats);
  CHECK(closure.equals(image_span));
}

TEST_CASE("catalog lists every check once") {
  auto cat = check_catalog();
  CHECK(cat.size() == 10);
  std::set<std::string> names;
  for (const auto& [name, what] : cat) {
    CHECK(!what.empty());
    names.insert(name);
  }
  CHECK(names.size() == cat.size());
}
