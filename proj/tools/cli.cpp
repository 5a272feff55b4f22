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

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "spbrauer/verify.hpp"

namespace {

using spb::CheckReport;
using spb::FieldSpec;

struct OutputOpts {
  std::string path;
  std::string format = "pretty";
};

void add_output_opts(CLI::App* cmd, OutputOpts& out) {
  cmd->add_option("--out", out.path, "write the report to this file");
  cmd->add_option("--format", out.format, "json, csv or pretty")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
}

int emit(const std::vector<CheckReport>& reports, const OutputOpts& out) {
  std::string text;
  if (out.format == "json") {
    text = spb::reports_to_json(reports).dump(2) + "\n";
  } else if (out.format == "csv") {
    text = spb::reports_to_csv(reports);
  } else {
    for (const auto& r : reports) text += spb::report_pretty(r);
  }
  if (out.path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out.path, std::ios::binary);
    if (!f) {
      std::cerr << "cannot open output file: " << out.path << "\n";
      return 1;
    }
    f << text;
  }
  return spb::reports_exit_code(reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification suite for the truncated symplectic diagram algebra"};
  app.require_subcommand(0, 1);

  bool list_checks = false;
  app.add_flag("--list", list_checks, "list the available checks");

  int n = 2, s = 2;
  std::string field_text = "q";
  std::uint64_t seed = 0;
  int samples = 500;
  bool exhaustive = false;
  OutputOpts out;

  auto* verify = app.add_subcommand("verify", "run one verification scenario");
  verify->require_subcommand(1);
  verify->fallthrough();
  add_output_opts(verify, out);

  auto add_ns = [&](CLI::App* cmd, bool with_field, bool with_seed) {
    cmd->fallthrough();
    cmd->add_option("--n", n, "space dimension (even)")->required();
    cmd->add_option("--s", s, "truncation bound")->required();
    if (with_field)
      cmd->add_option("--field", field_text, "coefficients: q or gf:<p>");
    if (with_seed)
      cmd->add_option("--seed", seed, "sampling seed")->required();
  };

  auto* v_hom = verify->add_subcommand("homomorphism", "stacking vs representation");
  add_ns(v_hom, false, false);
  auto* v_faith = verify->add_subcommand("faithfulness", "diagram image ranks");
  add_ns(v_faith, false, false);
  auto* v_dc = verify->add_subcommand("double-centraliser", "centraliser equalities");
  add_ns(v_dc, true, true);
  auto* v_ideal = verify->add_subcommand("ideal", "truncated ideal codimensions");
  add_ns(v_ideal, false, false);
  auto* v_schur = verify->add_subcommand("schur", "Kronecker-power span vs commutant");
  add_ns(v_schur, false, true);
  auto* v_assoc = verify->add_subcommand("associativity", "associators over Z[t]");
  v_assoc->fallthrough();
  v_assoc->add_option("--s", s, "truncation bound")->required();
  v_assoc->add_flag("--exhaustive", exhaustive, "check every basis triple");
  v_assoc->add_option("--samples", samples, "sampled triple count");
  v_assoc->add_option("--seed", seed, "sampling seed");
  auto* v_twist = verify->add_subcommand("sign-twist", "orthogonal sign assignment");
  v_twist->fallthrough();
  v_twist->add_option("--s", s, "truncation bound")->required();
  auto* v_pf = verify->add_subcommand("pfaffian", "Pf^2 = det and the vanishing relation");
  v_pf->fallthrough();
  v_pf->add_option("--n", n, "space dimension (even)");
  v_pf->add_option("--s", s, "truncation bound");
  v_pf->add_option("--seed", seed, "sampling seed")->required();
  auto* v_env = verify->add_subcommand("homogeneous-envelope", "top-grade equations");
  add_ns(v_env, true, true);

  auto* all = app.add_subcommand("all", "run the default verification grid");
  all->add_option("--seed", seed, "sampling seed")->required();
  add_output_opts(all, out);

  int max_l = 4, tab_m = 3;
  auto* dims = app.add_subcommand("dims", "graded dimension table (CSV)");
  dims->add_option("--n", n, "space dimension (even)")->required();
  dims->add_option("--max-l", max_l, "largest degree");
  dims->add_option("--out", out.path, "write the table to this file");

  auto* tableaux = app.add_subcommand("tableaux", "tableau count table (CSV)");
  tableaux->add_option("--m", tab_m, "rank")->required();
  tableaux->add_option("--max-l", max_l, "largest size");
  tableaux->add_option("--out", out.path, "write the table to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 64;
  }

  try {
    if (list_checks) {
      for (const auto& [name, what] : spb::check_catalog())
        std::cout << name << ": " << what << "\n";
      return 0;
    }
    if (verify->parsed()) {
      std::vector<CheckReport> reports;
      if (v_hom->parsed()) reports.push_back(spb::check_rep_homomorphism(n, s));
      if (v_faith->parsed()) reports.push_back(spb::check_faithfulness(n, s));
      if (v_dc->parsed())
        reports.push_back(
            spb::check_double_centraliser(n, s, FieldSpec::parse(field_text), seed));
      if (v_ideal->parsed()) reports.push_back(spb::check_ideal_property(n, s));
      if (v_schur->parsed()) reports.push_back(spb::check_schur(n, s, seed));
      if (v_assoc->parsed()) {
        if (!exhaustive && v_assoc->count("--seed") == 0) {
          std::cerr << "sampled associativity needs --seed\n";
          return 64;
        }
        reports.push_back(spb::check_associativity(s, exhaustive, samples, seed));
      }
      if (v_twist->parsed()) reports.push_back(spb::check_sign_twist(s));
      if (v_pf->parsed()) {
        reports.push_back(spb::check_pfaffian_det(seed, 50));
        if (v_pf->count("--n") && v_pf->count("--s"))
          reports.push_back(spb::check_pfaffian_dependence(n, s));
      }
      if (v_env->parsed())
        reports.push_back(
            spb::check_homogeneous_envelope(n, s, FieldSpec::parse(field_text), seed));
      return emit(reports, out);
    }
    if (all->parsed()) return emit(spb::run_all(seed), out);
    if (dims->parsed()) {
      std::string text = "l,dim_poly,dim_ideal_piece,graded_dim,pass\n";
      for (int l = 0; l <= max_l; ++l) {
        int dim_l = int(spb::monomials_exact(n * n, l).size());
        int piece = spb::graded_ideal_piece_dim(n, l);
        spb::Int expect = spb::graded_dim(n, l);
        bool ok = spb::Int(dim_l - piece) == expect;
        text += std::to_string(l) + "," + std::to_string(dim_l) + "," +
                std::to_string(piece) + "," + expect.get_str() + "," +
                (ok ? "true" : "false") + "\n";
      }
      if (out.path.empty())
        std::cout << text;
      else
        std::ofstream(out.path, std::ios::binary) << text;
      return 0;
    }
    if (tableaux->parsed()) {
      std::string text = "m,shape,king,weyl,equal\n";
      for (int l = 0; l <= max_l; ++l)
        for (const auto& lam : spb::partitions_at_most(l, tab_m)) {
          std::string shape;
          for (size_t i = 0; i < lam.size(); ++i)
            shape += (i ? " " : "") + std::to_string(lam[i]);
          spb::Int king(spb::king_count(lam, tab_m));
          spb::Int weyl = spb::weyl_dim_c(lam, tab_m);
          text += std::to_string(tab_m) + ",(" + shape + ")," + king.get_str() + "," +
                  weyl.get_str() + "," + (king == weyl ? "true" : "false") + "\n";
        }
      if (out.path.empty())
        std::cout << text;
      else
        std::ofstream(out.path, std::ios::binary) << text;
      return 0;
    }
    std::cout << app.help();
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return 64;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
