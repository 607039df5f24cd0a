#pragma once

#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "centroid.hpp"
#include "io.hpp"
#include "pi.hpp"
#include "radical.hpp"

namespace glk::cli {

using nlohmann::json;

// exit-code contract: 0 = verdict computed (even "non-identity" or a refusal),
// 2 = parse/usage error, 3 = budget exceeded, 4 = other operational failure
inline constexpr int kOk = 0, kUsage = 2, kBudget = 3, kFailure = 4;

struct CliResult {
  int code = kOk;
  std::string text;
  json report;
};

namespace detail {

inline std::int64_t default_budget() {
  if (const char* env = std::getenv("GLK_BUDGET")) {
    try {
      std::int64_t v = std::stoll(env);
      if (v > 0) return v;
    } catch (...) {
    }
  }
  return 10'000'000;
}

inline json vec_json(const Vec& v) {
  json arr = json::array();
  for (const auto& s : v) arr.push_back(s.str());
  return arr;
}

inline json subspace_json(const Subspace& s) {
  json out;
  out["dim"] = s.dim();
  out["ambient"] = s.ambient;
  json basis = json::array();
  for (const auto& r : s.basis) basis.push_back(vec_json(r));
  out["basis"] = basis;
  return out;
}

inline json witness_json(const WitnessAssignment& w) {
  json out;
  json asg = json::array();
  for (const auto& [var, vec] : w.assignment) {
    json e;
    e["var"] = var.str();
    e["vector"] = vec_json(vec);
    asg.push_back(e);
  }
  out["assignment"] = asg;
  out["value"] = vec_json(w.value);
  return out;
}

inline std::string grading_fingerprint(const StructureAlgebra& a) {
  if (!a.grading) return "none";
  return "(" + std::to_string(a.indices_of_degree(1).size()) + "," +
         std::to_string(a.indices_of_degree(0).size()) + "," +
         std::to_string(a.indices_of_degree(-1).size()) + ")";
}

inline RadicalMode parse_mode(const std::string& m) {
  if (m == "enumerate") return RadicalMode::enumerate_field;
  if (m == "witness") return RadicalMode::witness;
  if (m == "structural") return RadicalMode::structural;
  throw Error("unknown mode '" + m + "' (expected enumerate|witness|structural)");
}

}  // namespace detail

inline CliResult run(const std::vector<std::string>& args) {
  CliResult res;
  std::ostringstream text;
  json& rep = res.report;

  CLI::App app{"exact computer algebra for Jordan pairs and 3-graded Lie algebras"};
  app.require_subcommand(1);
  std::string json_path;
  app.add_option("--json", json_path, "write the machine-readable report to this path");

  std::int64_t budget = detail::default_budget();
  std::uint64_t seed = 1;
  int trials = 200;

  // algebra check FILE
  auto* algebra_cmd = app.add_subcommand("algebra", "structure-algebra operations");
  auto* algebra_check = algebra_cmd->add_subcommand("check", "verify the Lie axioms and grading");
  std::string algebra_file;
  algebra_check->add_option("file", algebra_file, "algebra file")->required();

  // pair check FILE
  auto* pair_cmd = app.add_subcommand("pair", "Jordan-pair operations");
  auto* pair_check = pair_cmd->add_subcommand("check", "verify the Jordan pair axioms");
  std::string pair_file;
  pair_check->add_option("file", pair_file, "pair file")->required();

  // tkk build PAIRFILE -o FILE ; tkk pair FILE -o PAIRFILE
  auto* tkk_cmd = app.add_subcommand("tkk", "Tits-Kantor-Koecher constructions");
  auto* tkk_build = tkk_cmd->add_subcommand("build", "TKK algebra of a pair");
  std::string tkk_in, tkk_out;
  tkk_build->add_option("pairfile", tkk_in, "pair file")->required();
  tkk_build->add_option("-o,--output", tkk_out, "output algebra file")->required();
  auto* tkk_pair = tkk_cmd->add_subcommand("pair", "associated pair of a 3-graded algebra");
  std::string tkkp_in, tkkp_out;
  tkk_pair->add_option("file", tkkp_in, "algebra file")->required();
  tkk_pair->add_option("-o,--output", tkkp_out, "output pair file")->required();

  // pi test POLYFILE --algebra FILE [--randomized --seed N --trials K]
  auto* pi_cmd = app.add_subcommand("pi", "polynomial identities");
  auto* pi_test = pi_cmd->add_subcommand("test", "identity test on a graded algebra");
  std::string pi_poly, pi_algebra;
  bool pi_randomized = false;
  pi_test->add_option("polyfile", pi_poly, "polynomial file")->required();
  pi_test->add_option("--algebra", pi_algebra, "algebra file")->required();
  pi_test->add_flag("--randomized", pi_randomized, "Schwartz-Zippel-style sampling");
  pi_test->add_option("--seed", seed, "randomized-mode seed");
  pi_test->add_option("--trials", trials, "randomized-mode trials");
  pi_test->add_option("--budget", budget, "exhaustion budget");

  auto* pi_essential = pi_cmd->add_subcommand("essential", "essentiality and witness search");
  std::string pe_poly;
  int max_pq = -1;
  pi_essential->add_option("polyfile", pe_poly, "polynomial file")->required();
  pi_essential->add_option("--max-pq", max_pq, "bound on p+q (default deg+1)");
  pi_essential->add_option("--budget", budget, "exhaustion budget");

  auto* pi_induce = pi_cmd->add_subcommand("induce", "induced Jordan pair identity");
  std::string pin_poly, pin_out;
  pi_induce->add_option("polyfile", pin_poly, "polynomial file")->required();
  pi_induce->add_option("-o,--output", pin_out, "output pair-polynomial file")->required();

  // centroid FILE | centroid --pair PAIRFILE
  auto* centroid_cmd = app.add_subcommand("centroid", "centroid computation");
  std::string cen_algebra, cen_pair;
  centroid_cmd->add_option("file", cen_algebra, "algebra file");
  centroid_cmd->add_option("--pair", cen_pair, "pair file");

  // closure FILE | closure --pair PAIRFILE
  auto* closure_cmd = app.add_subcommand("closure", "central closure");
  std::string clo_algebra, clo_pair;
  closure_cmd->add_option("file", clo_algebra, "algebra file");
  closure_cmd->add_option("--pair", clo_pair, "pair file");

  // radical --lie FILE | --pair PAIRFILE, --mode ...
  auto* radical_cmd = app.add_subcommand("radical", "Kostrikin / McCrimmon radicals");
  std::string rad_lie, rad_pair, rad_mode = "enumerate";
  radical_cmd->add_option("--lie", rad_lie, "algebra file");
  radical_cmd->add_option("--pair", rad_pair, "pair file");
  radical_cmd->add_option("--mode", rad_mode, "enumerate|witness|structural");
  radical_cmd->add_option("--seed", seed, "witness-mode seed");
  radical_cmd->add_option("--trials", trials, "witness-mode trials");
  radical_cmd->add_option("--budget", budget, "enumeration budget (|F|^dim)");

  // verify centroid-iso|closure-iso|radical-corr --pair PAIRFILE
  auto* verify_cmd = app.add_subcommand("verify", "theorem-level verifications");
  auto* v_centroid = verify_cmd->add_subcommand("centroid-iso", "centroid isomorphism");
  auto* v_closure = verify_cmd->add_subcommand("closure-iso", "closure isomorphism");
  auto* v_radical = verify_cmd->add_subcommand("radical-corr", "radical correspondence");
  std::string vc_pair, vl_pair, vr_pair;
  v_centroid->add_option("--pair", vc_pair, "pair file")->required();
  v_closure->add_option("--pair", vl_pair, "pair file")->required();
  v_radical->add_option("--pair", vr_pair, "pair file")->required();
  v_radical->add_option("--budget", budget, "enumeration budget");

  // let the global --json appear after subcommand arguments
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    for (CLI::App* sub : a->get_subcommands([](CLI::App*) { return true; })) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    res.code = e.get_exit_code() == 0 ? kOk : kUsage;
    std::ostringstream help;
    if (res.code == kOk)
      help << app.help();
    else
      help << "usage error: " << e.what();
    res.text = help.str();
    return res;
  }

  try {
    if (*algebra_check) {
      StructureAlgebra a = io::parse_algebra(io::read_file(algebra_file));
      auto lie = verify_lie(a);
      rep["command"] = "algebra check";
      rep["dim"] = a.dim;
      rep["lie_ok"] = lie.ok;
      text << "lie: " << (lie.ok ? "ok" : "FAIL (" + std::to_string(lie.violations.size()) + " violations)");
      if (a.grading) {
        auto gr = verify_grading(a);
        rep["grading_ok"] = gr.ok;
        text << ", grading: " << (gr.ok ? "ok" : "FAIL");
      } else {
        text << ", grading: none";
      }
      text << "\n";
    } else if (*pair_check) {
      JordanPair v = io::parse_pair(io::read_file(pair_file));
      auto r = verify_jordan_pair(v);
      rep["command"] = "pair check";
      rep["dims"] = {v.dp, v.dm};
      rep["pair_ok"] = r.ok;
      rep["violations"] = r.violations.size();
      text << "jordan pair: " << (r.ok ? "ok" : "FAIL (" + std::to_string(r.violations.size()) + " violations)")
           << "\n";
    } else if (*tkk_build) {
      JordanPair v = io::parse_pair(io::read_file(tkk_in));
      TkkAlgebra t = tkk_construct(v);
      io::write_file(tkk_out, io::serialize_algebra(t.algebra));
      rep["command"] = "tkk build";
      rep["dim"] = t.dim();
      rep["grading"] = {t.dp, t.d0, t.dm};
      text << "tkk: dim=" << t.dim() << " grading=" << detail::grading_fingerprint(t.algebra) << " -> "
           << tkk_out << "\n";
    } else if (*tkk_pair) {
      StructureAlgebra a = io::parse_algebra(io::read_file(tkkp_in));
      AssociatedPair assoc = associated_pair(a);
      io::write_file(tkkp_out, io::serialize_pair(assoc.pair));
      rep["command"] = "tkk pair";
      rep["dims"] = {assoc.pair.dp, assoc.pair.dm};
      text << "pair: dims=(" << assoc.pair.dp << "," << assoc.pair.dm << ") -> " << tkkp_out << "\n";
    } else if (*pi_test) {
      LiePoly f = io::parse_poly_file(io::read_file(pi_poly));
      StructureAlgebra a = io::parse_algebra(io::read_file(pi_algebra));
      IdentityOptions opts;
      opts.budget = budget;
      opts.randomized = pi_randomized;
      opts.seed = seed;
      opts.trials = trials;
      IdentityReport r = is_identity(f, a, opts);
      rep["command"] = "pi test";
      rep["identity"] = r.identity;
      rep["method"] = r.method;
      rep["multilinearized"] = r.multilinearized;
      rep["budget"] = budget;
      if (r.witness) rep["witness"] = detail::witness_json(*r.witness);
      text << (r.identity ? "identity" : "non-identity") << " (" << r.method << ")";
      if (r.multilinearized) text << " [verdict applies to the multilinearization]";
      text << "\n";
    } else if (*pi_essential) {
      LiePoly f = io::parse_poly_file(io::read_file(pe_poly));
      EssentialityReport er = is_essential(f);
      int bound = max_pq > 0 ? max_pq : f.degree() + 1;
      IdentityOptions opts;
      opts.budget = budget;
      WitnessSearchReport wr = essential_witness_search(f, bound, opts);
      rep["command"] = "pi essential";
      rep["essential"] = er.essential;
      rep["leading_degree"] = er.leading_degree;
      rep["monic"] = er.monic;
      rep["max_pq"] = bound;
      rep["budget"] = budget;
      rep["method"] = "exhaustive-basis sl(p+q) scan";
      if (wr.witness) {
        rep["witness_p"] = wr.witness->first;
        rep["witness_q"] = wr.witness->second;
        text << "essential; witness p=" << wr.witness->first << " q=" << wr.witness->second << "\n";
      } else if (er.essential) {
        rep["bound_exhausted"] = true;
        text << "essential; no witness within bound max-pq=" << bound << "\n";
      } else {
        text << "not essential\n";
      }
    } else if (*pi_induce) {
      LiePoly f = io::parse_poly_file(io::read_file(pin_poly));
      InducedJordanIdentity ind = induced_jordan_identity(f);
      io::write_file(pin_out, io::serialize_pairpoly_file(ind.g_plus, ind.g_minus));
      rep["command"] = "pi induce";
      rep["deg_f"] = ind.deg_f;
      rep["deg_g"] = ind.deg_g;
      rep["degree_contract_ok"] = ind.degree_contract_ok;
      text << "induced: deg f=" << ind.deg_f << " deg g=" << ind.deg_g
           << " contract=" << (ind.degree_contract_ok ? "ok" : "VIOLATED") << " -> " << pin_out << "\n";
    } else if (*centroid_cmd) {
      rep["command"] = "centroid";
      if (!cen_pair.empty()) {
        JordanPair v = io::parse_pair(io::read_file(cen_pair));
        JordanCentroid c = jordan_centroid(v);
        rep["kind"] = "jordan";
        rep["dim"] = c.dim();
        rep["condition_b_subspace"] = c.condition_b_subspace;
        text << "jordan centroid: dim=" << c.dim();
        if (!c.condition_b_subspace) text << " [condition-(b) non-linear locus]";
        text << "\n";
      } else if (!cen_algebra.empty()) {
        StructureAlgebra a = io::parse_algebra(io::read_file(cen_algebra));
        LieCentroid c = lie_centroid(a);
        rep["kind"] = "lie";
        rep["dim"] = c.dim();
        text << "lie centroid: dim=" << c.dim() << "\n";
      } else {
        throw Error("centroid requires FILE or --pair PAIRFILE");
      }
    } else if (*closure_cmd) {
      rep["command"] = "closure";
      if (!clo_pair.empty()) {
        JordanPair v = io::parse_pair(io::read_file(clo_pair));
        PairClosure c = extended_central_closure_pair(v);
        rep["kind"] = "pair";
        rep["ok"] = c.ok;
        if (c.ok) {
          rep["dims"] = {c.pair.dp, c.pair.dm};
          rep["gamma"] = c.gamma->str();
          text << "closure: dims=(" << c.pair.dp << "," << c.pair.dm << ") over " << c.gamma->str() << "\n";
        } else {
          rep["refusal"] = c.refusal;
          text << "refused: " << c.refusal << "\n";
        }
      } else if (!clo_algebra.empty()) {
        StructureAlgebra a = io::parse_algebra(io::read_file(clo_algebra));
        CentralClosure c = central_closure(a);
        rep["kind"] = "lie";
        rep["ok"] = c.ok;
        if (c.ok) {
          rep["dim"] = c.algebra.dim;
          rep["gamma"] = c.gamma->str();
          text << "closure: dim=" << c.algebra.dim << " over " << c.gamma->str() << "\n";
        } else {
          rep["refusal"] = c.refusal;
          text << "refused: " << c.refusal << "\n";
        }
      } else {
        throw Error("closure requires FILE or --pair PAIRFILE");
      }
    } else if (*radical_cmd) {
      RadicalParams params;
      params.mode = detail::parse_mode(rad_mode);
      params.budget = budget;
      params.seed = seed;
      params.trials = trials;
      rep["command"] = "radical";
      rep["mode"] = rad_mode;
      rep["budget"] = budget;
      if (params.mode == RadicalMode::witness) {
        rep["seed"] = seed;
        rep["trials"] = trials;
      }
      if (!rad_pair.empty()) {
        JordanPair v = io::parse_pair(io::read_file(rad_pair));
        PairRadicalReport r = mccrimmon_radical(v, params);
        rep["kind"] = "mccrimmon";
        rep["dims"] = {r.radical.plus.dim(), r.radical.minus.dim()};
        rep["radical_plus"] = detail::subspace_json(r.radical.plus);
        rep["radical_minus"] = detail::subspace_json(r.radical.minus);
        rep["steps"] = r.saturation_steps;
        rep["exact"] = r.exact;
        text << "mccrimmon radical: dims=(" << r.radical.plus.dim() << "," << r.radical.minus.dim()
             << ") steps=" << r.saturation_steps << " mode=" << rad_mode
             << (r.exact ? "" : " [lower bound]") << "\n";
      } else if (!rad_lie.empty()) {
        StructureAlgebra a = io::parse_algebra(io::read_file(rad_lie));
        LieRadicalReport r = kostrikin_radical(a, params);
        rep["kind"] = "kostrikin";
        rep["dim"] = r.radical.dim();
        rep["radical"] = detail::subspace_json(r.radical);
        rep["steps"] = r.saturation_steps;
        rep["exact"] = r.exact;
        rep["structural_certificate"] = r.structural_certificate;
        text << "kostrikin radical: dim=" << r.radical.dim() << " steps=" << r.saturation_steps
             << " mode=" << rad_mode << (r.exact ? "" : " [lower bound]") << "\n";
      } else {
        throw Error("radical requires --lie FILE or --pair PAIRFILE");
      }
    } else if (*v_centroid) {
      JordanPair v = io::parse_pair(io::read_file(vc_pair));
      CentroidIsoReport r = verify_centroid_iso(v);
      rep["command"] = "verify centroid-iso";
      rep["pass"] = r.pass;
      rep["lie_dim"] = r.lie_dim;
      rep["jordan_dim"] = r.jordan_dim;
      rep["method"] = "exhaustive matrix-exact";
      if (r.pass)
        text << "PASS dim=" << r.lie_dim << " psi.upsilon=id upsilon.psi=id\n";
      else
        text << "FAIL " << r.detail << "\n";
    } else if (*v_closure) {
      JordanPair v = io::parse_pair(io::read_file(vl_pair));
      ClosureIsoReport r = verify_closure_iso(v);
      rep["command"] = "verify closure-iso";
      rep["pass"] = r.pass;
      rep["detail"] = r.detail;
      rep["method"] = "exhaustive matrix-exact";
      if (r.pass) {
        rep["dim_over_gamma"] = r.dim_over_gamma;
        rep["gamma"] = r.gamma->str();
        text << "PASS dim=" << r.dim_over_gamma << " over " << r.gamma->str() << "\n";
      } else {
        text << "FAIL " << r.detail << "\n";
      }
    } else if (*v_radical) {
      JordanPair v = io::parse_pair(io::read_file(vr_pair));
      RadicalParams params;
      params.budget = budget;
      RadicalCorrespondenceReport r = verify_radical_correspondence(v, params);
      rep["command"] = "verify radical-corr";
      rep["pass"] = r.pass;
      rep["mode"] = "enumerate";
      rep["budget"] = budget;
      rep["kostrikin"] = detail::subspace_json(r.kostrikin);
      rep["kostrikin_graded"] = r.kostrikin_graded;
      rep["quotient_jordan_3graded"] = r.quotient_jordan_3graded;
      rep["quotient_pair_nondegenerate"] = r.quotient_pair_nondegenerate;
      if (r.pass)
        text << "PASS K(L)=anti-image(I(Mc(V))) dim=" << r.kostrikin.dim() << "\n";
      else
        text << "FAIL " << r.detail << "\n";
    } else {
      res.code = kUsage;
      res.text = "no subcommand selected\n";
      return res;
    }
  } catch (const ParseError& e) {
    res.code = kUsage;
    res.text = std::string(e.what()) + "\n";
    rep["error"] = e.what();
    return res;
  } catch (const BudgetExceeded& e) {
    res.code = kBudget;
    res.text = std::string(e.what()) + "\n";
    rep["error"] = e.what();
    return res;
  } catch (const Error& e) {
    res.code = kFailure;
    res.text = std::string(e.what()) + "\n";
    rep["error"] = e.what();
    return res;
  }

  res.text = text.str();
  if (!json_path.empty()) io::write_file(json_path, rep.dump(2) + "\n");
  return res;
}

}  // namespace glk::cli
