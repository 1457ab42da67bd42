// Command-line front end: verification suites, partition/one-point tables,
// arctic-curve sampling and file emission (CSV/JSON/SVG).

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arctic/arctic_curve.hpp"
#include "arctic/asymptotics.hpp"
#include "arctic/enumerate.hpp"
#include "arctic/io.hpp"
#include "arctic/partition.hpp"
#include "arctic/paths.hpp"
#include "arctic/verify.hpp"

using namespace arctic;

namespace {

struct ParamFlags {
  std::string model, point;
  double eta = 0, u = 0, v = 0, rho = 1, rho_o = 1, rho_e = 1, nu = 1;
  bool has_eta = false, has_u = false, has_v = false;
  bool has_rho = false, has_rho_o = false, has_rho_e = false, has_nu = false;
  long precision_bits = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--model", model, "model: 6v, 6vp, 20v, dt");
    cmd->add_option("--point", point,
                    "named point: asm, tau-asm, vsasm, tau-vsasm, 20v-dwbc12, "
                    "20v-dwbc3, uniform, free-fermion");
    cmd->add_option("--eta", eta)->each([this](const std::string&) { has_eta = true; });
    cmd->add_option("--u", u)->each([this](const std::string&) { has_u = true; });
    cmd->add_option("--v", v)->each([this](const std::string&) { has_v = true; });
    cmd->add_option("--rho", rho)->each([this](const std::string&) { has_rho = true; });
    cmd->add_option("--rho-o", rho_o)->each([this](const std::string&) { has_rho_o = true; });
    cmd->add_option("--rho-e", rho_e)->each([this](const std::string&) { has_rho_e = true; });
    cmd->add_option("--nu", nu)->each([this](const std::string&) { has_nu = true; });
    cmd->add_option("--precision-bits", precision_bits, "working precision (bits)");
  }

  mpfr_prec_t precision(int nmax = 8) const {
    if (precision_bits >= MPScalar::kMinPrecision) return precision_bits;
    return default_precision_bits(nmax);
  }

  ModelParams resolve(mpfr_prec_t prec) const {
    ModelParams p;
    if (!point.empty()) {
      auto np = named_point_from_name(point);
      if (!np) throw DomainError("unknown named point: " + point);
      MPScalar eta_mp(eta, prec);
      p = named_point(*np, prec, has_eta ? &eta_mp : nullptr);
      if (!model.empty()) {
        auto m = model_from_name(model);
        if (!m) throw DomainError("unknown model: " + model);
        if (*m == Model::DT && p.model == Model::TwentyV) p.model = Model::DT;
        else if (*m != p.model)
          throw DomainError("--model conflicts with --point");
      }
    } else {
      if (model.empty() || !has_eta || !has_u || !has_v)
        throw DomainError("need --point, or --model with --eta/--u/--v");
      auto m = model_from_name(model);
      if (!m) throw DomainError("unknown model: " + model);
      p = make_params(*m == Model::DT ? Model::TwentyV : *m, MPScalar(eta, prec),
                      MPScalar(u, prec), MPScalar(v, prec));
      p.model = *m;
    }
    if (has_rho) p.rho = MPScalar(rho, prec);
    if (has_rho_o) p.rho_o = MPScalar(rho_o, prec);
    if (has_rho_e) p.rho_e = MPScalar(rho_e, prec);
    if (has_nu) p.nu = MPScalar(nu, prec);
    check_domain(p);
    return p;
  }
};

std::pair<int, int> parse_range(const std::string& s) {
  auto pos = s.find("..");
  if (pos == std::string::npos) {
    int n = std::stoi(s);
    return {n, n};
  }
  return {std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 2))};
}

void emit(const std::string& out, const std::string& content) {
  if (out.empty() || out == "-")
    std::cout << content;
  else
    write_file(out, content);
}

int run_verify(const std::string& suite) {
  std::vector<std::string> suites;
  if (suite == "all")
    suites = verify_suite_names();
  else
    suites = {suite};
  int failures = 0;
  for (const std::string& s : suites) {
    SuiteReport rep = run_verify_suite(s);
    std::printf("== suite %s ==\n", rep.suite.c_str());
    for (const CheckResult& c : rep.checks) {
      std::printf("[%s] %s: %s vs %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                  c.computed.c_str(), c.reference.c_str());
      if (!c.pass) ++failures;
    }
  }
  if (failures) std::printf("%d check(s) failed\n", failures);
  return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-size and asymptotic machinery for the 6V-DWBC, 6V', "
               "20V-DWBC3 and Aztec-triangle domino models"};
  app.require_subcommand(1);

  // ---- verify ----
  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  cmd_verify->add_option("suite", suite,
                         "all, counts, recursions, closed_forms, sum_rules, saddles, curves, "
                         "asymptotic_convergence");

  // ---- curve ----
  auto* cmd_curve = app.add_subcommand("curve", "sample arctic-curve branches");
  ParamFlags cpf;
  cpf.attach(cmd_curve);
  std::string branches = "ne,se", cformat = "csv", cout_path;
  int npoints = 200, cdigits = 30;
  bool complete_central = false;
  cmd_curve->add_option("--branches", branches, "comma list: ne, se, full");
  cmd_curve->add_option("--points", npoints, "samples per branch");
  cmd_curve->add_option("--format", cformat, "csv, json, svg");
  cmd_curve->add_option("--out", cout_path, "output file (default stdout)");
  cmd_curve->add_option("--digits", cdigits, "decimal digits in csv/json");
  cmd_curve->add_flag("--complete-central", complete_central,
                      "6V only: append the centrally reflected NW/SW images");
  bool cruciform = false;
  cmd_curve->add_flag("--cruciform", cruciform,
                      "DT only, SVG only: eightfold reflected composition "
                      "(a conjectural visualization, not covered by tests)");

  // ---- tabulate ----
  auto* cmd_tab = app.add_subcommand("tabulate", "tabulate exact or asymptotic quantities");
  ParamFlags tpf;
  tpf.attach(cmd_tab);
  std::string kind = "partition", nrange = "1..4", tformat = "csv", tout_path;
  std::string xi_list, krange = "0..6", lrange = "0..6";
  int tdigits = 30, xpoints = 9;
  cmd_tab->add_option("--kind", kind,
                      "partition, one_point, refined, path, free_energy, exponent");
  cmd_tab->add_option("--n", nrange, "lattice size or range a..b");
  cmd_tab->add_option("--xi", xi_list, "comma-separated xi values");
  cmd_tab->add_option("--k", krange, "path start height range a..b");
  cmd_tab->add_option("--l", lrange, "path end offset range a..b");
  cmd_tab->add_option("--points", xpoints, "xi grid size for exponent tables");
  cmd_tab->add_option("--format", tformat, "csv or json");
  cmd_tab->add_option("--out", tout_path, "output file (default stdout)");
  cmd_tab->add_option("--digits", tdigits, "decimal digits");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_verify) return run_verify(suite);

    if (*cmd_curve) {
      auto fmt = format_from_name(cformat);
      if (!fmt) throw DomainError("unknown format: " + cformat);
      mpfr_prec_t prec = cpf.precision();
      ModelParams p = cpf.resolve(prec);
      if (cruciform) {
        if (p.model != Model::DT || *fmt != FileFormat::SVG)
          throw DomainError("--cruciform needs --model dt and --format svg");
        Branch full = branch_curve(p, BranchId::FullAnalytic, npoints, prec);
        emit(cout_path, cruciform_svg(full));
        return 0;
      }
      std::vector<Branch> bs;
      std::stringstream ss(branches);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        BranchId id;
        if (tok == "ne" || tok == "NE") id = BranchId::NE;
        else if (tok == "se" || tok == "SE") id = BranchId::SE;
        else if (tok == "full") id = BranchId::FullAnalytic;
        else throw DomainError("unknown branch: " + tok);
        bs.push_back(branch_curve(p, id, npoints, prec));
      }
      if (complete_central) {
        if (p.model != Model::SixV)
          throw DomainError("--complete-central applies to the 6V model only");
        size_t base = bs.size();
        for (size_t i = 0; i < base; ++i)
          bs.push_back(central_symmetry_completion_6v(bs[i]));
      }
      switch (*fmt) {
        case FileFormat::CSV: emit(cout_path, curve_csv(bs, cdigits)); break;
        case FileFormat::JSON: emit(cout_path, curve_json(bs, cdigits)); break;
        case FileFormat::SVG: emit(cout_path, curve_svg(p.model, bs)); break;
      }
      return 0;
    }

    if (*cmd_tab) {
      auto [n_lo, n_hi] = parse_range(nrange);
      mpfr_prec_t prec = tpf.precision(n_hi + 1);
      ModelParams p = tpf.resolve(prec);
      std::vector<double> xis;
      if (!xi_list.empty()) {
        std::stringstream ss(xi_list);
        std::string tok;
        while (std::getline(ss, tok, ',')) xis.push_back(std::stod(tok));
      }
      Table t;
      if (kind == "partition") {
        t.header = {"model", "n", "Z"};
        for (int n = n_lo; n <= n_hi; ++n)
          t.rows.push_back({model_name(p.model), std::to_string(n),
                            partition_fn(p, n, prec).to_string(tdigits)});
      } else if (kind == "one_point" || kind == "refined") {
        if (xis.empty()) xis = {0.0};
        t.header = {"model", "n", "xi", kind == "one_point" ? "H" : "Z_refined"};
        for (int n = n_lo; n <= n_hi; ++n)
          for (double x : xis) {
            MPScalar xi(x, prec);
            MPScalar val = kind == "one_point" ? one_point(p, n, xi, prec)
                                               : refined_partition(p, n, xi, prec);
            t.rows.push_back({model_name(p.model), std::to_string(n), std::to_string(x),
                              val.to_string(tdigits)});
          }
      } else if (kind == "path") {
        auto [k_lo, k_hi] = parse_range(krange);
        auto [l_lo, l_hi] = parse_range(lrange);
        t.header = {"model", "k", "l", "Y_closed", "Y_dp"};
        for (int k = k_lo; k <= k_hi; ++k)
          for (int l = l_lo; l <= l_hi; ++l)
            t.rows.push_back({model_name(p.model), std::to_string(k), std::to_string(l),
                              path_partition_closed(p, k, l, prec).to_string(tdigits),
                              path_partition_dp(p, k, l, prec).to_string(tdigits)});
      } else if (kind == "free_energy") {
        t.header = {"model", "f"};
        t.rows.push_back({model_name(p.model), free_energy(p, prec).to_string(tdigits)});
      } else if (kind == "exponent") {
        t.header = {"model", "xi", "psi", "phi"};
        if (xis.empty()) {
          MPScalar lo = branch_xi_min(p);
          for (int i = 1; i <= xpoints; ++i)
            xis.push_back(lo.to_double() * i / (xpoints + 1.0));
        }
        for (double x : xis) {
          MPScalar xi(x, prec);
          t.rows.push_back({model_name(p.model), std::to_string(x),
                            one_point_exponent(p, xi, ExponentKind::Psi, prec).to_string(tdigits),
                            one_point_exponent(p, xi, ExponentKind::Phi, prec).to_string(tdigits)});
        }
      } else {
        throw DomainError("unknown tabulate kind: " + kind);
      }
      emit(tout_path, tformat == "json" ? table_json(t) : table_csv(t));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
