// gfa — asymptotic invariants of families of global fields.
//
// Subcommands reproduce the global bound tables, the example catalogue, and
// expose the zeta / density / validation computations on user phi-files.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "gfa/density.hpp"
#include "gfa/ffgrowth.hpp"
#include "gfa/inequality.hpp"
#include "gfa/lp.hpp"
#include "gfa/phi.hpp"
#include "gfa/table.hpp"
#include "gfa/towers.hpp"
#include "gfa/zeta.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

std::string fmt(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

gfa::FieldClass parse_class(const std::string& s) {
  if (s == "all") return gfa::FieldClass::All;
  if (s == "real") return gfa::FieldClass::TotallyReal;
  if (s == "complex") return gfa::FieldClass::TotallyComplex;
  throw CLI::ValidationError("class must be all|real|complex");
}

int run(int argc, char** argv) {
  CLI::App app{"asymptotic invariants of families of global fields"};
  app.require_subcommand(1);
  int precision = 4;
  app.add_option("--precision", precision, "digits after the decimal point")
      ->capture_default_str();

  // --- bounds ---------------------------------------------------------
  auto* bounds = app.add_subcommand("bounds", "global lower/upper bounds");
  bounds->fallthrough();
  std::string mode_s = "grh", class_s = "all", target_s = "bs";
  bounds->add_option("--mode", mode_s, "grh|unc")->capture_default_str();
  bounds->add_option("--class", class_s, "all|real|complex")->capture_default_str();
  bounds->add_option("--target", target_s, "bs|kappa")->capture_default_str();
  bounds->callback([&] {
    if (mode_s != "grh" && mode_s != "unc") throw CLI::ValidationError("mode must be grh|unc");
    if (target_s != "bs" && target_s != "kappa")
      throw CLI::ValidationError("target must be bs|kappa");
    gfa::GlobalBounds gb =
        gfa::global_bounds(mode_s == "grh", parse_class(class_s), target_s == "kappa");
    std::cout << "lower: " << fmt(gb.lower, precision) << "\n";
    std::cout << "upper: " << fmt(gb.upper, precision) << "  (boundary prime " << gb.p0
              << ")\n";
    if (target_s == "kappa") {
      // quoted linear comparisons in phi_R, phi_C; stated without derivation
      // in the source and not re-derived here
      std::cout << "quoted comparisons: kappa <= 0.946 - 1.936 phi_R - 2.936 phi_C, "
                   "kappa <= 0.654 - 1.343 phi_R - 2.032 phi_C\n";
    }
  });

  // --- table1 ---------------------------------------------------------
  auto* table1 = app.add_subcommand("table1", "both global summary tables");
  table1->fallthrough();
  bool table_csv = false;
  table1->add_flag("--csv", table_csv, "emit CSV instead of aligned text");
  table1->callback([&] {
    gfa::BoundsTable table = gfa::global_bounds_table();
    std::cout << (table_csv ? gfa::render_table_csv(table)
                            : gfa::render_table_text(table, precision));
  });

  // --- example --------------------------------------------------------
  auto* example = app.add_subcommand("example", "bounds for a catalogued field");
  example->fallthrough();
  std::string example_id;
  std::string example_mode = "grh";
  example->add_option("id", example_id, "catalogue id (see `example list`)")->required();
  example->add_option("--mode", example_mode, "grh|unc")->capture_default_str();
  example->callback([&] {
    if (example_id == "list") {
      for (const auto& ex : gfa::catalogue().examples) std::cout << ex.id << "\n";
      return;
    }
    if (example_mode != "grh" && example_mode != "unc")
      throw CLI::ValidationError("mode must be grh|unc");
    const auto& ex = gfa::catalogue().find(example_id);
    if (example_id == "yamamura") {
      gfa::YamamuraCheck check = gfa::yamamura_grh_check();
      std::cout << "g = " << fmt(check.g, 5) << "\n";
      std::cout << "GRH basic-inequality LHS = " << fmt(check.grh_lhs, precision) << "\n";
      std::cout << (check.contradiction
                        ? "GRH-infeasible: the split data contradicts the basic inequality\n"
                        : "no contradiction\n");
      return;
    }
    gfa::ExampleBounds b = gfa::example_bounds(
        ex, example_mode == "grh" ? gfa::BoundAssumption::Grh
                                  : gfa::BoundAssumption::Unconditional);
    if (b.asserted_only) {
      std::cout << "stored constants only\n";
      std::cout << "deficiency <= " << fmt(b.deficiency_upper, precision) << "\n";
      return;
    }
    std::cout << "g = " << fmt(b.g, precision) << "\n";
    std::cout << "BS in (" << fmt(b.bs_lower, precision) << ", " << fmt(b.bs_upper, precision)
              << ")\n";
    std::cout << "kappa in (" << fmt(b.kappa_lower, precision) << ", "
              << fmt(b.kappa_upper, precision) << ")\n";
    std::cout << "deficiency <= " << fmt(b.deficiency_upper, precision) << "\n";
    if (example_mode == "unc" && !ex.sharp_norms.empty())
      std::cout << "sharpened upper (known norms): "
                << fmt(gfa::sharp_unconditional_upper(ex), precision) << "\n";
  });

  // --- zeta -----------------------------------------------------------
  auto* zeta_cmd = app.add_subcommand("zeta", "limit zeta function at s");
  zeta_cmd->fallthrough();
  std::string phi_path, s_arg = "1";
  bool completed = false;
  double tol = 1e-12;
  zeta_cmd->add_option("--phi", phi_path, "phi file")->required();
  zeta_cmd->add_option("--s", s_arg, "evaluation point re[,im]")->capture_default_str();
  zeta_cmd->add_flag("--completed", completed, "evaluate the completed zeta function");
  zeta_cmd->add_option("--tol", tol, "truncation term tolerance")->capture_default_str();
  zeta_cmd->callback([&] {
    gfa::PhiSystem phi = gfa::load_phi_file(phi_path);
    double re = 0, im = 0;
    auto comma = s_arg.find(',');
    re = std::stod(s_arg.substr(0, comma));
    if (comma != std::string::npos) im = std::stod(s_arg.substr(comma + 1));
    gfa::TruncationPolicy policy;
    policy.term_tol = tol;
    gfa::Complex value = completed ? gfa::log_zeta_tilde(phi, {re, im}, policy)
                                   : gfa::log_zeta(phi, {re, im}, policy);
    std::cout << "log zeta" << (completed ? "~" : "") << "(" << s_arg
              << ") = " << fmt(value.real(), precision);
    if (value.imag() != 0) std::cout << " + " << fmt(value.imag(), precision) << "i";
    std::cout << "\n";
    if (policy.tail_bound > 0) std::cout << "tail bound: " << policy.tail_bound << "\n";
  });

  // --- density --------------------------------------------------------
  auto* density_cmd = app.add_subcommand("density", "zero-density profile as CSV");
  density_cmd->fallthrough();
  double tmin = -3, tmax = 3;
  int samples = 601;
  std::string out_path;
  density_cmd->add_option("--phi", phi_path, "phi file")->required();
  density_cmd->add_option("--tmin", tmin, "grid start")->capture_default_str();
  density_cmd->add_option("--tmax", tmax, "grid end")->capture_default_str();
  density_cmd->add_option("--n", samples, "sample count")->capture_default_str();
  density_cmd->add_option("--out", out_path, "output path (default stdout)");
  density_cmd->callback([&] {
    gfa::PhiSystem phi = gfa::load_phi_file(phi_path);
    gfa::DensityProfile profile = gfa::density_profile(phi, tmin, tmax, samples);
    std::string csv = gfa::profile_to_csv(profile);
    if (out_path.empty()) {
      std::cout << csv;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw std::runtime_error("cannot open " + out_path);
      out << csv;
    }
  });

  // --- validate -------------------------------------------------------
  auto* validate_cmd = app.add_subcommand("validate", "check a phi file");
  validate_cmd->fallthrough();
  std::string validate_mode = "structural";
  bool had_violations = false;
  validate_cmd->add_option("--phi", phi_path, "phi file")->required();
  validate_cmd->add_option("--mode", validate_mode, "structural|grh|unc")
      ->capture_default_str();
  validate_cmd->callback([&] {
    gfa::ValidationMode m;
    if (validate_mode == "structural")
      m = gfa::ValidationMode::Structural;
    else if (validate_mode == "grh")
      m = gfa::ValidationMode::Grh;
    else if (validate_mode == "unc")
      m = gfa::ValidationMode::Unconditional;
    else
      throw CLI::ValidationError("mode must be structural|grh|unc");
    gfa::PhiSystem phi = gfa::load_phi_file(phi_path);
    gfa::ValidationReport report = gfa::validate(phi, m);
    if (report.ok()) {
      std::cout << "ok\n";
    } else {
      for (const auto& v : report.violations)
        std::cout << v.constraint << ": " << v.message << " (lhs " << v.lhs << ", rhs "
                  << v.rhs << ")\n";
      had_violations = true;
    }
  });

  // --- ff-bounds ------------------------------------------------------
  auto* ffb = app.add_subcommand("ff-bounds", "function-field class-number bounds");
  ffb->fallthrough();
  std::uint64_t rr = 2;
  ffb->add_option("--r", rr, "constant field size (prime power)")->required();
  ffb->callback([&] {
    auto [lo, hi] = gfa::ff_global_bounds(rr);
    std::cout << "lower: " << fmt(lo, precision) << "\n";
    std::cout << "upper: " << fmt(hi, precision) << "\n";
  });

  // --- ff-growth ------------------------------------------------------
  auto* ffg = app.add_subcommand("ff-growth", "divisor growth at mu");
  ffg->fallthrough();
  double mu = 1;
  ffg->add_option("--phi", phi_path, "phi file (function-field kind)")->required();
  ffg->add_option("--mu", mu, "growth parameter")->required();
  ffg->callback([&] {
    gfa::PhiSystem phi = gfa::load_phi_file(phi_path);
    std::cout << "mu0 = " << fmt(gfa::mu_zero(phi), precision) << "\n";
    std::cout << "Lambda = " << fmt(gfa::lambda_of_mu(phi, mu), precision) << "\n";
    std::cout << "growth = " << fmt(gfa::divisor_growth(phi, mu), precision) << "\n";
    std::cout << "mu1 = " << fmt(gfa::mu_one(phi), precision) << "\n";
  });

  // --- regulator ------------------------------------------------------
  auto* reg = app.add_subcommand("regulator", "regulator lower bound");
  reg->fallthrough();
  reg->add_option("--phi", phi_path, "phi file (number-field kind)")->required();
  reg->callback([&] {
    gfa::PhiSystem phi = gfa::load_phi_file(phi_path);
    gfa::RegulatorBound b = gfa::regulator_lower_bound(phi);
    std::cout << "regulator bound: " << fmt(b.value, precision) << "\n";
    std::cout << "zimmert bound:   " << fmt(b.zimmert, precision) << "\n";
    std::cout << "class number bound: " << fmt(gfa::class_number_upper_bound(phi), precision)
              << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kUsage;
  }
  return had_violations ? kViolation : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
