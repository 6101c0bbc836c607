#include "susynu/app/commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <optional>

#include "susynu/app/compute.hpp"
#include "susynu/app/figures.hpp"
#include "susynu/error.hpp"
#include "susynu/spectral_oracle.hpp"

namespace susynu::app {

namespace {

using catalog::Family;

std::optional<Family> parse_family(const std::string& s) {
  if (s == "stp") return Family::Stp;
  if (s == "scp") return Family::Scp;
  if (s == "ptp") return Family::Ptp;
  return std::nullopt;
}

Method parse_method(const std::string& s) {
  if (s == "closed-form") return Method::ClosedForm;
  if (s == "nu") return Method::Nu;
  if (s == "oracle") return Method::Oracle;
  return Method::All;
}

void add_levels(Table& t, const SpectrumResult& r, const char* method, const RunConfig& cfg) {
  for (const auto& l : r.levels)
    t.add({std::int64_t{l.n}, l.energy, std::string(method),
           std::string(catalog::to_string(cfg.potential)), std::string(to_string(cfg.sign))});
}

LedgerEntry agreement(const char* id, const char* subject, const SpectrumResult& x,
                      const SpectrumResult& y, double tol) {
  LedgerEntry e;
  e.claim_id = id;
  e.subject = subject;
  e.reference_formula = "levels agree within tol * max(1, |E|)";
  e.computed = x.energies();
  e.reference = y.energies();
  e.tolerance = tol;
  e.verdict = compare(e.computed, e.reference, tol);
  e.note = "max deviation " + format_number(max_deviation(e.computed, e.reference));
  return e;
}

}  // namespace

Table cmd_spectrum(const RunConfig& cfg) {
  cfg.validate();
  Table t;
  t.columns = {"n", "energy", "method", "potential", "sign"};
  const auto fp = cfg.family_potential();
  const bool all = cfg.method == Method::All;
  if (all || cfg.method == Method::ClosedForm)
    add_levels(t,
               closed_form_levels(cfg.superpotential(), cfg.physical_units(), cfg.sign, cfg.n_max),
               "closed-form", cfg);
  if (all || cfg.method == Method::Nu)
    add_levels(t, catalog::nu_spectrum(fp, cfg.n_max), "nu", cfg);
  if (all || cfg.method == Method::Oracle)
    add_levels(t, oracle_spectrum(fp, cfg.n_max, cfg.grid, cfg.seed), "oracle", cfg);
  return t;
}

VerifyResult cmd_verify(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.method != Method::All) throw ConfigError("verify compares all methods; use --method all");
  const auto fp = cfg.family_potential();
  const auto orc = oracle_spectrum(fp, cfg.n_max, cfg.grid, cfg.seed);
  const auto nu = catalog::nu_spectrum(fp, cfg.n_max);
  std::optional<SpectrumResult> ladder;
  std::string ladder_note;
  try {
    ladder = hierarchy_levels(cfg.superpotential(), cfg.physical_units(), cfg.sign, cfg.n_max);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoZeroMode) throw;
    ladder_note = e.what();
  }

  VerifyResult r;
  r.ledger.push_back(agreement("agreement-oracle-nu", "oracle against NU quantization", orc, nu,
                               cfg.tol));
  if (ladder) {
    r.ledger.push_back(agreement("agreement-oracle-hierarchy",
                                 "oracle against the shape-invariance ladder", orc, *ladder, cfg.tol));
    r.ledger.push_back(agreement("agreement-nu-hierarchy",
                                 "NU quantization against the shape-invariance ladder", nu, *ladder,
                                 cfg.tol));
  } else {
    LedgerEntry e;
    e.claim_id = "agreement-hierarchy";
    e.subject = "shape-invariance ladder";
    e.reference_formula = "levels agree within tol * max(1, |E|)";
    e.computed = orc.energies();
    e.tolerance = cfg.tol;
    e.note = ladder_note;
    r.ledger.push_back(e);
  }
  r.agree = true;
  for (const auto& e : r.ledger)
    if (e.verdict == Verdict::Mismatch) r.agree = false;

  const auto extra = family_ledger(cfg);
  r.ledger.insert(r.ledger.end(), extra.begin(), extra.end());

  r.summary = std::string("verify ") + catalog::to_string(cfg.potential) + " " +
              to_string(cfg.sign) + ": " + (r.agree ? "agree" : "disagree") + " (" +
              (ladder ? "oracle, nu, hierarchy" : "oracle, nu; hierarchy reports no zero mode") +
              ", tol " + format_number(cfg.tol) + ")";
  return r;
}

Table cmd_wavefunction(const RunConfig& cfg, int n) {
  cfg.validate();
  if (n < 0 || n > 8) throw ConfigError("wavefunction index must be in 0..8");
  const auto fp = cfg.family_potential();
  const auto w = catalog::nu_wavefunction(fp, n);
  const auto grid = oracle::grid_for(fp.v, cfg.grid);
  const auto eig = oracle::solve(fp.v, grid, fp.units, n + 1, true, cfg.seed);
  std::vector<double> orc = (*eig.vectors)[n];
  std::vector<double> psi(orc.size());
  double dot = 0.0;
  for (int j = 0; j < grid.n_points; ++j) {
    psi[j] = w(grid.node(j));
    dot += psi[j] * orc[j];
  }
  if (dot < 0.0)
    for (double& v : orc) v = -v;
  Table t;
  t.columns = {"theta", "psi", "psi_oracle", "abs_diff"};
  for (int j = 0; j < grid.n_points; ++j)
    t.add({grid.node(j), psi[j], orc[j], std::abs(psi[j] - orc[j])});
  t.meta["energy"] = format_number(w.energy);
  t.meta["n"] = std::to_string(n);
  return t;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Supersymmetric partners of trigonometric potentials: spectra from shape "
               "invariance, Nikiforov-Uvarov quantization and a finite-difference oracle",
               "susynu"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string potential = "stp", sign = "minus", method = "all", units, format = "csv";
  try {
    units = to_string(default_units());
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kConfig;
  }
  app.add_option("--potential", potential, "squared tangent, squared cotangent or Poschl-Teller")
      ->check(CLI::IsMember({"stp", "scp", "ptp"}))
      ->capture_default_str();
  app.add_option("--A", cfg.A, "strength A of A tan or A cot")->capture_default_str();
  app.add_option("--a", cfg.a, "cot coefficient of the Poschl-Teller superpotential")
      ->capture_default_str();
  app.add_option("--b", cfg.b, "tan coefficient of the Poschl-Teller superpotential")
      ->capture_default_str();
  app.add_option("--alpha", cfg.alpha, "angular scale alpha")->capture_default_str();
  app.add_option("--sign", sign, "partner potential, V- or V+")
      ->check(CLI::IsMember({"minus", "plus"}))
      ->capture_default_str();
  app.add_option("--n-max", cfg.n_max, "highest level")->capture_default_str();
  app.add_option("--method", method, "spectrum source")
      ->check(CLI::IsMember({"closed-form", "nu", "oracle", "all"}))
      ->capture_default_str();
  auto* units_opt = app.add_option("--units", units,
                                   "unit convention; SUSY_NU_UNITS sets the default")
                        ->check(CLI::IsMember({"hbar2-eq-2m", "hbar-m-1"}))
                        ->capture_default_str();
  app.add_option("--grid", cfg.grid, "oracle cell count (even; Richardson uses grid/2 too)")
      ->capture_default_str();
  app.add_option("--tol", cfg.tol, "relative agreement tolerance for verify")
      ->capture_default_str();
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", cfg.out, "output file (standard output when empty)");
  app.add_option("--seed", cfg.seed, "inverse-iteration seed")->capture_default_str();

  auto* spectrum = app.add_subcommand("spectrum", "energy levels 0..n-max per method");
  auto* verify = app.add_subcommand(
      "verify", "three-way agreement of oracle, NU and hierarchy; writes the ledger");
  int figure_id = 0;
  auto* figure = app.add_subcommand("figure", "data series of plot 1..6");
  figure->add_option("id", figure_id, "1..6")->required();
  int wave_n = 0;
  auto* wave = app.add_subcommand("wavefunction", "catalog wavefunction against the oracle vector");
  wave->add_option("n", wave_n, "level 0..8")->required();
  auto* ledger = app.add_subcommand("ledger", "published-formula checks for all three families");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kConfig;
  }

  cfg.potential = *parse_family(potential);
  cfg.sign = sign == "plus" ? Partner::Plus : Partner::Minus;
  cfg.method = parse_method(method);
  cfg.units = *parse_units(units);
  cfg.units_given = units_opt->count() > 0 || std::getenv("SUSY_NU_UNITS") != nullptr;
  cfg.format = format == "json" ? Format::Json : Format::Csv;

  try {
    if (spectrum->parsed()) {
      emit(cmd_spectrum(cfg), cfg.format, cfg.out, out);
    } else if (verify->parsed()) {
      const auto r = cmd_verify(cfg);
      emit(ledger_table(r.ledger), cfg.format, cfg.out, out);
      err << r.summary << '\n';
      return r.agree ? kOk : kFailed;
    } else if (figure->parsed()) {
      cfg.validate();
      // The plots use alpha = hbar = m = 1 unless units were chosen explicitly.
      const UnitsPreset u = cfg.units_given ? cfg.units : UnitsPreset::HbarM1;
      emit(figure_table(figure_id, u, cfg.alpha), cfg.format, cfg.out, out);
    } else if (wave->parsed()) {
      emit(cmd_wavefunction(cfg, wave_n), cfg.format, cfg.out, out);
    } else if (ledger->parsed()) {
      cfg.validate();
      emit(ledger_table(full_ledger(cfg)), cfg.format, cfg.out, out);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kConfig;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return e.code() == ErrorCode::InvalidArgument ? kConfig : kFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kOk;
}

}  // namespace susynu::app
