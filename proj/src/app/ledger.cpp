#include "susynu/app/ledger.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "susynu/app/compute.hpp"
#include "susynu/error.hpp"
#include "susynu/nu_core.hpp"
#include "susynu/orthopoly.hpp"

namespace susynu::app {

namespace {

using catalog::Family;
using catalog::GammaConvention;

constexpr double kAlgebraTol = 1e-9;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string list(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + num(v[i]);
  return s;
}

LedgerEntry entry(std::string id, std::string subject, std::string formula,
                  std::vector<double> computed, std::vector<double> reference, double tol,
                  std::string note = {}) {
  LedgerEntry e{std::move(id), std::move(subject), std::move(formula), std::move(computed),
                std::move(reference), Verdict::NotApplicable, tol, std::move(note)};
  e.verdict = compare(e.computed, e.reference, tol);
  return e;
}

std::vector<double> take_even(const std::vector<double>& v) {
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); i += 2) out.push_back(v[i]);
  return out;
}

std::vector<double> closed_form(const catalog::ClosedFormTerms& t, std::size_t count) {
  std::vector<double> e;
  for (std::size_t n = 0; n < count; ++n) e.push_back(t.energy(static_cast<int>(n)));
  return e;
}

// "constant offset X" when computed - reference is the same for every level.
std::string offset_note(const std::vector<double>& c, const std::vector<double>& r) {
  if (c.empty() || c.size() != r.size()) return {};
  const double d = c[0] - r[0];
  for (std::size_t i = 1; i < c.size(); ++i)
    if (std::abs(c[i] - r[i] - d) > 1e-6 * std::max(1.0, std::abs(c[i]))) return {};
  return "computed - reference is the constant " + num(d);
}

// Slope over intercept of L = pi - (sigma' - tau~)/2 for the "+" branch at k.
double branch_ratio(const nu::NuProblem& pr, double k) {
  const Poly l = nu::pi_branches(pr, k)[0].pi - nu::half_gap(pr);
  return l[1] / l[0];
}

std::vector<double> abs_norms(const catalog::FamilyPotential& fp, int count, int level_step) {
  std::vector<double> out;
  for (int d = 0; d < count; ++d)
    out.push_back(std::abs(catalog::nu_wavefunction(fp, d * level_step).norm));
  return out;
}

double coefficient_or_nan(auto&& f) {
  try {
    return f();
  } catch (const Error&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

std::string ratio_note(const std::vector<double>& c, const std::vector<double>& r) {
  std::vector<double> q;
  for (std::size_t i = 0; i < c.size() && i < r.size(); ++i) q.push_back(r[i] / c[i]);
  return "reference/computed = " + list(q);
}

// Printed-vs-oracle spectrum rows for one partner of the tangent or cotangent family.
void squared_spectra(std::vector<LedgerEntry>& out, const RunConfig& cfg, const char* fam,
                     const catalog::FamilyPotential& fp, Partner which,
                     const catalog::ClosedFormTerms& printed,
                     const catalog::ClosedFormTerms& rederived, const std::string& formula,
                     const std::string& rederived_formula) {
  const std::string tag = std::string(fam) + "-spectrum-";
  const std::string side = std::string("-") + to_string(which);
  const auto oracle = oracle_spectrum(fp, cfg.n_max, cfg.grid, cfg.seed).energies();
  const auto ref = closed_form(printed, oracle.size());
  out.push_back(entry(tag + "closed-form" + side, "oracle levels n = 0..n_max against the printed closed form",
                      formula, oracle, ref, cfg.tol,
                      "max deviation " + num(max_deviation(oracle, ref))));
  const auto even = take_even(oracle);
  const auto ref_even = closed_form(printed, even.size());
  std::string note = offset_note(even, ref_even);
  out.push_back(entry(tag + "even-levels" + side,
                      "oracle levels n = 0, 2, 4, ... against the printed closed form at n/2",
                      formula, even, ref_even, cfg.tol, note));
  const auto red = closed_form(rederived, even.size());
  out.push_back(entry(tag + "rederived-even-levels" + side,
                      "oracle levels n = 0, 2, 4, ... against the closed form with the gamma sign "
                      "rederived",
                      rederived_formula, even, red, cfg.tol,
                      "max deviation " + num(max_deviation(even, red))));
}

void stp_entries(std::vector<LedgerEntry>& out, const RunConfig& cfg) {
  const auto p = cfg.stp();
  const Units u = p.units;
  const double A = p.A, al = p.alpha;
  const std::string printed =
      "E(+-) = -+gamma + (hbar^2 alpha^2/2m)[4n^2 + (4n+1) delta1/2], delta1 = 1 + sqrt(1 + "
      "16 A_bar), A_bar = m(A^2 +- alpha A)/(2 hbar^2 alpha^2), gamma = alpha A";
  const std::string rederived =
      "E(+-) = +-c alpha A + kappa alpha^2 [4n^2 + (4n+1) delta1/2], A_bar = (A^2 +- c alpha "
      "A)/(4 kappa alpha^2), c = hbar/sqrt(2m), kappa = c^2";
  for (Partner w : {Partner::Minus, Partner::Plus})
    squared_spectra(out, cfg, "stp", catalog::family_potential(p, w), w,
                    catalog::stp_terms(p, w, GammaConvention::Printed),
                    catalog::stp_terms(p, w, GammaConvention::Rederived), printed, rederived);

  const auto pair = susy::partner_potentials(p.superpotential(), u);
  out.push_back(entry(
      "stp-partner-potentials", "tan^2 coefficient and constant of V-, then of V+",
      "V(+-) = (A^2 +- alpha A) tan^2 +- alpha A",
      {pair.v_minus.sec2, pair.v_minus.squared_basis_constant(), pair.v_plus.sec2,
       pair.v_plus.squared_basis_constant()},
      {A * A - al * A, -al * A, A * A + al * A, al * A}, kAlgebraTol));

  const auto fp = catalog::family_potential(p, Partner::Minus);
  const auto pr = catalog::nu_problem_for(fp, catalog::nu_energy(fp, 0));
  const double e_bar = pr.sigma_tilde[1], e_cal = -pr.sigma_tilde[2];
  const double a_bar = e_cal - e_bar;
  const double S = std::sqrt(1.0 + 16.0 * a_bar);
  const double delta1 = 1.0 + S;
  const double Et = -1.0 - 4.0 * e_bar, Ect = 1.0 + 4.0 * e_cal;
  const auto ks = nu::k_candidates(pr);
  const double root = std::sqrt(1.0 + 4.0 * (Ect + Et)) / 8.0;

  out.push_back(entry("stp-k-candidates", "k values at the V- ground state, descending",
                      "k(1,2) = -1/8 - E~/4 +- sqrt(1 + 4(Ecal~ + E~))/8", ks,
                      {-0.125 - Et / 4.0 + root, -0.125 - Et / 4.0 - root}, kAlgebraTol));

  const Poly R = nu::radicand(pr, ks[0]);
  std::vector<double> rc{R[0], R[1], R[2]};
  std::vector<double> rr{0.25, Et + 4.0 * ks[0], Ect - 4.0 * ks[0]};
  out.push_back(entry("stp-radicand-scale", "radicand coefficients (z^0, z^1, z^2) at k1",
                      "(Ecal~ - 4k) z^2 + (E~ + 4k) z + 1/4", rc, rr, kAlgebraTol,
                      ratio_note(rc, rr)));

  out.push_back(entry(
      "stp-k-branch-labels", "slope/intercept of the root polynomial at k1, then at k2",
      "k1 -> (1 + sqrt(1 + 16 A_bar)) z - 1, k2 -> (1 - sqrt(1 + 16 A_bar)) z - 1",
      {branch_ratio(pr, ks[0]), branch_ratio(pr, ks[1])}, {-(1.0 + S), -(1.0 - S)}, kAlgebraTol,
      "the computed pairing is the printed one with k1 and k2 exchanged"));

  const auto br = nu::select_branch(pr, catalog::branch_rule(Family::Stp, 0));
  out.push_back(entry("stp-tau", "tau coefficients (z^0, z^1) of the selected branch",
                      "tau = (1 - 2z) + [(1 - sqrt(1 + 16 A_bar)) z - 1]/2",
                      {br.tau[0], br.tau[1]}, {0.5, -(3.0 + S) / 2.0}, kAlgebraTol));

  const auto phi = nu::phi_factor(br, pr);
  out.push_back(entry("stp-phi-exponents", "exponents of z and 1 - z in phi",
                      "phi = (1 - z)^(delta1/4)", {phi.a_exp, phi.b_exp}, {0.0, delta1 / 4.0},
                      kAlgebraTol));

  const auto rho = nu::weight_function(br, pr);
  out.push_back(entry("stp-weight-exponents", "exponents of z and 1 - z in the weight",
                      "rho = 1/[z (1 - z)^(1 - delta1/2)]", {rho.a_exp, rho.b_exp},
                      {-1.0, delta1 / 2.0 - 1.0}, kAlgebraTol,
                      "an exponent of -1 at z = 0 is not integrable"));

  const auto g = orthopoly::ShiftedJacobiParams::from_exponents(rho.a_exp, rho.b_exp);
  out.push_back(entry("stp-jacobi-parameters", "(p, q) of G_n under the weight z^(q-1)(1-z)^(p-q)",
                      "p = -1 + delta1/2, q = 0", {g.p, g.q}, {-1.0 + delta1 / 2.0, 0.0},
                      kAlgebraTol, "q = 0 puts z^-1 in the weight"));

  const auto norms = abs_norms(fp, 4, 2);
  std::vector<double> cref;
  for (int d = 0; d < 4; ++d)
    cref.push_back(coefficient_or_nan([&] { return orthopoly::stp_coefficient(d + 2, delta1); }));
  out.push_back(entry(
      "stp-norm-coefficient",
      "unit-norm prefactor of z^s (1-z)^t G_d (G monic) for d = 0..3, by quadrature",
      "C = [(nb-1)! (nb-2+delta1/2)! / (2nb-2+delta1/2)!] sqrt(nb (nb-1+delta1/2)/(2nb-1+delta1/2)), "
      "nb = d + 2",
      norms, cref, 1e-6, ratio_note(norms, cref)));

  const auto pt = catalog::pt_transform(pair);
  out.push_back(entry("stp-pt-form", "V- after alpha -> i alpha: tanh^2 coefficient (re, im), constant (re, im)",
                      "V(+-) = -(A^2 +- i alpha A) tanh^2 +- i alpha A",
                      {pt.minus.tanh2.real(), pt.minus.tanh2.imag(), pt.minus.constant.real(),
                       pt.minus.constant.imag()},
                      {-A * A, al * A, 0.0, -al * A}, kAlgebraTol));
}

void scp_entries(std::vector<LedgerEntry>& out, const RunConfig& cfg) {
  const auto p = cfg.scp();
  const Units u = p.units;
  const double A = p.A, al = p.alpha;
  const std::string printed =
      "E(+-) = +-gamma + (hbar^2 alpha^2/2m)[4n^2 + (4n+1) delta2/2], delta2 = 1 + sqrt(1 + "
      "16 A~), A~ = m(A^2 -+ alpha A)/(2 hbar^2 alpha^2), gamma = alpha A";
  const std::string rederived =
      "E(+-) = -+c alpha A + kappa alpha^2 [4n^2 + (4n+1) delta2/2], A~ = (A^2 -+ c alpha "
      "A)/(4 kappa alpha^2), c = hbar/sqrt(2m), kappa = c^2";
  for (Partner w : {Partner::Minus, Partner::Plus})
    squared_spectra(out, cfg, "scp", catalog::family_potential(p, w), w,
                    catalog::scp_terms(p, w, GammaConvention::Printed),
                    catalog::scp_terms(p, w, GammaConvention::Rederived), printed, rederived);

  const auto pair = susy::partner_potentials(p.superpotential(), u);
  out.push_back(entry(
      "scp-partner-potentials", "cot^2 coefficient and constant of V-, then of V+",
      "V(+-) = (A^2 -+ alpha A) cot^2 -+ alpha A",
      {pair.v_minus.csc2, pair.v_minus.squared_basis_constant(), pair.v_plus.csc2,
       pair.v_plus.squared_basis_constant()},
      {A * A + al * A, al * A, A * A - al * A, -al * A}, kAlgebraTol));

  const auto pt = catalog::pt_transform(pair);
  out.push_back(entry("scp-pt-form", "V- after alpha -> i alpha: coth^2 coefficient (re, im), constant (re, im)",
                      "V(+-) = -(A^2 -+ i alpha A) coth^2 -+ i alpha A",
                      {pt.minus.coth2.real(), pt.minus.coth2.imag(), pt.minus.constant.real(),
                       pt.minus.constant.imag()},
                      {-A * A, -al * A, 0.0, al * A}, kAlgebraTol));
}

void ptp_entries(std::vector<LedgerEntry>& out, const RunConfig& cfg) {
  const auto p = cfg.ptp();
  const Units u = p.units;
  const double a = p.a, b = p.b, al = p.alpha;

  for (Partner w : {Partner::Minus, Partner::Plus}) {
    const auto fp = catalog::family_potential(p, w);
    const auto oracle = oracle_spectrum(fp, cfg.n_max, cfg.grid, cfg.seed).energies();
    std::vector<double> ref;
    for (std::size_t n = 0; n < oracle.size(); ++n)
      ref.push_back(coefficient_or_nan([&] { return catalog::ptp_energy(p, static_cast<int>(n), w); }));
    out.push_back(entry(
        std::string("ptp-spectrum-closed-form-") + to_string(w),
        "oracle levels n = 0..n_max against the printed closed form",
        "E = (hbar^2 alpha^2/2m){(2n+1)[(2n+1) + sqrt(nu1) + sqrt(nu2)] + [(1 + sqrt(nu1 nu2)) + "
        "2(a~ + b~)]/2} - (a-b)^2, nu1 = 1 + 4a~, nu2 = 1 + 4b~, a~ = 2m A1/(hbar^2 alpha^2), "
        "b~ = 2m B1/(hbar^2 alpha^2), A1 read as a^2 -+ alpha a, B1 = b^2 +- alpha b",
        oracle, ref, cfg.tol, "max deviation " + num(max_deviation(oracle, ref))));
  }

  const auto pair = susy::partner_potentials(p.superpotential(), u);
  out.push_back(entry("ptp-partner-csc2-coefficient", "cosec^2 coefficient of V-, then of V+",
                      "A1 = alpha^2 -+ alpha a", {pair.v_minus.csc2, pair.v_plus.csc2},
                      {al * al + al * a, al * al - al * a}, kAlgebraTol,
                      "the computed values equal a^2 +- c alpha a"));
  out.push_back(entry("ptp-partner-sec2-coefficient", "sec^2 coefficient of V-, then of V+",
                      "B1 = b^2 +- alpha b", {pair.v_minus.sec2, pair.v_plus.sec2},
                      {b * b - al * b, b * b + al * b}, kAlgebraTol));

  const auto fp = catalog::family_potential(p, Partner::Minus);
  const auto pr = catalog::nu_problem_for(fp, catalog::nu_energy(fp, 0));
  const double at = -pr.sigma_tilde[0], e2 = pr.sigma_tilde[1], e1 = -pr.sigma_tilde[2];
  const double bt = e1 + at - e2;
  const double Pa = std::sqrt(1.0 + 4.0 * at), Pb = std::sqrt(1.0 + 4.0 * bt);
  const double mu = (Pa + Pb) / 2.0;
  const auto ks = nu::k_candidates(pr);

  const Poly R = nu::radicand(pr, ks[0]);
  out.push_back(entry("ptp-radicand-group-sign", "radicand coefficients (z^0, z^1, z^2) at k1",
                      "(Ecal~ - 2k) z^2 + (Ecal~' + 2k) z + (1 + 4a~)/4, Ecal~ = 1 - E1~, "
                      "Ecal~' = -1 - E2~",
                      {R[0], R[1], R[2]},
                      {0.25 * (1.0 + 4.0 * at), -1.0 - e2 + 2.0 * ks[0], 1.0 - e1 - 2.0 * ks[0]},
                      kAlgebraTol, "the computed z^2 coefficient is 1 + E1~ - 2k"));

  auto k_pair = [&](double e) {
    const double c = 0.25 * ((1.0 + 2.0 * e) - 2.0 * (at + bt));
    return std::vector<double>{c + 0.25 * Pa * Pb, c - 0.25 * Pa * Pb};
  };
  const auto k_alt = k_pair(e1);
  out.push_back(entry(
      "ptp-k-energy-group", "k values at the V- ground state, descending",
      "k(1,2) = [(1 + 2E2~) - 2(a~ + b~)]/4 +- sqrt((1 + 4a~)(1 + 4b~))/4", ks, k_pair(e2),
      kAlgebraTol,
      "a~ = " + num(at) + ", b~ = " + num(bt) + "; the same grouping with E1~ gives " +
          list(k_alt) + " (" + to_string(compare(ks, k_alt, kAlgebraTol)) +
          "); E1~ and E2~ coincide only when a~ = b~"));

  out.push_back(entry(
      "ptp-k-branch-pairing", "slope/intercept of the root polynomial at k1, then at k2",
      "k1 -> (sqrt(1+4a~) - sqrt(1+4b~)) z - sqrt(1+4a~), k2 -> (sqrt(1+4a~) + sqrt(1+4b~)) z - "
      "sqrt(1+4a~)",
      {branch_ratio(pr, ks[0]), branch_ratio(pr, ks[1])}, {-(Pa - Pb) / Pa, -(Pa + Pb) / Pa},
      kAlgebraTol));

  const auto br = nu::select_branch(pr, catalog::branch_rule(Family::Ptp, 0));
  out.push_back(entry("ptp-tau", "tau coefficients (z^0, z^1) of the selected branch",
                      "tau = 2(1 - 2z) - [(sqrt(1+4a~) + sqrt(1+4b~)) z - sqrt(1+4a~)]",
                      {br.tau[0], br.tau[1]}, {2.0 + Pa, -(4.0 + Pa + Pb)}, kAlgebraTol));

  const auto phi = nu::phi_factor(br, pr);
  const auto rho = nu::weight_function(br, pr);
  const auto wf = catalog::nu_wavefunction(fp, 0);
  out.push_back(entry("ptp-phi-exponent", "exponents of z and 1 - z in phi",
                      "phi = [z(1-z)]^((1+mu)/2), mu = (sqrt(1+4a~) + sqrt(1+4b~))/2",
                      {phi.a_exp, phi.b_exp}, {(1.0 + mu) / 2.0, (1.0 + mu) / 2.0}, kAlgebraTol,
                      "the computed exponents are (1 + sqrt(1+4a~))/4 and (1 + sqrt(1+4b~))/4"));
  out.push_back(entry("ptp-wavefunction-exponent",
                      "exponents of z and 1 - z in the ground state", "Psi_n = C [z(1-z)]^mu G_n",
                      {wf.z_exponent, wf.one_minus_z_exponent}, {mu, mu}, kAlgebraTol));
  out.push_back(entry("ptp-weight-exponent", "exponents of z and 1 - z in the weight",
                      "rho = [z(1-z)]^mu", {rho.a_exp, rho.b_exp}, {mu, mu}, kAlgebraTol,
                      "the computed exponents are sqrt(1+4a~)/2 and sqrt(1+4b~)/2"));
  const auto g = orthopoly::ShiftedJacobiParams::from_exponents(rho.a_exp, rho.b_exp);
  out.push_back(entry("ptp-jacobi-parameters", "(p, q) of G_n under the weight z^(q-1)(1-z)^(p-q)",
                      "p = 1 + 2mu, q = 1 + mu", {g.p, g.q}, {1.0 + 2.0 * mu, 1.0 + mu},
                      kAlgebraTol));

  const auto norms = abs_norms(fp, 4, 1);
  std::vector<double> cref;
  for (int n = 0; n < 4; ++n)
    cref.push_back(coefficient_or_nan([&] { return orthopoly::ptp_coefficient(n, mu); }));
  out.push_back(entry("ptp-norm-coefficient",
                      "unit-norm prefactor of z^s (1-z)^t G_n (G monic) for n = 0..3, by quadrature",
                      "C = (n+mu)!/[(2n+2mu-1)+1]! sqrt(n! (n+2mu)!/(2n+2mu+1))", norms, cref, 1e-6,
                      ratio_note(norms, cref)));

  const auto pt = catalog::pt_transform(pair);
  out.push_back(entry("ptp-pt-csch2-sign", "cosech^2 coefficient of V- after alpha -> i alpha (re, im)",
                      "V(+-) = -(a^2 +- i alpha a) cosech^2 + (b^2 +- i alpha b) sech^2 - (a-b)^2",
                      {pt.minus.csch2.real(), pt.minus.csch2.imag()}, {-a * a, al * a}, kAlgebraTol,
                      "the computed coefficient is -(a^2 + i c alpha a)"));
  out.push_back(entry("ptp-pt-sech2", "sech^2 coefficient of V- after alpha -> i alpha (re, im)",
                      "V(+-) = -(a^2 +- i alpha a) cosech^2 + (b^2 +- i alpha b) sech^2 - (a-b)^2",
                      {pt.minus.sech2.real(), pt.minus.sech2.imag()}, {b * b, -al * b},
                      kAlgebraTol));
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Match: return "match";
    case Verdict::Mismatch: return "mismatch";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

Verdict compare(const std::vector<double>& computed, const std::vector<double>& reference,
                double tol) {
  if (computed.size() != reference.size() || computed.empty()) return Verdict::Mismatch;
  for (std::size_t i = 0; i < computed.size(); ++i) {
    const double d = std::abs(computed[i] - reference[i]);
    if (!(d <= tol * std::max(1.0, std::abs(reference[i])))) return Verdict::Mismatch;
  }
  return Verdict::Match;
}

double max_deviation(const std::vector<double>& computed, const std::vector<double>& reference) {
  if (computed.size() != reference.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < computed.size(); ++i) {
    const double d = std::abs(computed[i] - reference[i]);
    worst = std::isnan(d) ? d : std::max(worst, d);
    if (std::isnan(d)) break;
  }
  return worst;
}

std::vector<LedgerEntry> family_ledger(const RunConfig& cfg) {
  std::vector<LedgerEntry> out;
  switch (cfg.potential) {
    case Family::Stp: stp_entries(out, cfg); break;
    case Family::Scp: scp_entries(out, cfg); break;
    case Family::Ptp: ptp_entries(out, cfg); break;
  }
  return out;
}

std::vector<LedgerEntry> full_ledger(const RunConfig& cfg) {
  std::vector<LedgerEntry> out;
  for (Family f : {Family::Stp, Family::Scp, Family::Ptp}) {
    RunConfig c = cfg;
    c.potential = f;
    const auto part = family_ledger(c);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Table ledger_table(const std::vector<LedgerEntry>& entries) {
  Table t;
  t.columns = {"claim_id", "subject", "reference_formula", "computed",
               "reference", "verdict", "tolerance", "note"};
  for (const auto& e : entries)
    t.add({e.claim_id, e.subject, e.reference_formula, e.computed, e.reference,
           std::string(to_string(e.verdict)), e.tolerance, e.note});
  return t;
}

}  // namespace susynu::app
