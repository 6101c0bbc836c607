#include "susynu/app/figures.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "susynu/potential_catalog.hpp"

namespace susynu::app {

namespace {

using catalog::ClosedFormTerms;

std::string label(const char* a, double x, const char* b = nullptr, double y = 0.0) {
  auto fmt = [](double v) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%g", v);
    return std::string(buf);
  };
  std::string s = std::string(a) + "=" + fmt(x);
  if (b) s += std::string(";") + b + "=" + fmt(y);
  return s;
}

// Printed tangent (gamma_sign -1 on V+) or cotangent (+1 on V+) spectra.
Table squared_energies(const Units& u, double alpha, double plus_gamma_sign, const char* dname) {
  Table t;
  t.columns = {"n", "energy", "branch", "param_label"};
  for (double delta : {2.0, 3.0, 4.0})
    for (double gamma : {1.0, 2.0})
      for (Partner w : {Partner::Minus, Partner::Plus}) {
        const double s = (w == Partner::Plus ? 1.0 : -1.0) * plus_gamma_sign;
        const ClosedFormTerms terms{s * gamma, u.kappa() * alpha * alpha, delta};
        for (int n = 0; n <= 7; ++n)
          t.add({std::int64_t{n}, terms.energy(n), std::string(to_string(w)),
                 label(dname, delta, "gamma", gamma)});
      }
  return t;
}

Table ptp_energies(const Units& u, double alpha) {
  Table t;
  t.columns = {"n", "energy", "branch", "param_label"};
  const double nus[] = {1.0, 4.0, 9.0};
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      for (int n = 0; n <= 10; ++n)
        t.add({std::int64_t{n}, catalog::ptp_energy_from_nu(n, nus[i], nus[j], 0.0, alpha, u),
               std::string("common"), label("nu1", nus[i], "nu2", nus[j])});
  return t;
}

void sample(Table& t, const catalog::Wavefunction& w, const std::string& lbl) {
  const double lo = w.domain.lo, h = w.domain.length() / kFigureSamples;
  for (int j = 0; j < kFigureSamples; ++j) {
    const double theta = lo + (j + 0.5) * h;
    t.add({theta, w(theta), lbl});
  }
}

Table ground_states(int id, const Units& u, double alpha) {
  Table t;
  t.columns = {"theta", "psi0", "param_label"};
  const double ca = u.factor() * alpha;
  if (id == 2) {
    // cos^(delta1/2) ground state: A = c alpha delta1/2.
    for (double d : {2.0, 3.0, 4.0})
      sample(t, catalog::stp_wavefunction(catalog::StpParams::make(ca * d / 2.0, alpha, u), 0),
             label("delta1", d));
  } else if (id == 4) {
    // sin^(delta2/2) ground state: A = -c alpha delta2/2.
    for (double d : {2.0, 3.0, 4.0})
      sample(t, catalog::scp_wavefunction(catalog::ScpParams::make(-ca * d / 2.0, alpha, u), 0),
             label("delta2", d));
  } else {
    for (double nu : {1.0, 4.0, 9.0}) {
      const double r = std::sqrt(nu);
      const auto p = catalog::PtpParams::make(-ca * (1.0 + r) / 2.0, ca * (1.0 + r) / 2.0, alpha, u);
      sample(t, catalog::ptp_wavefunction(p, 0), label("nu1", nu, "nu2", nu));
    }
  }
  return t;
}

}  // namespace

Table figure_table(int id, UnitsPreset preset, double alpha) {
  const Units units = units_of(preset);
  Table t;
  switch (id) {
    case 1: t = squared_energies(units, alpha, -1.0, "delta1"); break;
    case 3: t = squared_energies(units, alpha, 1.0, "delta2"); break;
    case 5: t = ptp_energies(units, alpha); break;
    case 2:
    case 4:
    case 6: t = ground_states(id, units, alpha); break;
    default: throw ConfigError("figure id must be 1..6, got " + std::to_string(id));
  }
  t.meta["figure"] = std::to_string(id);
  t.meta["units"] = to_string(preset);
  return t;
}

}  // namespace susynu::app
