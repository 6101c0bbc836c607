#include <catch_amalgamated.hpp>

#include <cmath>

#include "susynu/error.hpp"
#include "susynu/potential_catalog.hpp"
#include "susynu/quadrature.hpp"
#include "susynu/spectral_oracle.hpp"

using namespace susynu;
using namespace susynu::catalog;
using Catch::Approx;

namespace {

const Units kC1 = Units::hbar2_eq_2m();
const Units kHm1 = Units::hbar_m_1();

std::vector<FamilyPotential> wave_cases() {
  std::vector<FamilyPotential> out;
  for (const auto& u : {kC1, kHm1}) {
    out.push_back(family_potential(StpParams::make(2.0, 1.0, u), Partner::Minus));
    out.push_back(family_potential(StpParams::make(1.5, 1.0, u), Partner::Plus));
    out.push_back(family_potential(ScpParams::make(2.0, 1.0, u), Partner::Minus));
    out.push_back(family_potential(ScpParams::make(-3.0, 1.0, u), Partner::Minus));
    out.push_back(family_potential(PtpParams::make(-2.0, 2.0, 1.0, u), Partner::Minus));
    out.push_back(family_potential(PtpParams::make(-3.0, 2.0, 1.0, u), Partner::Plus));
  }
  return out;
}

double overlap(const Wavefunction& f, const Wavefunction& g) {
  return integrate_endpoint_singular([&](double t) { return f(t) * g(t); }, f.domain.lo,
                                     f.domain.hi);
}

}  // namespace

TEST_CASE("stp_energy: bar parameter and delta under hbar = m = 1") {
  const auto p = StpParams::make(2.0, 1.0, kHm1);
  const auto t = stp_terms(p, Partner::Minus);
  REQUIRE(t.delta == Approx(1.0 + std::sqrt(17.0)));
  REQUIRE(t.prefactor == Approx(0.5));
}

TEST_CASE("closed forms: zero strength leaves the bare box term") {
  for (const auto& u : {kC1, kHm1})
    for (Partner s : {Partner::Minus, Partner::Plus}) {
      const double k = u.kappa();
      REQUIRE(stp_energy(StpParams::make(0.0, 1.0, u, true), 0, s) == Approx(k));
      REQUIRE(scp_energy(ScpParams::make(0.0, 1.0, u), 0, s) == Approx(k));
    }
}

TEST_CASE("closed forms: increase with n") {
  for (Partner s : {Partner::Minus, Partner::Plus}) {
    const auto stp = StpParams::make(2.0, 1.0, kHm1);
    const auto scp = ScpParams::make(2.0, 1.0, kHm1);
    const auto ptp = PtpParams::make(-2.0, 3.0, 1.0, kHm1);
    for (int n = 0; n < 10; ++n) {
      REQUIRE(stp_energy(stp, n + 1, s) > stp_energy(stp, n, s));
      REQUIRE(scp_energy(scp, n + 1, s) > scp_energy(scp, n, s));
      REQUIRE(ptp_energy(ptp, n + 1, s) > ptp_energy(ptp, n, s));
    }
  }
}

TEST_CASE("ptp_energy: substitution examples") {
  for (const auto& u : {kC1, kHm1}) {
    const double k = u.kappa();
    REQUIRE(ptp_energy_from_nu(0, 1.0, 1.0, 0.0, 1.0, u) == Approx(4.0 * k));
    REQUIRE(ptp_energy_from_nu(0, 1.0, 1.0, -9.0, 1.0, u) == Approx(4.0 * k - 9.0));
    // Equal strengths: the -(a - b)^2 shift vanishes.
    const auto p = PtpParams::make(1.5, 1.5, 1.0, u);
    const double scale = k;
    const double nu1 = 1.0 + 4.0 * (1.5 * 1.5 + 1.5) / scale;
    const double nu2 = 1.0 + 4.0 * (1.5 * 1.5 - 1.5) / scale;
    REQUIRE(ptp_energy(p, 2, Partner::Plus) ==
            Approx(ptp_energy_from_nu(2, nu1, nu2, 0.0, 1.0, u)));
  }
}

TEST_CASE("nu_spectrum: reference spectra") {
  for (double A : {1.5, 2.0, 3.0}) {
    const auto e = nu_spectrum(family_potential(StpParams::make(A, 1.0, kC1), Partner::Minus), 5)
                       .energies();
    for (int n = 0; n <= 5; ++n) REQUIRE(e[n] == Approx((A + n) * (A + n) - A * A).margin(1e-9));
  }
  // Cotangent V- = (A^2 + A) cot^2 + A: levels (n + 1 + A)^2 - A^2.
  const auto scp = nu_spectrum(family_potential(ScpParams::make(2.0, 1.0, kC1), Partner::Minus), 4)
                       .energies();
  for (int n = 0; n <= 4; ++n) REQUIRE(scp[n] == Approx((n + 3.0) * (n + 3.0) - 4.0).margin(1e-9));
  const auto ptp =
      nu_spectrum(family_potential(PtpParams::make(-2.0, 2.0, 1.0, kC1), Partner::Minus), 2)
          .energies();
  for (int n = 0; n <= 2; ++n)
    REQUIRE(ptp[n] == Approx((4.0 + 2 * n) * (4.0 + 2 * n) - 16.0).margin(1e-9));
}

TEST_CASE("nu_spectrum: agrees with the oracle in both unit conventions") {
  for (const auto& fp : wave_cases()) {
    const auto nu = nu_spectrum(fp, 4).energies();
    const auto orc = oracle::extrapolated_spectrum(fp.v, oracle::grid_for(fp.v, 4096), fp.units, 5)
                         .values;
    for (int n = 0; n <= 4; ++n)
      REQUIRE(std::abs(nu[n] - orc[n]) <= 1e-6 * std::max(1.0, std::abs(orc[n])));
  }
}

TEST_CASE("nu_problem_for: coefficients") {
  const auto stp = family_potential(StpParams::make(2.0, 1.0, kC1), Partner::Minus);
  const double E = 7.0;
  const double q = stp.v.sec2;
  const double e_bar = (E - stp.v.constant - q) / 4.0, a_bar = q / 4.0;
  const auto pr = nu_problem_for(stp, E);
  REQUIRE(pr.sigma_tilde[2] == Approx(-(e_bar + a_bar)));
  REQUIRE(pr.sigma_tilde[1] == Approx(e_bar));
  REQUIRE(pr.sigma_tilde[0] == 0.0);

  const auto ptp = family_potential(PtpParams::make(-3.0, 2.0, 1.0, kC1), Partner::Minus);
  REQUIRE(nu_problem_for(ptp, 3.0).sigma_tilde[0] == Approx(-ptp.v.csc2));

  const auto flat = family_potential(StpParams::make(0.0, 1.0, kC1, true), Partner::Minus);
  REQUIRE(nu_problem_for(flat, 0.0).sigma_tilde.is_zero());
}

TEST_CASE("parameter builders") {
  REQUIRE_THROWS_AS(StpParams::make(-1.0, 1.0, kC1), Error);
  REQUIRE_THROWS_AS(ScpParams::make(1.0, 0.0, kC1), Error);

  const auto s = StpParams::from_nu(3.0, 1.0, kHm1);
  const auto v = family_potential(s, Partner::Minus).v;
  const double ca2 = kHm1.kappa();
  REQUIRE(v.sec2 == Approx(ca2 * 3.0 * 2.0));

  for (const auto& u : {kC1, kHm1}) {
    const auto p = PtpParams::from_flugge(2.0, 3.0, 2.5, 1.0, u);
    REQUIRE(p.flugge);
    const auto fv = family_potential(p, Partner::Minus).v;
    REQUIRE(fv.csc2 == Approx(p.flugge->A));
    REQUIRE(fv.sec2 == Approx(p.flugge->B));
    REQUIRE(p.a < 0.0);
    REQUIRE(p.b > 0.0);
    REQUIRE(susy::ground_state(p.superpotential(), u).normalizable);
  }
}

TEST_CASE("wavefunctions: normalized, orthogonal, n nodes") {
  for (const auto& fp : wave_cases()) {
    std::vector<Wavefunction> w;
    for (int n = 0; n <= 4; ++n) w.push_back(nu_wavefunction(fp, n));
    for (int n = 0; n <= 4; ++n) {
      REQUIRE(overlap(w[n], w[n]) == Approx(1.0).margin(1e-8));
      for (int m = n + 1; m <= 4; ++m) REQUIRE(std::abs(overlap(w[n], w[m])) < 1e-8);
      const auto g = oracle::grid_for(fp.v, 2048);
      std::vector<double> s;
      for (double t : g.nodes()) s.push_back(w[n](t));
      REQUIRE(oracle::count_nodes(s) == n);
    }
  }
}

TEST_CASE("wavefunctions: match the oracle eigenvectors") {
  for (const auto& fp : wave_cases()) {
    const auto g = oracle::grid_for(fp.v, 4096);
    const auto r = oracle::solve(fp.v, g, fp.units, 5, true);
    for (int n = 0; n <= 4; ++n) {
      const auto w = nu_wavefunction(fp, n);
      const auto& vec = (*r.vectors)[n];
      std::vector<double> psi;
      for (double t : g.nodes()) psi.push_back(w(t));
      const double s = oracle::inner_product(psi, vec, std::nullopt, g) < 0.0 ? -1.0 : 1.0;
      std::vector<double> d;
      for (std::size_t j = 0; j < psi.size(); ++j) d.push_back(psi[j] - s * vec[j]);
      REQUIRE(std::sqrt(oracle::inner_product(d, d, std::nullopt, g)) < 1e-4);
      REQUIRE(oracle::ode_residual(w, w.energy, fp.v, g, fp.units) < 1e-5);
    }
  }
}

TEST_CASE("wavefunctions: ground-state shapes") {
  const auto s0 = stp_wavefunction(StpParams::make(2.0, 1.0, kC1), 0);
  REQUIRE(s0(0.3) == Approx(s0(-0.3)));
  REQUIRE(s0(0.0) > s0(0.01));
  REQUIRE(s0(0.7) / s0(0.0) == Approx(std::pow(std::cos(0.7), 2)));

  const auto p0 = ptp_wavefunction(PtpParams::make(-2.0, 2.0, 1.0, kC1), 0);
  for (double t : {0.1, 0.4, 0.7}) {
    REQUIRE(p0(t) == Approx(p0(M_PI / 2 - t)));
    const double sc = std::sin(t) * std::cos(t);
    REQUIRE(p0(t) / p0(M_PI / 4) == Approx(sc * sc / 0.25));
  }
  REQUIRE(p0(M_PI / 4) > p0(M_PI / 4 + 0.01));
}

TEST_CASE("pt_transform: tangent and cotangent pairs") {
  const double A = 2.0, al = 1.0;
  const auto stp = pt_transform(susy::partner_potentials({A, 0.0, al}, kC1));
  REQUIRE(stp.minus.tanh2 == std::complex<double>(-A * A, al * A));
  REQUIRE(stp.minus.constant == std::complex<double>(0.0, -al * A));
  REQUIRE(stp.plus.tanh2 == std::complex<double>(-A * A, -al * A));
  REQUIRE(stp.plus.constant == std::complex<double>(0.0, al * A));

  const auto scp = pt_transform(susy::partner_potentials({0.0, A, al}, kC1));
  REQUIRE(scp.minus.coth2 == std::complex<double>(-A * A, -al * A));
  REQUIRE(scp.minus.constant == std::complex<double>(0.0, al * A));
}

TEST_CASE("pt_transform: applied twice exchanges the partners") {
  for (const auto& w : {susy::Superpotential{2.0, 0.0, 1.0}, susy::Superpotential{0.0, 2.0, 1.0},
                        susy::Superpotential{2.0, -3.0, 1.0}}) {
    const auto pair = susy::partner_potentials(w, kC1);
    const auto pt = pt_transform(pair);
    const auto back = pt_transform(pt.minus, pair.v_minus.domain);
    for (double t : susy::probe_points(pair.v_minus.domain))
      REQUIRE(back(t) == Approx(pair.v_plus(t)).epsilon(1e-12));
  }
}

TEST_CASE("pt_transform: zero potential and single potentials") {
  REQUIRE(pt_transform(susy::partner_potentials({0.0, 0.0, 1.0}, kC1)).minus.is_zero());
  susy::TrigPotential v;
  v.csc2 = 2.0;
  v.sec2 = 3.0;
  const auto f = pt_transform(v);
  REQUIRE(f.csch2 == std::complex<double>(-2.0, 0.0));
  REQUIRE(f.sech2 == std::complex<double>(3.0, 0.0));
}
