#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "susynu/error.hpp"
#include "susynu/nu_core.hpp"
#include "susynu/potential_catalog.hpp"
#include "susynu/quadrature.hpp"

using namespace susynu;
using Catch::Approx;

namespace {

// Squared-tangent reduction: sigma~ = -Ecal z^2 + E_bar z, Ecal = E_bar + A_bar.
nu::NuProblem stp_problem(double e_bar, double a_bar) {
  return {Poly{0.0, 1.0, -1.0}, Poly{0.0, e_bar, -(e_bar + a_bar)}, Poly{0.5, -1.0}};
}

// Pöschl-Teller reduction: sigma~ = -E1 z^2 + E2 z - a~, E2 = E1 + a~ - b~.
nu::NuProblem ptp_problem(double e1, double at, double bt) {
  return {Poly{0.0, 2.0, -2.0}, Poly{-at, e1 + at - bt, -e1}, Poly{1.0, -2.0}};
}

bool same_pi_set(const std::array<nu::PiBranch, 2>& b, const Poly& x, const Poly& y) {
  return (approx_equal(b[0].pi, x) && approx_equal(b[1].pi, y)) ||
         (approx_equal(b[0].pi, y) && approx_equal(b[1].pi, x));
}

bool throws_code(ErrorCode code, auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

catalog::FamilyPotential stp_minus() {
  return catalog::family_potential(catalog::StpParams::make(2.0, 1.0, Units::hbar2_eq_2m()),
                                   susy::Partner::Minus);
}

catalog::FamilyPotential ptp_minus() {
  return catalog::family_potential(catalog::PtpParams::make(-2.0, 2.0, 1.0, Units::hbar2_eq_2m()),
                                   susy::Partner::Minus);
}

}  // namespace

TEST_CASE("validate: degree bounds") {
  nu::NuProblem bad{Poly{0.0, 1.0, -1.0}, Poly{0.0, 0.0, 0.0, 1.0}, Poly{0.5, -1.0}};
  REQUIRE(throws_code(ErrorCode::InvalidArgument, [&] { bad.validate(); }));
  bad.sigma_tilde = Poly{};
  bad.tau_tilde = Poly{0.0, 0.0, 1.0};
  REQUIRE(throws_code(ErrorCode::InvalidArgument, [&] { bad.validate(); }));
}

TEST_CASE("k_candidates: squared-tangent closed form") {
  for (double e_bar : {-2.0, -0.3, 0.0, 1.7, 6.25})
    for (double a_bar : {0.0, 0.5, 1.0, 3.0}) {
      const auto ks = nu::k_candidates(stp_problem(e_bar, a_bar));
      const double ecal_t = 1.0 + 4.0 * (e_bar + a_bar), e_t = -1.0 - 4.0 * e_bar;
      const double r = std::sqrt(1.0 + 4.0 * (ecal_t + e_t)) / 8.0;
      REQUIRE(ks.size() == 2);
      REQUIRE(ks[0] == Approx(-0.125 - e_t / 4.0 + r).margin(1e-12));
      REQUIRE(ks[1] == Approx(-0.125 - e_t / 4.0 - r).margin(1e-12));
    }
}

TEST_CASE("k_candidates: Pöschl-Teller closed form") {
  auto expected = [](double e, double at, double bt) {
    const double c = 0.25 * ((1.0 + 2.0 * e) - 2.0 * (at + bt));
    const double r = 0.25 * std::sqrt((1.0 + 4.0 * at) * (1.0 + 4.0 * bt));
    return std::array<double, 2>{c + r, c - r};
  };
  SECTION("symmetric strengths, where E1 and E2 coincide") {
    for (double e1 : {0.0, 3.0, 17.5})
      for (double at : {0.0, 2.0, 6.0}) {
        const auto pr = ptp_problem(e1, at, at);
        const auto ks = nu::k_candidates(pr);
        const auto ref = expected(pr.sigma_tilde[1], at, at);
        REQUIRE(ks[0] == Approx(ref[0]).margin(1e-12));
        REQUIRE(ks[1] == Approx(ref[1]).margin(1e-12));
      }
  }
  SECTION("general strengths group the energy as E1") {
    for (double e1 : {0.0, 3.0, 17.5})
      for (auto [at, bt] : {std::pair{0.0, 2.0}, std::pair{6.0, 2.0}, std::pair{0.75, 12.0}}) {
        const auto ks = nu::k_candidates(ptp_problem(e1, at, bt));
        const auto ref = expected(e1, at, bt);
        REQUIRE(ks[0] == Approx(ref[0]).margin(1e-12));
        REQUIRE(ks[1] == Approx(ref[1]).margin(1e-12));
      }
  }
}

TEST_CASE("k_candidates: zero source gives k = 0") {
  const nu::NuProblem pr{Poly{0.0, 1.0, -1.0}, Poly{}, Poly{1.0, -2.0}};
  REQUIRE(approx_equal(nu::radicand(pr, 0.7), 0.7 * pr.sigma));
  const auto ks = nu::k_candidates(pr);
  REQUIRE(std::any_of(ks.begin(), ks.end(), [](double k) { return std::abs(k) < 1e-12; }));
}

TEST_CASE("k_candidates: no real k") {
  REQUIRE(throws_code(ErrorCode::NoRealK, [] { nu::k_candidates(stp_problem(0.0, -1.0)); }));
}

TEST_CASE("pi_branches: radicand is the square of pi - half gap") {
  for (const auto& pr : {stp_problem(1.3, 2.0), ptp_problem(4.0, 1.0, 3.0)})
    for (double k : nu::k_candidates(pr))
      for (const auto& b : nu::pi_branches(pr, k)) {
        const Poly l = b.pi - nu::half_gap(pr);
        REQUIRE(approx_equal(l * l, nu::radicand(pr, k), 1e-12));
        REQUIRE(approx_equal(b.tau, pr.tau_tilde + 2.0 * b.pi));
        REQUIRE(b.lambda == Approx(k + b.pi.derivative()[0]).margin(1e-12));
      }
}

TEST_CASE("pi_branches: squared-tangent root brackets") {
  for (double a_bar : {0.5, 1.0, 3.0}) {
    const auto pr = stp_problem(2.0, a_bar);
    const double S = std::sqrt(1.0 + 16.0 * a_bar);
    const auto ks = nu::k_candidates(pr);
    const Poly base{0.25, -0.5};
    auto set_for = [&](double slope) {
      const Poly l = 0.25 * Poly{-1.0, slope};
      return std::pair{base + l, base - l};
    };
    // The (1 - S) z - 1 bracket belongs to the larger k, (1 + S) z - 1 to the smaller.
    const auto [p1, m1] = set_for(1.0 - S);
    const auto [p2, m2] = set_for(1.0 + S);
    REQUIRE(same_pi_set(nu::pi_branches(pr, ks[0]), p1, m1));
    REQUIRE(same_pi_set(nu::pi_branches(pr, ks[1]), p2, m2));
  }
}

TEST_CASE("pi_branches: Pöschl-Teller tau at the smaller k") {
  for (auto [at, bt] : {std::pair{2.0, 2.0}, std::pair{0.5, 6.0}}) {
    const auto pr = ptp_problem(5.0, at, bt);
    const auto ks = nu::k_candidates(pr);
    const double Pa = std::sqrt(1.0 + 4.0 * at), Pb = std::sqrt(1.0 + 4.0 * bt);
    const auto b = nu::pi_branches(pr, ks[1])[1];
    REQUIRE(approx_equal(b.tau, Poly{2.0, -4.0} - Poly{-Pa, Pa + Pb}));
  }
}

TEST_CASE("pi_branches: identity reduction") {
  const nu::NuProblem pr{Poly{0.0, 1.0, -1.0}, Poly{}, Poly{1.0, -2.0}};
  const auto b = nu::pi_branches(pr, 0.0);
  REQUIRE(b[0].pi.is_zero());
  REQUIRE(b[1].pi.is_zero());
  REQUIRE(approx_equal(b[0].tau, pr.tau_tilde));
}

TEST_CASE("lambda_n: arithmetic") {
  nu::PiBranch b;
  b.tau = Poly{1.0, -2.0};
  const Poly sigma{0.0, 1.0, -1.0};
  REQUIRE(nu::lambda_n(b, sigma, 0) == 0.0);
  REQUIRE(nu::lambda_n(b, sigma, 3) == Approx(12.0));
}

TEST_CASE("lambda_n: n = 1 is -tau' of the squared-tangent branch") {
  const double a_bar = 1.0, S = std::sqrt(17.0);
  const auto pr = stp_problem(0.7, a_bar);
  const auto br = nu::select_branch(pr, {nu::Endpoint::Regular, nu::Endpoint::Wall, 0});
  REQUIRE(br.tau[1] == Approx(-(3.0 + S) / 2.0));
  REQUIRE(nu::lambda_n(br, pr.sigma, 1) == Approx((3.0 + S) / 2.0));
}

TEST_CASE("quantize: squared tangent and Pöschl-Teller levels") {
  const auto stp = stp_minus();
  const nu::Family stp_family = [&](double e) { return catalog::nu_problem_for(stp, e); };
  for (int n : {0, 1, 2, 3}) {
    const double e = nu::quantize(stp_family, catalog::nu_degree(stp.family, n),
                                  catalog::energy_bracket(stp, n),
                                  catalog::branch_rule(stp.family, n));
    REQUIRE(e == Approx((2.0 + n) * (2.0 + n) - 4.0).margin(1e-9));
  }
  const auto ptp = ptp_minus();
  const nu::Family ptp_family = [&](double e) { return catalog::nu_problem_for(ptp, e); };
  for (int n : {0, 1, 2})
    REQUIRE(nu::quantize(ptp_family, n, catalog::energy_bracket(ptp, n),
                         catalog::branch_rule(ptp.family, n)) ==
            Approx((4.0 + 2 * n) * (4.0 + 2 * n) - 16.0).margin(1e-9));
}

TEST_CASE("quantize: empty bracket and missing root") {
  const auto stp = stp_minus();
  const nu::Family f = [&](double e) { return catalog::nu_problem_for(stp, e); };
  const nu::BranchRule rule{nu::Endpoint::Regular, nu::Endpoint::Wall, 0};
  REQUIRE(throws_code(ErrorCode::InvalidArgument, [&] { nu::quantize(f, 0, {1.0, 1.0}, rule); }));
  REQUIRE(throws_code(ErrorCode::NoRoot, [&] { nu::quantize(f, 0, {1.0, 2.0}, rule); }));
}

TEST_CASE("weight_function and phi_factor satisfy their defining equations") {
  const auto check = [](const nu::NuProblem& pr, const nu::PiBranch& br) {
    const auto rho = nu::weight_function(br, pr);
    const auto phi = nu::phi_factor(br, pr);
    for (double z : {0.13, 0.4, 0.77}) {
      const double h = 1e-5;
      const auto srho = [&](double x) { return pr.sigma(x) * rho(x); };
      const double d = (srho(z + h) - srho(z - h)) / (2 * h);
      REQUIRE(d == Approx(br.tau(z) * rho(z)).epsilon(1e-7));
      const double dlog = (std::log(phi(z + h)) - std::log(phi(z - h))) / (2 * h);
      REQUIRE(dlog == Approx(br.pi(z) / pr.sigma(z)).margin(1e-7));
    }
  };
  const auto stp = stp_minus();
  for (int n : {0, 1, 2, 3}) {
    const auto pr = catalog::nu_problem_for(stp, catalog::nu_energy(stp, n));
    check(pr, nu::select_branch(pr, catalog::branch_rule(stp.family, n)));
  }
  const auto ptp = ptp_minus();
  const auto pr = catalog::nu_problem_for(ptp, catalog::nu_energy(ptp, 1));
  check(pr, nu::select_branch(pr, catalog::branch_rule(ptp.family, 1)));
}

TEST_CASE("weight_function and phi_factor: squared-tangent exponents") {
  const auto stp = stp_minus();  // A_bar = 1/2 in these units
  const double S = 3.0, delta1 = 1.0 + S;
  const auto pr = catalog::nu_problem_for(stp, 0.0);
  const auto br = nu::select_branch(pr, catalog::branch_rule(stp.family, 0));
  const auto phi = nu::phi_factor(br, pr);
  REQUIRE(phi.a_exp == Approx(0.0).margin(1e-12));
  REQUIRE(phi.b_exp == Approx(delta1 / 4.0));
  const auto rho = nu::weight_function(br, pr);
  REQUIRE(rho.a_exp == Approx(-0.5));
  REQUIRE(rho.b_exp == Approx(S / 2.0));
}

TEST_CASE("weight_function and phi_factor: Pöschl-Teller exponents") {
  const auto ptp = ptp_minus();  // a~ = b~ = 2
  const double P = 3.0;
  const auto pr = catalog::nu_problem_for(ptp, 0.0);
  const auto br = nu::select_branch(pr, catalog::branch_rule(ptp.family, 0));
  const auto phi = nu::phi_factor(br, pr);
  REQUIRE(phi.a_exp == Approx((1.0 + P) / 4.0));
  REQUIRE(phi.b_exp == Approx((1.0 + P) / 4.0));
  const auto rho = nu::weight_function(br, pr);
  REQUIRE(rho.a_exp == Approx(P / 2.0));
  REQUIRE(rho.b_exp == Approx(P / 2.0));
}

TEST_CASE("weight_function and phi_factor: trivial cases") {
  const nu::NuProblem pr{Poly{0.0, 1.0, -1.0}, Poly{}, Poly{1.0, -2.0}};
  nu::PiBranch b;
  b.tau = pr.sigma.derivative();
  const auto rho = nu::weight_function(b, pr);
  REQUIRE(rho.a_exp == Approx(0.0).margin(1e-15));
  REQUIRE(rho.b_exp == Approx(0.0).margin(1e-15));
  const auto phi = nu::phi_factor(b, pr);
  REQUIRE(phi(0.3) == Approx(phi(0.8)));
}

TEST_CASE("rodrigues_poly: low degrees") {
  const Poly s1{0.0, 1.0, -1.0};
  const nu::BetaWeight flat{0.0, 0.0, 0.0, 1.0, 1.0};
  const Poly y0 = nu::rodrigues_poly(flat, s1, 0);
  REQUIRE(y0.degree() == 0);
  REQUIRE(y0[0] == Approx(1.0));

  for (double mu : {0.5, 1.0, 2.5}) {
    const Poly y1 = nu::rodrigues_poly({mu, mu, 0.0, 1.0, 1.0}, 2.0 * s1, 1);
    REQUIRE(y1.degree() == 1);
    REQUIRE(y1(0.5) == Approx(0.0).margin(1e-14));
  }

  const Poly y2 = nu::rodrigues_poly(flat, s1, 2);
  REQUIRE(y2.degree() == 2);
  for (int m = 0; m < 2; ++m) {
    const Poly ym = nu::rodrigues_poly(flat, s1, m);
    REQUIRE(std::abs(integrate([&](double z) { return y2(z) * ym(z); }, 0.0, 1.0)) < 1e-12);
  }
}

TEST_CASE("rodrigues_poly: orthogonal under a general weight") {
  const Poly sigma{0.0, 1.0, -1.0};
  const nu::BetaWeight w{-0.5, 1.3, 0.0, 1.0, 1.0};
  for (int n = 0; n <= 5; ++n)
    for (int m = n + 1; m <= 5; ++m) {
      const Poly yn = nu::rodrigues_poly(w, sigma, n), ym = nu::rodrigues_poly(w, sigma, m);
      const double ip =
          integrate_endpoint_singular([&](double z) { return yn(z) * ym(z) * w(z); }, 0.0, 1.0);
      REQUIRE(std::abs(ip) < 1e-8);
    }
  REQUIRE(throws_code(ErrorCode::NonIntegrableWeight,
                      [&] { nu::rodrigues_poly({-1.0, 0.0, 0.0, 1.0, 1.0}, sigma, 1); }));
}
