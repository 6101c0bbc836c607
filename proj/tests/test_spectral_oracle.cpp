#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "susynu/error.hpp"
#include "susynu/spectral_oracle.hpp"

using namespace susynu;
using namespace susynu::oracle;
using Catch::Approx;

namespace {

const Units kC1 = Units::hbar2_eq_2m();

susy::TrigPotential box() {
  susy::TrigPotential v;
  v.domain = {-M_PI / 2, M_PI / 2};
  return v;
}

susy::TrigPotential stp_minus() {
  return susy::partner_potentials({2.0, 0.0, 1.0}, kC1).v_minus;
}

double lowest(const susy::TrigPotential& v, int n_points, int level = 0) {
  return solve(v, grid_for(v, n_points), kC1, level + 1, false).values[level];
}

}  // namespace

TEST_CASE("discretize: stencil") {
  const Grid g{0.0, 16.0, 16, 0.0};  // h = 1
  const auto t = discretize([](double) { return 0.0; }, g, kC1);
  REQUIRE(t.diag.size() == 16);
  REQUIRE(t.offdiag.size() == 15);
  REQUIRE(t.diag.front() == Approx(3.0));
  REQUIRE(t.diag.back() == Approx(3.0));
  for (int j = 1; j < 15; ++j) REQUIRE(t.diag[j] == Approx(2.0));
  for (double o : t.offdiag) REQUIRE(o == Approx(-1.0));

  std::vector<double> samples(16, 0.5);
  const auto s = discretize(samples, g, kC1);
  REQUIRE(s.diag[4] == Approx(2.5));
}

TEST_CASE("discretize: singular node") {
  const Grid g{0.0, 1.0, 16, 0.0};
  try {
    discretize([](double) { return std::numeric_limits<double>::infinity(); }, g, kC1);
    FAIL("expected SingularNode");
  } catch (const Error& e) {
    REQUIRE(e.code() == ErrorCode::SingularNode);
  }
}

TEST_CASE("eigen_lowest: 3x3 Laplacian and 1x1") {
  const TridiagonalSym t{{2.0, 2.0, 2.0}, {-1.0, -1.0}};
  const auto r = eigen_lowest(t, 3, true);
  REQUIRE(r.values[0] == Approx(2.0 - std::sqrt(2.0)).margin(1e-12));
  REQUIRE(r.values[1] == Approx(2.0).margin(1e-12));
  REQUIRE(r.values[2] == Approx(2.0 + std::sqrt(2.0)).margin(1e-12));
  const auto& v = (*r.vectors)[0];
  REQUIRE(v[0] == Approx(0.5).margin(1e-10));
  REQUIRE(v[1] == Approx(std::sqrt(0.5)).margin(1e-10));

  const auto one = eigen_lowest(TridiagonalSym{{5.0}, {}}, 1, false);
  REQUIRE(one.values.size() == 1);
  REQUIRE(one.values[0] == Approx(5.0).margin(1e-12));
  REQUIRE(sturm_count(t, 2.5) == 2);
}

TEST_CASE("eigen_lowest: seeded vectors are reproducible") {
  const auto v = stp_minus();
  const auto g = grid_for(v, 512);
  const auto a = solve(v, g, kC1, 3, true);
  const auto b = solve(v, g, kC1, 3, true);
  REQUIRE(*a.vectors == *b.vectors);
}

TEST_CASE("solve: box spectrum") {
  const auto r = extrapolated_spectrum(box(), grid_for(box(), 4096), kC1, 4);
  REQUIRE(r.extrapolated);
  for (int n = 0; n < 4; ++n) REQUIRE(r.values[n] == Approx((n + 1.0) * (n + 1.0)).margin(1e-7));
}

TEST_CASE("solve: squared tangent before extrapolation") {
  const auto v = stp_minus();
  const auto r = solve(v, grid_for(v, 4096), kC1, 4, false);
  const double h = M_PI / 4096;
  for (int n = 0; n < 4; ++n)
    REQUIRE(std::abs(r.values[n] - ((2.0 + n) * (2.0 + n) - 4.0)) < 100 * h * h);
}

TEST_CASE("richardson: fixed point and extrapolation") {
  REQUIRE(richardson(3.25, 3.25) == 3.25);
  REQUIRE(richardson(lowest(box(), 1024), lowest(box(), 2048)) == Approx(1.0).margin(1e-8));
  const auto v = stp_minus();
  REQUIRE(richardson(lowest(v, 2048, 1), lowest(v, 4096, 1)) == Approx(5.0).margin(1e-6));
}

TEST_CASE("solve: second-order convergence") {
  const auto v = stp_minus();
  for (const auto& [pot, exact] : {std::pair{box(), 1.0}, std::pair{v, 0.0}}) {
    const double e1 = lowest(pot, 256) - exact, e2 = lowest(pot, 512) - exact;
    REQUIRE(e1 / e2 == Approx(4.0).margin(0.2));
  }
}

TEST_CASE("solve: eigenvectors are orthonormal with n nodes") {
  const auto v = stp_minus();
  const auto g = grid_for(v, 2048);
  const auto r = solve(v, g, kC1, 5, true);
  const auto& vec = *r.vectors;
  for (int n = 0; n < 5; ++n) {
    REQUIRE(count_nodes(vec[n]) == n);
    REQUIRE(inner_product(vec[n], vec[n], std::nullopt, g) == Approx(1.0).epsilon(1e-10));
    for (int m = n + 1; m < 5; ++m)
      REQUIRE(std::abs(inner_product(vec[n], vec[m], std::nullopt, g)) < 1e-8);
    if (n > 0) REQUIRE(r.values[n] > r.values[n - 1]);
  }
}

TEST_CASE("solve: margins do not move singular-wall spectra") {
  const auto scp = susy::partner_potentials({0.0, 2.0, 1.0}, kC1).v_minus;
  const auto ptp = susy::partner_potentials({2.0, -2.0, 1.0}, kC1).v_minus;
  for (const auto& v : {scp, ptp}) {
    const auto ref = extrapolated_spectrum(v, grid_for(v, 4096), kC1, 5).values;
    for (double margin : {1e-4, 1e-3}) {
      const auto e = extrapolated_spectrum(v, grid_for(v, 4096, margin), kC1, 5).values;
      for (int n = 0; n < 5; ++n)
        REQUIRE(std::abs(e[n] - ref[n]) <= 1e-6 * std::max(1.0, std::abs(ref[n])));
    }
  }
}

TEST_CASE("inner_product: examples") {
  const Grid g{0.0, M_PI, 4096, 0.0};
  std::vector<double> one(4096, 1.0), s(4096), s2(4096);
  for (int j = 0; j < 4096; ++j) {
    s[j] = std::sin(g.node(j));
    s2[j] = s[j] * s[j];
  }
  REQUIRE(inner_product(one, one, std::nullopt, g) == Approx(M_PI).epsilon(1e-14));
  REQUIRE(inner_product(s, s2, std::nullopt, g) == Approx(4.0 / 3.0).epsilon(1e-6));
  REQUIRE(inner_product(s, one, std::span<const double>(s), g) == Approx(M_PI / 2).epsilon(1e-6));
  std::vector<double> short_vec(10, 1.0);
  try {
    inner_product(one, short_vec, std::nullopt, g);
    FAIL("expected LengthMismatch");
  } catch (const Error& e) {
    REQUIRE(e.code() == ErrorCode::LengthMismatch);
  }
}

TEST_CASE("count_nodes: examples") {
  REQUIRE(count_nodes(std::vector<double>{1.0, 2.0, 0.5}) == 0);
  const Grid g{0.0, M_PI, 400, 0.0};
  std::vector<double> f(400);
  for (int j = 0; j < 400; ++j) f[j] = std::sin(2.0 * g.node(j));
  REQUIRE(count_nodes(f) == 1);
  REQUIRE(count_nodes(std::vector<double>{1.0, 1e-12, -1e-13, 1.0}) == 0);
}

TEST_CASE("ode_residual: exact pairs and a wrong energy") {
  susy::TrigPotential flat;
  flat.domain = {0.0, M_PI};
  const Grid g{0.0, M_PI, 4096, 0.0};
  const auto sine = [](double t) { return std::sin(t); };
  REQUIRE(ode_residual(sine, 1.0, flat, g, kC1) < 1e-6);

  const auto v = stp_minus();
  const auto gv = grid_for(v, 4096);
  const auto cos2 = [](double t) { return std::cos(t) * std::cos(t); };
  REQUIRE(ode_residual(cos2, 0.0, v, gv, kC1) < 1e-6);
  REQUIRE(ode_residual(cos2, 1.0, v, gv, kC1) == Approx(1.0).epsilon(1e-3));
}
