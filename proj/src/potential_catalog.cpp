#include "susynu/potential_catalog.hpp"

#include <algorithm>
#include <cmath>

#include "susynu/error.hpp"
#include "susynu/quadrature.hpp"

namespace susynu::catalog {

namespace {

using cplx = std::complex<double>;

void require_alpha(double alpha) {
  if (alpha == 0.0 || !std::isfinite(alpha))
    throw Error(ErrorCode::InvalidArgument, "alpha must be finite and nonzero");
}

double delta_of(double bar) {
  const double r = 1.0 + 16.0 * bar;
  if (r < 0.0) throw Error(ErrorCode::FormulaDomain, "1 + 16 A_bar < 0", r);
  return 1.0 + std::sqrt(r);
}

double sign_of(Partner s) { return s == Partner::Plus ? 1.0 : -1.0; }

// Printed bar parameter m(A^2 + s alpha A)/(2 hbar^2 alpha^2).
double printed_bar(double A, double alpha, const Units& u, double s) {
  return u.mass * (A * A + s * alpha * A) / (2.0 * u.hbar * u.hbar * alpha * alpha);
}

double rederived_bar(double A, double alpha, const Units& u, double s) {
  return (A * A + s * u.factor() * alpha * A) / (4.0 * u.kappa() * alpha * alpha);
}

ClosedFormTerms squared_terms(double A, double alpha, const Units& u, double bar_sign,
                              double gamma_sign, GammaConvention conv) {
  ClosedFormTerms t;
  t.prefactor = u.kappa() * alpha * alpha;
  if (conv == GammaConvention::Printed) {
    t.delta = delta_of(printed_bar(A, alpha, u, bar_sign));
    t.gamma_term = gamma_sign * alpha * A;
  } else {
    t.delta = delta_of(rederived_bar(A, alpha, u, bar_sign));
    t.gamma_term = -gamma_sign * u.factor() * alpha * A;
  }
  return t;
}

double z_of(Family f, double x) {
  const double s = (f == Family::Scp) ? std::cos(x) : std::sin(x);
  return std::clamp(s * s, 0.0, 1.0);
}

}  // namespace

const char* to_string(Family f) {
  switch (f) {
    case Family::Stp: return "stp";
    case Family::Scp: return "scp";
    case Family::Ptp: return "ptp";
  }
  return "unknown";
}

StpParams StpParams::make(double A, double alpha, Units units, bool allow_nonphysical) {
  require_alpha(alpha);
  if (!allow_nonphysical && !(A > 0.0))
    throw Error(ErrorCode::InvalidArgument, "squared-tangent strength A must be positive", A);
  return {A, alpha, units, std::nullopt};
}

StpParams StpParams::from_nu(double nu, double alpha, Units units, bool allow_nonphysical) {
  require_alpha(alpha);
  if (!allow_nonphysical && !(nu >= 1.0))
    throw Error(ErrorCode::InvalidArgument, "nu must be at least 1", nu);
  StpParams p = make(units.factor() * alpha * nu, alpha, units, true);
  p.nu = nu;
  return p;
}

ScpParams ScpParams::make(double A, double alpha, Units units) {
  require_alpha(alpha);
  return {A, alpha, units};
}

PtpParams PtpParams::make(double a, double b, double alpha, Units units) {
  require_alpha(alpha);
  return {a, b, alpha, units, std::nullopt};
}

PtpParams PtpParams::from_flugge(double v0, double chi, double lambda, double alpha,
                                 Units units) {
  require_alpha(alpha);
  const double A = v0 * chi * (chi - 1.0) / 2.0;
  const double B = v0 * lambda * (lambda - 1.0) / 2.0;
  const double ca = units.factor() * std::abs(alpha);
  const double ra = ca * ca + 4.0 * A, rb = ca * ca + 4.0 * B;
  if (ra < 0.0 || rb < 0.0)
    throw Error(ErrorCode::InvalidArgument, "strengths below -(c alpha)^2/4 have no real a, b");
  // a^2 + c alpha a = A and b^2 - c alpha b = B with the decaying roots.
  const double s = alpha > 0.0 ? 1.0 : -1.0;
  PtpParams p = make(s * (-ca - std::sqrt(ra)) / 2.0, s * (ca + std::sqrt(rb)) / 2.0, alpha, units);
  p.flugge = FluggeRecord{v0, chi, lambda, A, B};
  return p;
}

double ClosedFormTerms::energy(int n) const {
  const double nd = n;
  return gamma_term + prefactor * (4.0 * nd * nd + (4.0 * nd + 1.0) * delta / 2.0);
}

ClosedFormTerms stp_terms(const StpParams& p, Partner sign, GammaConvention conv) {
  // Printed: E^(+-) = -+gamma, A_bar = m(A^2 +- alpha A)/2hbar^2alpha^2.
  const double s = sign_of(sign);
  return squared_terms(p.A, p.alpha, p.units, s, -s, conv);
}

ClosedFormTerms scp_terms(const ScpParams& p, Partner sign, GammaConvention conv) {
  // Printed: E^(+-) = +-gamma, A_tilde = m(A^2 -+ alpha A)/2hbar^2alpha^2.
  const double s = sign_of(sign);
  return squared_terms(p.A, p.alpha, p.units, -s, s, conv);
}

double stp_energy(const StpParams& p, int n, Partner sign, GammaConvention conv) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative quantum number");
  return stp_terms(p, sign, conv).energy(n);
}

double scp_energy(const ScpParams& p, int n, Partner sign, GammaConvention conv) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative quantum number");
  return scp_terms(p, sign, conv).energy(n);
}

double ptp_energy_from_nu(int n, double nu1, double nu2, double shift, double alpha,
                          const Units& units) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative quantum number");
  if (nu1 < 0.0 || nu2 < 0.0)
    throw Error(ErrorCode::FormulaDomain, "nu1 and nu2 must be nonnegative", std::min(nu1, nu2));
  const double at = (nu1 - 1.0) / 4.0, bt = (nu2 - 1.0) / 4.0;
  const double m = 2.0 * n + 1.0;
  const double brace =
      m * (m + std::sqrt(nu1) + std::sqrt(nu2)) + 0.5 * ((1.0 + std::sqrt(nu1 * nu2)) + 2.0 * (at + bt));
  return units.kappa() * alpha * alpha * brace + shift;
}

double ptp_energy(const PtpParams& p, int n, Partner sign) {
  const double s = sign_of(sign);
  const double a1 = p.a * p.a - s * p.alpha * p.a;
  const double b1 = p.b * p.b + s * p.alpha * p.b;
  const double scale = p.units.kappa() * p.alpha * p.alpha;
  const double nu1 = 1.0 + 4.0 * a1 / scale, nu2 = 1.0 + 4.0 * b1 / scale;
  return ptp_energy_from_nu(n, nu1, nu2, -(p.a - p.b) * (p.a - p.b), p.alpha, p.units);
}

FamilyPotential family_potential(const StpParams& p, Partner sign) {
  return {Family::Stp, susy::partner_potentials(p.superpotential(), p.units).get(sign), p.units};
}

FamilyPotential family_potential(const ScpParams& p, Partner sign) {
  return {Family::Scp, susy::partner_potentials(p.superpotential(), p.units).get(sign), p.units};
}

FamilyPotential family_potential(const PtpParams& p, Partner sign) {
  return {Family::Ptp, susy::partner_potentials(p.superpotential(), p.units).get(sign), p.units};
}

nu::NuProblem nu_problem_for(const FamilyPotential& fp, double energy) {
  const auto& v = fp.v;
  const double s = fp.units.kappa() * v.alpha * v.alpha;
  nu::NuProblem pr;
  if (fp.family == Family::Ptp) {
    const double e1 = (energy - v.constant) / s;
    const double at = v.csc2 / s, bt = v.sec2 / s;
    const double e2 = e1 + at - bt;
    pr.sigma = Poly{0.0, 2.0, -2.0};
    pr.tau_tilde = Poly{1.0, -2.0};
    pr.sigma_tilde = Poly{-at, e2, -e1};
    return pr;
  }
  // Squared tangent in z = sin^2, squared cotangent in z = cos^2: the same
  // equation with the active coefficient in the role of q.
  const double q = (fp.family == Family::Stp) ? v.sec2 : v.csc2;
  const double other = (fp.family == Family::Stp) ? v.csc2 : v.sec2;
  if (other != 0.0)
    throw Error(ErrorCode::InvalidArgument, "single-term family carries a second singular term");
  const double e_bar = (energy - v.constant - q) / (4.0 * s);
  const double a_bar = q / (4.0 * s);
  pr.sigma = Poly{0.0, 1.0, -1.0};
  pr.tau_tilde = Poly{0.5, -1.0};
  pr.sigma_tilde = Poly{0.0, e_bar, -(e_bar + a_bar)};
  return pr;
}

int nu_degree(Family f, int n) { return f == Family::Ptp ? n : n / 2; }

nu::BranchRule branch_rule(Family f, int n) {
  if (f == Family::Ptp) return {nu::Endpoint::Wall, nu::Endpoint::Wall, 0};
  return {nu::Endpoint::Regular, nu::Endpoint::Wall, n % 2};
}

nu::Bracket energy_bracket(const FamilyPotential& fp, int n) {
  const double s = fp.units.kappa() * fp.v.alpha * fp.v.alpha;
  const double P = std::sqrt(1.0 + 4.0 * std::abs(fp.v.csc2) / s);
  const double Q = std::sqrt(1.0 + 4.0 * std::abs(fp.v.sec2) / s);
  const double w = 4.0 * s * std::pow(2.0 * n + 4.0 + P + Q, 2) + 1.0;
  return {fp.v.constant - w, fp.v.constant + w};
}

double nu_energy(const FamilyPotential& fp, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative quantum number");
  const nu::Family family = [fp](double e) { return nu_problem_for(fp, e); };
  return nu::quantize(family, nu_degree(fp.family, n), energy_bracket(fp, n),
                      branch_rule(fp.family, n));
}

SpectrumResult nu_spectrum(const FamilyPotential& fp, int n_max) {
  SpectrumResult r;
  r.provenance = Provenance::NuQuantization;
  r.units = fp.units;
  for (int n = 0; n <= n_max; ++n) r.levels.push_back({n, nu_energy(fp, n)});
  return r;
}

double Wavefunction::unnormalized(double theta) const {
  const double x = alpha * theta;
  const double z = z_of(family, x);
  double val = std::pow(z, z_exponent) * std::pow(1.0 - z, one_minus_z_exponent) *
               orthopoly::jacobi_g(degree, g, z);
  if (parity == 1) {
    const double f = (family == Family::Scp) ? std::cos(x) : std::sin(x);
    if (f < 0.0) val = -val;
  }
  return val;
}

double Wavefunction::operator()(double theta) const { return norm * unnormalized(theta); }

Wavefunction nu_wavefunction(const FamilyPotential& fp, int n) {
  Wavefunction w;
  w.family = fp.family;
  w.alpha = fp.v.alpha;
  w.domain = fp.v.domain;
  w.energy = nu_energy(fp, n);
  w.degree = nu_degree(fp.family, n);
  w.parity = branch_rule(fp.family, n).parity;
  const auto problem = nu_problem_for(fp, w.energy);
  const auto branch = nu::select_branch(problem, branch_rule(fp.family, n));
  const auto phi = nu::phi_factor(branch, problem);
  const auto rho = nu::weight_function(branch, problem);
  if (rho.a_exp <= -1.0 || rho.b_exp <= -1.0)
    throw Error(ErrorCode::NonNormalizable, "weight exponents must exceed -1");
  // Admissible phi exponents are nonnegative. Rounding noise around 0 has to
  // go: pow(0, 1e-15) is 0, not 1.
  auto clean = [](double e) { return e < 1e-9 ? 0.0 : e; };
  w.z_exponent = clean(phi.a_exp);
  w.one_minus_z_exponent = clean(phi.b_exp);
  w.g = orthopoly::ShiftedJacobiParams::from_exponents(rho.a_exp, rho.b_exp);

  if (!w.domain.bounded()) throw Error(ErrorCode::NonNormalizable, "unbounded domain");
  const double n2 = integrate_endpoint_singular(
      [&w](double t) {
        const double v = w.unnormalized(t);
        return v * v;
      },
      w.domain.lo, w.domain.hi);
  if (!(n2 > 0.0) || !std::isfinite(n2))
    throw Error(ErrorCode::NonNormalizable, "wavefunction norm is not finite", n2);
  const double len = w.domain.length();
  const double probe = w.domain.lo + 1e-6 * len;
  const double f = (w.family == Family::Scp) ? std::cos(w.alpha * probe) : std::sin(w.alpha * probe);
  const double z_left = z_of(w.family, w.alpha * (w.domain.lo + 1e-9 * len));
  double sign = orthopoly::jacobi_g(w.degree, w.g, z_left) < 0.0 ? -1.0 : 1.0;
  if (w.parity == 1 && f < 0.0) sign = -sign;
  w.norm = sign / std::sqrt(n2);
  return w;
}

Wavefunction stp_wavefunction(const StpParams& p, int n, Partner sign) {
  return nu_wavefunction(family_potential(p, sign), n);
}

Wavefunction scp_wavefunction(const ScpParams& p, int n, Partner sign) {
  return nu_wavefunction(family_potential(p, sign), n);
}

Wavefunction ptp_wavefunction(const PtpParams& p, int n, Partner sign) {
  return nu_wavefunction(family_potential(p, sign), n);
}

bool PtForm::is_zero() const {
  return csch2 == cplx{} && sech2 == cplx{} && tanh2 == cplx{} && coth2 == cplx{} &&
         constant == cplx{};
}

PtForm pt_transform(const susy::TrigPotential& v) {
  PtForm f;
  f.alpha = v.alpha;
  f.csch2 = -v.csc2;
  f.sech2 = v.sec2;
  f.constant = v.constant;
  return f;
}

PtPair pt_transform(const susy::PartnerPair& pair) {
  const auto& w = pair.source;
  const double a = w.cot_coeff, b = w.tan_coeff;
  const cplx ica{0.0, pair.units.factor() * w.alpha};
  const cplx c0 = -(a - b) * (a - b);
  auto build = [&](double s) {
    // V = (a^2 + s c(i alpha) a) cosec^2(i alpha theta)
    //   + (b^2 - s c(i alpha) b) sec^2(i alpha theta) + c0
    const cplx csc = a * a + s * ica * a;
    const cplx sec = b * b - s * ica * b;
    PtForm f;
    f.alpha = w.alpha;
    f.constant = c0;
    if (w.is_zero()) return PtForm{{}, {}, {}, {}, {}, w.alpha};
    if (a == 0.0) {
      // sech^2 = 1 - tanh^2
      f.tanh2 = -sec;
      f.constant += sec;
    } else if (b == 0.0) {
      // -csc cosech^2 = -csc (coth^2 - 1)
      f.coth2 = -csc;
      f.constant += csc;
    } else {
      f.csch2 = -csc;
      f.sech2 = sec;
    }
    return f;
  };
  return {build(1.0), build(-1.0)};
}

susy::TrigPotential pt_transform(const PtForm& form, susy::Interval domain) {
  auto re = [](cplx c) { return c.real() - c.imag(); };
  susy::TrigPotential v;
  v.alpha = form.alpha;
  v.domain = domain;
  // cosech^2(i x) = -cosec^2 x, sech^2(i x) = sec^2 x,
  // tanh^2(i x) = -tan^2 x = 1 - sec^2 x, coth^2(i x) = -cot^2 x = 1 - cosec^2 x.
  v.csc2 = -re(form.csch2) - re(form.coth2);
  v.sec2 = re(form.sech2) - re(form.tanh2);
  v.constant = re(form.constant) + re(form.tanh2) + re(form.coth2);
  return v;
}

}  // namespace susynu::catalog
