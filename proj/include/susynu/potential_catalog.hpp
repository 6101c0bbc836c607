#pragma once

// Squared-tangent (STP), squared-cotangent (SCP) and trigonometric
// Pöschl-Teller (PTP) families: published closed forms, reductions to
// hypergeometric form, wavefunctions, and the alpha -> i alpha transform.

#include <complex>
#include <optional>

#include "susynu/nu_core.hpp"
#include "susynu/orthopoly.hpp"
#include "susynu/spectrum.hpp"
#include "susynu/susy_core.hpp"

namespace susynu::catalog {

using susy::Partner;

enum class Family { Stp, Scp, Ptp };

const char* to_string(Family f);

/// W = A tan(alpha theta).
struct StpParams {
  double A = 1.0;
  double alpha = 1.0;
  Units units;
  /// Set when built from nu; V0 = nu(nu - 1) in units of (c alpha)^2.
  std::optional<double> nu;

  /// Requires A > 0 unless `allow_nonphysical`.
  static StpParams make(double A, double alpha, Units units, bool allow_nonphysical = false);
  /// A = c alpha nu, so A^2 - c alpha A = (c alpha)^2 nu (nu - 1). Requires nu >= 1.
  static StpParams from_nu(double nu, double alpha, Units units, bool allow_nonphysical = false);
  susy::Superpotential superpotential() const { return {A, 0.0, alpha}; }
};

/// W = A cot(alpha theta); domain (0, pi/alpha).
struct ScpParams {
  double A = 1.0;
  double alpha = 1.0;
  Units units;

  static ScpParams make(double A, double alpha, Units units);
  susy::Superpotential superpotential() const { return {0.0, A, alpha}; }
};

/// Pöschl-Teller strengths A = V0 chi(chi-1)/2 and B = V0 lambda(lambda-1)/2.
struct FluggeRecord {
  double v0;
  double chi;
  double lambda;
  double A;
  double B;
};

/// W = a cot(alpha theta) + b tan(alpha theta); domain (0, pi/2alpha).
struct PtpParams {
  double a = -1.0;
  double b = 1.0;
  double alpha = 1.0;
  Units units;
  std::optional<FluggeRecord> flugge;

  static PtpParams make(double a, double b, double alpha, Units units);
  /// Chooses a < 0 < b so that V- = A cosec^2 + B sec^2 - (a-b)^2 and the
  /// zero mode is normalizable. Requires A, B >= -(c alpha)^2 / 4.
  static PtpParams from_flugge(double v0, double chi, double lambda, double alpha, Units units);
  susy::Superpotential superpotential() const { return {b, a, alpha}; }
};

/// Which partner carries -gamma in the squared-tangent/cotangent closed forms.
///   Printed:   tangent E^(+-) = -+gamma, cotangent E^(+-) = +-gamma.
///   Rederived: the opposite assignment, with gamma = c alpha A and the bar
///              parameter taken from the partner's actual coefficient.
enum class GammaConvention { Printed, Rederived };

/// E = gamma_term + prefactor * [4n^2 + (4n+1) delta/2]
struct ClosedFormTerms {
  double gamma_term;
  double prefactor;
  double delta;

  double energy(int n) const;
};

ClosedFormTerms stp_terms(const StpParams& p, Partner sign,
                          GammaConvention conv = GammaConvention::Printed);
ClosedFormTerms scp_terms(const ScpParams& p, Partner sign,
                          GammaConvention conv = GammaConvention::Printed);

double stp_energy(const StpParams& p, int n, Partner sign,
                  GammaConvention conv = GammaConvention::Printed);
double scp_energy(const ScpParams& p, int n, Partner sign,
                  GammaConvention conv = GammaConvention::Printed);

/// Published Pöschl-Teller closed form with a~ = A1/(kappa alpha^2),
/// b~ = B1/(kappa alpha^2), A1 = a^2 -+ alpha a, B1 = b^2 +- alpha b.
double ptp_energy(const PtpParams& p, int n, Partner sign = Partner::Minus);

/// The same closed form written in nu1 = 1 + 4a~, nu2 = 1 + 4b~ with an
/// explicit constant shift in place of -(a-b)^2.
double ptp_energy_from_nu(int n, double nu1, double nu2, double shift, double alpha,
                          const Units& units);

/// One partner of a catalog superpotential, tagged with its family.
struct FamilyPotential {
  Family family;
  susy::TrigPotential v;
  Units units;
};

FamilyPotential family_potential(const StpParams& p, Partner sign);
FamilyPotential family_potential(const ScpParams& p, Partner sign);
FamilyPotential family_potential(const PtpParams& p, Partner sign);

/// z = sin^2 (STP, PTP) or cos^2 (SCP) reduction at energy E.
nu::NuProblem nu_problem_for(const FamilyPotential& fp, double energy);

/// Polynomial degree behind the n-th level. The squared map z = sin^2 or
/// cos^2 folds the even and odd levels of STP/SCP onto one z-interval, so
/// level n has degree n/2 in the parity sector n%2.
int nu_degree(Family f, int n);
nu::BranchRule branch_rule(Family f, int n);
nu::Bracket energy_bracket(const FamilyPotential& fp, int n);

double nu_energy(const FamilyPotential& fp, int n);
SpectrumResult nu_spectrum(const FamilyPotential& fp, int n_max);

/// Psi_n(theta) = norm * sign * sgn(f)^parity * z^s (1-z)^t G_deg(p, q, z),
/// f = sin or cos matching z, normalized to unit L2 norm in theta and
/// positive just inside the left end of the domain.
struct Wavefunction {
  Family family = Family::Stp;
  double alpha = 1.0;
  susy::Interval domain{0.0, 1.0};
  double energy = 0.0;
  int degree = 0;
  int parity = 0;
  double z_exponent = 0.0;
  double one_minus_z_exponent = 0.0;
  orthopoly::ShiftedJacobiParams g;
  double norm = 1.0;

  double operator()(double theta) const;
  /// The same function without the normalization constant.
  double unnormalized(double theta) const;
};

Wavefunction nu_wavefunction(const FamilyPotential& fp, int n);
Wavefunction stp_wavefunction(const StpParams& p, int n, Partner sign = Partner::Minus);
Wavefunction scp_wavefunction(const ScpParams& p, int n, Partner sign = Partner::Minus);
Wavefunction ptp_wavefunction(const PtpParams& p, int n, Partner sign = Partner::Minus);

/// V = csch2 cosech^2 + sech2 sech^2 + tanh2 tanh^2 + coth2 coth^2 + constant
/// (all of alpha theta).
struct PtForm {
  std::complex<double> csch2{};
  std::complex<double> sech2{};
  std::complex<double> tanh2{};
  std::complex<double> coth2{};
  std::complex<double> constant{};
  double alpha = 1.0;

  bool is_zero() const;
};

struct PtPair {
  PtForm minus;
  PtForm plus;
};

/// alpha -> i alpha on fixed coefficients: cosec^2 -> -cosech^2, sec^2 -> sech^2.
PtForm pt_transform(const susy::TrigPotential& v);

/// alpha -> i alpha on a partner pair, with the alpha inside c alpha W'
/// substituted too. Single-term pairs come out in tanh^2 or coth^2 form.
PtPair pt_transform(const susy::PartnerPair& pair);

/// The substitution applied once more to a form whose imaginary parts come
/// from alpha-linear terms (i alpha -> -alpha there): a real trigonometric
/// potential. Twice applied to a partner pair this negates alpha, which
/// exchanges V- and V+.
susy::TrigPotential pt_transform(const PtForm& form, susy::Interval domain);

}  // namespace susynu::catalog
