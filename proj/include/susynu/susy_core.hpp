#pragma once

#include <optional>

#include "susynu/grid.hpp"
#include "susynu/spectrum.hpp"
#include "susynu/units.hpp"

namespace susynu::susy {

struct Interval {
  double lo;
  double hi;

  bool bounded() const;
  double length() const { return hi - lo; }
};

/// W(theta) = cot_coeff * cot(alpha theta) + tan_coeff * tan(alpha theta)
struct Superpotential {
  double tan_coeff = 0.0;
  double cot_coeff = 0.0;
  double alpha = 1.0;

  double operator()(double theta) const;
  double derivative(double theta) const;
  bool is_zero() const { return tan_coeff == 0.0 && cot_coeff == 0.0; }
  /// Largest interval free of singularities that starts at (or is centred
  /// on) the origin: (-pi/2a, pi/2a) for tan only, (0, pi/a) for cot only,
  /// (0, pi/2a) for both; unbounded when W vanishes or alpha = 0.
  Interval natural_domain() const;
};

/// V(theta) = csc2 * cosec^2(alpha theta) + sec2 * sec^2(alpha theta) + constant
struct TrigPotential {
  double csc2 = 0.0;
  double sec2 = 0.0;
  double constant = 0.0;
  double alpha = 1.0;
  Interval domain{0.0, 1.0};

  /// Builds from cot^2/tan^2 coefficients using cot^2 = csc^2 - 1 and
  /// tan^2 = sec^2 - 1.
  static TrigPotential from_squares(double cot2, double tan2, double constant, double alpha,
                                    Interval domain);

  double operator()(double theta) const;
  /// Coefficient of cot^2 and tan^2 when written in the squared basis.
  double cot2() const { return csc2; }
  double tan2() const { return sec2; }
  double squared_basis_constant() const { return constant + csc2 + sec2; }
};

enum class Partner { Minus, Plus };

struct PartnerPair {
  TrigPotential v_minus;
  TrigPotential v_plus;
  Superpotential source;
  Units units;

  const TrigPotential& get(Partner p) const { return p == Partner::Minus ? v_minus : v_plus; }
};

/// V-+ = W^2 -+ (hbar/sqrt(2m)) W' in the (cosec^2, sec^2, const) basis.
PartnerPair partner_potentials(const Superpotential& w, const Units& units);

/// max |V+ - V- - 2 c W'| / max(1, |V+|) over the probe grid.
double partner_identity_residual(const PartnerPair& pair);

/// 257 points spanning the domain with 1% trimmed from each end; [-1, 1]
/// for an unbounded domain.
std::vector<double> probe_points(const Interval& domain);

/// psi0 = |sin(alpha theta)|^sin_exponent * |cos(alpha theta)|^cos_exponent,
/// unnormalized, with the normalizability verdict on `domain`.
struct GroundState {
  double sin_exponent = 0.0;
  double cos_exponent = 0.0;
  Interval domain{0.0, 1.0};
  double alpha = 1.0;
  bool normalizable = false;

  double operator()(double theta) const;
  GridFunction sample(const Grid& grid) const;
};

/// Zero mode exp(-(sqrt(2m)/hbar) int W). `domain` defaults to W's natural
/// domain.
GroundState ground_state(const Superpotential& w, const Units& units,
                         std::optional<Interval> domain = std::nullopt);

struct ShapeShift {
  Superpotential shifted;
  double remainder;
};

/// Parameters w' and R with V+(w) = V-(w') + R, confirmed on the probe grid.
std::optional<ShapeShift> shape_invariance_shift(const Superpotential& w, const Units& units);

/// E_n of V- by telescoping shape-invariance remainders, n = 0..n_max.
SpectrumResult hierarchy_spectrum(const Superpotential& w, const Units& units, int n_max);

enum class Regime { FreeParticle, StepPotential, PotentialWell, Singular, Regular };

const char* to_string(Regime r);

struct Classification {
  Regime regime;
  std::optional<double> value;
};

/// Special-case reading of one partner. Without `theta` only the alpha = 0
/// limit is decided. At a point where every active squared term (tan^2 or
/// cot^2) vanishes, the potential is a constant: positive is a step,
/// negative a well, zero a free particle.
Classification classify(const PartnerPair& pair, Partner which,
                        std::optional<double> theta = std::nullopt);

}  // namespace susynu::susy
