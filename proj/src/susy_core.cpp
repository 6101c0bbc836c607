#include "susynu/susy_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "susynu/error.hpp"

namespace susynu::susy {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Zeros of sin (phase 0) or cos (phase 1/2) of alpha*theta inside [lo, hi],
// split into those at an end of the interval and those strictly inside.
struct ZeroScan {
  bool at_end = false;
  bool interior = false;
};

ZeroScan scan_zeros(double alpha, double phase, const Interval& d) {
  ZeroScan out;
  const double period = kPi / std::abs(alpha);
  const double eps = 1e-12 * std::max(1.0, d.length());
  const auto k_lo = static_cast<long long>(std::ceil((d.lo - eps) / period - phase));
  const auto k_hi = static_cast<long long>(std::floor((d.hi + eps) / period - phase));
  for (long long k = k_lo; k <= k_hi; ++k) {
    const double z = (static_cast<double>(k) + phase) * period;
    if (std::abs(z - d.lo) <= eps || std::abs(z - d.hi) <= eps)
      out.at_end = true;
    else
      out.interior = true;
  }
  return out;
}

bool term_normalizable(double exponent, double alpha, double phase, const Interval& d) {
  if (exponent == 0.0) return true;
  const auto scan = scan_zeros(alpha, phase, d);
  if (scan.interior && !(exponent > -0.5)) return false;
  // The potential diverges at an end zero, so the zero mode has to vanish.
  if (scan.at_end && !(exponent > 0.0)) return false;
  return true;
}

}  // namespace

bool Interval::bounded() const { return std::isfinite(lo) && std::isfinite(hi); }

double Superpotential::operator()(double theta) const {
  const double x = alpha * theta;
  double w = 0.0;
  if (cot_coeff != 0.0) w += cot_coeff / std::tan(x);
  if (tan_coeff != 0.0) w += tan_coeff * std::tan(x);
  return w;
}

double Superpotential::derivative(double theta) const {
  const double x = alpha * theta;
  const double s = std::sin(x), c = std::cos(x);
  double d = 0.0;
  if (cot_coeff != 0.0) d -= cot_coeff * alpha / (s * s);
  if (tan_coeff != 0.0) d += tan_coeff * alpha / (c * c);
  return d;
}

Interval Superpotential::natural_domain() const {
  if (alpha == 0.0 || is_zero()) return {-kInf, kInf};
  const double half = 0.5 * kPi / std::abs(alpha);
  if (cot_coeff != 0.0 && tan_coeff != 0.0) return {0.0, half};
  if (cot_coeff != 0.0) return {0.0, 2.0 * half};
  return {-half, half};
}

TrigPotential TrigPotential::from_squares(double cot2, double tan2, double constant, double alpha,
                                          Interval domain) {
  return {cot2, tan2, constant - cot2 - tan2, alpha, domain};
}

double TrigPotential::operator()(double theta) const {
  const double x = alpha * theta;
  double v = constant;
  if (csc2 != 0.0) {
    const double s = std::sin(x);
    v += csc2 / (s * s);
  }
  if (sec2 != 0.0) {
    const double c = std::cos(x);
    v += sec2 / (c * c);
  }
  return v;
}

PartnerPair partner_potentials(const Superpotential& w, const Units& units) {
  const double a = w.cot_coeff, b = w.tan_coeff;
  const double ca = units.factor() * w.alpha;
  const Interval d = w.natural_domain();
  const double c0 = -(a - b) * (a - b);
  TrigPotential minus{a * a + ca * a, b * b - ca * b, c0, w.alpha, d};
  TrigPotential plus{a * a - ca * a, b * b + ca * b, c0, w.alpha, d};
  return {minus, plus, w, units};
}

std::vector<double> probe_points(const Interval& domain) {
  constexpr int kCount = 257;
  double lo = -1.0, hi = 1.0;
  if (domain.bounded()) {
    lo = domain.lo + 0.01 * domain.length();
    hi = domain.hi - 0.01 * domain.length();
  }
  std::vector<double> pts(kCount);
  for (int i = 0; i < kCount; ++i) pts[i] = lo + (hi - lo) * i / (kCount - 1);
  return pts;
}

double partner_identity_residual(const PartnerPair& pair) {
  const double c = pair.units.factor();
  double worst = 0.0;
  for (double t : probe_points(pair.v_minus.domain)) {
    const double vp = pair.v_plus(t);
    const double lhs = vp - pair.v_minus(t);
    const double rhs = 2.0 * c * pair.source.derivative(t);
    worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(vp)));
  }
  return worst;
}

double GroundState::operator()(double theta) const {
  const double x = alpha * theta;
  double psi = 1.0;
  if (sin_exponent != 0.0) psi *= std::pow(std::abs(std::sin(x)), sin_exponent);
  if (cos_exponent != 0.0) psi *= std::pow(std::abs(std::cos(x)), cos_exponent);
  return psi;
}

GridFunction GroundState::sample(const Grid& grid) const {
  GridFunction f{grid, grid.nodes()};
  for (double& v : f.values) v = (*this)(v);
  return f;
}

GroundState ground_state(const Superpotential& w, const Units& units,
                         std::optional<Interval> domain) {
  GroundState g;
  g.domain = domain.value_or(w.natural_domain());
  g.alpha = w.alpha;
  if (!w.is_zero()) {
    if (w.alpha == 0.0) throw Error(ErrorCode::InvalidArgument, "alpha must be nonzero");
    const double ca = units.factor() * w.alpha;
    g.sin_exponent = -w.cot_coeff / ca;
    g.cos_exponent = w.tan_coeff / ca;
  }
  if (!g.domain.bounded()) {
    g.normalizable = false;
    return g;
  }
  g.normalizable = (w.alpha == 0.0) ||
                   (term_normalizable(g.sin_exponent, w.alpha, 0.0, g.domain) &&
                    term_normalizable(g.cos_exponent, w.alpha, 0.5, g.domain));
  return g;
}

std::optional<ShapeShift> shape_invariance_shift(const Superpotential& w, const Units& units) {
  if (w.is_zero()) return ShapeShift{w, 0.0};
  if (w.alpha == 0.0) return std::nullopt;
  const double ca = units.factor() * w.alpha;
  const double a = w.cot_coeff, b = w.tan_coeff;
  Superpotential shifted = w;
  double remainder = 0.0;
  if (a == 0.0) {
    shifted.tan_coeff = b + ca;
    remainder = (b + ca) * (b + ca) - b * b;
  } else if (b == 0.0) {
    shifted.cot_coeff = a - ca;
    remainder = (a - ca) * (a - ca) - a * a;
  } else {
    shifted.cot_coeff = a - ca;
    shifted.tan_coeff = b + ca;
    remainder = (a - b - 2.0 * ca) * (a - b - 2.0 * ca) - (a - b) * (a - b);
  }

  const auto here = partner_potentials(w, units);
  const auto there = partner_potentials(shifted, units);
  for (double t : probe_points(here.v_plus.domain)) {
    const double vp = here.v_plus(t);
    const double diff = vp - there.v_minus(t) - remainder;
    if (!(std::abs(diff) <= 1e-10 * std::max(1.0, std::abs(vp)))) return std::nullopt;
  }
  return ShapeShift{shifted, remainder};
}

SpectrumResult hierarchy_spectrum(const Superpotential& w, const Units& units, int n_max) {
  if (n_max < 0) throw Error(ErrorCode::InvalidArgument, "n_max must be nonnegative");
  if (!ground_state(w, units).normalizable)
    throw Error(ErrorCode::NoZeroMode, "zero mode of V- is not normalizable");
  SpectrumResult out;
  out.provenance = Provenance::ClosedForm;
  out.units = units;
  out.levels.push_back({0, 0.0});
  Superpotential cur = w;
  double e = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    const auto step = shape_invariance_shift(cur, units);
    if (!step) throw Error(ErrorCode::InvalidArgument, "family does not close under shape invariance");
    e += step->remainder;
    cur = step->shifted;
    out.levels.push_back({n, e});
  }
  return out;
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::FreeParticle: return "free-particle";
    case Regime::StepPotential: return "step-potential";
    case Regime::PotentialWell: return "potential-well";
    case Regime::Singular: return "singular";
    case Regime::Regular: return "regular";
  }
  return "unknown";
}

Classification classify(const PartnerPair& pair, Partner which, std::optional<double> theta) {
  const TrigPotential& v = pair.get(which);
  if (pair.source.alpha == 0.0) {
    if (pair.source.cot_coeff != 0.0) return {Regime::Singular, std::nullopt};
    return {Regime::FreeParticle, 0.0};
  }
  if (!theta) return {Regime::Regular, std::nullopt};

  const double x = v.alpha * *theta;
  const double s = std::sin(x), c = std::cos(x);
  constexpr double kTiny = 1e-12;
  if ((v.csc2 != 0.0 && std::abs(s) < kTiny) || (v.sec2 != 0.0 && std::abs(c) < kTiny))
    return {Regime::Singular, std::nullopt};

  // Squared terms in the tan^2 / cot^2 basis vanish where tan or cot does.
  const bool tan_gone = v.sec2 == 0.0 || std::abs(s) < kTiny;
  const bool cot_gone = v.csc2 == 0.0 || std::abs(c) < kTiny;
  if (!(tan_gone && cot_gone)) return {Regime::Regular, v(*theta)};
  const double value = v.squared_basis_constant();
  const double scale = std::max({1.0, std::abs(v.csc2), std::abs(v.sec2), std::abs(v.constant)});
  if (std::abs(value) <= 1e-12 * scale) return {Regime::FreeParticle, 0.0};
  return {value > 0.0 ? Regime::StepPotential : Regime::PotentialWell, value};
}

}  // namespace susynu::susy
