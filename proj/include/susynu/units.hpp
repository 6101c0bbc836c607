#pragma once

#include <cmath>

namespace susynu {

/// Physical constants of the Schrödinger operator -(hbar^2/2m) d^2/dx^2 + V.
struct Units {
  double hbar = 1.0;
  double mass = 0.5;

  /// Kinetic prefactor hbar^2 / 2m.
  double kappa() const { return hbar * hbar / (2.0 * mass); }
  /// Factorization prefactor hbar / sqrt(2m).
  double factor() const { return hbar / std::sqrt(2.0 * mass); }

  /// hbar^2 = 2m = 1: partner formulas hold with unit prefactor.
  static Units hbar2_eq_2m() { return Units{1.0, 0.5}; }
  /// hbar = m = 1.
  static Units hbar_m_1() { return Units{1.0, 1.0}; }
};

}  // namespace susynu
