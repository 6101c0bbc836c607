#pragma once

// Jacobi polynomials of the second kind G_n(p, q, z) on [0, 1].
//
// Conventions (Abramowitz & Stegun 22.2.2 / 22.5.2):
//   weight  w(z) = z^(q-1) (1-z)^(p-q),   0 < z < 1,
//   G_n is monic in z, and
//   G_n(p, q, z) = n! Gamma(n+p) / Gamma(2n+p) * P_n^(p-q, q-1)(2z - 1),
// where P_n^(a,b) is the classical Jacobi polynomial on [-1, 1] with weight
// (1-x)^a (1+x)^b. Integrability of w needs p - q > -1 and q - 1 > -1.

namespace susynu::orthopoly {

struct ShiftedJacobiParams {
  double p = 1.0;
  double q = 1.0;

  /// Exponent of (1 - z) in the weight; classical Jacobi alpha.
  double right_exponent() const { return p - q; }
  /// Exponent of z in the weight; classical Jacobi beta.
  double left_exponent() const { return q - 1.0; }

  /// Parameters whose weight is z^left (1-z)^right.
  static ShiftedJacobiParams from_exponents(double left, double right) {
    return {left + right + 1.0, left + 1.0};
  }
};

/// Coefficients of one step P_m = (a x + b) P_{m-1} - c P_{m-2} of the
/// classical Jacobi recurrence with exponents (alpha, beta). Valid for m >= 1
/// (c = 0 at m = 1).
struct RecurrenceStep {
  double a;
  double b;
  double c;
};
RecurrenceStep jacobi_recurrence(int m, double alpha, double beta);

/// Classical P_n^(alpha,beta)(x) by forward recurrence.
double jacobi_p(int n, double alpha, double beta, double x);

/// Leading coefficient of P_n^(alpha,beta)(2z - 1) as a polynomial in z.
double shifted_leading_coefficient(int n, double alpha, double beta);

/// G_n(p, q, z); throws NonIntegrableWeight when the weight is not
/// integrable and InvalidArgument for z outside [0, 1].
double jacobi_g(int n, const ShiftedJacobiParams& params, double z);

/// z^(q-1) (1-z)^(p-q).
double jacobi_g_weight(const ShiftedJacobiParams& params, double z);

/// x! read as Gamma(x + 1). Throws CoefficientUndefined at poles.
double real_factorial(double x);

/// Published squared-tangent normalization coefficient, defined for
/// n_bar >= 2:
///   C = [(n-1)! (n-2+d/2)! / (2n-2+d/2)!] * sqrt(n (n-1+d/2) / (2n-1+d/2))
/// with n = n_bar, d = delta1, factorials via the gamma function.
double stp_coefficient(int n_bar, double delta1);

/// Published Pöschl-Teller normalization coefficient:
///   C = (n+mu)! / [(2n+2mu-1)+1]! * sqrt(n! (n+2mu)! / (2n+2mu+1)).
double ptp_coefficient(int n, double mu);

}  // namespace susynu::orthopoly
