#include "susynu/orthopoly.hpp"

#include <cmath>
#include <string>

#include "susynu/error.hpp"

namespace susynu::orthopoly {

namespace {

void require_integrable(double alpha, double beta) {
  if (!(alpha > -1.0) || !(beta > -1.0))
    throw Error(ErrorCode::NonIntegrableWeight,
                "weight exponents (" + std::to_string(beta) + ", " + std::to_string(alpha) +
                    ") must exceed -1");
}

bool is_pole(double y) { return y <= 0.0 && y == std::floor(y); }

// log|Gamma(y)| and the sign of Gamma(y).
struct SignedLog {
  double log_abs;
  int sign;
};

SignedLog log_gamma(double y) {
  if (is_pole(y))
    throw Error(ErrorCode::CoefficientUndefined, "gamma pole at " + std::to_string(y), y);
  int sign = 1;
  if (y < 0.0 && static_cast<long long>(std::ceil(-y)) % 2 == 1) sign = -1;
  return {std::lgamma(y), sign};
}

}  // namespace

RecurrenceStep jacobi_recurrence(int m, double alpha, double beta) {
  if (m == 1) return {0.5 * (alpha + beta + 2.0), 0.5 * (alpha - beta), 0.0};
  const double md = m;
  const double s = 2.0 * md + alpha + beta;
  const double denom = 2.0 * md * (md + alpha + beta) * (s - 2.0);
  return {(s - 1.0) * s * (s - 2.0) / denom,
          (s - 1.0) * (alpha * alpha - beta * beta) / denom,
          2.0 * (md + alpha - 1.0) * (md + beta - 1.0) * s / denom};
}

double jacobi_p(int n, double alpha, double beta, double x) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  double prev = 0.0;
  double cur = 1.0;
  for (int m = 1; m <= n; ++m) {
    const auto step = jacobi_recurrence(m, alpha, beta);
    const double next = (step.a * x + step.b) * cur - step.c * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double shifted_leading_coefficient(int n, double alpha, double beta) {
  if (n == 0) return 1.0;
  // Gamma(2n+a+b+1) / (n! Gamma(n+a+b+1)); 2^n from x = 2z - 1 cancels 2^-n.
  const double ab = alpha + beta;
  return std::exp(std::lgamma(2.0 * n + ab + 1.0) - std::lgamma(n + 1.0) -
                  std::lgamma(n + ab + 1.0));
}

double jacobi_g(int n, const ShiftedJacobiParams& params, double z) {
  const double alpha = params.right_exponent();
  const double beta = params.left_exponent();
  require_integrable(alpha, beta);
  if (z < -1e-12 || z > 1.0 + 1e-12)
    throw Error(ErrorCode::InvalidArgument, "z outside [0, 1]", z);
  return jacobi_p(n, alpha, beta, 2.0 * z - 1.0) / shifted_leading_coefficient(n, alpha, beta);
}

double jacobi_g_weight(const ShiftedJacobiParams& params, double z) {
  return std::pow(z, params.left_exponent()) * std::pow(1.0 - z, params.right_exponent());
}

double real_factorial(double x) {
  const auto lg = log_gamma(x + 1.0);
  return lg.sign * std::exp(lg.log_abs);
}

double stp_coefficient(int n_bar, double delta1) {
  if (n_bar < 2)
    throw Error(ErrorCode::InvalidArgument, "coefficient is defined for n_bar >= 2", n_bar);
  const double n = n_bar;
  const double h = 0.5 * delta1;
  const auto num1 = log_gamma(n);              // (n-1)!
  const auto num2 = log_gamma(n - 1.0 + h);    // (n-2+h)!
  const auto den = log_gamma(2.0 * n - 1.0 + h);  // (2n-2+h)!
  const double ratio = num1.sign * num2.sign * den.sign *
                       std::exp(num1.log_abs + num2.log_abs - den.log_abs);
  const double radicand = n * (n - 1.0 + h) / (2.0 * n - 1.0 + h);
  if (!(radicand >= 0.0))
    throw Error(ErrorCode::CoefficientUndefined, "negative radicand", radicand);
  return ratio * std::sqrt(radicand);
}

double ptp_coefficient(int n, double mu) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  const double nd = n;
  const auto num = log_gamma(nd + mu + 1.0);                      // (n+mu)!
  const auto den = log_gamma((2.0 * nd + 2.0 * mu - 1.0) + 2.0);  // [(2n+2mu-1)+1]!
  const auto f1 = log_gamma(nd + 1.0);                            // n!
  const auto f2 = log_gamma(nd + 2.0 * mu + 1.0);                 // (n+2mu)!
  const double ratio = num.sign * den.sign * std::exp(num.log_abs - den.log_abs);
  const double inner_sign = f1.sign * f2.sign;
  const double divisor = 2.0 * nd + 2.0 * mu + 1.0;
  if (inner_sign < 0 || !(divisor > 0.0))
    throw Error(ErrorCode::CoefficientUndefined, "negative radicand");
  return ratio * std::exp(0.5 * (f1.log_abs + f2.log_abs - std::log(divisor)));
}

}  // namespace susynu::orthopoly
