#pragma once

#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

namespace susynu {

/// Dense real polynomial, coefficients in ascending degree. Trailing exact
/// zeros are trimmed on construction, so the zero polynomial has no
/// coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<double> coeffs);
  explicit Poly(std::vector<double> coeffs);

  static Poly constant(double c) { return Poly({c}); }
  /// slope * z + intercept
  static Poly linear(double intercept, double slope) { return Poly({intercept, slope}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of z^i; zero beyond the stored degree.
  double operator[](int i) const;
  std::span<const double> coeffs() const { return coeffs_; }
  double leading() const { return coeffs_.empty() ? 0.0 : coeffs_.back(); }

  double operator()(double z) const;
  Poly derivative() const;
  /// Largest coefficient magnitude; zero for the zero polynomial.
  double max_abs_coeff() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(double s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= -1.0; }
  friend Poly operator*(Poly a, double s) { return a *= s; }
  friend Poly operator*(double s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b);

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();
  std::vector<double> coeffs_;
};

/// Coefficient-wise comparison: |a_i - b_i| <= rel_tol * max(1, max|a|, max|b|).
bool approx_equal(const Poly& a, const Poly& b, double rel_tol = 1e-12);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace susynu
