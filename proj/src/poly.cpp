#include "susynu/poly.hpp"

#include <algorithm>
#include <cmath>

namespace susynu {

Poly::Poly(std::initializer_list<double> coeffs) : coeffs_(coeffs) { trim(); }

Poly::Poly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Poly::operator[](int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0.0;
  return coeffs_[static_cast<std::size_t>(i)];
}

double Poly::operator()(double z) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = static_cast<double>(i) * coeffs_[i];
  return Poly(std::move(d));
}

double Poly::max_abs_coeff() const {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<double> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(out));
}

bool approx_equal(const Poly& a, const Poly& b, double rel_tol) {
  const double scale = std::max({1.0, a.max_abs_coeff(), b.max_abs_coeff()});
  const int n = std::max(a.degree(), b.degree());
  for (int i = 0; i <= n; ++i)
    if (std::abs(a[i] - b[i]) > rel_tol * scale) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (int i = 0; i <= p.degree(); ++i) {
    if (p[i] == 0.0) continue;
    if (!first) os << " + ";
    os << p[i];
    if (i >= 1) os << "*z";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os;
}

}  // namespace susynu
