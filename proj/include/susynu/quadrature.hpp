#pragma once

#include <functional>

namespace susynu {

/// Adaptive Gauss-Kronrod (61 points) on a finite interval.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-13);

/// Tanh-sinh quadrature; tolerates integrable endpoint singularities.
double integrate_endpoint_singular(const std::function<double(double)>& f, double a, double b,
                                   double tol = 1e-13);

}  // namespace susynu
