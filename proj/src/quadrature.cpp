#include "susynu/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace susynu {

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 20, tol);
}

double integrate_endpoint_singular(const std::function<double(double)>& f, double a, double b,
                                   double tol) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  return integrator.integrate([&f](double x) { return f(x); }, a, b, tol);
}

}  // namespace susynu
