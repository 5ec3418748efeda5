#include "conecert/bounds.hpp"

namespace conecert {

JacobianBound generic_bound(double alpha, int k) {
  if (k < 3) throw std::invalid_argument("generic_bound: need k >= 3");
  JacobianBound b;
  b.J = [alpha, k](double t) { return det_floor_generic(alpha, t, k - 1); };
  b.curvature = alpha;
  b.tanCap = alpha > 0.0 ? std::sqrt(double(k - 1) / double(k - 2)) / alpha
                         : std::numeric_limits<double>::infinity();
  b.label = "F(" + std::to_string(alpha) + ",t," + std::to_string(k - 1) + ")";
  return b;
}

JacobianBound limit_bound(double alpha) {
  JacobianBound b;
  b.J = [alpha](double t) { return (1.0 - alpha * t) * std::exp(alpha * t); };
  b.curvature = alpha;
  b.tanCap = alpha > 0.0 ? 1.0 / alpha : std::numeric_limits<double>::infinity();
  b.label = "(1-at)e^at, a=" + std::to_string(alpha);
  return b;
}

JacobianBound two_eigen_bound(double alpha, int m, int r) {
  JacobianBound b;
  b.J = [alpha, m, r](double t) { return det_floor_two_eigen(alpha, t, m, r); };
  b.curvature = alpha;
  // First root of the r-fold factor.
  const double pos = alpha * std::sqrt(double(m - r) / (double(m) * r));
  b.tanCap = pos > 0.0 ? 1.0 / pos : std::numeric_limits<double>::infinity();
  b.label = "L(" + std::to_string(alpha) + ",t," + std::to_string(m) + "," + std::to_string(r) + ")";
  return b;
}

JacobianBound poly_bound(char which, double tanCap) {
  JacobianBound b;
  switch (which) {
    case 'E': b.J = [](double t) { return poly_E(t); }; break;
    case 'F': b.J = [](double t) { return poly_F(t); }; break;
    case 'G': b.J = [](double t) { return poly_G(t); }; break;
    default: throw std::invalid_argument("poly_bound: which must be E, F or G");
  }
  b.curvature = std::sqrt(6.0);
  b.tanCap = tanCap;
  b.label = std::string(1, which) + "(t)";
  return b;
}

}  // namespace conecert
