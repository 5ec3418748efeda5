#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace conecert {

/// det(I - tA) over m x m symmetric trace-zero A with Frobenius norm alpha is
/// minimized by a spectrum with exactly two distinct values; with r positive
/// eigenvalues the minimum is
///   L(alpha,t,m,r) = (1 - t a sqrt((m-r)/(mr)))^r (1 + t a sqrt(r/(m(m-r))))^(m-r).
template <typename Scalar>
Scalar det_floor_two_eigen(Scalar alpha, Scalar t, int m, int r) {
  if (r < 1 || r > m - 1) throw std::invalid_argument("det_floor_two_eigen: need 1 <= r <= m-1");
  using std::pow;
  using std::sqrt;
  const Scalar pos = alpha * sqrt(Scalar(m - r) / (Scalar(m) * Scalar(r)));
  const Scalar neg = alpha * sqrt(Scalar(r) / (Scalar(m) * Scalar(m - r)));
  return pow(Scalar(1) - t * pos, r) * pow(Scalar(1) + t * neg, m - r);
}

/// Minimum of L over r, attained at r = 1.
template <typename Scalar>
Scalar det_floor_generic(Scalar alpha, Scalar t, int m) {
  if (m < 2) throw std::invalid_argument("det_floor_generic: need m >= 2");
  return det_floor_two_eigen(alpha, t, m, 1);
}

// The three candidate minima at the critical curvature alpha^2 = 6, m = 6,
// indexed by the multiplicity of the positive eigenvalue.
template <typename Scalar>
Scalar poly_F(Scalar t) {
  using std::pow;
  const Scalar s5 = std::sqrt(Scalar(5));
  return (Scalar(1) - t * s5) * pow(Scalar(1) + t / s5, 5);
}

template <typename Scalar>
Scalar poly_E(Scalar t) {
  using std::pow;
  const Scalar s2 = std::sqrt(Scalar(2));
  return pow(Scalar(1) - t * s2, 2) * pow(Scalar(1) + t / s2, 4);
}

template <typename Scalar>
Scalar poly_G(Scalar t) {
  using std::pow;
  return pow(Scalar(1) - t, 3) * pow(Scalar(1) + t, 3);
}

/// A positive lower bound J(t) on inf_v det(I - t H^v), fed to the profile
/// ODE. J(0) = 1 and J(t) = 1 - (curvature^2/2) t^2 + O(t^3); tanCap is the
/// largest slope where J is known to be a valid floor.
struct JacobianBound {
  std::function<double(double)> J;
  double curvature = 0.0;
  double tanCap = 0.0;
  std::string label;
};

/// F(alpha, t, k-1) with validity alpha^2 t^2 <= (k-1)/(k-2).
JacobianBound generic_bound(double alpha, int k);

/// Large-k limit (1 - alpha t) e^(alpha t) with validity alpha^2 t^2 <= 1.
JacobianBound limit_bound(double alpha);

JacobianBound two_eigen_bound(double alpha, int m, int r);

/// Exact dimension-7 minimum polynomial ('E', 'F' or 'G'), valid on the
/// claimed slope interval [0, tanCap].
JacobianBound poly_bound(char which, double tanCap);

}  // namespace conecert
