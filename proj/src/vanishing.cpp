#include "conecert/vanishing.hpp"

#include <algorithm>
#include <cmath>

namespace conecert {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Rhs {
  int k;
  const JacobianBound* bound;

  double radicand(double theta, double u) const {
    const double c = std::cos(theta);
    const double p = std::pow(c, k - 1) * bound->J(std::tan(theta));
    return p * p - u * u;
  }
  double operator()(double theta, double u) const {
    const double r = radicand(theta, u);
    return r > 0.0 ? -k * std::sqrt(r) : 0.0;
  }
};

// Cash-Karp embedded Runge-Kutta 4(5) for the scalar equation u' = f(theta,u).
struct StepResult {
  double u4 = 0.0;
  double u5 = 0.0;
  double err = 0.0;
};

StepResult cash_karp(const Rhs& f, double th, double u, double h) {
  const double k1 = f(th, u);
  const double k2 = f(th + h / 5.0, u + h * (k1 / 5.0));
  const double k3 = f(th + 3.0 * h / 10.0, u + h * (3.0 * k1 / 40.0 + 9.0 * k2 / 40.0));
  const double k4 = f(th + 3.0 * h / 5.0, u + h * (3.0 * k1 / 10.0 - 9.0 * k2 / 10.0 + 6.0 * k3 / 5.0));
  const double k5 = f(th + h, u + h * (-11.0 * k1 / 54.0 + 5.0 * k2 / 2.0 - 70.0 * k3 / 27.0 +
                                       35.0 * k4 / 27.0));
  const double k6 = f(th + 7.0 * h / 8.0,
                      u + h * (1631.0 * k1 / 55296.0 + 175.0 * k2 / 512.0 + 575.0 * k3 / 13824.0 +
                               44275.0 * k4 / 110592.0 + 253.0 * k5 / 4096.0));
  StepResult r;
  r.u5 = u + h * (37.0 * k1 / 378.0 + 250.0 * k3 / 621.0 + 125.0 * k4 / 594.0 +
                  512.0 * k6 / 1771.0);
  r.u4 = u + h * (2825.0 * k1 / 27648.0 + 18575.0 * k3 / 48384.0 + 13525.0 * k4 / 55296.0 +
                  277.0 * k5 / 14336.0 + k6 / 4.0);
  r.err = std::abs(r.u5 - r.u4);
  return r;
}

// Cubic Hermite value of u inside an accepted step.
double hermite(double s, double u0, double f0, double u1, double f1, double h) {
  const double s2 = s * s, s3 = s2 * s;
  return (2 * s3 - 3 * s2 + 1) * u0 + (s3 - 2 * s2 + s) * h * f0 + (-2 * s3 + 3 * s2) * u1 +
         (s3 - s2) * h * f1;
}

}  // namespace

VanishingAngleResult integrate_vanishing(int k, const JacobianBound& bound,
                                         const IntegratorOptions& opts) {
  if (k < 3) throw std::invalid_argument("integrate_vanishing: need k >= 3");

  VanishingAngleResult res;
  const double a2 = bound.curvature * bound.curvature;
  const double disc = double(k) * k - 4.0 * (k - 1 + a2);
  if (disc < 0.0) {
    res.status = VanishingAngleResult::Status::NoVanishingAngle;
    res.theta = 0.0;
    res.reason = "start";
    return res;
  }
  const double A = (k + std::sqrt(disc)) / 4.0;

  const double thetaCap =
      std::min(std::atan(bound.tanCap), kPi / 2.0 - 1e-6);

  Rhs f{k, &bound};
  double th = opts.thetaStart;
  double u = std::pow(1.0 + A * th * th, -double(k));
  double h = opts.thetaStart / 4.0;
  if (opts.keepTrace) res.trace.emplace_back(th, u);

  const double minStep = 1e-13;

  while (true) {
    if (u <= opts.uTol) {
      res.status = VanishingAngleResult::Status::Vanishes;
      res.theta = th;
      return res;
    }
    if (th >= thetaCap - 1e-15) {
      res.status = VanishingAngleResult::Status::NoVanishingAngle;
      res.theta = th;
      res.reason = bound.tanCap < std::tan(kPi / 2.0 - 1e-6) ? "cap" : "halfpi";
      return res;
    }

    h = std::min({h, opts.maxStep, thetaCap - th});
    StepResult st = cash_karp(f, th, u, h);
    if (st.err > opts.absTol && h > minStep) {
      const double scale = 0.9 * std::pow(opts.absTol / std::max(st.err, 1e-300), 0.25);
      h *= std::clamp(scale, 0.1, 0.9);
      continue;
    }

    const double f0 = f(th, u);
    const double u1 = st.u5;
    const double f1 = f(th + h, u1);

    // Event: u reaches the blow-up tolerance inside this step.
    if (u1 <= opts.uTol) {
      double lo = 0.0, hi = 1.0;
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        (hermite(mid, u, f0, u1, f1, h) <= opts.uTol ? hi : lo) = mid;
      }
      res.status = VanishingAngleResult::Status::Vanishes;
      res.theta = th + hi * h;
      if (opts.keepTrace) res.trace.emplace_back(res.theta, opts.uTol);
      return res;
    }

    // Event: radicand dies while u is still positive (past the start-up zone).
    if (f.radicand(th + h, u1) <= 0.0 && th + h > 3.0 * opts.thetaStart) {
      double lo = 0.0, hi = 1.0;
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double um = hermite(mid, u, f0, u1, f1, h);
        (f.radicand(th + mid * h, um) <= 0.0 ? hi : lo) = mid;
      }
      const double thetaEvent = th + hi * h;
      const double uEvent = hermite(hi, u, f0, u1, f1, h);
      res.theta = thetaEvent;
      if (uEvent <= opts.uTol) {
        res.status = VanishingAngleResult::Status::Vanishes;
      } else {
        res.status = VanishingAngleResult::Status::NoVanishingAngle;
        res.reason = "radicand";
      }
      if (opts.keepTrace) res.trace.emplace_back(thetaEvent, uEvent);
      return res;
    }

    th += h;
    u = u1;
    if (opts.keepTrace) res.trace.emplace_back(th, u);
    if (st.err > 0.0) {
      const double scale = 0.9 * std::pow(opts.absTol / st.err, 0.2);
      h *= std::clamp(scale, 0.2, 5.0);
    } else {
      h *= 5.0;
    }
  }
}

VanishingAngleResult theta1_estimate(int k, double alpha, const IntegratorOptions& opts) {
  return integrate_vanishing(k, generic_bound(alpha, k), opts);
}

VanishingAngleResult theta2_estimate(int k, double alpha, const IntegratorOptions& opts) {
  return integrate_vanishing(k, limit_bound(alpha), opts);
}

ScaledBound theta2_scaled_bound(int k, double alpha, const IntegratorOptions& opts) {
  if (k < 13) throw std::invalid_argument("theta2_scaled_bound: need k >= 13");
  ScaledBound sb;
  if (alpha == 0.0) {
    sb.underTwoOverK = true;
    return sb;
  }
  const double scaledAlpha = 12.0 * alpha / k;
  const VanishingAngleResult inner = theta2_estimate(12, scaledAlpha, opts);
  if (!inner.vanishes()) {
    // No finite estimate available; report the cap-scaled value as a bound.
    sb.theta12 = inner.theta;
    sb.tanBound = (12.0 / k) * std::tan(inner.theta);
    sb.underTwoOverK = false;
    return sb;
  }
  sb.theta12 = inner.theta;
  sb.tanBound = (12.0 / k) * std::tan(inner.theta);
  sb.underTwoOverK = sb.tanBound < 2.0 / k;
  return sb;
}

Verdict criterion(const VanishingAngleResult& vanishing, double normalRadius, double margin) {
  if (!vanishing.vanishes()) return Verdict::INCONCLUSIVE;
  return 2.0 * vanishing.theta < normalRadius - margin ? Verdict::MINIMIZING
                                                       : Verdict::INCONCLUSIVE;
}

Verdict criterion_tan_bound(double tanBound, double normalRadius, double margin) {
  return 2.0 * std::atan(tanBound) < normalRadius - margin ? Verdict::MINIMIZING
                                                           : Verdict::INCONCLUSIVE;
}

}  // namespace conecert
