#pragma once

#include <utility>
#include <vector>

#include "conecert/bounds.hpp"

namespace conecert {

/// Outcome of integrating the profile ODE for one cone.
///
/// The ODE dr/dtheta = r sqrt(r^{2k} cos^{2k-2}(theta) J(tan theta)^2 - 1),
/// r(0) = 1, is integrated in the compactified variable u = r^{-k}:
///   du/dtheta = -k sqrt(cos^{2k-2}(theta) J(tan theta)^2 - u^2),  u(0) = 1.
/// Blow-up of r is the regular event u -> 0.
struct VanishingAngleResult {
  enum class Status { Vanishes, NoVanishingAngle };
  Status status = Status::NoVanishingAngle;
  double theta = 0.0;  // vanishing angle, or the largest theta reached
  std::string reason;  // NoVanishingAngle: "radicand" | "cap" | "halfpi" | "start"
  std::vector<std::pair<double, double>> trace;  // accepted (theta, u) samples

  bool vanishes() const { return status == Status::Vanishes; }
  double thetaDeg() const { return theta * 180.0 / 3.14159265358979323846; }
};

struct IntegratorOptions {
  double absTol = 1e-12;        // local error tolerance on u
  double maxStep = 1e-3;        // radians
  double uTol = 1e-9;           // u <= uTol counts as blow-up
  double thetaStart = 1e-4;     // start-up offset for the degenerate origin
  bool keepTrace = true;
};

/// Integrates the profile ODE for a cone of dimension k with Jacobian floor
/// `bound`. The start uses the two-term series r = 1 + A theta^2 where A is
/// the larger root of 4A^2 - 2kA + (k - 1 + curvature^2) = 0 (the branch that
/// blows up). A negative discriminant means no such start exists and the
/// result is NoVanishingAngle at theta = 0.
VanishingAngleResult integrate_vanishing(int k, const JacobianBound& bound,
                                         const IntegratorOptions& opts = {});

/// Conservative estimate with the generic floor F(alpha, t, k-1).
VanishingAngleResult theta1_estimate(int k, double alpha, const IntegratorOptions& opts = {});

/// Conservative estimate with the large-k limit floor (1 - alpha t)e^(alpha t).
VanishingAngleResult theta2_estimate(int k, double alpha, const IntegratorOptions& opts = {});

struct ScaledBound {
  double tanBound = 0.0;      // (12/k) tan(theta2(12, 12 alpha / k))
  double theta12 = 0.0;       // theta2(12, 12 alpha / k), radians
  bool underTwoOverK = false; // tanBound < 2/k
};

/// Dimension-scaling estimate for k >= 13: tan(theta2(k, alpha)) is bounded
/// by (12/k) tan(theta2(12, 12 alpha/k)). Zero curvature returns a zero
/// bound directly.
ScaledBound theta2_scaled_bound(int k, double alpha, const IntegratorOptions& opts = {});

enum class Verdict { MINIMIZING, INCONCLUSIVE };

inline const char* to_string(Verdict v) {
  return v == Verdict::MINIMIZING ? "MINIMIZING" : "INCONCLUSIVE";
}

/// One-sided curvature test: MINIMIZING iff the angle exists and twice the
/// vanishing angle clears the normal radius by the margin. Never "NO".
Verdict criterion(const VanishingAngleResult& vanishing, double normalRadius,
                  double margin = 1e-9);
Verdict criterion_tan_bound(double tanBound, double normalRadius, double margin = 1e-9);

}  // namespace conecert
