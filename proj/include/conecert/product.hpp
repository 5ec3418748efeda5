#pragma once

#include <vector>

#include "conecert/factor.hpp"

namespace conecert {

/// Per-factor nearest-singular-point candidate for the normal radius.
/// The cosine is exact; the angle is its double-precision arccos.
struct RadiusCandidate {
  int factor = 0;
  Rational cosine;
  double angle = 0.0;
};

/// A composed minimal product: factors rescaled by lambda_i = sqrt(dim_i/dimM)
/// so the product immersion into the unit sphere stays minimal.
struct ProductProfile {
  std::vector<std::pair<FactorSpec, FactorProps>> factors;
  int dimM = 0;
  int dimC = 0;
  std::vector<Rational> lambdaSq;
  std::vector<double> lambdas;
  Rational alphaSq;  // dimM * max(1, ratio_1, ..., ratio_m)
  Rational normalRadiusCos;
  double normalRadius = 0.0;  // radians
  std::vector<RadiusCandidate> radiusCandidates;
};

/// Composes factors: dimensions, weights, curvature bound, normal radius.
/// Throws on an empty product or invalid factor specs.
ProductProfile compose(const std::vector<FactorSpec>& specs);

/// Minimum over the per-factor candidate angles; fills the candidate list on
/// the profile and returns the radius in radians. Candidate cosines:
///   Grassmann factor i:         1 - d_i k_i / dimM   (swap one projector pair)
///   oriented Grassmann factor:  1 - lambda_i^2        (orthogonal simple vector)
///   sphere factor:              1 - 2 lambda_i^2      (intra-factor antipode)
double normal_radius(ProductProfile& profile);

}  // namespace conecert
