#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "conecert/factor.hpp"
#include "conecert/minimize.hpp"
#include "conecert/product.hpp"
#include "conecert/vanishing.hpp"

namespace conecert::dim7 {

using Vector6d = Eigen::Matrix<double, 6, 1>;

/// One of the twelve certified 7-dimensional cones: the product, a reduced
/// parameterization of the unit normal sphere (slack variables absorb the
/// norm constraint), the shape eigenvalues as a function of the reduced
/// parameters, and the claimed minimum polynomial with its slope interval.
struct CriticalCase {
  std::string name;
  std::vector<FactorSpec> factors;
  int paramDim = 0;
  Eigen::VectorXd lo, hi;
  std::function<bool(const Eigen::VectorXd&)> feasible;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> clamp;
  std::function<Vector6d(const Eigen::VectorXd&)> eigs;  // t-independent shape spectrum
  char claimedMin = 'E';
  double claimLo = 0.0, claimHi = 0.0;  // slope interval of the closed-form claim
  std::string note;
};

const std::vector<CriticalCase>& case_catalog();

/// Index into the catalog for a reduced factor multiset, if certified.
std::optional<int> match_catalog(const std::vector<FactorSpec>& reducedFactors);

double closed_form(char which, double t);

/// det(I - t H^v) at reduced parameters p.
double case_jacobian(const CriticalCase& c, const Eigen::VectorXd& p, double t);

struct MinimizeOptions {
  int gridPerDim = 64;
  int starts = 32;
  NelderMeadOptions nm;
};

struct MinimizationReport {
  double t = 0.0;
  double numericMin = 0.0;
  Eigen::VectorXd argmin;
  double closedForm = 0.0;
  double gap = 0.0;          // numericMin - closedForm
  bool withinClaim = false;  // t inside the claimed interval
};

/// Global minimum of the Jacobian over the reduced constraint set by dense
/// grid seeding plus multistart simplex descent. Valid for 0 < t < 1/sqrt(5).
MinimizationReport minimize_jacobian(const CriticalCase& c, double t,
                                     const MinimizeOptions& opts = {});

/// Random full-normal-space minimum: samples of the exact product shape
/// operator (assembled per factor from the explicit embeddings) with no
/// reduction applied. Spot-checks that the reduced domains lose nothing.
double full_normal_min(const CriticalCase& c, double t, int samples, std::uint64_t seed);

/// Chebyshev-style slope grid inside the claimed interval, shifted away from
/// the endpoints where the minimizers merge.
std::vector<double> claim_grid(const CriticalCase& c, int points = 32);

struct ClaimValidation {
  bool pass = true;
  double maxAbsGap = 0.0;       // max |numericMin - closedForm| over the grid
  double worstSpectrumSpread = 0.0;  // two-value clustering residual at argmin
  int points = 0;
};

/// Validates the closed-form claim on a slope grid: the numeric minimum must
/// match the claimed polynomial to `tol` and the argmin spectrum must take at
/// most two distinct values.
ClaimValidation validate_claim(const CriticalCase& c, int points = 32, double tol = 1e-6,
                               const MinimizeOptions& opts = {});

struct ThresholdReport {
  // Triple-product boundary derivative sign pattern (+,-) vs (+,-,+).
  int signChangesBelow = 0;
  int signChangesAbove = 0;
  // Projective-line x quartic case: minimum of the ellipse derivative factor.
  double hppRoot = 0.0;     // root of h'' (t-independent)
  double hpAtThreshold = 0.0;  // min h' at the threshold slope
  bool hpPositiveOnClaim = true;
  // Two-quartic case: h' < 0 throughout.
  double case4MaxHp = 0.0;
  // Interior gradient floors on the margin-shrunken domains.
  double interiorGradFloor2 = 0.0;
  double interiorGradFloor3 = 0.0;
  double interiorGradFloor5 = 0.0;
};

ThresholdReport boundary_threshold_check();

struct Dim7Validation {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Dim7Certification {
  VanishingAngleResult angle;
  double normalRadius = 0.0;
  Verdict verdict = Verdict::INCONCLUSIVE;
  std::vector<Dim7Validation> validations;
};

struct CertifyDim7Options {
  int claimPoints = 32;
  double claimTol = 1e-6;
  int samplerN = 20000;
  std::uint64_t seed = 20260810;
  MinimizeOptions minimize;
};

/// Validates the claimed minimum polynomial, integrates the profile ODE with
/// it, and applies the curvature criterion against the normal radius.
/// Throws if the closed-form validation fails: certification must not
/// proceed on an unverified claim.
Dim7Certification certify_case(const CriticalCase& c, const CertifyDim7Options& opts = {});

}  // namespace conecert::dim7
