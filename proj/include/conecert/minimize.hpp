#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

namespace conecert {

using Objective = std::function<double(const Eigen::VectorXd&)>;

struct NelderMeadOptions {
  int maxIter = 800;
  double paramTol = 1e-12;
  double valueTol = 1e-15;
  double initScale = 0.04;
};

struct LocalMinimum {
  Eigen::VectorXd x;
  double value = 0.0;
  int iterations = 0;
};

/// Derivative-free simplex descent from one start point.
LocalMinimum nelder_mead(const Objective& f, const Eigen::VectorXd& start,
                         const NelderMeadOptions& opts = {});

/// Deterministic dense grid over the box [lo, hi] (per-dim resolution),
/// filtered by `feasible`; returns the `count` best points as seeds.
std::vector<Eigen::VectorXd> grid_seeds(const Objective& f,
                                        const std::function<bool(const Eigen::VectorXd&)>& feasible,
                                        const Eigen::VectorXd& lo, const Eigen::VectorXd& hi,
                                        int perDim, int count);

/// Grid seeding plus multistart local descent; returns the best minimum.
LocalMinimum multistart_minimize(const Objective& f,
                                 const std::function<bool(const Eigen::VectorXd&)>& feasible,
                                 const Eigen::VectorXd& lo, const Eigen::VectorXd& hi, int perDim,
                                 int starts, const NelderMeadOptions& opts = {});

}  // namespace conecert
