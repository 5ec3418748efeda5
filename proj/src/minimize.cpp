#include "conecert/minimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace conecert {

LocalMinimum nelder_mead(const Objective& f, const Eigen::VectorXd& start,
                         const NelderMeadOptions& opts) {
  const int n = static_cast<int>(start.size());
  std::vector<Eigen::VectorXd> pts(n + 1, start);
  std::vector<double> vals(n + 1);
  for (int i = 0; i < n; ++i) {
    const double step = opts.initScale * std::max(1.0, std::abs(start[i]));
    pts[i + 1][i] += step;
  }
  for (int i = 0; i <= n; ++i) vals[i] = f(pts[i]);

  std::vector<int> order(n + 1);
  int iter = 0;
  for (; iter < opts.maxIter; ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return vals[a] < vals[b]; });
    const int best = order[0], worst = order[n], second = order[n - 1];

    double diam = 0.0;
    for (int i = 1; i <= n; ++i) diam = std::max(diam, (pts[order[i]] - pts[best]).norm());
    if (diam < opts.paramTol && std::abs(vals[worst] - vals[best]) < opts.valueTol) break;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int i = 0; i <= n; ++i)
      if (i != worst) centroid += pts[i];
    centroid /= n;

    const Eigen::VectorXd refl = centroid + (centroid - pts[worst]);
    const double fr = f(refl);
    if (fr < vals[best]) {
      const Eigen::VectorXd expd = centroid + 2.0 * (centroid - pts[worst]);
      const double fe = f(expd);
      if (fe < fr) {
        pts[worst] = expd;
        vals[worst] = fe;
      } else {
        pts[worst] = refl;
        vals[worst] = fr;
      }
      continue;
    }
    if (fr < vals[second]) {
      pts[worst] = refl;
      vals[worst] = fr;
      continue;
    }
    const Eigen::VectorXd contr =
        centroid + 0.5 * ((fr < vals[worst] ? refl : pts[worst]) - centroid);
    const double fc = f(contr);
    if (fc < std::min(fr, vals[worst])) {
      pts[worst] = contr;
      vals[worst] = fc;
      continue;
    }
    for (int i = 0; i <= n; ++i) {
      if (i == best) continue;
      pts[i] = pts[best] + 0.5 * (pts[i] - pts[best]);
      vals[i] = f(pts[i]);
    }
  }

  LocalMinimum out;
  const auto it = std::min_element(vals.begin(), vals.end());
  out.value = *it;
  out.x = pts[static_cast<size_t>(it - vals.begin())];
  out.iterations = iter;
  return out;
}

std::vector<Eigen::VectorXd> grid_seeds(const Objective& f,
                                        const std::function<bool(const Eigen::VectorXd&)>& feasible,
                                        const Eigen::VectorXd& lo, const Eigen::VectorXd& hi,
                                        int perDim, int count) {
  const int n = static_cast<int>(lo.size());
  std::vector<std::pair<double, Eigen::VectorXd>> scored;
  Eigen::VectorXd p(n);
  std::vector<int> idx(n, 0);
  while (true) {
    for (int i = 0; i < n; ++i)
      p[i] = lo[i] + (hi[i] - lo[i]) * (perDim == 1 ? 0.5 : double(idx[i]) / (perDim - 1));
    if (feasible(p)) scored.emplace_back(f(p), p);
    int i = 0;
    for (; i < n; ++i) {
      if (++idx[i] < perDim) break;
      idx[i] = 0;
    }
    if (i == n) break;
  }
  std::sort(scored.begin(), scored.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Eigen::VectorXd> seeds;
  for (int i = 0; i < count && i < static_cast<int>(scored.size()); ++i)
    seeds.push_back(scored[i].second);
  return seeds;
}

LocalMinimum multistart_minimize(const Objective& f,
                                 const std::function<bool(const Eigen::VectorXd&)>& feasible,
                                 const Eigen::VectorXd& lo, const Eigen::VectorXd& hi, int perDim,
                                 int starts, const NelderMeadOptions& opts) {
  const auto seeds = grid_seeds(f, feasible, lo, hi, perDim, starts);
  LocalMinimum best;
  best.value = std::numeric_limits<double>::infinity();
  for (const auto& s : seeds) {
    const LocalMinimum m = nelder_mead(f, s, opts);
    if (m.value < best.value) best = m;
  }
  return best;
}

}  // namespace conecert
