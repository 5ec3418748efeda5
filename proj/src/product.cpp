#include "conecert/product.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace conecert {

ProductProfile compose(const std::vector<FactorSpec>& specs) {
  if (specs.empty()) throw std::invalid_argument("empty product");

  ProductProfile p;
  p.factors.reserve(specs.size());
  for (const auto& s : specs) p.factors.emplace_back(s, factor_props(s));

  p.dimM = 0;
  for (const auto& [s, props] : p.factors) p.dimM += props.dim;
  p.dimC = p.dimM + 1;

  Rational maxRatio(1);
  for (const auto& [s, props] : p.factors) {
    p.lambdaSq.push_back(Rational(props.dim, p.dimM));
    p.lambdas.push_back(std::sqrt(p.lambdaSq.back().value()));
    maxRatio = max(maxRatio, props.ratio);
  }
  p.alphaSq = Rational(p.dimM) * maxRatio;

  normal_radius(p);
  return p;
}

double normal_radius(ProductProfile& profile) {
  profile.radiusCandidates.clear();
  Rational best(-1);
  bool first = true;
  for (size_t i = 0; i < profile.factors.size(); ++i) {
    const auto& [spec, props] = profile.factors[i];
    Rational cosv;
    switch (spec.kind) {
      case FactorKind::Grassmann:
        cosv = Rational(1) - Rational(static_cast<std::int64_t>(props.d) * spec.k, profile.dimM);
        break;
      case FactorKind::OrientedGrassmann:
        cosv = Rational(1) - profile.lambdaSq[i];
        break;
      case FactorKind::Sphere:
        cosv = Rational(1) - Rational(2) * profile.lambdaSq[i];
        break;
    }
    const double c = std::clamp(cosv.value(), -1.0, 1.0);
    profile.radiusCandidates.push_back({static_cast<int>(i), cosv, std::acos(c)});
    if (first || best < cosv) {
      best = cosv;
      first = false;
    }
  }
  // Smallest angle = largest cosine; selection is exact on the rationals.
  profile.normalRadiusCos = best;
  profile.normalRadius = std::acos(std::clamp(best.value(), -1.0, 1.0));
  return profile.normalRadius;
}

}  // namespace conecert
