#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "conecert/fscalar.hpp"
#include "conecert/rational.hpp"

namespace conecert {

enum class FactorKind { Grassmann, OrientedGrassmann, Sphere };

/// One factor of a minimal product: a Grassmannian G(l,k;F) under the
/// projector embedding, an oriented Grassmannian Gor(l,k) under the Pluecker
/// embedding, or a round sphere S(n).
struct FactorSpec {
  FactorKind kind = FactorKind::Sphere;
  Field field = Field::R;  // Grassmann only
  int l = 0;               // plane dimension (Grassmann kinds)
  int k = 0;               // ambient plane count (Grassmann kinds)
  int n = 0;               // Sphere only

  static FactorSpec grassmann(int l, int k, Field f) {
    return FactorSpec{FactorKind::Grassmann, f, l, k, 0};
  }
  static FactorSpec oriented(int l, int k) {
    return FactorSpec{FactorKind::OrientedGrassmann, Field::R, l, k, 0};
  }
  static FactorSpec sphere(int n) { return FactorSpec{FactorKind::Sphere, Field::R, 0, 0, n}; }

  bool operator==(const FactorSpec& o) const {
    if (kind != o.kind) return false;
    if (kind == FactorKind::Sphere) return n == o.n;
    if (kind == FactorKind::Grassmann) return field == o.field && l == o.l && k == o.k;
    return l == o.l && k == o.k;
  }
};

/// Intrinsic constants of a factor. Exact rationals everywhere a closed
/// rational formula exists; radius and curvature convert to double only at
/// call sites.
struct FactorProps {
  int dim = 0;          // intrinsic real dimension
  int d = 1;            // dim_R of the base field (1 for spheres)
  int ambient = 0;      // real dimension of the ambient Euclidean space
  Rational radiusSq;    // squared radius of the embedding sphere
  Rational alphaSq;     // upper bound on sup_xi |H^xi|^2 at unit-sphere scale
  Rational ratio;       // alphaSq / dim

  double radius() const { return std::sqrt(radiusSq.value()); }
};

/// Maps the factors that are isometric to round spheres onto their sphere
/// form: G(1,2;R) -> S(1), G(1,2;C) -> S(2), G(1,2;H) -> S(4),
/// Gor(1,m) -> S(m-1). Idempotent; everything else passes through.
FactorSpec reduce(const FactorSpec& spec);

/// Computes FactorProps. Throws std::invalid_argument for malformed specs,
/// for l > k-l (normalization l <= k-l is the caller's responsibility), and
/// for oriented factors that should have been reduced first.
FactorProps factor_props(const FactorSpec& spec);

bool is_reduced_case(const FactorSpec& spec);

/// Factor grammar shared with the CLI: "G(l,k;R|C|H)", "Gor(l,k)", "S(n)".
FactorSpec parse_factor(std::string_view text);

/// Whitespace-insensitive infix 'x' product of factor atoms.
std::vector<FactorSpec> parse_product(std::string_view text);

std::string to_string(const FactorSpec& spec);
std::string to_string(const std::vector<FactorSpec>& specs);

}  // namespace conecert
