#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "conecert/factor.hpp"
#include "conecert/fmatrix.hpp"
#include "conecert/product.hpp"

namespace conecert {

/// Geometry of one embedded factor at its base point: the projector, an
/// orthonormal tangent frame from orbit generators, an orthonormal basis of
/// the normal space inside the embedding sphere, and the shape operators of
/// the basis normals at unit-sphere scale.
struct EmbeddedFactor {
  FactorSpec spec;
  FactorProps props;

  // Grassmann (projector) data; empty for spheres and Pluecker factors.
  FMatrix base;                          // P = diag(1...1, 0...0)
  FMatrix centered;                      // P - (l/k) I, g-norm = radius
  std::vector<FMatrix> tangentX;         // skew generators
  std::vector<FMatrix> tangentT;         // [X, P], g-orthonormal frame
  std::vector<FMatrix> normalBasis;      // g-orthonormal, normal within the sphere
  std::vector<Eigen::MatrixXd> shapeBasis;  // one dim x dim matrix per basis normal

  // Pluecker data (oriented factors): unit simple l-vector coordinates.
  Eigen::VectorXd pluckerBase;

  bool hasProjectorModel() const { return base.n() > 0; }
};

/// Builds the embedding data for a factor. Grassmann factors get the full
/// projector model; spheres are totally geodesic (no normal directions inside
/// their own sphere); oriented factors get Pluecker base coordinates.
EmbeddedFactor build_embedding(const FactorSpec& spec);

/// Shape operator H^xi in the orthonormal tangent frame, reported at the
/// unit-sphere normalization (raw orbit value times the factor radius).
/// Throws if xi is not g-orthogonal to the tangent frame and position
/// (tolerance 1e-10).
Eigen::MatrixXd shape_operator(const EmbeddedFactor& f, const FMatrix& xi);

/// Shape operator of sum_j coeffs[j] * normalBasis[j]; linear assembly from
/// the precomputed basis shapes.
Eigen::MatrixXd shape_from_coeffs(const EmbeddedFactor& f, const Eigen::VectorXd& coeffs);

/// Numeric sup over unit normals of |H^xi|^2 (squared Frobenius norm).
/// Deterministically includes every basis normal and the diagonal extremal
/// patterns before random sampling.
double sup_alpha_sq(const EmbeddedFactor& f, int samples, std::uint64_t seed);

/// Largest |tr H^xi| over sampled unit normals; minimality makes it vanish.
double max_shape_trace(const EmbeddedFactor& f, int samples, std::uint64_t seed);

/// Explicit nearest-singular-point witness for one factor of a product:
/// builds the product point and its swapped/antipodal/orthogonal partner and
/// returns their Euclidean inner product.
double normal_radius_witness_cos(const ProductProfile& profile, int factorIdx);

/// Empirical min of det(I - tA) over random symmetric trace-zero m x m
/// matrices with Frobenius norm alpha, sampled uniformly on that sphere.
double sym_det_floor(int m, double alpha, double t, int trials, std::uint64_t seed);

/// det(I - tA) for the constructed two-value spectrum with r positive
/// eigenvalues; equals det_floor_two_eigen(alpha, t, m, r) exactly.
double two_value_spectrum_det(int m, double alpha, double t, int r);

/// Pluecker coordinates of the span of the columns of a k x l matrix, indexed
/// by lexicographically ordered l-subsets of rows.
Eigen::VectorXd wedge_coords(const Eigen::MatrixXd& columns);

/// Max coordinate deviation between A e1 ^ e2 in wedge coordinates and
/// A G12 A^T under e_i ^ e_j <-> G_ij, over random rotations of size k.
double plucker_orbit_check(int k, int trials, std::uint64_t seed);

/// Second derivative of s -> exp(sX) P exp(-sX) at s = 0 by central
/// differences; cross-checks the algebraic double commutator.
FMatrix orbit_curve_second_derivative(const FMatrix& P, const FMatrix& X, double h);

/// Normal data of a product of embedded factors: b coefficients (radial part
/// per factor) and normal-space coefficients per factor.
struct ProductNormal {
  Eigen::VectorXd b;
  std::vector<Eigen::VectorXd> xi;
};

/// Assembles the product shape operator
///   H^v = diag(b_i/lambda_i I + (1/lambda_i) H_i^{xi_i})
/// for the given normal data.
Eigen::MatrixXd assemble_product_shape(const std::vector<const EmbeddedFactor*>& factors,
                                       const std::vector<double>& lambdas,
                                       const ProductNormal& v);

/// Draws a uniformly distributed unit normal of the product (Sum lambda_i b_i
/// = 0, total norm 1) and returns it.
ProductNormal sample_product_normal(const std::vector<const EmbeddedFactor*>& factors,
                                    const std::vector<double>& lambdas, std::mt19937_64& rng);

/// Cached access to embeddings; building frames for quaternionic factors is
/// not free and the suites reuse them heavily.
const EmbeddedFactor& embedding_cache(const FactorSpec& spec);

}  // namespace conecert
