#include "conecert/orbit.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace conecert {

namespace {

FMatrix unit_matrix_entry(int n, Field f, int i, int j, const FScalar& q) {
  FMatrix m(n, f);
  m(i, j) = q;
  return m;
}

// Orthonormal basis of H(k;F) under g: sqrt(2) E_ii and E_ij q + E_ji q*.
std::vector<FMatrix> hermitian_basis(int k, Field f) {
  const int d = field_dim(f);
  std::vector<FMatrix> basis;
  for (int i = 0; i < k; ++i) {
    FMatrix m(k, f);
    m(i, i) = FScalar(std::sqrt(2.0));
    basis.push_back(m);
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      for (int c = 0; c < d; ++c) {
        FMatrix m(k, f);
        m(i, j) = FScalar::unit(c);
        m(j, i) = FScalar::unit(c).conj();
        basis.push_back(m);
      }
  return basis;
}

}  // namespace

EmbeddedFactor build_embedding(const FactorSpec& spec) {
  EmbeddedFactor f;
  f.spec = spec;
  f.props = factor_props(spec);

  if (spec.kind == FactorKind::Sphere) return f;

  if (spec.kind == FactorKind::OrientedGrassmann) {
    Eigen::MatrixXd cols = Eigen::MatrixXd::Zero(spec.k, spec.l);
    for (int i = 0; i < spec.l; ++i) cols(i, i) = 1.0;
    f.pluckerBase = wedge_coords(cols);
    return f;
  }

  const int k = spec.k, l = spec.l, d = field_dim(spec.field);
  const Field fd = spec.field;

  f.base = FMatrix(k, fd);
  for (int i = 0; i < l; ++i) f.base(i, i) = FScalar(1.0);
  f.centered = f.base - FMatrix::identity(k, fd) * (double(l) / k);

  // Tangent frame from orbit generators: T = [X, P] with
  // X = E_{alpha a} q - E_{a alpha} q*, already g-orthonormal.
  for (int a = 0; a < l; ++a)
    for (int alpha = l; alpha < k; ++alpha)
      for (int c = 0; c < d; ++c) {
        const FScalar q = FScalar::unit(c);
        f.tangentX.push_back(unit_matrix_entry(k, fd, alpha, a, q) -
                             unit_matrix_entry(k, fd, a, alpha, q.conj()));
        f.tangentT.push_back(commutator(f.tangentX.back(), f.base));
      }

  const int dim = f.props.dim;
  if (static_cast<int>(f.tangentT.size()) != dim)
    throw std::logic_error("tangent frame rank deficiency");

  // Normal basis: project tangent frame, position and identity out of the
  // ambient basis, then modified Gram-Schmidt on the remainder.
  const double r = f.props.radius();
  std::vector<FMatrix> fixed = f.tangentT;
  fixed.push_back(f.centered * (1.0 / r));
  fixed.push_back(FMatrix::identity(k, fd) * std::sqrt(2.0 / k));

  for (auto cand : hermitian_basis(k, fd)) {
    for (const auto& v : fixed) cand = cand - v * g_inner(cand, v);
    for (const auto& v : f.normalBasis) cand = cand - v * g_inner(cand, v);
    const double nrm = g_norm(cand);
    if (nrm > 1e-8) f.normalBasis.push_back(cand * (1.0 / nrm));
  }
  const int expected = f.props.ambient - dim - 2;
  if (static_cast<int>(f.normalBasis.size()) != expected)
    throw std::logic_error("normal space dimension mismatch");

  // Symmetrized second derivatives of orbit curves, projected per normal.
  std::vector<std::vector<FMatrix>> ii(dim);
  for (int i = 0; i < dim; ++i) {
    ii[i].reserve(i + 1);
    for (int j = 0; j <= i; ++j) {
      const FMatrix m = (commutator(f.tangentX[i], commutator(f.tangentX[j], f.base)) +
                         commutator(f.tangentX[j], commutator(f.tangentX[i], f.base))) *
                        0.5;
      ii[i].push_back(m);
    }
  }
  for (const auto& xi : f.normalBasis) {
    Eigen::MatrixXd h(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j <= i; ++j) {
        const double v = g_inner(ii[i][j], xi) * r;
        h(i, j) = v;
        h(j, i) = v;
      }
    f.shapeBasis.push_back(h);
  }
  return f;
}

Eigen::MatrixXd shape_operator(const EmbeddedFactor& f, const FMatrix& xi) {
  if (!f.hasProjectorModel())
    throw std::invalid_argument("shape_operator: factor has no projector model");
  for (const auto& t : f.tangentT)
    if (std::abs(g_inner(xi, t)) > 1e-10)
      throw std::invalid_argument("shape_operator: normal not orthogonal to tangent frame");
  if (std::abs(g_inner(xi, f.centered)) > 1e-10)
    throw std::invalid_argument("shape_operator: normal not orthogonal to position");
  if (std::abs(g_inner(xi, FMatrix::identity(f.base.n(), f.base.field()))) > 1e-10)
    throw std::invalid_argument("shape_operator: normal leaves the trace slice");

  Eigen::VectorXd coeffs(f.normalBasis.size());
  for (size_t j = 0; j < f.normalBasis.size(); ++j) coeffs[j] = g_inner(xi, f.normalBasis[j]);
  return shape_from_coeffs(f, coeffs);
}

Eigen::MatrixXd shape_from_coeffs(const EmbeddedFactor& f, const Eigen::VectorXd& coeffs) {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(f.props.dim, f.props.dim);
  for (Eigen::Index j = 0; j < coeffs.size(); ++j)
    if (coeffs[j] != 0.0) h += coeffs[j] * f.shapeBasis[j];
  return h;
}

namespace {

// Deterministic extremal diagonal normals: a (+1, -1) pair inside one
// diagonal block, where the supremum is attained.
std::vector<Eigen::VectorXd> extremal_coeffs(const EmbeddedFactor& f) {
  std::vector<Eigen::VectorXd> out;
  const int k = f.spec.k, l = f.spec.l;
  const Field fd = f.base.field();
  auto project = [&](const FMatrix& xi) {
    Eigen::VectorXd c(f.normalBasis.size());
    for (size_t j = 0; j < f.normalBasis.size(); ++j) c[j] = g_inner(xi, f.normalBasis[j]);
    if (c.norm() > 1e-9) out.push_back(c / c.norm());
  };
  if (l >= 2) {
    FMatrix xi(k, fd);
    xi(0, 0) = FScalar(1.0);
    xi(1, 1) = FScalar(-1.0);
    project(xi);
  }
  if (k - l >= 2) {
    FMatrix xi(k, fd);
    xi(l, l) = FScalar(1.0);
    xi(l + 1, l + 1) = FScalar(-1.0);
    project(xi);
  }
  return out;
}

}  // namespace

double sup_alpha_sq(const EmbeddedFactor& f, int samples, std::uint64_t seed) {
  if (f.spec.kind == FactorKind::Sphere) return 0.0;
  if (!f.hasProjectorModel())
    throw std::invalid_argument("sup_alpha_sq: no projector model for this factor");
  const int nb = static_cast<int>(f.normalBasis.size());
  if (nb == 0) return 0.0;

  double best = 0.0;
  auto consider = [&](const Eigen::VectorXd& coeffs) {
    const Eigen::MatrixXd h = shape_from_coeffs(f, coeffs);
    best = std::max(best, h.squaredNorm());
  };

  for (int j = 0; j < nb; ++j) consider(Eigen::VectorXd::Unit(nb, j));
  for (const auto& c : extremal_coeffs(f)) consider(c);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int s = 0; s < samples; ++s) {
    Eigen::VectorXd c(nb);
    for (int j = 0; j < nb; ++j) c[j] = gauss(rng);
    const double nrm = c.norm();
    if (nrm < 1e-12) continue;
    consider(c / nrm);
  }
  return best;
}

double max_shape_trace(const EmbeddedFactor& f, int samples, std::uint64_t seed) {
  if (f.spec.kind == FactorKind::Sphere) return 0.0;
  const int nb = static_cast<int>(f.normalBasis.size());
  if (nb == 0) return 0.0;
  double worst = 0.0;
  for (int j = 0; j < nb; ++j)
    worst = std::max(worst, std::abs(f.shapeBasis[j].trace()));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int s = 0; s < samples; ++s) {
    Eigen::VectorXd c(nb);
    for (int j = 0; j < nb; ++j) c[j] = gauss(rng);
    if (c.norm() < 1e-12) continue;
    c.normalize();
    worst = std::max(worst, std::abs(shape_from_coeffs(f, c).trace()));
  }
  return worst;
}

// ============================================================================
// Normal-radius witnesses
// ============================================================================

namespace {

// Inner product of the unit factor point with its nearest singular partner.
double factor_witness_cos(const FactorSpec& spec) {
  switch (spec.kind) {
    case FactorKind::Sphere:
      return -1.0;  // antipode
    case FactorKind::OrientedGrassmann: {
      // Orthogonal simple l-vector on disjoint coordinates (l <= k - l).
      Eigen::MatrixXd c1 = Eigen::MatrixXd::Zero(spec.k, spec.l);
      Eigen::MatrixXd c2 = Eigen::MatrixXd::Zero(spec.k, spec.l);
      for (int i = 0; i < spec.l; ++i) {
        c1(i, i) = 1.0;
        c2(spec.l + i, i) = 1.0;
      }
      return wedge_coords(c1).dot(wedge_coords(c2));
    }
    case FactorKind::Grassmann: {
      const FactorProps props = factor_props(spec);
      const int k = spec.k, l = spec.l;
      FMatrix p(k, spec.field), q(k, spec.field);
      for (int i = 0; i < l; ++i) p(i, i) = FScalar(1.0);
      // Exchange one projector eigenvalue pair across the block split.
      for (int i = 0; i < l - 1; ++i) q(i, i) = FScalar(1.0);
      q(l, l) = FScalar(1.0);
      const FMatrix center = FMatrix::identity(k, spec.field) * (double(l) / k);
      const Eigen::VectorXd u1 = (p - center).flatten() / props.radius();
      const Eigen::VectorXd u2 = (q - center).flatten() / props.radius();
      return u1.dot(u2);
    }
  }
  return 0.0;
}

}  // namespace

double normal_radius_witness_cos(const ProductProfile& profile, int factorIdx) {
  if (factorIdx < 0 || factorIdx >= static_cast<int>(profile.factors.size()))
    throw std::out_of_range("witness: factor index");
  double cosv = 0.0;
  for (size_t j = 0; j < profile.factors.size(); ++j) {
    if (static_cast<int>(j) == factorIdx)
      cosv += profile.lambdaSq[j].value() * factor_witness_cos(profile.factors[j].first);
    else
      cosv += profile.lambdaSq[j].value();
  }
  return cosv;
}

// ============================================================================
// Symmetric determinant floor
// ============================================================================

double sym_det_floor(int m, double alpha, double t, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double best = std::numeric_limits<double>::infinity();
  Eigen::MatrixXd a(m, m);
  for (int s = 0; s < trials; ++s) {
    for (int i = 0; i < m; ++i) {
      a(i, i) = std::sqrt(2.0) * gauss(rng);
      for (int j = i + 1; j < m; ++j) {
        const double v = gauss(rng);
        a(i, j) = v;
        a(j, i) = v;
      }
    }
    a.diagonal().array() -= a.trace() / m;
    const double nrm = a.norm();
    if (nrm < 1e-12) continue;
    const Eigen::MatrixXd scaled =
        Eigen::MatrixXd::Identity(m, m) - (t * alpha / nrm) * a;
    best = std::min(best, scaled.determinant());
  }
  return best;
}

double two_value_spectrum_det(int m, double alpha, double t, int r) {
  const double pos = alpha * std::sqrt(double(m - r) / (double(m) * r));
  const double neg = alpha * std::sqrt(double(r) / (double(m) * (m - r)));
  double det = 1.0;
  for (int i = 0; i < r; ++i) det *= 1.0 - t * pos;
  for (int i = 0; i < m - r; ++i) det *= 1.0 + t * neg;
  return det;
}

// ============================================================================
// Pluecker coordinates
// ============================================================================

namespace {

void subsets(int k, int l, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == l) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < k; ++i) {
    cur.push_back(i);
    subsets(k, l, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Eigen::VectorXd wedge_coords(const Eigen::MatrixXd& columns) {
  const int k = static_cast<int>(columns.rows());
  const int l = static_cast<int>(columns.cols());
  std::vector<std::vector<int>> idx;
  std::vector<int> cur;
  subsets(k, l, 0, cur, idx);
  Eigen::VectorXd coords(idx.size());
  Eigen::MatrixXd minor(l, l);
  for (size_t s = 0; s < idx.size(); ++s) {
    for (int i = 0; i < l; ++i) minor.row(i) = columns.row(idx[s][i]);
    coords[s] = l == 1 ? minor(0, 0) : minor.determinant();
  }
  return coords;
}

double plucker_orbit_check(int k, int trials, std::uint64_t seed) {
  if (k < 3) throw std::invalid_argument("plucker_orbit_check: need k >= 3");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double worst = 0.0;
  for (int s = 0; s < trials; ++s) {
    Eigen::MatrixXd m(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) m(i, j) = gauss(rng);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
    Eigen::MatrixXd a = qr.householderQ();
    Eigen::MatrixXd rmat = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < k; ++i)
      if (rmat(i, i) < 0) a.col(i) *= -1.0;
    if (a.determinant() < 0) a.col(k - 1) *= -1.0;

    const Eigen::VectorXd wedge = wedge_coords(a.leftCols(2));
    Eigen::MatrixXd g12 = Eigen::MatrixXd::Zero(k, k);
    g12(0, 1) = 1.0;
    g12(1, 0) = -1.0;
    const Eigen::MatrixXd conj = a * g12 * a.transpose();
    int idx = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) worst = std::max(worst, std::abs(wedge[idx++] - conj(i, j)));
  }
  return worst;
}

FMatrix orbit_curve_second_derivative(const FMatrix& P, const FMatrix& X, double h) {
  auto expm = [](const FMatrix& m) {
    FMatrix acc = FMatrix::identity(m.n(), m.field());
    FMatrix term = FMatrix::identity(m.n(), m.field());
    for (int j = 1; j <= 14; ++j) {
      term = term * m * (1.0 / j);
      acc = acc + term;
    }
    return acc;
  };
  const FMatrix ep = expm(X * h), em = expm(X * (-h));
  const FMatrix plus = ep * P * em;
  const FMatrix minus = em * P * ep;
  return (plus + minus - P * 2.0) * (1.0 / (h * h));
}

// ============================================================================
// Product-level assembly
// ============================================================================

Eigen::MatrixXd assemble_product_shape(const std::vector<const EmbeddedFactor*>& factors,
                                       const std::vector<double>& lambdas,
                                       const ProductNormal& v) {
  int dim = 0;
  for (const auto* f : factors) dim += f->props.dim;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  int off = 0;
  for (size_t i = 0; i < factors.size(); ++i) {
    const int di = factors[i]->props.dim;
    Eigen::MatrixXd blk =
        (v.b[static_cast<Eigen::Index>(i)] / lambdas[i]) * Eigen::MatrixXd::Identity(di, di);
    if (v.xi[i].size() > 0)
      blk += shape_from_coeffs(*factors[i], v.xi[i]) / lambdas[i];
    h.block(off, off, di, di) = blk;
    off += di;
  }
  return h;
}

ProductNormal sample_product_normal(const std::vector<const EmbeddedFactor*>& factors,
                                    const std::vector<double>& lambdas, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int m = static_cast<int>(factors.size());
  ProductNormal v;
  v.b.resize(m);
  for (int i = 0; i < m; ++i) v.b[i] = gauss(rng);
  // Project onto sum lambda_i b_i = 0 (the lambdas are a unit vector).
  double dot = 0.0;
  for (int i = 0; i < m; ++i) dot += lambdas[i] * v.b[i];
  for (int i = 0; i < m; ++i) v.b[i] -= dot * lambdas[i];

  double norm2 = v.b.squaredNorm();
  v.xi.resize(m);
  for (int i = 0; i < m; ++i) {
    const int nb = static_cast<int>(factors[i]->normalBasis.size());
    v.xi[i].resize(nb);
    for (int j = 0; j < nb; ++j) {
      v.xi[i][j] = gauss(rng);
      norm2 += v.xi[i][j] * v.xi[i][j];
    }
  }
  const double inv = 1.0 / std::sqrt(std::max(norm2, 1e-300));
  v.b *= inv;
  for (auto& x : v.xi) x *= inv;
  return v;
}

const EmbeddedFactor& embedding_cache(const FactorSpec& spec) {
  static std::map<std::string, std::unique_ptr<EmbeddedFactor>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  const std::string key = to_string(spec);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<EmbeddedFactor>(build_embedding(spec))).first;
  return *it->second;
}

}  // namespace conecert
