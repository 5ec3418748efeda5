#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "conecert/fscalar.hpp"

namespace conecert {

/// Dense square matrix over R, C or H with entries stored as FScalar.
/// Hermitian matrices of this kind carry the Euclidean structure
/// g(A,B) = (1/2) Re tr(AB); flatten() realizes that inner product as the
/// standard dot product on real coordinates.
class FMatrix {
 public:
  FMatrix() = default;
  FMatrix(int n, Field f) : n_(n), f_(f), a_(static_cast<size_t>(n) * n) {}

  static FMatrix identity(int n, Field f) {
    FMatrix m(n, f);
    for (int i = 0; i < n; ++i) m(i, i) = FScalar(1.0);
    return m;
  }

  int n() const { return n_; }
  Field field() const { return f_; }

  FScalar& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const FScalar& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  FMatrix operator+(const FMatrix& o) const {
    FMatrix r(n_, f_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
  }
  FMatrix operator-(const FMatrix& o) const {
    FMatrix r(n_, f_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
  }
  FMatrix operator*(double s) const {
    FMatrix r(n_, f_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
  }
  FMatrix operator*(const FMatrix& o) const {
    FMatrix r(n_, f_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        FScalar s;
        for (int m = 0; m < n_; ++m) s += (*this)(i, m) * o(m, j);
        r(i, j) = s;
      }
    return r;
  }

  FMatrix adjoint() const {
    FMatrix r(n_, f_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r(i, j) = (*this)(j, i).conj();
    return r;
  }

  FScalar trace() const {
    FScalar s;
    for (int i = 0; i < n_; ++i) s += (*this)(i, i);
    return s;
  }

  double maxAbsDeviationFrom(const FMatrix& o) const {
    double dev = 0.0;
    for (size_t i = 0; i < a_.size(); ++i) {
      const FScalar d = a_[i] - o.a_[i];
      dev = std::max(dev, std::sqrt(d.norm2()));
    }
    return dev;
  }

  /// Number of real coordinates of the Hermitian space H(n; F).
  int hermitianRealDim() const { return n_ + field_dim(f_) * n_ * (n_ - 1) / 2; }

  /// Isometric real coordinates of a Hermitian matrix: diagonal entries over
  /// sqrt(2), then the d components of every upper off-diagonal entry.
  Eigen::VectorXd flatten() const {
    const int d = field_dim(f_);
    Eigen::VectorXd v(hermitianRealDim());
    int idx = 0;
    const double inv = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < n_; ++i) v[idx++] = (*this)(i, i).re() * inv;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        for (int m = 0; m < d; ++m) v[idx++] = (*this)(i, j).c[m];
    return v;
  }

  /// Real representation: each entry becomes the d x d left-multiplication
  /// block, so tr rho(A)rho(B) = d * Re tr(AB).
  Eigen::MatrixXd realRep() const {
    const int d = field_dim(f_);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d) * n_,
                                              static_cast<Eigen::Index>(d) * n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        const auto& q = (*this)(i, j).c;
        Eigen::MatrixXd blk(4, 4);
        blk << q[0], -q[1], -q[2], -q[3],
               q[1],  q[0], -q[3],  q[2],
               q[2],  q[3],  q[0], -q[1],
               q[3], -q[2],  q[1],  q[0];
        m.block(i * d, j * d, d, d) = blk.topLeftCorner(d, d);
      }
    return m;
  }
};

/// g(A,B) = (1/2) Re tr(AB) for Hermitian A, B.
inline double g_inner(const FMatrix& a, const FMatrix& b) {
  return 0.5 * (a * b).trace().re();
}

inline double g_norm(const FMatrix& a) { return std::sqrt(g_inner(a, a)); }

inline FMatrix commutator(const FMatrix& x, const FMatrix& y) { return x * y - y * x; }

}  // namespace conecert
