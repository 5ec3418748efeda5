#pragma once

#include <array>
#include <cmath>

namespace conecert {

enum class Field { R, C, H };

inline int field_dim(Field f) {
  switch (f) {
    case Field::R: return 1;
    case Field::C: return 2;
    default: return 4;
  }
}

inline char field_char(Field f) {
  switch (f) {
    case Field::R: return 'R';
    case Field::C: return 'C';
    default: return 'H';
  }
}

/// Scalar over R, C or H held as four real components (1, i, j, k); unused
/// components stay zero. Complex numbers are the i-plane, reals the 1-axis.
/// No std::complex involved so that all three fields share one code path.
struct FScalar {
  std::array<double, 4> c{0.0, 0.0, 0.0, 0.0};

  FScalar() = default;
  explicit FScalar(double re) : c{re, 0.0, 0.0, 0.0} {}
  FScalar(double a, double b, double d, double e) : c{a, b, d, e} {}

  static FScalar unit(int axis) {
    FScalar q;
    q.c[axis] = 1.0;
    return q;
  }

  double re() const { return c[0]; }
  double norm2() const { return c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3]; }

  FScalar conj() const { return FScalar(c[0], -c[1], -c[2], -c[3]); }

  FScalar operator+(const FScalar& o) const {
    return FScalar(c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3]);
  }
  FScalar operator-(const FScalar& o) const {
    return FScalar(c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3]);
  }
  FScalar operator-() const { return FScalar(-c[0], -c[1], -c[2], -c[3]); }
  FScalar operator*(double s) const { return FScalar(c[0] * s, c[1] * s, c[2] * s, c[3] * s); }

  // Quaternion product (i*j = k); restricts to complex/real multiplication
  // when the high components vanish.
  FScalar operator*(const FScalar& o) const {
    const auto& a = c;
    const auto& b = o.c;
    return FScalar(a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
                   a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
                   a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
                   a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]);
  }

  FScalar& operator+=(const FScalar& o) {
    for (int i = 0; i < 4; ++i) c[i] += o.c[i];
    return *this;
  }
};

}  // namespace conecert
