#pragma once

#include "gaptlz/complex.hpp"
#include "gaptlz/errors.hpp"

namespace gaptlz {

// 2x2 complex matrix, row-major.
struct Matrix2C {
  cplx a11, a12, a21, a22;

  static Matrix2C identity() { return {cplx(1), cplx(0), cplx(0), cplx(1)}; }
};

inline Matrix2C operator+(const Matrix2C& x, const Matrix2C& y) {
  return {x.a11 + y.a11, x.a12 + y.a12, x.a21 + y.a21, x.a22 + y.a22};
}

inline Matrix2C operator-(const Matrix2C& x, const Matrix2C& y) {
  return {x.a11 - y.a11, x.a12 - y.a12, x.a21 - y.a21, x.a22 - y.a22};
}

inline Matrix2C operator*(const Matrix2C& x, const Matrix2C& y) {
  return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
          x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
}

inline Matrix2C operator*(const cplx& s, const Matrix2C& x) {
  return {s * x.a11, s * x.a12, s * x.a21, s * x.a22};
}

inline cplx det(const Matrix2C& x) { return x.a11 * x.a22 - x.a12 * x.a21; }

inline Matrix2C inverse(const Matrix2C& x) {
  cplx d = det(x);
  if (abs(d) == 0) throw SingularMinor(2);
  return {x.a22 / d, -x.a12 / d, -x.a21 / d, x.a11 / d};
}

// max-entry magnitude
inline real_t norm_max(const Matrix2C& x) {
  real_t m = abs(x.a11);
  real_t v = abs(x.a12);
  if (v > m) m = v;
  v = abs(x.a21);
  if (v > m) m = v;
  v = abs(x.a22);
  if (v > m) m = v;
  return m;
}

// e^{c sigma3} = diag(e^c, e^{-c})
inline Matrix2C exp_sigma3(const cplx& c) {
  return {exp(c), cplx(0), cplx(0), exp(-c)};
}

// conjugation D M D^{-1} with D = diag(d, 1/d)... kept explicit at call sites.

}  // namespace gaptlz
