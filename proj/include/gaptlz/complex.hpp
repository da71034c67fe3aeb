#pragma once

#include "gaptlz/precision.hpp"

namespace gaptlz {

// Complex scalar over real_t. Principal branches for log/sqrt/pow.
struct cplx {
  real_t re{0};
  real_t im{0};

  cplx() = default;
  cplx(const real_t& r) : re(r) {}          // NOLINT(google-explicit-constructor)
  cplx(double r) : re(r) {}                 // NOLINT(google-explicit-constructor)
  cplx(int r) : re(r) {}                    // NOLINT(google-explicit-constructor)
  cplx(const real_t& r, const real_t& i) : re(r), im(i) {}
  cplx(double r, double i) : re(r), im(i) {}

  cplx& operator+=(const cplx& o) { re += o.re; im += o.im; return *this; }
  cplx& operator-=(const cplx& o) { re -= o.re; im -= o.im; return *this; }
  cplx& operator*=(const cplx& o) {
    real_t r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  cplx& operator/=(const cplx& o);
};

inline cplx operator+(cplx a, const cplx& b) { return a += b; }
inline cplx operator-(cplx a, const cplx& b) { return a -= b; }
inline cplx operator*(cplx a, const cplx& b) { return a *= b; }
inline cplx operator-(const cplx& a) { return cplx(-a.re, -a.im); }

inline cplx to_precision(const cplx& a) {
  return cplx(to_precision(a.re), to_precision(a.im));
}

inline cplx conj(const cplx& a) { return cplx(a.re, -a.im); }
inline real_t norm(const cplx& a) { return a.re * a.re + a.im * a.im; }
inline real_t abs(const cplx& a) {
  using std::abs;
  if (a.im == 0) return abs(a.re);
  if (a.re == 0) return abs(a.im);
  return hypot(a.re, a.im);
}
inline real_t arg(const cplx& a) { return atan2(a.im, a.re); }

inline cplx& cplx::operator/=(const cplx& o) {
  real_t d = norm(o);
  real_t r = (re * o.re + im * o.im) / d;
  im = (im * o.re - re * o.im) / d;
  re = r;
  return *this;
}
inline cplx operator/(cplx a, const cplx& b) { return a /= b; }

inline bool operator==(const cplx& a, const cplx& b) { return a.re == b.re && a.im == b.im; }
inline bool operator!=(const cplx& a, const cplx& b) { return !(a == b); }

inline cplx exp(const cplx& a) {
  real_t m = exp(a.re);
  return cplx(m * cos(a.im), m * sin(a.im));
}

inline cplx log(const cplx& a) { return cplx(log(abs(a)), arg(a)); }

inline cplx sqrt(const cplx& a) {
  if (a.im == 0 && a.re >= 0) return cplx(sqrt(a.re), real_t(0));
  real_t m = sqrt(abs(a));
  real_t half_arg = arg(a) / 2;
  return cplx(m * cos(half_arg), m * sin(half_arg));
}

// a^p, principal branch; a != 0.
inline cplx pow(const cplx& a, const real_t& p) { return exp(cplx(p) * log(a)); }

inline cplx polar(const real_t& r, const real_t& theta) {
  return cplx(r * cos(theta), r * sin(theta));
}

// e^{i t}
inline cplx unit(const real_t& t) { return cplx(cos(t), sin(t)); }

inline cplx sin(const cplx& a) {
  return cplx(sin(a.re) * cosh(a.im), cos(a.re) * sinh(a.im));
}
inline cplx cos(const cplx& a) {
  return cplx(cos(a.re) * cosh(a.im), -sin(a.re) * sinh(a.im));
}

inline std::string to_str(const cplx& v, unsigned digits = 0) {
  return "(" + to_str(v.re, digits) + ", " + to_str(v.im, digits) + ")";
}

}  // namespace gaptlz
