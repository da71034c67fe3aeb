#pragma once

#include <functional>
#include <vector>

#include "gaptlz/complex.hpp"
#include "gaptlz/errors.hpp"

namespace gaptlz {

// Gauss-Legendre rule on (-1,1): nodes strictly increasing, weights positive,
// sum of weights = 2, exact on polynomials of degree <= 2m-1.
struct QuadratureRule {
  std::vector<real_t> nodes;
  std::vector<real_t> weights;
  unsigned order = 0;
  unsigned precision_bits = 0;
};

// Deterministic for fixed (m, precision); cached per (m, precision).
const QuadratureRule& gauss_legendre(unsigned m, unsigned precision_bits);

namespace detail {

template <typename T, typename F>
T gl_sum(const F& f, const real_t& a, const real_t& b, const QuadratureRule& q) {
  real_t half = (b - a) / 2;
  real_t mid = (a + b) / 2;
  T acc{};
  for (unsigned i = 0; i < q.order; ++i) {
    acc += T(q.weights[i] * f(mid + half * q.nodes[i]));
  }
  return T(half) * acc;
}

template <typename T>
real_t mag(const T& v) {
  using std::abs;
  using gaptlz::abs;
  return abs(v);
}

template <typename T, typename F>
T adaptive_impl(const F& f, const real_t& a, const real_t& b, const real_t& tol,
                unsigned m, int depth, const QuadratureRule& lo,
                const QuadratureRule& hi) {
  T coarse = gl_sum<T>(f, a, b, lo);
  T fine = gl_sum<T>(f, a, b, hi);
  if (mag(fine - coarse) <= tol) return fine;
  if (depth <= 0)
    throw QuadratureNotConverged("adaptive quadrature: panel did not converge");
  real_t mid = (a + b) / 2;
  return adaptive_impl<T>(f, a, mid, tol / 2, m, depth - 1, lo, hi) +
         adaptive_impl<T>(f, mid, b, tol / 2, m, depth - 1, lo, hi);
}

}  // namespace detail

// Fixed-order panel quadrature of f over [a,b].
template <typename F>
auto integrate_fixed(const F& f, const real_t& a, const real_t& b, unsigned m)
    -> decltype(f(a)) {
  return detail::gl_sum<decltype(f(a))>(f, a, b,
                                        gauss_legendre(m, current_precision_bits()));
}

// Adaptive bisection with order-m vs order-2m cross-validation per panel.
// Handles integrable endpoint/interior singularities by refinement.
template <typename F>
auto integrate_adaptive(const F& f, const real_t& a, const real_t& b,
                        const real_t& tol, unsigned m = 24, int max_depth = 64)
    -> decltype(f(a)) {
  unsigned bits = current_precision_bits();
  const QuadratureRule& lo = gauss_legendre(m, bits);
  const QuadratureRule& hi = gauss_legendre(2 * m, bits);
  return detail::adaptive_impl<decltype(f(a))>(f, a, b, tol, m, max_depth, lo, hi);
}

}  // namespace gaptlz
