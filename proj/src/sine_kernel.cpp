#include "gaptlz/sine_kernel.hpp"

#include "gaptlz/quadrature.hpp"
#include "gaptlz/special.hpp"
#include "gaptlz/toeplitz.hpp"

namespace gaptlz {

namespace {

void check_spec(const FredholmSpec& spec) {
  if (!(spec.y > 0)) throw DomainError("fredholm: y must be positive");
  if (spec.s < 0 || spec.s > 1)
    throw DomainError("fredholm: s must lie in [0,1]");
  if (spec.m < 4) throw DomainError("fredholm: quadrature order must be >= 4");
}

// ln det of a dense real matrix by partial-pivot LU; the matrices here are
// perturbations of the identity with positive determinant
real_t dense_log_det(std::vector<real_t>& a, unsigned m) {
  real_t acc = 0;
  int sign = 1;
  for (unsigned k = 0; k < m; ++k) {
    unsigned piv = k;
    for (unsigned i = k + 1; i < m; ++i)
      if (abs(a[i * m + k]) > abs(a[piv * m + k])) piv = i;
    if (piv != k) {
      for (unsigned j = 0; j < m; ++j) std::swap(a[piv * m + j], a[k * m + j]);
      sign = -sign;
    }
    real_t d = a[k * m + k];
    if (d == 0) throw SingularMinor(int(k));
    if (d < 0) sign = -sign;
    acc += log(abs(d));
    for (unsigned i = k + 1; i < m; ++i) {
      real_t f = a[i * m + k] / d;
      for (unsigned j = k + 1; j < m; ++j) a[i * m + j] -= f * a[k * m + j];
    }
  }
  if (sign < 0)
    throw NonConvergence("fredholm: negative determinant in discretization");
  return acc;
}

}  // namespace

std::vector<real_t> nystrom_kernel_matrix(const FredholmSpec& spec, unsigned m) {
  check_spec(spec);
  unsigned bits = current_precision_bits();
  PrecisionGuard guard(bits + 32);
  real_t y = to_precision(spec.y);
  real_t pi = const_pi();
  const QuadratureRule& rule = gauss_legendre(m, current_precision_bits());

  std::vector<real_t> x(m), sw(m);
  for (unsigned i = 0; i < m; ++i) {
    x[i] = y * rule.nodes[i];
    sw[i] = sqrt(y * rule.weights[i]);
  }
  std::vector<real_t> k(m * m);
  for (unsigned i = 0; i < m; ++i) {
    k[i * m + i] = sw[i] * sw[i];  // sinc(0) = 1
    for (unsigned j = 0; j < i; ++j) {
      real_t d = pi * (x[i] - x[j]);
      real_t v = sw[i] * sw[j] * sin(d) / d;
      k[i * m + j] = v;
      k[j * m + i] = v;
    }
  }
  return k;
}

real_t fredholm_logdet_at_order(const FredholmSpec& spec, unsigned m) {
  unsigned bits = current_precision_bits();
  PrecisionGuard guard(bits + 32);
  std::vector<real_t> a = nystrom_kernel_matrix(spec, m);
  real_t c = 1 - to_precision(spec.s);
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j) {
      a[i * m + j] = (i == j ? real_t(1) : real_t(0)) - c * a[i * m + j];
    }
  return to_precision(dense_log_det(a, m));
}

real_t fredholm_logdet(const FredholmSpec& spec) {
  check_spec(spec);
  if (spec.s == 1) return real_t(0);
  real_t lo = fredholm_logdet_at_order(spec, spec.m);
  real_t hi = fredholm_logdet_at_order(spec, 2 * spec.m);
  if (abs(hi - lo) > real_t("1e-10"))
    throw NonConvergence(
        "fredholm_logdet: order m and 2m estimates disagree beyond 1e-10");
  return hi;
}

real_t large_gap_expansion(const real_t& y) {
  if (!(y > 0)) throw DomainError("large_gap_expansion: y must be positive");
  unsigned bits = current_precision_bits();
  PrecisionGuard guard(bits + 32);
  real_t yv = to_precision(y);
  real_t pi = const_pi();
  real_t v = -pi * pi * yv * yv / 2 - log(pi * yv) / 4 +
             log(real_t(2)) / 12 + 3 * zeta_prime_at_minus_one();
  return to_precision(v);
}

real_t toeplitz_fredholm_gap(const real_t& y, const real_t& s, int n) {
  if (!(y > 0)) throw DomainError("toeplitz_fredholm_gap: y must be positive");
  if (n <= 20 * y)
    throw DomainError("toeplitz_fredholm_gap: need n > 20 y");
  if (s == 1) return real_t(0);
  unsigned bits = current_precision_bits();
  PrecisionGuard guard(bits + 32);
  real_t yv = to_precision(y);
  real_t pi = const_pi();
  real_t theta0 = pi * (1 - 2 * yv / n);
  SymbolSpec sym(theta0, cplx(to_precision(s)));
  cplx ln_d = log_det(sym, n).ln_D;
  FredholmSpec fs{yv, to_precision(s), 32};
  real_t f = fredholm_logdet(fs);
  return to_precision(abs(ln_d - cplx(f)));
}

}  // namespace gaptlz
