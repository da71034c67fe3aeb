#include "gaptlz/toeplitz.hpp"

#include <cmath>

#include "gaptlz/quadrature.hpp"

namespace gaptlz {

namespace {

// f_k for |k| <= kmax; index k + kmax
std::vector<cplx> moments(const SymbolSpec& spec, int kmax) {
  std::vector<cplx> f(2 * kmax + 1);
  unsigned bits = current_precision_bits();
  for (int k = -kmax; k <= kmax; ++k) f[k + kmax] = fourier_coeff(spec, k, bits);
  return f;
}

struct Dense {
  int n;
  std::vector<cplx> a;  // row-major

  cplx& at(int i, int j) { return a[size_t(i) * n + j]; }
  const cplx& at(int i, int j) const { return a[size_t(i) * n + j]; }
};

Dense moment_matrix(const std::vector<cplx>& f, int kmax, int n) {
  Dense t{n, std::vector<cplx>(size_t(n) * n)};
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) t.at(j, k) = f[j - k + kmax];
  return t;
}

// LU with partial pivoting; solves in place
struct PivotedLU {
  Dense lu;
  std::vector<int> perm;
  int sign = 1;

  explicit PivotedLU(Dense m) : lu(std::move(m)), perm(lu.n) {
    int n = lu.n;
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int k = 0; k < n; ++k) {
      int p = k;
      real_t best = abs(lu.at(k, k));
      for (int i = k + 1; i < n; ++i) {
        real_t v = abs(lu.at(i, k));
        if (v > best) {
          best = v;
          p = i;
        }
      }
      if (best == 0) throw SingularMinor(k + 1);
      if (p != k) {
        for (int j = 0; j < n; ++j) std::swap(lu.at(p, j), lu.at(k, j));
        std::swap(perm[p], perm[k]);
        sign = -sign;
      }
      for (int i = k + 1; i < n; ++i) {
        cplx m = lu.at(i, k) / lu.at(k, k);
        lu.at(i, k) = m;
        for (int j = k + 1; j < n; ++j) lu.at(i, j) -= m * lu.at(k, j);
      }
    }
  }

  std::vector<cplx> solve(const std::vector<cplx>& b) const {
    int n = lu.n;
    std::vector<cplx> x(n);
    for (int i = 0; i < n; ++i) x[i] = b[perm[i]];
    for (int i = 1; i < n; ++i)
      for (int j = 0; j < i; ++j) x[i] -= lu.at(i, j) * x[j];
    for (int i = n - 1; i >= 0; --i) {
      for (int j = i + 1; j < n; ++j) x[i] -= lu.at(i, j) * x[j];
      x[i] /= lu.at(i, i);
    }
    return x;
  }
};

// Elimination without row exchanges: pivot j equals D_{j+1}/D_j. A pivot
// counts as vanished when cancellation leaves it below the update noise.
std::vector<cplx> minor_ratio_pivots(Dense t, unsigned bits) {
  int n = t.n;
  real_t noise = pow(real_t(2), -int(bits) + 24);
  std::vector<cplx> pivots(n);
  // ref[j]: largest magnitude ever present at diagonal slot j, to judge when
  // cancellation has destroyed a pivot
  std::vector<real_t> ref(n);
  for (int j = 0; j < n; ++j) ref[j] = abs(t.at(j, j));
  for (int k = 0; k < n; ++k) {
    cplx pivot = t.at(k, k);
    if (abs(pivot) == 0 || abs(pivot) < ref[k] * noise) throw SingularMinor(k + 1);
    pivots[k] = pivot;
    for (int i = k + 1; i < n; ++i) {
      cplx m = t.at(i, k) / pivot;
      for (int j = k + 1; j < n; ++j) {
        cplx upd = m * t.at(k, j);
        t.at(i, j) -= upd;
        if (i == j) {
          real_t u = abs(upd);
          if (u > ref[i]) ref[i] = u;
        }
      }
    }
  }
  return pivots;
}

cplx poly_eval(const std::vector<cplx>& c, const cplx& z) {
  cplx acc = 0;
  for (size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
  return acc;
}

cplx poly_deriv_eval(const std::vector<cplx>& c, const cplx& z) {
  cplx acc = 0;
  for (size_t i = c.size(); i-- > 1;) acc = acc * z + cplx(real_t(int(i))) * c[i];
  return acc;
}

// monic OP coefficients of degree d and its normalization h_d = D_{d+1}/D_d.
// hat=true solves the transposed (row) orthogonality.
std::pair<std::vector<cplx>, cplx> monic_op(const std::vector<cplx>& f, int kmax,
                                            int d, bool hat) {
  std::vector<cplx> c(d + 1);
  c[d] = cplx(1);
  if (d > 0) {
    Dense t{d, std::vector<cplx>(size_t(d) * d)};
    std::vector<cplx> rhs(d);
    for (int m = 0; m < d; ++m) {
      for (int j = 0; j < d; ++j)
        t.at(m, j) = hat ? f[j - m + kmax] : f[m - j + kmax];
      rhs[m] = -(hat ? f[d - m + kmax] : f[m - d + kmax]);
    }
    PivotedLU lu(std::move(t));
    std::vector<cplx> sol = lu.solve(rhs);
    for (int j = 0; j < d; ++j) c[j] = sol[j];
  }
  cplx h = 0;
  for (int j = 0; j <= d; ++j)
    h += c[j] * (hat ? f[j - d + kmax] : f[d - j + kmax]);
  return {c, h};
}

SymbolSpec renorm(const SymbolSpec& spec) {
  SymbolSpec s;
  s.theta0 = to_precision(spec.theta0);
  s.arc_value = to_precision(spec.arc_value);
  s.gap_value = to_precision(spec.gap_value);
  for (const auto& [k, wk] : spec.W) s.W[k] = to_precision(wk);
  s.symmetric_real = spec.symmetric_real;
  return s;
}

LogDetResult log_det_single(const SymbolSpec& spec, int n, unsigned bits) {
  PrecisionGuard guard(bits);
  SymbolSpec sp = renorm(spec);
  int kmax = n - 1 > 0 ? n - 1 : 0;
  auto f = moments(sp, kmax);
  Dense t = moment_matrix(f, kmax, n);
  auto pivots = minor_ratio_pivots(std::move(t), bits);
  LogDetResult res;
  res.n = n;
  res.precision_bits = bits;
  res.pivot_logs.reserve(n);
  cplx acc = 0;
  for (const auto& p : pivots) {
    cplx lg = log(p);
    res.pivot_logs.push_back(lg);
    acc += lg;
  }
  res.ln_D = acc;
  return res;
}

}  // namespace

unsigned default_precision_bits(const SymbolSpec& spec, int n) {
  double th = static_cast<double>(spec.theta0);
  double need = 4.0 * n * std::fabs(std::log(std::sin(th / 2))) / std::log(2.0);
  unsigned bits = static_cast<unsigned>(std::ceil(need)) + 64;
  return bits < 128 ? 128 : bits;
}

LogDetResult log_det(const SymbolSpec& spec, int n, unsigned precision_bits) {
  if (n < 1) throw DomainError("log_det: n must be >= 1");
  LogDetResult res = log_det_single(spec, n, precision_bits);
  LogDetResult check = log_det_single(spec, n, precision_bits + 64);
  real_t scale = abs(res.ln_D);
  if (scale < 1) scale = 1;
  res.validated = abs(res.ln_D - check.ln_D) <= real_t("1e-12") * scale;
  return res;
}

LogDetResult log_det(const SymbolSpec& spec, int n) {
  return log_det(spec, n, default_precision_bits(spec, n));
}

OPUCData opuc(const SymbolSpec& spec, int n, unsigned precision_bits) {
  if (n < 1) throw DomainError("opuc: n must be >= 1");
  PrecisionGuard guard(precision_bits);
  SymbolSpec sp = renorm(spec);
  auto f = moments(sp, n);
  auto [c_n, h_n] = monic_op(f, n, n, false);
  auto [c_nm1, h_nm1] = monic_op(f, n, n - 1, false);
  (void)c_nm1;
  auto [chat_nm1, hhat_nm1] = monic_op(f, n, n - 1, true);
  if (abs(h_n) == 0) throw SingularMinor(n + 1);
  if (abs(h_nm1) == 0) throw SingularMinor(n);
  (void)hhat_nm1;

  OPUCData d;
  d.n = n;
  d.chi_n = cplx(1) / sqrt(h_n);
  d.chi_nm1 = cplx(1) / sqrt(h_nm1);
  d.phi_n_coeffs.resize(n + 1);
  for (int j = 0; j <= n; ++j) d.phi_n_coeffs[j] = d.chi_n * c_n[j];
  d.hat_phi_nm1_coeffs.resize(n);
  for (int j = 0; j < n; ++j) d.hat_phi_nm1_coeffs[j] = d.chi_nm1 * chat_nm1[j];
  d.y12_at_0 = h_n;  // chi_n^{-2}
  d.y11_at_z0 = poly_eval(c_n, unit(sp.theta0));
  return d;
}

Matrix2C y_matrix(const SymbolSpec& spec, int n, const cplx& z, unsigned precision_bits) {
  PrecisionGuard guard(precision_bits);
  SymbolSpec sp = renorm(spec);
  cplx zz = to_precision(z);
  real_t dist = abs(abs(zz) - 1);
  if (dist < real_t("1e-8"))
    throw OnContour("y_matrix: z too close to the unit circle");
  OPUCData d = opuc(sp, n, precision_bits);

  // monic phi_n and z^{n-1} hat_phi_{n-1}(1/z) as polynomials
  std::vector<cplx> pn(n + 1), rev_hat(n);
  for (int j = 0; j <= n; ++j) pn[j] = d.phi_n_coeffs[j] / d.chi_n;
  for (int j = 0; j < n; ++j) rev_hat[n - 1 - j] = d.hat_phi_nm1_coeffs[j] / d.chi_nm1;

  unsigned bits = current_precision_bits();
  real_t tol = pow(real_t(2), -int(bits - 16)) * dist;
  real_t pi = const_pi();
  // (1/2pi i) \oint g(w)/(w-z) dw = (1/2pi) int g(e^{it}) e^{it}/(e^{it}-z) dt
  auto cauchy = [&](auto&& g) {
    auto integrand = [&](const real_t& t) {
      cplx w = unit(t);
      return g(w) * w / (w - zz);
    };
    cplx arc = (abs(sp.arc_value) == 0)
                   ? cplx(0)
                   : integrate_adaptive(integrand, -sp.theta0, sp.theta0, tol);
    // gap piece has the gap value folded into g via symbol_eval
    cplx gap = (abs(sp.gap_value) == 0)
                   ? cplx(0)
                   : integrate_adaptive(integrand, sp.theta0, 2 * pi - sp.theta0, tol);
    return (arc + gap) / (2 * pi);
  };

  auto fval = [&](const cplx& w) {
    real_t t = arg(w);
    cplx base = (abs(t) < sp.theta0) ? sp.arc_value : sp.gap_value;
    return base * exp(w_eval(sp, w));
  };

  Matrix2C y;
  y.a11 = poly_eval(pn, zz);
  y.a21 = -d.chi_nm1 * d.chi_nm1 * poly_eval(rev_hat, zz);
  y.a12 = cauchy([&](const cplx& w) {
    return poly_eval(pn, w) * fval(w) / pow(w, real_t(n));
  });
  y.a22 = -d.chi_nm1 * d.chi_nm1 *
          cauchy([&](const cplx& w) {
            return poly_eval(rev_hat, w) * fval(w) / pow(w, real_t(n));
          });
  return y;
}

cplx ds_log_det(const SymbolSpec& spec, int n, unsigned precision_bits) {
  if (n < 1) throw DomainError("ds_log_det: n must be >= 1");
  PrecisionGuard guard(precision_bits);
  SymbolSpec sp = renorm(spec);
  int kmax = n - 1 > 0 ? n - 1 : 0;
  auto f = moments(sp, kmax);
  std::vector<cplx> df(2 * kmax + 1);
  for (int k = -kmax; k <= kmax; ++k) df[k + kmax] = ds_fourier_coeff(sp, k);
  PivotedLU lu(moment_matrix(f, kmax, n));
  cplx trace = 0;
  std::vector<cplx> col(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) col[i] = df[i - j + kmax];
    trace += lu.solve(col)[j];
  }
  return trace;
}

cplx diff_identity_general(const SymbolSpec& spec, int n, unsigned precision_bits) {
  if (n < 1) throw DomainError("diff_identity_general: n must be >= 1");
  PrecisionGuard guard(precision_bits);
  SymbolSpec sp = renorm(spec);
  OPUCData d = opuc(sp, n, precision_bits);
  std::vector<cplx> pn(n + 1), y21(n);
  for (int j = 0; j <= n; ++j) pn[j] = d.phi_n_coeffs[j] / d.chi_n;
  cplx c2 = -d.chi_nm1 * d.chi_nm1;
  for (int j = 0; j < n; ++j) y21[n - 1 - j] = c2 * (d.hat_phi_nm1_coeffs[j] / d.chi_nm1);

  unsigned bits = current_precision_bits();
  real_t tol = pow(real_t(2), -int(bits - 16));
  real_t pi = const_pi();
  // (1/2pi i) int_{gap arc} z^{-n} (Y11 Y21' - Y21 Y11') e^W dz
  auto integrand = [&](const real_t& t) {
    cplx z = unit(t);
    cplx bracket = poly_eval(pn, z) * poly_deriv_eval(y21, z) -
                   poly_eval(y21, z) * poly_deriv_eval(pn, z);
    return bracket * exp(w_eval(sp, z)) * z / pow(z, real_t(n));
  };
  cplx v = integrate_adaptive(integrand, sp.theta0, 2 * pi - sp.theta0, tol);
  return v / (2 * pi);
}

real_t diff_identity_w0(const SymbolSpec& spec, int n, const real_t& fd_step,
                        unsigned precision_bits) {
  if (!spec.w_zero()) throw DomainError("diff_identity_w0: requires W = 0");
  if (spec.gap_value.im != 0 || spec.arc_value != cplx(1))
    throw DomainError("diff_identity_w0: requires arc value 1, gap value s");
  real_t s = spec.gap_value.re;
  if (!(s > 0) || !(s < 1)) throw DomainError("diff_identity_w0: s must lie in (0,1)");
  unsigned bits = precision_bits + 160;
  PrecisionGuard guard(bits);
  real_t sr = to_precision(s);
  real_t h = to_precision(fd_step);
  SymbolSpec base = renorm(spec);

  auto at = [&](const real_t& sv) {
    SymbolSpec sp = base;
    sp.gap_value = cplx(sv);
    OPUCData d = opuc(sp, n, bits);
    return std::pair<cplx, cplx>(d.chi_n, d.chi_n * d.y11_at_z0);  // chi_n, phi_n(z0)
  };
  auto [chi_c, phi_c] = at(sr);
  auto [chi_p, phi_p] = at(sr + h);
  auto [chi_m, phi_m] = at(sr - h);
  cplx ds_chi = (chi_p - chi_m) / cplx(2 * h);
  cplx ds_phi = (phi_p - phi_m) / cplx(2 * h);
  cplx bracket = conj(phi_c) * ds_phi;
  real_t pi = const_pi();
  return -2 * n * (ds_chi / chi_c).re + (2 * (1 - sr) / pi) * bracket.im;
}

real_t cd_residual(const SymbolSpec& spec, int n, const cplx& z, unsigned precision_bits) {
  if (!spec.w_zero()) throw DomainError("cd_residual: requires W = 0");
  if (n < 1) throw DomainError("cd_residual: n must be >= 1");
  PrecisionGuard guard(precision_bits);
  SymbolSpec sp = renorm(spec);
  cplx zz = to_precision(z);
  if (abs(zz) == 0) throw DomainError("cd_residual: z = 0");
  auto f = moments(sp, n);
  cplx zi = cplx(1) / zz;

  cplx lhs = 0;
  std::vector<cplx> phin;
  for (int j = 0; j <= n; ++j) {
    auto [c, h] = monic_op(f, n, j, false);
    if (abs(h) == 0) throw SingularMinor(j + 1);
    cplx inv_h = cplx(1) / h;  // chi_j^2
    if (j < n) lhs += inv_h * poly_eval(c, zz) * poly_eval(c, zi);
    if (j == n) {
      // RHS with phi_n = chi_n * monic; (d/dz) phi_n(1/z) = -z^{-2} phi_n'(1/z)
      cplx pn_z = poly_eval(c, zz), pn_zi = poly_eval(c, zi);
      cplx dpn_z = poly_deriv_eval(c, zz), dpn_zi = poly_deriv_eval(c, zi);
      cplx rhs = inv_h * (cplx(-real_t(n)) * pn_z * pn_zi +
                          zz * (pn_zi * dpn_z + zi * zi * dpn_zi * pn_z));
      return abs(lhs - rhs);
    }
  }
  return real_t(0);  // unreachable
}

}  // namespace gaptlz
