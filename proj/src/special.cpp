#include "gaptlz/special.hpp"

namespace gaptlz {

namespace {

real_t eps_at(unsigned bits) { return pow(real_t(2), -int(bits)); }

// B_{2k} = (-1)^{k+1} 2 (2k)! zeta(2k) / (2 pi)^{2k}
real_t bernoulli_2k(unsigned k) {
  if (k == 0) return real_t(1);
  real_t fact = 1;
  for (unsigned j = 2; j <= 2 * k; ++j) fact *= j;
  real_t val = 2 * fact * zeta_int(2 * k) / pow(2 * const_pi(), 2 * int(k));
  return (k % 2 == 0) ? -val : val;
}

struct IKValues {
  cplx i0, i1, k0, k1;
};

// Power series for I0, I1, K0, K1 (principal log). The K sums cancel down
// from terms of size ~e^{|z|} to values ~e^{-|z|}, hence the |z|-dependent
// precision padding.
IKValues bessel_ik_series(const cplx& z, unsigned bits) {
  unsigned pad = static_cast<unsigned>(3.0 * static_cast<double>(abs(z))) + 32;
  PrecisionGuard guard(bits + pad);
  cplx zz = to_precision(z);
  cplx q = zz * zz / 4;
  real_t tol = eps_at(bits + pad / 2);

  real_t one = 1;
  cplx ti = one, tu = one;        // (z^2/4)^k/(k!)^2 and /(k!(k+1)!)
  cplx s_i0 = one, s_i1 = one;
  cplx s_k0 = 0, s_k1 = one;      // s_k1 starts at (H_0+H_1) tu_0 = 1
  real_t hk = 0;
  bool done = false;
  for (unsigned k = 1; k <= 200000; ++k) {
    real_t rk = int(k);
    ti *= q / (rk * rk);
    tu *= q / (rk * (rk + 1));
    hk += 1 / rk;
    real_t hk1 = hk + 1 / (rk + 1);
    s_i0 += ti;
    s_i1 += tu;
    s_k0 += ti * hk;
    s_k1 += tu * (hk + hk1);
    if (abs(ti) < tol && abs(tu) < tol) {
      done = true;
      break;
    }
  }
  if (!done) throw NonConvergence("bessel0: power series did not converge");

  cplx lg = log(zz / 2) + cplx(const_euler_gamma());
  IKValues v;
  v.i0 = s_i0;
  v.i1 = (zz / 2) * s_i1;
  v.k0 = -lg * s_i0 + s_k0;
  v.k1 = cplx(one) / zz + lg * v.i1 - (zz / 4) * s_k1;
  return v;
}

// sum_k a_k(nu) / w^k with a_k = a_{k-1} (4 nu^2 - (2k-1)^2)/(8k), truncated
// at the first term below tol; fails if the terms turn around first.
cplx asym_sum(const real_t& four_nu2, const cplx& w, const real_t& tol) {
  cplx acc = 1, term = 1;
  real_t last = real_infinity();
  for (unsigned k = 1; k <= 10000; ++k) {
    real_t num = four_nu2 - real_t(int(2 * k - 1)) * int(2 * k - 1);
    term *= cplx(num / (8 * int(k))) / w;
    real_t m = abs(term);
    if (m > last)
      throw NonConvergence("bessel0: asymptotic series diverged before converging");
    acc += term;
    if (m < tol) return acc;
    last = m;
  }
  throw NonConvergence("bessel0: asymptotic series did not converge");
}

IKValues bessel_ik_asym(const cplx& z, unsigned bits) {
  PrecisionGuard guard(bits + 32);
  cplx zz = to_precision(z);
  real_t tol = eps_at(bits + 8);
  real_t pi = const_pi();
  cplx pref_k = sqrt(cplx(pi) / (2 * zz)) * exp(-zz);
  cplx pref_i = exp(zz) / sqrt(2 * pi * zz);
  cplx sk0 = asym_sum(real_t(0), zz, tol);
  cplx sk1 = asym_sum(real_t(4), zz, tol);
  cplx si0 = asym_sum(real_t(0), -zz, tol);
  cplx si1 = asym_sum(real_t(4), -zz, tol);
  // I_nu = e^z (2 pi z)^{-1/2} sum (-1)^k a_k/z^k  -/+  i e^{+/- nu pi i} K_nu/pi,
  // upper signs for Im z >= 0.
  cplx iu(real_t(0), real_t(zz.im >= 0 ? 1 : -1));
  IKValues v;
  v.k0 = pref_k * sk0;
  v.k1 = pref_k * sk1;
  v.i0 = pref_i * si0 - iu * v.k0 / cplx(pi);
  v.i1 = pref_i * si1 + iu * v.k1 / cplx(pi);  // e^{+/- pi i} = -1 for nu = 1
  return v;
}

IKValues bessel_ik(const cplx& z, unsigned bits) {
  if (abs(z) < bessel0_crossover_radius()) return bessel_ik_series(z, bits);
  return bessel_ik_asym(z, bits);
}

}  // namespace

real_t bessel0_crossover_radius() {
  double r = (static_cast<double>(current_precision_bits()) + 10.0) / 2.5;
  return real_t(r < 30.0 ? 30.0 : r);
}

cplx bessel0(Bessel0Kind kind, const cplx& z) {
  if (z.re == 0 && z.im == 0) {
    if (kind == Bessel0Kind::I) return cplx(1);
    if (kind == Bessel0Kind::Ip) return cplx(0);
    throw DomainError("bessel0: logarithmic singularity at z = 0");
  }
  unsigned bits = current_precision_bits();
  real_t pi = const_pi();
  switch (kind) {
    case Bessel0Kind::I:
      return bessel_ik(z, bits).i0;
    case Bessel0Kind::Ip:
      return bessel_ik(z, bits).i1;
    case Bessel0Kind::K:
      return bessel_ik(z, bits).k0;
    case Bessel0Kind::Kp:
      return -bessel_ik(z, bits).k1;
    case Bessel0Kind::H1:
      // H0^(1)(z) = (2/(pi i)) K0(-i z); -iz must stay on the principal branch
      if (arg(z) <= -pi / 2) throw DomainError("bessel0: H1 outside supported sector");
      return cplx(real_t(0), real_t(-2)) / cplx(pi) * bessel_ik(cplx(z.im, -z.re), bits).k0;
    case Bessel0Kind::H1p:
      if (arg(z) <= -pi / 2) throw DomainError("bessel0: H1p outside supported sector");
      return cplx(2) / cplx(pi) * bessel_ik(cplx(z.im, -z.re), bits).k1;
    case Bessel0Kind::H2:
      // H0^(2)(z) = -(2/(pi i)) K0(i z)
      if (arg(z) >= pi / 2) throw DomainError("bessel0: H2 outside supported sector");
      return cplx(real_t(0), real_t(2)) / cplx(pi) * bessel_ik(cplx(-z.im, z.re), bits).k0;
    case Bessel0Kind::H2p:
      if (arg(z) >= pi / 2) throw DomainError("bessel0: H2p outside supported sector");
      return cplx(2) / cplx(pi) * bessel_ik(cplx(-z.im, z.re), bits).k1;
  }
  throw DomainError("bessel0: unknown kind");
}

cplx ln_gamma(const cplx& z) {
  if (z.im == 0 && z.re <= 0 && floor(z.re) == z.re)
    throw PoleError("ln_gamma: nonpositive integer argument");
  unsigned bits = current_precision_bits();
  PrecisionGuard guard(bits + 32);
  cplx w = to_precision(z);
  // Shift right until Stirling converges to the target precision, then undo.
  real_t target = real_t(int(bits)) / 9 + 10;
  cplx shift_log = 0;
  while (w.re < target) {
    shift_log += log(w);
    w += cplx(1);
  }
  real_t pi = const_pi();
  cplx res = (w - cplx(real_t(1) / 2)) * log(w) - w + cplx(log(2 * pi) / 2);
  real_t tol = eps_at(bits + 8);
  real_t last = real_infinity();
  cplx w2 = w * w, wp = w;
  for (unsigned k = 1; k <= 2000; ++k) {
    cplx term = cplx(bernoulli_2k(k) / (int(2 * k) * int(2 * k - 1))) / wp;
    real_t m = abs(term);
    if (m > last) throw NonConvergence("ln_gamma: asymptotic series stalled");
    res += term;
    if (m < tol) break;
    last = m;
    wp *= w2;
  }
  return res - shift_log;
}

namespace {

// Taylor series of ln G(1+w) on |w| < 1.
cplx barnes_taylor(const cplx& w, unsigned bits) {
  real_t pi = const_pi();
  cplx res = (w / 2) * cplx(log(2 * pi)) - w * (w + cplx(1)) / 2 -
             cplx(const_euler_gamma() / 2) * w * w;
  real_t tol = eps_at(bits + 8);
  cplx wp = w * w * w;
  for (unsigned k = 3; k <= 1000000; ++k) {
    cplx term = cplx(zeta_int(k - 1) / int(k)) * wp;
    if (k % 2 == 0) term = -term;
    res += term;
    if (abs(wp) < tol) break;
    wp *= w;
  }
  return res;
}

// Large-|w| expansion of ln G(1+w), Re w large positive:
// w^2/4 + w lnGamma(w+1) - (w(w+1)/2 + 1/12) ln w - (1/12 - zeta'(-1))
//   + sum_{k>=1} B_{2k+2} / (2k (2k+1)(2k+2) w^{2k})
cplx barnes_asym(const cplx& w, unsigned bits) {
  cplx res = w * w / 4 + w * ln_gamma(w + cplx(1)) -
             (w * (w + cplx(1)) / 2 + cplx(real_t(1) / 12)) * log(w) -
             cplx(real_t(1) / 12 - zeta_prime_at_minus_one());
  real_t tol = eps_at(bits + 8);
  real_t last = real_infinity();
  cplx w2 = w * w, wp = w2;
  for (unsigned k = 1; k <= 2000; ++k) {
    real_t den = real_t(2 * int(k)) * (2 * int(k) + 1) * (2 * int(k) + 2);
    cplx term = cplx(bernoulli_2k(k + 1) / den) / wp;
    real_t m = abs(term);
    if (m > last) throw NonConvergence("ln_barnes_g: asymptotic series stalled");
    res += term;
    if (m < tol) break;
    last = m;
    wp *= w2;
  }
  return res;
}

}  // namespace

cplx ln_barnes_g(const cplx& z) {
  if (z.im == 0 && z.re <= -1 && floor(z.re) == z.re)
    throw PoleError("ln_barnes_g: G(1+z) vanishes at negative integer z");
  unsigned bits = current_precision_bits();
  PrecisionGuard guard(bits + 32);
  cplx w = to_precision(z);
  cplx extra = 0;
  if (abs(w.im) <= real_t(4) / 5) {
    // Walk toward the Taylor disk: ln G(1+w) = ln Gamma(w) + ln G(1+(w-1))
    // going down, the inverse going up.
    while (w.re > real_t(2) / 5) {
      extra += ln_gamma(w);
      w -= cplx(1);
    }
    while (w.re < -real_t(2) / 5) {
      w += cplx(1);
      extra -= ln_gamma(w);
    }
    return barnes_taylor(w, bits) + extra;
  }
  // Off-axis: shift Re w up and use the large-argument expansion.
  real_t target = real_t(int(bits)) / 9 + 10;
  while (w.re < target) {
    w += cplx(1);
    extra -= ln_gamma(w);
  }
  return barnes_asym(w, bits) + extra;
}

real_t zeta_prime_at_minus_one(unsigned precision_bits) {
  unsigned bits = precision_bits + 32;
  PrecisionGuard guard(bits);
  // zeta'(2) by Euler-Maclaurin on f(x) = -ln x / x^2:
  // sum_{n>=N} f(n) = int_N^inf f + f(N)/2 - sum_j B_{2j}/(2j)! f^(2j-1)(N)
  unsigned N = bits / 4 + 16;
  real_t zp2 = 0;
  for (unsigned n = 2; n < N; ++n) {
    real_t rn = int(n);
    zp2 -= log(rn) / (rn * rn);
  }
  real_t rN = int(N);
  real_t lnN = log(rN);
  zp2 += -(lnN + 1) / rN;      // integral tail
  zp2 += -lnN / (rN * rN) / 2; // f(N)/2
  // f^(m)(x) = x^{-2-m} (a_m ln x + b_m); a_{m+1} = -(2+m) a_m, b_{m+1} = a_m - (2+m) b_m
  real_t am = -1, bm = 0;
  unsigned m = 0;
  real_t tol = eps_at(bits - 8);
  real_t last = real_infinity();
  real_t fact = 1;
  for (unsigned j = 1; j <= 500; ++j) {
    while (m < 2 * j - 1) {
      real_t a1 = -(2 + int(m)) * am;
      bm = am - (2 + int(m)) * bm;
      am = a1;
      ++m;
    }
    fact *= real_t(2 * int(j) - 1) * (2 * int(j));
    real_t deriv = pow(rN, -int(2 + m)) * (am * lnN + bm);
    real_t term = -bernoulli_2k(j) / fact * deriv;
    real_t mg = abs(term);
    if (mg > last) break;
    zp2 += term;
    if (mg < tol) break;
    last = mg;
  }
  real_t pi = const_pi();
  real_t z2 = pi * pi / 6;
  real_t res = -(log(2 * pi) + const_euler_gamma() - 1 - zp2 / z2) / 12;
  PrecisionGuard shrink(precision_bits);
  real_t out;
  mpfr_set(out.backend().data(), res.backend().data(), MPFR_RNDN);
  return out;
}

real_t zeta_prime_at_minus_one() {
  return zeta_prime_at_minus_one(current_precision_bits());
}

}  // namespace gaptlz
