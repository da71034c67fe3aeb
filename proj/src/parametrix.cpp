#include "gaptlz/parametrix.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "gaptlz/asymptotics.hpp"
#include "gaptlz/equilibrium.hpp"
#include "gaptlz/quadrature.hpp"
#include "gaptlz/special.hpp"

namespace gaptlz {

namespace {

real_t quad_tol(unsigned bits) { return pow(real_t(2), -int(bits) - 8); }

cplx imag_unit() { return cplx(0, 1); }

cplx ipow(const cplx& z, int k) {
  if (k < 0) return cplx(1) / ipow(z, -k);
  cplx acc(1), base = z;
  for (unsigned e = unsigned(k); e; e >>= 1, base *= base)
    if (e & 1) acc *= base;
  return acc;
}

// Continuous-in-theta argument of z - e^{i theta} over theta in [-theta0,
// theta0], normalized to the principal value at theta = -theta0. The branch
// changes only where z - e^{i theta} crosses the negative real axis; the
// crossing angles are located in closed form and a constant 2 pi k offset is
// attached to each sub-interval.
struct ArgTracker {
  cplx z;
  std::vector<real_t> cross;
  std::vector<real_t> offsets;  // size cross.size() + 1

  ArgTracker(const cplx& zz, const real_t& th0) : z(zz) {
    real_t pi = const_pi();
    if (abs(z.im) <= 1) {
      real_t t1 = asin(z.im);
      real_t t2 = t1 >= 0 ? pi - t1 : -pi - t1;
      for (const real_t& t : {t1, t2})
        if (t > -th0 && t < th0 && cos(t) > z.re) cross.push_back(t);
    }
    std::sort(cross.begin(), cross.end());
    cross.erase(std::unique(cross.begin(), cross.end()), cross.end());
    offsets.assign(cross.size() + 1, real_t(0));
    real_t two_pi = 2 * pi;
    for (size_t i = 0; i < cross.size(); ++i) {
      real_t room = th0 - abs(cross[i]);
      if (i + 1 < cross.size()) room = std::min(room, cross[i + 1] - cross[i]);
      if (i > 0) room = std::min(room, cross[i] - cross[i - 1]);
      real_t eps = std::min(room / 4, real_t("1e-10"));
      real_t before = arg(z - unit(cross[i] - eps));
      real_t after = arg(z - unit(cross[i] + eps));
      real_t k = floor((before - after) / two_pi + real_t(1) / 2);
      offsets[i + 1] = offsets[i] + two_pi * k;
    }
  }

  real_t operator()(const real_t& th) const {
    size_t idx =
        std::upper_bound(cross.begin(), cross.end(), th) - cross.begin();
    return arg(z - unit(th)) + offsets[idx];
  }
};

// integral over the arc of G(theta) / sqrt(cos theta - cos theta0) with G
// smooth: square-root substitution on the outer halves, direct panels inside
cplx arc_invsqrt_integral(const real_t& th0,
                          const std::function<cplx(const real_t&)>& G,
                          const real_t& tol) {
  real_t c = cos(th0);
  real_t h = th0 / 2;
  real_t tmax = sqrt(cos(h) - c);
  cplx acc(0);
  for (int side = 0; side < 2; ++side) {
    auto f = [&, side](const real_t& t) {
      real_t thm = acos(c + t * t);
      real_t th = side == 0 ? thm : -thm;
      return G(th) * (2 / sin(thm));
    };
    acc += integrate_adaptive(f, real_t(0), tmax, tol / 3);
  }
  auto mid = [&](const real_t& th) { return G(th) / sqrt(cos(th) - c); };
  acc += integrate_adaptive(mid, -h, h, tol / 3);
  return acc;
}

}  // namespace

ParametrixContext::ParametrixContext(const real_t& th0, std::map<int, cplx> w,
                                     int n_, const real_t& x_)
    : theta0(th0), W(std::move(w)), n(n_), x(x_) {
  real_t pi = const_pi();
  disk_radius = (real_t(2) / 5) * (pi - theta0) * std::min(real_t(1), theta0);
  lens_offset = disk_radius / 4;
  validate();
}

ParametrixContext::ParametrixContext(const real_t& th0, std::map<int, cplx> w,
                                     int n_, const real_t& x_, const real_t& r,
                                     const real_t& lens)
    : theta0(th0), W(std::move(w)), n(n_), x(x_), disk_radius(r),
      lens_offset(lens) {
  validate();
}

void ParametrixContext::validate() const {
  real_t pi = const_pi();
  if (!(theta0 > 0) || !(theta0 < pi))
    throw DomainError("ParametrixContext: need 0 < theta0 < pi");
  if (n < 1) throw DomainError("ParametrixContext: need n >= 1");
  if (!is_infinite(x) && x < x_critical(theta0))
    throw DomainError("ParametrixContext: need x >= x_c(theta0)");
  if (!(disk_radius > 0))
    throw DomainError("ParametrixContext: disk_radius must be positive");
  // the disks at z0, conj(z0) and -1 must stay disjoint
  if (!(sin(theta0) > disk_radius) || !(cos(theta0 / 2) > disk_radius))
    throw DomainError("ParametrixContext: disks overlap; shrink disk_radius");
  if (!(lens_offset > 0) || !(lens_offset < 1))
    throw DomainError("ParametrixContext: need 0 < lens_offset < 1");
}

cplx w_poly(const std::map<int, cplx>& W, const cplx& z) {
  cplx acc(0);
  for (const auto& [k, coeff] : W) acc += coeff * ipow(z, k);
  return acc;
}

cplx q_gamma(const real_t& theta0, const cplx& z) {
  real_t c = cos(theta0);
  cplx s = sqrt(z * z - 2 * cplx(c) * z + cplx(1));
  bool outer = z.re > c && norm(z) > 1;
  return outer ? s : -s;
}

cplx beta_ratio(const real_t& theta0, const cplx& z) {
  cplx zbar0 = unit(-theta0);
  return sqrt((z - zbar0) / q_gamma(theta0, z));
}

cplx g_function(const ParametrixContext& ctx, const cplx& z) {
  unsigned bits = current_precision_bits();
  PrecisionGuard guard(bits + 32);
  real_t th0 = to_precision(ctx.theta0);
  cplx zz = to_precision(z);
  real_t r = abs(zz);
  real_t a = arg(zz);
  if (abs(r - 1) < real_t("1e-8") && abs(a) < th0 - real_t("1e-8"))
    throw BranchAmbiguity("g_function: point within 1e-8 of the arc");

  ArgTracker track(zz, th0);
  auto f_re = [&](const real_t& th) { return log(abs(zz - unit(th))); };
  auto f_im = [&](const real_t& th) { return track(th); };

  std::vector<real_t> log_pts;
  if (abs(r - 1) < real_t("1e-6")) log_pts.push_back(a);

  real_t tol = pow(real_t(2), -int(bits) / 2 - 24);
  real_t re = integrate_against_density(th0, real_t(0), f_re, log_pts, tol);
  real_t im = integrate_against_density(th0, real_t(0), f_im, {}, tol);
  return cplx(to_precision(re), to_precision(im));
}

cplx phi_function(const ParametrixContext& ctx, const cplx& z) {
  unsigned bits = current_precision_bits();
  PrecisionGuard guard(bits + 32);
  real_t th0 = to_precision(ctx.theta0);
  cplx zz = to_precision(z);
  cplx z0c = unit(th0);
  if (abs(zz - z0c) == 0) return cplx(0);
  if (abs(zz) < real_t("1e-8"))
    throw PathCrossesCut("phi_function: path cannot avoid the origin");
  real_t rho = abs(zz);
  real_t a = arg(zz);
  // radii within working roundoff of the circle are snapped onto it so the
  // radial leg is not a noise-dominated sliver
  if (abs(rho - 1) < pow(real_t(2), -int(bits) + 16)) rho = 1;
  bool on_circle = abs(rho - 1) < real_t("1e-8");
  if (on_circle && abs(a) < th0 - real_t("1e-8"))
    throw PathCrossesCut("phi_function: target lies on the arc cut");

  auto f = [&](const cplx& xi) {
    return (xi + cplx(1)) / (q_gamma(th0, xi) * xi);
  };
  // kept above the cancellation noise floor of q near z0
  real_t tol = pow(real_t(2), -int(bits) + 8);
  cplx acc(0);

  // radial leg from z0 with a square-root substitution at the start
  real_t dr = rho - 1;
  if (dr != 0) {
    int sgn = dr > 0 ? 1 : -1;
    real_t vmax = sqrt(abs(dr));
    auto leg = [&](const real_t& v) {
      cplx xi = cplx(1 + sgn * v * v) * z0c;
      return f(xi) * cplx(2 * sgn * v) * z0c;
    };
    acc += integrate_adaptive(leg, real_t(0), vmax, tol);
  }

  // angular sweep at radius rho from theta0 to arg z; points on the circle in
  // the lower gap are reached the long way around through the gap so the arc
  // cut is never touched
  real_t target = a;
  if (on_circle && a <= -(th0 - real_t("1e-8"))) target = a + 2 * const_pi();
  real_t span = target - th0;
  if (span != 0) {
    int sgn = span > 0 ? 1 : -1;
    real_t w = std::min(abs(span), real_t(1) / 4);
    auto start = [&](const real_t& u) {
      cplx xi = cplx(rho) * unit(th0 + sgn * u * u);
      return f(xi) * imag_unit() * xi * cplx(2 * sgn * u);
    };
    acc += integrate_adaptive(start, real_t(0), sqrt(w), tol);
    if (abs(span) > w) {
      auto rest = [&](const real_t& t) {
        cplx xi = cplx(rho) * unit(t);
        return f(xi) * imag_unit() * xi;
      };
      acc += integrate_adaptive(rest, th0 + sgn * w, target, tol);
    }
  }
  return to_precision(acc);
}

real_t phi_on_gap(const ParametrixContext& ctx, const real_t& alpha) {
  unsigned bits = current_precision_bits();
  PrecisionGuard guard(bits + 32);
  real_t th0 = to_precision(ctx.theta0);
  real_t al = to_precision(alpha);
  if (!(al > th0) || !(al < 2 * const_pi() - th0))
    throw OutsideGap("phi_on_gap: need theta0 < alpha < 2 pi - theta0");
  real_t k = sin(th0 / 2);
  real_t v = sin(al / 2);
  real_t rad = v * v - k * k;
  if (rad < 0) rad = 0;  // roundoff at the endpoints
  return to_precision(2 * log((v + sqrt(rad)) / k));
}

cplx szego_h(const ParametrixContext& ctx, const cplx& z) {
  if (ctx.W.empty()) return cplx(0);
  unsigned bits = current_precision_bits();
  PrecisionGuard guard(bits + 32);
  real_t th0 = to_precision(ctx.theta0);
  cplx zz = to_precision(z);
  if (abs(abs(zz) - 1) < real_t("1e-12") && abs(arg(zz)) < th0 - real_t("1e-12"))
    throw DomainError("szego_h: point on the arc");
  real_t sqrt2 = sqrt(real_t(2));
  auto G = [&](const real_t& th) {
    cplx e = unit(th);
    return -imag_unit() * unit(th / 2) * w_poly(ctx.W, e) /
           (cplx(sqrt2) * (e - zz));
  };
  cplx integral = arc_invsqrt_integral(th0, G, quad_tol(bits));
  // prefactor q(z)/(2 pi i)
  return to_precision(q_gamma(th0, zz) * integral * (-imag_unit()) /
                      cplx(2 * const_pi()));
}

cplx szego_h_infinity(const ParametrixContext& ctx) {
  if (ctx.W.empty()) return cplx(0);
  unsigned bits = current_precision_bits();
  PrecisionGuard guard(bits + 32);
  real_t th0 = to_precision(ctx.theta0);
  real_t sqrt2 = sqrt(real_t(2));
  auto G = [&](const real_t& th) {
    return unit(th / 2) * w_poly(ctx.W, unit(th)) / cplx(sqrt2);
  };
  cplx integral = arc_invsqrt_integral(th0, G, quad_tol(bits));
  return to_precision(integral / cplx(2 * const_pi()));
}

Matrix2C global_parametrix(const ParametrixContext& ctx, const cplx& z) {
  unsigned bits = current_precision_bits();
  PrecisionGuard guard(bits + 32);
  real_t th0 = to_precision(ctx.theta0);
  cplx zz = to_precision(z);
  cplx b = beta_ratio(th0, zz);
  cplx bi = cplx(1) / b;
  cplx d = (b + bi) / cplx(2);
  cplx o = imag_unit() * (b - bi) / cplx(2);
  Matrix2C core{d, o, -o, d};
  cplx hinf = szego_h_infinity(ctx);
  cplx h = szego_h(ctx, zz);
  Matrix2C out = exp_sigma3(hinf) * core * exp_sigma3(-h);
  return {to_precision(out.a11), to_precision(out.a12), to_precision(out.a21),
          to_precision(out.a22)};
}

Matrix2C bessel_model_psi(const cplx& zeta) {
  unsigned bits = current_precision_bits();
  PrecisionGuard guard(bits + 32);
  cplx zt = to_precision(zeta);
  if (abs(zt) == 0) throw OnContour("bessel_model_psi: zeta = 0");
  real_t pi = const_pi();
  real_t two3 = 2 * pi / 3;
  real_t a = arg(zt);
  real_t contol("1e-25");
  if (abs(a - pi) < contol || abs(a - two3) < contol || abs(a + two3) < contol)
    throw OnContour("bessel_model_psi: zeta on the model contour");
  cplx sq = sqrt(zt);
  Matrix2C m;
  if (abs(a) < two3) {
    cplx w = cplx(2) * sq;
    m = {bessel0(Bessel0Kind::I, w),
         imag_unit() / cplx(pi) * bessel0(Bessel0Kind::K, w),
         cplx(2 * pi) * imag_unit() * sq * bessel0(Bessel0Kind::Ip, w),
         cplx(-2) * sq * bessel0(Bessel0Kind::Kp, w)};
  } else {
    cplx v = cplx(2) * sqrt(-zt);
    cplx h1 = bessel0(Bessel0Kind::H1, v), h2 = bessel0(Bessel0Kind::H2, v);
    cplx h1p = bessel0(Bessel0Kind::H1p, v), h2p = bessel0(Bessel0Kind::H2p, v);
    if (a > 0)
      m = {h1 / cplx(2), h2 / cplx(2), cplx(pi) * sq * h1p,
           cplx(pi) * sq * h2p};
    else
      m = {h2 / cplx(2), -h1 / cplx(2), -cplx(pi) * sq * h2p,
           cplx(pi) * sq * h1p};
  }
  return {to_precision(m.a11), to_precision(m.a12), to_precision(m.a21),
          to_precision(m.a22)};
}

Matrix2C bessel_model_f(const cplx& zeta) {
  unsigned bits = current_precision_bits();
  PrecisionGuard guard(bits + 32);
  cplx zt = to_precision(zeta);
  Matrix2C psi = bessel_model_psi(zt);
  real_t two3 = 2 * const_pi() / 3;
  real_t a = arg(zt);
  // unwind matrices continuing the principal-log column operation
  cplx e12 = imag_unit() * log(zt) / cplx(2 * const_pi());
  Matrix2C shear{cplx(1), e12, cplx(0), cplx(1)};
  if (a > two3) {
    Matrix2C lower{cplx(1), cplx(0), cplx(1), cplx(1)};
    return psi * lower * shear;
  }
  if (a < -two3) {
    Matrix2C lower{cplx(1), cplx(0), cplx(-1), cplx(1)};
    return psi * lower * shear;
  }
  return psi * shear;
}

Matrix2C psi_hat(const cplx& zeta, const real_t& nx) {
  if (nx < 0) throw DomainError("psi_hat: need nx >= 0");
  unsigned bits = current_precision_bits();
  PrecisionGuard guard(bits + 32);
  cplx zt = to_precision(zeta);
  if (abs(arg(zt)) < real_t("1e-25"))
    throw OnContour("psi_hat: zeta on the positive real axis");
  Matrix2C psi = bessel_model_psi(zt);
  real_t damp = exp(-to_precision(nx));
  if (damp == 0) return psi;
  Matrix2C f = bessel_model_f(zt);
  cplx n12 = imag_unit() * log(-zt) / cplx(2 * const_pi());
  Matrix2C nil{cplx(0), n12, cplx(0), cplx(0)};
  Matrix2C a = cplx(damp) * (f * nil * inverse(f));
  return (Matrix2C::identity() + a) * psi;
}

cplx zeta_map(const ParametrixContext& ctx, const cplx& z) {
  cplx phi = phi_function(ctx, z);
  return phi * phi / cplx(16);
}

Matrix2C local_prefactor_e(const ParametrixContext& ctx, const cplx& z) {
  unsigned bits = current_precision_bits();
  PrecisionGuard guard(bits + 32);
  cplx zz = to_precision(z);
  Matrix2C pinf = global_parametrix(ctx, zz);
  cplx wv = w_poly(ctx.W, zz);
  cplx phi = phi_function(ctx, zz);
  cplx v = sqrt(cplx(real_t(ctx.n) * const_pi() / 2) * phi);
  real_t inv_sqrt2 = 1 / sqrt(real_t(2));
  Matrix2C rot{cplx(inv_sqrt2), cplx(0, -inv_sqrt2), cplx(0, -inv_sqrt2),
               cplx(inv_sqrt2)};
  Matrix2C half_pow{v, cplx(0), cplx(0), cplx(1) / v};
  return pinf * exp_sigma3(wv / cplx(2)) * rot * half_pow;
}

Matrix2C local_parametrix(const ParametrixContext& ctx, const cplx& z,
                          LocalCenter which) {
  unsigned bits = current_precision_bits();
  PrecisionGuard guard(bits + 32);
  cplx zz = to_precision(z);
  real_t r = to_precision(ctx.disk_radius);
  real_t slack = 1 + real_t("1e-10");

  if (which == LocalCenter::zbar0) {
    Matrix2C p = local_parametrix(ctx, conj(zz), LocalCenter::z0);
    return {conj(p.a11), conj(p.a12), conj(p.a21), conj(p.a22)};
  }

  if (which == LocalCenter::z0) {
    cplx z0c = unit(to_precision(ctx.theta0));
    if (abs(zz - z0c) > r * slack)
      throw OutsideDisk("local_parametrix: point not in D(z0, r)");
    cplx phi = phi_function(ctx, zz);
    cplx zeta = phi * phi / cplx(16);
    real_t nn = to_precision(real_t(ctx.n));
    Matrix2C hat = psi_hat(cplx(nn * nn) * zeta, nn * to_precision(ctx.x));
    Matrix2C e = local_prefactor_e(ctx, zz);
    cplx wv = w_poly(ctx.W, zz);
    Matrix2C tail = exp_sigma3(-(cplx(nn) * phi + wv) / cplx(2));
    return e * hat * tail;
  }

  // rank-one correction at -1
  if (abs(zz + cplx(1)) > r * slack)
    throw OutsideDisk("local_parametrix: point not in D(-1, r)");
  real_t pi = const_pi();
  real_t alo = 2 * acos(r / 2);
  real_t ahi = 2 * pi - alo;
  real_t nn = to_precision(real_t(ctx.n));
  real_t xx = to_precision(ctx.x);
  cplx ht(0);
  if (!is_infinite(xx)) {
    real_t scale = exp(nn * (x_critical(to_precision(ctx.theta0)) - xx));
    auto f = [&](const real_t& al) {
      cplx s = unit(al);
      cplx num = exp(cplx(nn * (phi_on_gap(ctx, al) - xx)) + w_poly(ctx.W, s));
      return num / (s - zz) * imag_unit() * s;
    };
    real_t tol = scale * pow(real_t(2), -int(bits));
    if (tol > 0)
      ht = integrate_adaptive(f, alo, ahi, tol) * (-imag_unit()) /
           cplx(2 * pi);
  }
  Matrix2C shear{cplx(1), ht, cplx(0), cplx(1)};
  return global_parametrix(ctx, zz) * shear;
}

cplx lens_point(const ParametrixContext& ctx, bool inner, const real_t& t) {
  if (!(t > 0) || !(t < 1))
    throw DomainError("lens_point: need 0 < t < 1");
  unsigned bits = current_precision_bits();
  PrecisionGuard guard(bits + 32);
  real_t th0 = to_precision(ctx.theta0);
  real_t d = to_precision(ctx.lens_offset);
  real_t c = cos(th0);
  // circle through z0, conj(z0) and the real point 1 -+ lens_offset
  real_t p = inner ? 1 - d : 1 + d;
  real_t m = (p * p - 1) / (2 * (p - c));
  real_t radius = abs(p - m);
  real_t psi0 = atan2(sin(th0), c - m);
  real_t psi = psi0 * (1 - 2 * to_precision(t));
  return to_precision(cplx(m) + cplx(radius) * unit(psi));
}

real_t jump_residual(const ParametrixContext& ctx, JumpObject object,
                     const cplx& point, const real_t& offset) {
  if (!(offset > 0)) throw DomainError("jump_residual: need offset > 0");
  unsigned bits = current_precision_bits();
  PrecisionGuard guard(bits + 32);
  cplx p = to_precision(point);
  real_t off = to_precision(offset);
  real_t th0 = to_precision(ctx.theta0);
  real_t pi = const_pi();
  real_t two3 = 2 * pi / 3;
  real_t nn = real_t(ctx.n);
  real_t xx = to_precision(ctx.x);

  auto on_unit_circle = [&](const cplx& q) {
    return abs(abs(q) - 1) < real_t("1e-9");
  };

  switch (object) {
    case JumpObject::Pinf: {
      if (!on_unit_circle(p) || !(abs(arg(p)) < th0))
        throw DomainError("jump_residual: Pinf point must lie on the arc");
      cplx wv = w_poly(ctx.W, p);
      Matrix2C j{cplx(0), exp(wv), -exp(-wv), cplx(0)};
      Matrix2C lp = global_parametrix(ctx, p * cplx(1 - off));
      Matrix2C lm = global_parametrix(ctx, p * cplx(1 + off));
      return to_precision(norm_max(lp - lm * j));
    }
    case JumpObject::Psi:
    case JumpObject::PsiHat: {
      real_t a = arg(p);
      real_t ray;
      Matrix2C j;
      bool hat = object == JumpObject::PsiHat;
      if (abs(a - pi) < real_t("1e-9") || abs(a + pi) < real_t("1e-9")) {
        ray = pi;
        j = Matrix2C{cplx(0), cplx(1), cplx(-1), cplx(0)};
      } else if (abs(a - two3) < real_t("1e-9")) {
        ray = two3;
        j = Matrix2C{cplx(1), cplx(0), cplx(1), cplx(1)};
      } else if (abs(a + two3) < real_t("1e-9")) {
        ray = -two3;
        j = Matrix2C{cplx(1), cplx(0), cplx(1), cplx(1)};
      } else if (hat && abs(a) < real_t("1e-9")) {
        ray = 0;
        j = Matrix2C{cplx(1), cplx(exp(-nn * xx)), cplx(0), cplx(1)};
      } else {
        throw DomainError("jump_residual: point not on the model contour");
      }
      // + side is to the left of the contour orientation: the three
      // half-lines run from infinity towards 0, the positive axis (PsiHat
      // only) runs outward
      cplx nrm = (ray == 0 || ray == pi) ? imag_unit()
                                         : -imag_unit() * unit(ray);
      cplx zp = p + cplx(off) * nrm;
      cplx zm = p - cplx(off) * nrm;
      Matrix2C lp = hat ? psi_hat(zp, nn * xx) : bessel_model_psi(zp);
      Matrix2C lm = hat ? psi_hat(zm, nn * xx) : bessel_model_psi(zm);
      return to_precision(norm_max(lp - lm * j));
    }
    case JumpObject::S: {
      // the deformed matrix itself is never built; report the deviation of
      // its jump matrix from the identity
      if (on_unit_circle(p)) {
        real_t al = arg(p);
        if (al < 0) al += 2 * pi;
        if (!(al > th0) || !(al < 2 * pi - th0))
          throw DomainError("jump_residual: S point on the arc, not the gap");
        real_t expo = nn * (phi_on_gap(ctx, al) - xx) + w_poly(ctx.W, p).re;
        return to_precision(exp(expo));
      }
      cplx phi = phi_function(ctx, p);
      real_t expo = -nn * phi.re - w_poly(ctx.W, p).re;
      return to_precision(exp(expo));
    }
    case JumpObject::P: {
      if (!on_unit_circle(p))
        throw DomainError("jump_residual: P point must lie on the circle");
      real_t a = arg(p);
      Matrix2C j;
      if (abs(a) < th0) {
        cplx wv = w_poly(ctx.W, p);
        j = Matrix2C{cplx(0), exp(wv), -exp(-wv), cplx(0)};
      } else {
        real_t al = a < 0 ? a + 2 * pi : a;
        cplx e12 = exp(cplx(nn * (phi_on_gap(ctx, al) - xx)) + w_poly(ctx.W, p));
        j = Matrix2C{cplx(1), e12, cplx(0), cplx(1)};
      }
      Matrix2C lp = local_parametrix(ctx, p * cplx(1 - off), LocalCenter::z0);
      Matrix2C lm = local_parametrix(ctx, p * cplx(1 + off), LocalCenter::z0);
      return to_precision(norm_max(lp - lm * j));
    }
  }
  throw DomainError("jump_residual: unknown object");
}

std::string residual_csv_row(const std::string& object, const cplx& point,
                             const real_t& offset, const real_t& residual) {
  std::ostringstream out;
  out << object << "," << to_str(point.re) << "," << to_str(point.im) << ","
      << to_str(offset) << "," << to_str(residual);
  return out.str();
}

}  // namespace gaptlz
