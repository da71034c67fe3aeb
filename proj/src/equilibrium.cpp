#include "gaptlz/equilibrium.hpp"

#include <nlohmann/json.hpp>

#include "gaptlz/asymptotics.hpp"
#include "gaptlz/quadrature.hpp"

namespace gaptlz {

namespace {

using Fn = std::function<real_t(const real_t&)>;

real_t eps_at(unsigned bits) { return pow(real_t(2), -int(bits)); }

// fold an angle into (-pi, pi]
real_t normalize_angle(const real_t& a) {
  real_t two_pi = 2 * const_pi();
  real_t r = a - two_pi * floor(a / two_pi + real_t(1) / 2);
  if (r <= -const_pi()) r += two_pi;
  return r;
}

// [a,b] with an integrable log singularity at one or both endpoints: dyadic
// panels shrinking toward the singular end, smooth panels handled adaptively.
real_t integrate_log_endpoint(const Fn& g, const real_t& a, const real_t& b,
                              bool sing_a, bool sing_b, const real_t& tol) {
  if (b <= a) return real_t(0);
  if (!sing_a && !sing_b) return integrate_adaptive(g, a, b, tol);
  if (sing_a && sing_b) {
    real_t mid = (a + b) / 2;
    return integrate_log_endpoint(g, a, mid, true, false, tol / 2) +
           integrate_log_endpoint(g, mid, b, false, true, tol / 2);
  }
  if (sing_b) {
    auto rev = [&](const real_t& t) { return g(a + b - t); };
    return integrate_log_endpoint(rev, a, b, true, false, tol);
  }
  // dyadic panels toward the singular endpoint are analytic once the
  // endpoint is excluded; a fixed high-order rule on each converges
  // geometrically, so no per-panel refinement is needed
  int kmax = int(current_precision_bits()) + 48;
  real_t acc = 0, hi = b;
  for (int k = 0; k < kmax; ++k) {
    real_t lo = a + (hi - a) / 2;
    real_t p = integrate_fixed(g, lo, hi, 32);
    acc += p;
    hi = lo;
    if (k >= 16 && abs(p) < tol / 4) break;
  }
  return acc;
}

// [a,b] split at interior singular points of g, each handled dyadically.
real_t integrate_with_log_points(const Fn& g, const real_t& a, const real_t& b,
                                 std::vector<real_t> sing, bool sing_a,
                                 bool sing_b, const real_t& tol) {
  std::sort(sing.begin(), sing.end());
  std::vector<real_t> cuts{a};
  for (const real_t& s : sing)
    if (s > cuts.back() && s < b) cuts.push_back(s);
  cuts.push_back(b);
  real_t acc = 0;
  int np = int(cuts.size()) - 1;
  for (int i = 0; i < np; ++i) {
    bool sa = (i > 0) || sing_a;
    bool sb = (i + 1 < np) || sing_b;
    acc += integrate_log_endpoint(g, cuts[i], cuts[i + 1], sa, sb,
                                  tol / np);
  }
  return acc;
}

}  // namespace

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::one_arc: return "one_arc";
    case Regime::critical: return "critical";
    default: return "two_arc";
  }
}

real_t integrate_against_density(const real_t& theta0, const real_t& theta1,
                                 const Fn& F,
                                 const std::vector<real_t>& log_points,
                                 const real_t& tol) {
  unsigned bits = current_precision_bits();
  PrecisionGuard guard(bits + 32);
  real_t th0 = to_precision(theta0);
  real_t th1 = to_precision(theta1);
  real_t tl = to_precision(tol);
  real_t pi = const_pi();
  real_t c0 = cos(th0), c1 = cos(th1);

  std::vector<real_t> sing;
  for (const real_t& s : log_points) sing.push_back(normalize_angle(to_precision(s)));

  real_t acc = 0;

  // main arc [-theta0, theta0]: density has inverse square-root endpoints,
  // removed by the substitution cos theta = cos theta0 + t^2 on the outer
  // halves of the arc.
  {
    real_t h = th0 / 2;
    real_t tmax = sqrt(cos(h) - c0);
    for (int side = 0; side < 2; ++side) {
      // side 0: [theta0/2, theta0]; side 1: [-theta0, -theta0/2]
      auto g = [&, side](const real_t& t) {
        real_t thm = acos(c0 + t * t);
        real_t th = side == 0 ? thm : -thm;
        return F(th) * sqrt(cos(thm) + c1) / (pi * sin(thm));
      };
      // a singular point near a region boundary also flags the adjacent
      // endpoint: the point itself may sit a rounding error outside the
      // region, which an interior cut alone would miss
      real_t margin = h / 8;
      std::vector<real_t> tsing;
      bool sing_origin = false;
      bool sing_split = false;
      for (const real_t& s : sing) {
        real_t sm = side == 0 ? s : -s;
        if (abs(sm - th0) < margin) sing_origin = true;
        if (abs(sm - h) < margin) sing_split = true;
        if (sm > h && sm < th0) tsing.push_back(sqrt(cos(sm) - c0));
      }
      acc += integrate_with_log_points(g, real_t(0), tmax, tsing, sing_origin,
                                       sing_split, tl / 6);
    }
    auto g_mid = [&](const real_t& th) {
      return F(th) * sqrt((cos(th) + c1) / (cos(th) - c0)) / (2 * pi);
    };
    std::vector<real_t> msing;
    bool mid_a = false, mid_b = false;
    for (const real_t& s : sing) {
      if (abs(s + h) < h / 8) mid_a = true;
      if (abs(s - h) < h / 8) mid_b = true;
      if (s > -h && s < h) msing.push_back(s);
    }
    acc += integrate_with_log_points(g_mid, -h, h, msing, mid_a, mid_b, tl / 6);
  }

  // second arc around pi (tau = theta - pi folded): density vanishes like a
  // square root at |tau| = theta1, removed by cos tau = cos theta1 + w^2.
  if (th1 > 0) {
    real_t h = th1 / 2;
    real_t wmax = sqrt(cos(h) - c1);
    auto angle_of_tau = [&](const real_t& tau) {
      return tau <= 0 ? pi + tau : tau - pi;
    };
    auto tau_of_angle = [&](const real_t& s) {
      return s > 0 ? s - pi : s + pi;
    };
    for (int side = 0; side < 2; ++side) {
      auto g = [&, side](const real_t& w) {
        real_t tam = acos(c1 + w * w);
        real_t tau = side == 0 ? tam : -tam;
        return F(angle_of_tau(tau)) * w * w /
               (pi * sin(tam) * sqrt(cos(tam) + c0));
      };
      real_t margin = h / 8;
      std::vector<real_t> wsing;
      bool sing_origin = false;
      bool sing_split = false;
      for (const real_t& s : sing) {
        if (!(abs(s) >= pi - th1 - margin)) continue;
        real_t tau = tau_of_angle(s);
        real_t tm = side == 0 ? tau : -tau;
        if (abs(tm - th1) < margin) sing_origin = true;
        if (abs(tm - h) < margin) sing_split = true;
        if (tm > h && tm < th1) wsing.push_back(sqrt(cos(tm) - c1));
      }
      acc += integrate_with_log_points(g, real_t(0), wmax, wsing, sing_origin,
                                       sing_split, tl / 6);
    }
    auto g_mid = [&](const real_t& tau) {
      return F(angle_of_tau(tau)) *
             sqrt((cos(tau) - c1) / (cos(tau) + c0)) / (2 * pi);
    };
    std::vector<real_t> msing;
    bool mid_a = false, mid_b = false;
    for (const real_t& s : sing) {
      if (!(abs(s) >= pi - th1 - h / 8)) continue;
      real_t tau = tau_of_angle(s);
      if (abs(tau + h) < h / 8) mid_a = true;
      if (abs(tau - h) < h / 8) mid_b = true;
      if (tau > -h && tau < h) msing.push_back(tau);
    }
    acc += integrate_with_log_points(g_mid, -h, h, msing, mid_a, mid_b, tl / 6);
  }

  return to_precision(acc);
}

real_t theta1_solve(const real_t& x, const real_t& theta0,
                    unsigned precision_bits) {
  unsigned bits = current_precision_bits();
  unsigned pbits = precision_bits ? std::min(precision_bits, bits) : bits;
  if (!(x > 0)) throw DomainError("theta1_solve: x must be positive");
  PrecisionGuard guard(bits + 32);
  real_t xv = to_precision(x);
  real_t th0 = to_precision(theta0);
  real_t xc = x_critical(th0);
  if (xv >= xc) return real_t(0);

  real_t pi = const_pi();
  real_t qtol = eps_at(pbits + 16);
  // 2 int_J log|cos(theta/2)/sin(theta/2)| u d theta, decreasing from x_c
  // at theta1 = 0 to 0 at theta1 = pi - theta0
  auto defining = [&](const real_t& t1) {
    auto F = [&](const real_t& th) {
      return log(abs(cos(th / 2))) - log(abs(sin(th / 2)));
    };
    return 2 * integrate_against_density(th0, t1, F, {real_t(0), pi}, qtol);
  };

  real_t lo = 0, hi = pi - th0;
  real_t width_target = eps_at(pbits) * hi;
  while (hi - lo > width_target) {
    real_t mid = (lo + hi) / 2;
    if (defining(mid) > xv)
      lo = mid;
    else
      hi = mid;
  }
  return to_precision((lo + hi) / 2);
}

EquilibriumData equilibrium_solve(const real_t& theta0, const real_t& x,
                                  unsigned precision_bits) {
  if (!(theta0 > 0) || !(theta0 < const_pi()))
    throw DomainError("equilibrium_solve: theta0 outside (0, pi)");
  if (!(x > 0)) throw DomainError("equilibrium_solve: x must be positive");
  unsigned bits = current_precision_bits();
  EquilibriumData d;
  d.theta0 = to_precision(theta0);
  d.x = to_precision(x);
  d.x_c = x_critical(d.theta0);
  d.theta1 = real_t(0);
  real_t crit_eps = eps_at(bits > 24 ? bits - 16 : 8) * d.x_c;
  if (is_infinite(d.x) || d.x > d.x_c + crit_eps) {
    d.regime = Regime::one_arc;
  } else if (d.x >= d.x_c - crit_eps) {
    d.regime = Regime::critical;
  } else {
    d.regime = Regime::two_arc;
    d.theta1 = theta1_solve(d.x, d.theta0, precision_bits);
  }
  d.ell = eq_ell(d);
  return d;
}

real_t eq_density(const EquilibriumData& data, const real_t& theta) {
  real_t th = normalize_angle(to_precision(theta));
  real_t th0 = to_precision(data.theta0);
  real_t th1 = to_precision(data.theta1);
  real_t pi = const_pi();
  if (th == th0 || th == -th0)
    throw EndpointSingular("eq_density: density diverges at the arc endpoints");
  bool in_main = abs(th) < th0;
  bool in_second = data.regime == Regime::two_arc && abs(th) >= pi - th1;
  if (!in_main && !in_second)
    throw OutsideSupport("eq_density: point outside the support");
  real_t num = cos(th) + cos(th1);
  real_t den = cos(th) - cos(th0);
  if (in_second && num > 0) num = 0;  // clamp roundoff at the soft edges
  return sqrt(num / den) / (2 * pi);
}

real_t eq_ell_two_arc(const real_t& theta0, const real_t& theta1) {
  unsigned bits = current_precision_bits();
  PrecisionGuard guard(bits + 32);
  real_t c0 = cos(to_precision(theta0));
  real_t c1 = cos(to_precision(theta1));
  // -int_0^1 (1/s)(1 - sqrt(N/D)) ds with N = s^2+2 c1 s+1, D = s^2-2 c0 s+1,
  // rewritten via 1 - sqrt(R) = (1-R)/(1+sqrt(R)) so the integrand is smooth
  auto g = [&](const real_t& s) {
    real_t N = s * s + 2 * c1 * s + 1;
    real_t D = s * s - 2 * c0 * s + 1;
    return 1 / (D * (1 + sqrt(N / D)));
  };
  real_t v = integrate_adaptive(g, real_t(0), real_t(1), eps_at(bits + 8));
  return to_precision(2 * (c0 + c1) * v);
}

real_t eq_ell(const EquilibriumData& data) {
  real_t th0 = to_precision(data.theta0);
  if (data.regime != Regime::two_arc) return -2 * log(sin(th0 / 2));
  return eq_ell_two_arc(th0, data.theta1);
}

real_t log_potential(const EquilibriumData& data, const real_t& alpha) {
  unsigned bits = current_precision_bits();
  PrecisionGuard guard(bits + 32);
  real_t an = normalize_angle(to_precision(alpha));
  auto F = [&](const real_t& th) {
    return 2 * log(2 * abs(sin((an - th) / 2)));
  };
  real_t tol = eps_at(bits / 2 + 24);
  real_t v = integrate_against_density(to_precision(data.theta0),
                                       to_precision(data.theta1), F, {an}, tol);
  return to_precision(v);
}

real_t gap_potential_derivative(const EquilibriumData& data, const real_t& alpha) {
  real_t an = normalize_angle(to_precision(alpha));
  real_t th0 = to_precision(data.theta0);
  real_t th1 = to_precision(data.theta1);
  real_t pi = const_pi();
  bool in_gap = abs(an) > th0 &&
                (abs(an) < pi - th1 || (th1 == 0 && abs(an) == pi));
  if (!in_gap)
    throw OutsideGap("gap_potential_derivative: point not in a gap component");
  real_t mag = sqrt((cos(th1) + cos(an)) / (cos(th0) - cos(an)));
  return an > 0 ? mag : -mag;
}

real_t density_normalization(const EquilibriumData& data) {
  unsigned bits = current_precision_bits();
  auto one = [](const real_t&) { return real_t(1); };
  return integrate_against_density(to_precision(data.theta0),
                                   to_precision(data.theta1), one, {},
                                   eps_at(bits / 2 + 24));
}

VariationalReport variational_residuals(const EquilibriumData& data,
                                        int grid_size) {
  if (grid_size < 8)
    throw DomainError("variational_residuals: grid_size must be >= 8");
  unsigned bits = current_precision_bits();
  PrecisionGuard guard(bits + 32);
  real_t pi = const_pi();
  real_t th0 = to_precision(data.theta0);
  real_t th1 = to_precision(data.theta1);
  real_t ell = to_precision(data.ell);
  real_t x = to_precision(data.x);

  VariationalReport rep;
  rep.regime = data.regime;
  rep.theta1 = th1;
  rep.ell = ell;
  rep.grid = grid_size;

  // equality residual on the support interiors; V = 0 on the main arc, x on
  // the rest of the circle
  real_t eq_res = 0;
  for (int j = 0; j < grid_size; ++j) {
    real_t a = -th0 + (2 * real_t(j) + 1) / grid_size * th0;
    eq_res = std::max(eq_res, abs(log_potential(data, a) + ell));
  }
  if (data.regime == Regime::two_arc) {
    for (int j = 0; j < grid_size; ++j) {
      real_t tau = -th1 + (2 * real_t(j) + 1) / grid_size * th1;
      real_t a = normalize_angle(pi + tau);
      eq_res = std::max(eq_res, abs(log_potential(data, a) - x + ell));
    }
  }
  rep.equality_residual = eq_res;

  // inequality margin V - ell - f on the complement grid
  std::vector<real_t> comp;
  real_t gap_hi = pi - th1;
  for (int j = 0; j < grid_size; ++j) {
    real_t a = th0 + (2 * real_t(j) + 1) / (2 * grid_size) * (gap_hi - th0);
    comp.push_back(a);
    comp.push_back(-a);
  }
  if (data.regime != Regime::two_arc) comp.push_back(pi);
  real_t margin = real_infinity();
  for (const real_t& a : comp) {
    real_t m = is_infinite(x) ? real_infinity()
                              : x - ell - log_potential(data, a);
    margin = std::min(margin, m);
  }
  rep.min_margin = margin;
  return rep;
}

std::string variational_report_json(const VariationalReport& report) {
  nlohmann::json j;
  j["regime"] = regime_name(report.regime);
  j["theta1"] = to_str(report.theta1);
  j["ell"] = to_str(report.ell);
  j["equality_residual"] = to_str(report.equality_residual);
  j["min_margin"] = to_str(report.min_margin);
  j["grid"] = report.grid;
  return j.dump(2);
}

}  // namespace gaptlz
