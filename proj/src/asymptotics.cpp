#include "gaptlz/asymptotics.hpp"

#include "gaptlz/quadrature.hpp"
#include "gaptlz/special.hpp"

namespace gaptlz {

namespace {

real_t eps_at(unsigned bits) { return pow(real_t(2), -int(bits)); }

std::map<int, cplx> renorm_w(const std::map<int, cplx>& W) {
  std::map<int, cplx> w;
  for (const auto& [k, wk] : W) w[k] = to_precision(wk);
  return w;
}

void check_symmetric_real(const std::map<int, cplx>& W) {
  for (const auto& [k, wk] : W) {
    if (wk.im != 0)
      throw SymmetryViolation("widom_expansion: W must have real coefficients");
    auto it = W.find(-k);
    if (it == W.end() || it->second != wk)
      throw SymmetryViolation("widom_expansion: W must satisfy W_{-k} = W_k");
  }
}

cplx finalize(ExpansionValue& ev) {
  cplx acc = 0;
  for (const auto& [name, t] : ev.terms) acc += t;
  ev.value = acc;
  return acc;
}

}  // namespace

real_t x_critical(const real_t& theta0) {
  if (!(theta0 > 0) || !(theta0 < const_pi()))
    throw DomainError("x_critical: theta0 outside (0, pi)");
  real_t t = to_precision(theta0);
  return -2 * log(tan(t / 4));
}

real_t arc_pushforward_coeff(const real_t& theta0, const std::map<int, cplx>& W,
                             int k) {
  if (W.empty()) return real_t(0);
  unsigned bits = current_precision_bits();
  PrecisionGuard guard(bits + 32);
  real_t th = to_precision(theta0);
  auto w = renorm_w(W);
  real_t pi = const_pi();
  real_t half = sin(th / 2);
  SymbolSpec holder(th, cplx(1), cplx(1), w);
  auto f = [&](const real_t& t) {
    real_t phi = 2 * asin(half * sin(t / 2));
    cplx val = w_eval(holder, unit(phi)) * unit(-k * t);
    return val.re;
  };
  real_t v = integrate_adaptive(f, -pi, pi, eps_at(bits + 8));
  return v / (2 * pi);
}

ExpansionValue widom_expansion(const real_t& theta0, const std::map<int, cplx>& W,
                               int n, int k_max) {
  if (k_max < 1) throw DomainError("widom_expansion: k_max must be >= 1");
  check_symmetric_real(W);
  unsigned bits = current_precision_bits();
  PrecisionGuard guard(bits + 32);
  real_t th = to_precision(theta0);
  auto w = renorm_w(W);

  ExpansionValue ev;
  ev.terms["leading"] = cplx(real_t(n) * n * log(sin(th / 2)));
  ev.terms["log"] = cplx(-log(real_t(n)) / 4);
  ev.terms["constant"] = cplx(-log(cos(th / 2)) / 4 + log(real_t(2)) / 12 +
                              3 * zeta_prime_at_minus_one());
  ev.truncation_bound = real_t(0);
  if (w.empty()) {
    ev.terms["linear"] = cplx(0);
    ev.terms["series"] = cplx(0);
    finalize(ev);
    return ev;
  }
  ev.terms["linear"] = cplx(real_t(n) * arc_pushforward_coeff(th, w, 0));
  real_t series = 0, t_prev = 0, t_last = 0;
  for (int k = 1; k <= k_max; ++k) {
    // W symmetric-real makes the pushforward even: Wt_{-k} = Wt_k
    real_t wk = arc_pushforward_coeff(th, w, k);
    t_prev = t_last;
    t_last = k * wk * wk;
    series += t_last;
  }
  ev.terms["series"] = cplx(series);
  if (t_prev > 0 && t_last > 0) {
    real_t r = t_last / t_prev;
    ev.truncation_bound = (r < 1) ? t_last * r / (1 - r) : real_infinity();
  } else if (t_last > 0) {
    ev.truncation_bound = t_last;
  }
  finalize(ev);
  return ev;
}

ExpansionValue szego_expansion(const std::map<int, cplx>& W, int n) {
  PrecisionGuard guard(current_precision_bits());
  auto w = renorm_w(W);
  ExpansionValue ev;
  ev.truncation_bound = real_t(0);
  cplx w0 = w.count(0) ? w.at(0) : cplx(0);
  ev.terms["linear"] = cplx(real_t(n)) * w0;
  cplx series = 0;
  for (const auto& [k, wk] : w) {
    if (k < 1) continue;
    auto it = w.find(-k);
    if (it != w.end()) series += cplx(real_t(k)) * wk * it->second;
  }
  ev.terms["series"] = series;
  finalize(ev);
  return ev;
}

ExpansionValue fisher_hartwig_expansion(const real_t& s, const real_t& theta0,
                                        const std::map<int, cplx>& W, int n) {
  if (!(s > 0) || s > 1)
    throw DomainError("fisher_hartwig_expansion: s must lie in (0,1]");
  unsigned bits = current_precision_bits();
  PrecisionGuard guard(bits + 32);
  real_t sv = to_precision(s);
  real_t th = to_precision(theta0);
  auto w = renorm_w(W);
  real_t pi = const_pi();
  real_t ls = log(sv);

  ExpansionValue ev;
  ev.truncation_bound = real_t(0);
  cplx w0 = w.count(0) ? w.at(0) : cplx(0);
  // mean of ln f picks up the gap contribution ln s (1 - theta0/pi) as well
  ev.terms["linear"] = cplx(real_t(n)) * (w0 + cplx(ls * (1 - th / pi)));
  ev.terms["log"] = cplx(ls * ls / (2 * pi * pi) * log(real_t(n)));
  ev.terms["arc_constant"] = cplx(ls * ls * log(2 * sin(th)) / (2 * pi * pi));
  cplx cross = 0, series = 0;
  for (const auto& [k, wk] : w) {
    if (k < 1) continue;
    auto it = w.find(-k);
    cplx wmk = (it != w.end()) ? it->second : cplx(0);
    cross += (wk + wmk) * cplx(sin(k * th));
    series += cplx(real_t(k)) * wk * wmk;
  }
  ev.terms["cross"] = cplx(ls / pi) * cross;
  ev.terms["series"] = series;
  // beta parameter ln s / (2 pi i) is purely imaginary for s in (0,1)
  cplx q(real_t(0), -ls / (2 * pi));
  ev.terms["barnes"] = 2 * (ln_barnes_g(q) + ln_barnes_g(-q));
  finalize(ev);
  return ev;
}

real_t theorem_error_envelope(int n, const real_t& theta0, const real_t& s,
                              bool weighted) {
  if (n < 1) throw DomainError("theorem_error_envelope: n must be >= 1");
  if (s < 0) throw DomainError("theorem_error_envelope: s must be >= 0");
  PrecisionGuard guard(current_precision_bits());
  real_t th = to_precision(theta0);
  real_t sv = to_precision(s);
  real_t xc = x_critical(th);
  real_t cap = exp(-xc * n);
  if (sv > cap * (1 + pow(real_t(2), -int(current_precision_bits() / 2))))
    throw DomainError("theorem_error_envelope: s exceeds e^{-x_c n}");
  if (sv == 0) return real_t(0);
  real_t env = exp(xc * n) * sv / sqrt(real_t(n));
  if (weighted) env *= sqrt(const_pi() - th);
  return env;
}

}  // namespace gaptlz
