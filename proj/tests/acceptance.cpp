// End-to-end acceptance checks, one printed line per criterion. Each check
// recomputes its own inputs; nothing is shared with the unit tests.

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "gaptlz/asymptotics.hpp"
#include "gaptlz/cue.hpp"
#include "gaptlz/equilibrium.hpp"
#include "gaptlz/parametrix.hpp"
#include "gaptlz/sine_kernel.hpp"
#include "gaptlz/toeplitz.hpp"

using namespace gaptlz;

namespace {

struct Criterion {
  std::string label;
  std::function<bool(std::string&)> run;
};

std::map<int, cplx> w03() {
  return {{-1, cplx(real_t(3) / 10)}, {1, cplx(real_t(3) / 10)}};
}

SymbolSpec gap_spec(const real_t& th0, const real_t& s,
                    const std::map<int, cplx>& w) {
  if (w.empty()) return SymbolSpec(th0, cplx(s));
  return SymbolSpec(th0, cplx(1), cplx(s), w, true);
}

real_t lnD(const SymbolSpec& spec, int n) { return log_det(spec, n).ln_D.re; }

// 1: at s = e^{-x_c n} the determinant stays within O(n^{-1/2} e^{x_c n} s)
// of its s = 0 value, with and without a smooth factor e^W
bool criterion1(std::string& detail) {
  PrecisionGuard guard(128);
  real_t th0 = const_pi() / 2;
  real_t xc = x_critical(th0);
  bool ok = true;
  for (const auto& w : {std::map<int, cplx>{}, w03()}) {
    std::vector<real_t> weighted;  // Delta_n * n^{1/2}
    real_t prev = real_infinity();
    for (int n : {10, 20, 40, 80}) {
      real_t s = exp(-xc * n);
      real_t delta =
          abs(lnD(gap_spec(th0, s, w), n) - lnD(gap_spec(th0, real_t(0), w), n));
      ok = ok && delta < prev;
      prev = delta;
      weighted.push_back(delta * sqrt(real_t(n)));
    }
    ok = ok && weighted.back() <= real_t(3) / 2 * weighted.front();
    if (detail.empty())
      detail = "sup-ratio " + to_str(weighted.back() / weighted.front(), 4);
  }
  return ok;
}

// 2: residual against the one-arc expansion shrinks like the cited O(1/n)
bool criterion2(std::string& detail) {
  PrecisionGuard guard(128);
  real_t th0 = const_pi() / 2;
  std::vector<real_t> res;
  for (int n : {10, 20, 40, 80}) {
    real_t v = lnD(gap_spec(th0, real_t(0), {}), n);
    res.push_back(abs(v - widom_expansion(th0, {}, n, 64).value.re));
  }
  bool ok = true;
  for (size_t i = 1; i < res.size(); ++i) ok = ok && res[i] < res[i - 1];
  ok = ok && res.back() < res.front() / 4;
  detail = "r10 " + to_str(res.front(), 4) + " r80 " + to_str(res.back(), 4);
  return ok;
}

// 3: smooth-symbol determinant reaches its limit to 1e-6 by n = 40
bool criterion3(std::string& detail) {
  PrecisionGuard guard(128);
  real_t th0 = const_pi() / 2;
  SymbolSpec spec(th0, cplx(1), cplx(1), w03(), true);
  real_t gap = abs(lnD(spec, 40) - real_t(9) / 100);
  detail = "|lnD_40 - 0.09| = " + to_str(gap, 4);
  return gap < real_t("1e-6");
}

// 4: fixed-s residual against the jump-singularity expansion decreases
bool criterion4(std::string& detail) {
  PrecisionGuard guard(128);
  real_t th0 = const_pi() / 2;
  real_t s = real_t(1) / 2;
  std::vector<real_t> res;
  for (int n : {20, 40, 80}) {
    real_t v = lnD(gap_spec(th0, s, {}), n);
    res.push_back(abs(v - fisher_hartwig_expansion(s, th0, {}, n).value.re));
  }
  detail = to_str(res[0], 4) + " > " + to_str(res[1], 4) + " > " +
           to_str(res[2], 4);
  return res[1] < res[0] && res[2] < res[1];
}

// 5: the three s-derivative routes agree pairwise to 1e-8 relative
bool criterion5(std::string& detail) {
  unsigned bits = 224;
  PrecisionGuard guard(bits);
  real_t th0 = const_pi() / 2;
  real_t xc = x_critical(th0);
  real_t tol("1e-8");
  real_t worst = 0;
  for (int n : {5, 8, 12})
    for (const real_t& s : {real_t(3) / 10, real_t(1) / 20, exp(-xc * n)}) {
      SymbolSpec spec(th0, cplx(s));
      cplx a = ds_log_det(spec, n, bits);
      cplx b = diff_identity_general(spec, n, bits);
      // near s = 0 the derivative varies on scale s, so the centered step
      // must shrink proportionally to keep the truncation error below tol
      real_t h = std::min(real_t("1e-8"), s * real_t("1e-5"));
      cplx c = cplx(diff_identity_w0(spec, n, h, bits));
      real_t scale = abs(a);
      worst = std::max({worst, abs(a - b) / scale, abs(a - c) / scale,
                        abs(b - c) / scale});
    }
  detail = "worst pairwise rel " + to_str(worst, 4);
  return worst < tol;
}

// 6: equilibrium-measure invariants in both regimes
bool criterion6(std::string& detail) {
  PrecisionGuard guard(128);
  real_t pi = const_pi();
  real_t th0 = pi / 2;
  real_t xc = x_critical(th0);
  bool ok = true;

  EquilibriumData one = equilibrium_solve(th0, real_infinity(), 128);
  ok = ok && abs(one.ell + 2 * log(sin(th0 / 2))) < real_t("1e-9");
  ok = ok && abs(density_normalization(one) - 1) < real_t("1e-6");
  VariationalReport rep1 = variational_residuals(one, 10);
  ok = ok && rep1.equality_residual < real_t("1e-6");
  ok = ok && rep1.min_margin > 0;

  EquilibriumData two = equilibrium_solve(th0, xc / 2, 64);
  ok = ok && abs(density_normalization(two) - 1) < real_t("1e-6");
  VariationalReport rep2 = variational_residuals(two, 10);
  ok = ok && rep2.equality_residual < real_t("1e-6");
  ok = ok && rep2.min_margin > 0;

  // theta1(x): 0 at and beyond x_c, filling the gap as x -> 0
  ok = ok && theta1_solve(xc, th0, 48) == 0;
  ok = ok && theta1_solve(2 * xc, th0, 48) == 0;
  real_t t_small = theta1_solve(xc / 50, th0, 48);
  ok = ok && t_small > pi - th0 - real_t(1) / 4 && t_small < pi - th0;
  ok = ok && two.theta1 > 0 && two.theta1 < t_small;

  // potential drop across the gap equals min(x, x_c)
  real_t drop1 = log_potential(one, pi) - log_potential(one, real_t(0));
  real_t drop2 = log_potential(two, pi) - log_potential(two, real_t(0));
  ok = ok && abs(drop1 - xc) < real_t("1e-6");
  ok = ok && abs(drop2 - xc / 2) < real_t("1e-6");
  detail = "drops " + to_str(abs(drop1 - xc), 3) + " " +
           to_str(abs(drop2 - xc / 2), 3);
  return ok;
}

// 7: steepest-descent model: unimodularity, jump residuals, matching rates
bool criterion7(std::string& detail) {
  PrecisionGuard guard(128);
  real_t pi = const_pi();
  real_t th0 = pi / 2;
  real_t xc = x_critical(th0);
  bool ok = true;

  ParametrixContext ctx(th0, w03(), 8, xc);
  auto unimodular = [&](const Matrix2C& m) {
    return abs(det(m) - cplx(1)) < real_t("1e-10");
  };
  ok = ok && unimodular(global_parametrix(ctx, cplx(0, 2)));
  ok = ok && unimodular(bessel_model_psi(cplx(1, 1)));
  ok = ok && unimodular(psi_hat(cplx(1, 1), real_t(1)));
  ok = ok && unimodular(local_parametrix(
                 ctx, unit(th0) + cplx(ctx.disk_radius / 2), LocalCenter::z0));

  // jump residuals vanish with the offset: linear extrapolation to zero
  // offset lands below 1e-8
  auto extrapolated = [&](const ParametrixContext& c, JumpObject obj,
                          const cplx& point, const real_t& d) {
    real_t r1 = jump_residual(c, obj, point, d);
    real_t r2 = jump_residual(c, obj, point, d / 2);
    return abs(2 * r2 - r1);
  };
  ok = ok && extrapolated(ctx, JumpObject::Pinf, cplx(1), real_t("1e-6")) <
                 real_t("1e-8");
  ok = ok && extrapolated(ctx, JumpObject::Psi, cplx(-4), real_t("1e-9")) <
                 real_t("1e-8");
  ok = ok && extrapolated(ctx, JumpObject::Psi, unit(2 * pi / 3),
                          real_t("1e-9")) < real_t("1e-8");
  ok = ok &&
       extrapolated(ctx, JumpObject::P, unit(th0 - ctx.disk_radius / 4),
                    real_t("1e-6")) < real_t("1e-8");
  ParametrixContext ctx3(real_t(23) / 10, {}, 3, real_t(1));
  ok = ok && extrapolated(ctx3, JumpObject::PsiHat, cplx(2), real_t("1e-9")) <
                 real_t("1e-8");

  // matching on the endpoint disk boundary: error halves when n doubles
  real_t r = real_t(3) / 10;
  std::vector<real_t> at_z0;
  for (int n : {8, 16, 32}) {
    ParametrixContext c(th0, {}, n, xc, r, r / 4);
    real_t worst = 0;
    for (int j = 0; j < 12; ++j) {
      real_t psi = 2 * pi * (j + real_t(37) / 100) / 12;
      cplx z = unit(th0) + cplx(r) * unit(psi);
      Matrix2C res = local_parametrix(c, z, LocalCenter::z0) *
                     inverse(global_parametrix(c, z));
      worst = std::max(worst, norm_max(res - Matrix2C::identity()));
    }
    at_z0.push_back(worst);
  }
  for (int i : {0, 1}) {
    real_t ratio = at_z0[i] / at_z0[i + 1];
    ok = ok && ratio > real_t(3) / 2 && ratio < real_t(5) / 2;
  }

  // matching at -1 with x = x_c decays like n^{-1/2}
  std::vector<real_t> at_m1;
  for (int n : {8, 16, 32}) {
    ParametrixContext c(th0, {}, n, xc);
    real_t worst = 0;
    for (int j = 0; j < 12; ++j) {
      real_t psi = 2 * pi * (j + real_t(37) / 100) / 12;
      cplx z = cplx(-1) + cplx(c.disk_radius) * unit(psi);
      Matrix2C res = local_parametrix(c, z, LocalCenter::minus1) *
                     inverse(global_parametrix(c, z));
      worst = std::max(worst, norm_max(res - Matrix2C::identity()));
    }
    at_m1.push_back(worst);
  }
  real_t target = 1 / sqrt(real_t(2));
  for (int i : {0, 1}) {
    real_t ratio = at_m1[i + 1] / at_m1[i];
    ok = ok && ratio > target * 7 / 10 && ratio < target * 13 / 10;
  }
  detail = "z0 ratios " + to_str(at_z0[0] / at_z0[1], 3) + " " +
           to_str(at_z0[1] / at_z0[2], 3) + ", -1 ratios " +
           to_str(at_m1[1] / at_m1[0], 3) + " " + to_str(at_m1[2] / at_m1[1], 3);
  return ok;
}

// 8: sine-kernel limits: large-gap expansion and the Toeplitz scaling limit
bool criterion8(std::string& detail) {
  PrecisionGuard guard(128);
  std::vector<real_t> gap_err;
  for (int y : {1, 2, 3}) {
    FredholmSpec spec{real_t(y), real_t(0)};
    gap_err.push_back(abs(fredholm_logdet(spec) - large_gap_expansion(real_t(y))));
  }
  bool ok = gap_err[1] < gap_err[0] && gap_err[2] < gap_err[1];
  std::vector<real_t> tz;
  for (int n : {50, 100, 200})
    tz.push_back(toeplitz_fredholm_gap(real_t(1), real_t(0), n));
  ok = ok && tz[1] < tz[0] && tz[2] < tz[1];
  detail = "large-gap " + to_str(gap_err[2], 3) + ", scaling " +
           to_str(tz[2], 3);
  return ok;
}

// 9: eigenvalue-count statistics: axioms, Chernoff dominance, LDP rate
bool criterion9(std::string& detail) {
  PrecisionGuard guard(128);
  real_t pi = const_pi();
  bool ok = true;
  for (const auto& [n, th0] : std::vector<std::pair<int, real_t>>{
           {6, pi / 3}, {8, pi / 2}}) {
    CountDistribution d = count_distribution(th0, n);
    ok = ok && abs(d.total() - 1) < real_t("1e-10");
    ok = ok && abs(d.mean() - n * th0 / pi) < real_t("1e-10");
    for (const real_t& p : d.probs) ok = ok && p >= 0;
    for (int p = 0; p <= n; ++p)
      ok = ok && tail_bound(th0, n, p) >= d.upper_tail(p) - real_t("1e-20");
  }
  // full-count rate tends to ln sin(theta0/2) at the n^2 speed
  real_t limit = log(sin(pi / 4));
  real_t prev = real_infinity();
  for (int n : {8, 16, 32}) {
    real_t rate = log(tail_bound(pi / 2, n, n)) / (real_t(n) * n);
    real_t err = abs(rate - limit);
    ok = ok && err < prev;
    prev = err;
  }
  detail = "rate gap at n=32: " + to_str(prev, 3);
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"gap-closure error envelope", criterion1},
      {"one-arc expansion residual", criterion2},
      {"smooth-symbol limit", criterion3},
      {"fixed-s expansion residual", criterion4},
      {"differential identities", criterion5},
      {"equilibrium measure", criterion6},
      {"parametrix residuals and matching", criterion7},
      {"sine-kernel limits", criterion8},
      {"eigenvalue-count statistics", criterion9},
  };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::cout << "criterion " << (i + 1) << " (" << criteria[i].label
              << "): " << (ok ? "PASS" : "FAIL")
              << (detail.empty() ? "" : " - " + detail) << std::endl;
  }
  return failures;
}
