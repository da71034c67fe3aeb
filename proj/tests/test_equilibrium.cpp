#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gaptlz/asymptotics.hpp"
#include "gaptlz/equilibrium.hpp"

using namespace gaptlz;

namespace {

real_t tol_bits(int b) { return pow(real_t(2), -b); }

}  // namespace

TEST_CASE("eq_density values and membership") {
  PrecisionGuard guard(128);
  real_t pi = const_pi();
  EquilibriumData d = equilibrium_solve(pi / 2, real_infinity());
  CHECK(d.regime == Regime::one_arc);
  CHECK(d.theta1 == 0);
  CHECK(abs(d.x_c - x_critical(pi / 2)) == 0);

  // u(1) = 1/(2 pi sin(pi/4)) = 1/(pi sqrt 2)
  real_t u0 = eq_density(d, real_t(0));
  CHECK(abs(u0 - 1 / (pi * sqrt(real_t(2)))) < tol_bits(118));
  CHECK(abs(u0 - real_t("0.2250791")) < real_t("1e-7"));

  CHECK_THROWS_AS(eq_density(d, pi / 2), EndpointSingular);
  CHECK_THROWS_AS(eq_density(d, -pi / 2), EndpointSingular);
  CHECK_THROWS_AS(eq_density(d, real_t(2)), OutsideSupport);
  CHECK_THROWS_AS(eq_density(d, pi), OutsideSupport);

  EquilibriumData d2 = equilibrium_solve(pi / 2, d.x_c / 2, 48);
  CHECK(d2.regime == Regime::two_arc);
  CHECK(d2.theta1 > 0);
  CHECK(d2.theta1 < pi - pi / 2);

  // interior point of the second arc: finite closed-form value
  real_t up = eq_density(d2, pi);
  real_t ref = sqrt((1 - cos(d2.theta1)) / (1 + cos(pi / 2))) / (2 * pi);
  CHECK(abs(up - ref) < tol_bits(110));
  CHECK(up >= 0);
  CHECK(eq_density(d2, pi - d2.theta1 / 2) > 0);
  // gap midpoint stays excluded
  real_t gap_mid = (pi / 2 + (pi - d2.theta1)) / 2;
  CHECK_THROWS_AS(eq_density(d2, gap_mid), OutsideSupport);
}

TEST_CASE("density normalization in both regimes") {
  PrecisionGuard guard(128);
  real_t pi = const_pi();
  EquilibriumData d = equilibrium_solve(pi / 2, real_infinity());
  CHECK(abs(density_normalization(d) - 1) < real_t("1e-15"));

  EquilibriumData d2 = equilibrium_solve(pi / 2, d.x_c / 2, 48);
  CHECK(abs(density_normalization(d2) - 1) < real_t("1e-15"));

  // off-symmetric opening angle as well
  EquilibriumData d3 = equilibrium_solve(pi / 3, x_critical(pi / 3) / 3, 48);
  CHECK(abs(density_normalization(d3) - 1) < real_t("1e-15"));
}

TEST_CASE("theta1_solve limits and monotonicity") {
  PrecisionGuard guard(96);
  real_t pi = const_pi();
  real_t xc = x_critical(pi / 2);

  // near-critical x: the second arc shrinks to a point
  real_t t_near = theta1_solve(xc - real_t("1e-4"), pi / 2, 40);
  CHECK(t_near > 0);
  CHECK(t_near < real_t(1) / 10);

  // small x: the second arc fills most of (0, pi - theta0)
  real_t t_small = theta1_solve(xc / 20, pi / 2, 40);
  CHECK(t_small > real_t(8) / 10 * (pi - pi / 2));
  CHECK(t_small < pi - pi / 2);

  CHECK(theta1_solve(xc * 3 / 10, pi / 2, 40) >
        theta1_solve(xc * 7 / 10, pi / 2, 40));

  CHECK(theta1_solve(xc, pi / 2, 40) == 0);
  CHECK(theta1_solve(xc * 2, pi / 2, 40) == 0);
  CHECK_THROWS_AS(theta1_solve(real_t(0), pi / 2, 40), DomainError);
  CHECK_THROWS_AS(theta1_solve(real_t(-1), pi / 2, 40), DomainError);
}

TEST_CASE("eq_ell closed form, continuity, degeneration") {
  PrecisionGuard guard(128);
  real_t pi = const_pi();
  EquilibriumData d = equilibrium_solve(pi / 2, real_infinity());
  CHECK(abs(d.ell - log(real_t(2))) < tol_bits(120));

  // the two-arc quadrature limits to the closed form as theta1 -> 0
  CHECK(abs(eq_ell_two_arc(pi / 2, real_t("1e-4")) - log(real_t(2))) <
        real_t("1e-3"));

  // full-circle support: no gap, zero multiplier
  real_t th_wide = pi - real_t("1e-6");
  CHECK(abs(-2 * log(sin(th_wide / 2))) < real_t("1e-12"));
  EquilibriumData dw = equilibrium_solve(th_wide, real_infinity());
  CHECK(abs(dw.ell) < real_t("1e-12"));
}

TEST_CASE("log_potential endpoint identities") {
  PrecisionGuard guard(96);
  real_t pi = const_pi();
  EquilibriumData d = equilibrium_solve(pi / 2, real_infinity());

  // f(1) = -ell
  real_t f1 = log_potential(d, real_t(0));
  CHECK(abs(f1 + d.ell) < real_t("1e-10"));

  // f(-1) - f(1) = x_c when x >= x_c
  real_t fm1 = log_potential(d, pi);
  CHECK(abs(fm1 - f1 - d.x_c) < real_t("1e-10"));

  // f(-1) - f(1) = x when x < x_c, and f(1) = -ell still
  EquilibriumData d2 = equilibrium_solve(pi / 2, d.x_c / 2, 48);
  real_t f1b = log_potential(d2, real_t(0));
  real_t fm1b = log_potential(d2, pi);
  CHECK(abs(fm1b - f1b - d2.x) < real_t("1e-8"));
  CHECK(abs(f1b + d2.ell) < real_t("1e-8"));
}

TEST_CASE("variational_residuals across regimes") {
  PrecisionGuard guard(96);
  real_t pi = const_pi();

  EquilibriumData d = equilibrium_solve(pi / 2, real_infinity());
  VariationalReport rep = variational_residuals(d, 8);
  CHECK(rep.equality_residual < real_t("1e-10"));
  CHECK(rep.min_margin > 0);
  std::string js = variational_report_json(rep);
  CHECK(js.find("one_arc") != std::string::npos);
  CHECK(js.find("equality_residual") != std::string::npos);

  // critical point: margin degenerates exactly at -1
  EquilibriumData dc = equilibrium_solve(pi / 2, x_critical(pi / 2));
  CHECK(dc.regime == Regime::critical);
  VariationalReport repc = variational_residuals(dc, 9);
  CHECK(repc.equality_residual < real_t("1e-10"));
  CHECK(abs(repc.min_margin) < real_t("1e-8"));
  // but positive away from -1
  real_t interior_margin =
      dc.x - dc.ell - log_potential(dc, pi / 2 + real_t(3) / 10);
  CHECK(interior_margin > real_t(1) / 100);

  // two arcs: equality holds on both support components
  EquilibriumData d2 = equilibrium_solve(pi / 2, x_critical(pi / 2) / 2, 48);
  VariationalReport rep2 = variational_residuals(d2, 8);
  CHECK(rep2.equality_residual < real_t("1e-10"));
  CHECK(rep2.min_margin > 0);
  CHECK(variational_report_json(rep2).find("two_arc") != std::string::npos);

  CHECK_THROWS_AS(variational_residuals(d, 4), DomainError);
}

TEST_CASE("gap_potential_derivative") {
  PrecisionGuard guard(96);
  real_t pi = const_pi();
  EquilibriumData d = equilibrium_solve(pi / 2, real_infinity());

  // finite-difference oracle from the potential quadrature
  real_t alpha = pi * 7 / 10;
  real_t h = real_t("1e-6");
  real_t fd = (log_potential(d, alpha + h) - log_potential(d, alpha - h)) / (2 * h);
  CHECK(abs(fd - gap_potential_derivative(d, alpha)) < real_t("1e-6"));

  // square-root blowup approaching the arc endpoint
  EquilibriumData dn = equilibrium_solve(pi / 3, real_infinity());
  CHECK(gap_potential_derivative(dn, pi / 3 + real_t("1e-6")) > real_t(1000));

  // odd symmetry across the real axis
  CHECK(abs(gap_potential_derivative(d, -alpha) +
            gap_potential_derivative(d, alpha)) == 0);

  // vanishes at -1 once the support is a single arc
  EquilibriumData df = equilibrium_solve(pi / 2, 2 * x_critical(pi / 2));
  CHECK(gap_potential_derivative(df, pi) == 0);

  CHECK_THROWS_AS(gap_potential_derivative(d, pi / 4), OutsideGap);
  EquilibriumData d2 = equilibrium_solve(pi / 2, x_critical(pi / 2) / 2, 48);
  CHECK_THROWS_AS(gap_potential_derivative(d2, pi), OutsideGap);
}
