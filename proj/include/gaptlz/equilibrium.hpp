#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gaptlz/symbol.hpp"

namespace gaptlz {

enum class Regime { one_arc, critical, two_arc };

// Minimizer data for the circular equilibrium problem with the two-level
// external field (0 on the arc |theta| <= theta0, x on the complement).
// Support J: the arc alone when x >= x_c, or the arc plus a second arc
// [pi - theta1, pi + theta1] when 0 < x < x_c. x = +infinity is carried as an
// actual mpfr infinity, never as a large finite float.
struct EquilibriumData {
  real_t x;
  real_t theta0;
  Regime regime = Regime::one_arc;
  real_t theta1;  // 0 unless two_arc
  real_t ell;
  real_t x_c;
};

const char* regime_name(Regime r);

// Solve for theta1 (two-arc support half-width around pi) from the defining
// integral; returns 0 for x >= x_c. precision_bits bounds the bisection
// resolution (0 = current working precision).
real_t theta1_solve(const real_t& x, const real_t& theta0,
                    unsigned precision_bits = 0);

// Build the full data record; pass real_infinity() for x = +infinity.
EquilibriumData equilibrium_solve(const real_t& theta0, const real_t& x,
                                  unsigned precision_bits = 0);

// Density u(e^{i theta}) = (1/2pi) sqrt((cos theta + cos theta1)/(cos theta -
// cos theta0)) on the interior of the support.
real_t eq_density(const EquilibriumData& data, const real_t& theta);

// Lagrange multiplier ell: closed form -2 ln sin(theta0/2) for x >= x_c,
// quadrature of the two-arc closed form otherwise.
real_t eq_ell(const EquilibriumData& data);

// Two-arc quadrature branch for a prescribed theta1 (used for continuity
// checks across the critical point).
real_t eq_ell_two_arc(const real_t& theta0, const real_t& theta1);

// Logarithmic potential f(e^{i alpha}) = 2 int log|e^{i alpha} - e^{i theta}|
// u(e^{i theta}) d theta, valid for any alpha.
real_t log_potential(const EquilibriumData& data, const real_t& alpha);

// Closed form of d/d alpha f(e^{i alpha}) on the gap components, with the
// sign convention positive on (theta0, pi - theta1).
real_t gap_potential_derivative(const EquilibriumData& data, const real_t& alpha);

// int_J u d theta; equals 1 up to quadrature error.
real_t density_normalization(const EquilibriumData& data);

// Euler-Lagrange check: max |f - V + ell| over an interior grid of the
// support, and min of (V - ell - f) over a grid on the complement.
struct VariationalReport {
  Regime regime = Regime::one_arc;
  real_t theta1;
  real_t ell;
  real_t equality_residual;
  real_t min_margin;
  int grid = 0;
};

VariationalReport variational_residuals(const EquilibriumData& data, int grid_size);

std::string variational_report_json(const VariationalReport& report);

// Integral of F(theta) u(theta) over the support, with square-root
// substitutions at the arc endpoints and dyadic splitting around the listed
// logarithmic singularities of F. Shared by the potential-theoretic routines.
real_t integrate_against_density(const real_t& theta0, const real_t& theta1,
                                 const std::function<real_t(const real_t&)>& F,
                                 const std::vector<real_t>& log_points,
                                 const real_t& tol);

}  // namespace gaptlz
