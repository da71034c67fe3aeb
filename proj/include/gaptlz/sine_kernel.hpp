#pragma once

#include <vector>

#include "gaptlz/symbol.hpp"

namespace gaptlz {

// Fredholm determinant det(1 - (1-s) K_y), K_y the sine-kernel integral
// operator sin(pi(x-t))/(pi(x-t)) on (-y, y).
struct FredholmSpec {
  real_t y;
  real_t s;
  unsigned m = 32;  // base quadrature order; results cross-checked at 2m
};

// symmetrized Nystrom discretization sqrt(w_i) k(x_i, x_j) sqrt(w_j) of K_y
// on Gauss-Legendre nodes mapped to (-y, y), row-major m x m
std::vector<real_t> nystrom_kernel_matrix(const FredholmSpec& spec, unsigned m);

// ln det(1 - (1-s) K_y) at a single quadrature order (no cross-check)
real_t fredholm_logdet_at_order(const FredholmSpec& spec, unsigned m);

// ln det(1 - (1-s) K_y); orders m and 2m must agree to 1e-10
real_t fredholm_logdet(const FredholmSpec& spec);

// -pi^2 y^2 / 2 - (1/4) ln(pi y) + (1/12) ln 2 + 3 zeta'(-1): the large-gap
// value of ln det(1 - K_y) without the o(1) remainder
real_t large_gap_expansion(const real_t& y);

// |ln D_n(s, theta0 = pi(1 - 2y/n), W=0) - fredholm_logdet|: the finite-n
// distance to the scaling limit
real_t toeplitz_fredholm_gap(const real_t& y, const real_t& s, int n);

}  // namespace gaptlz
