#pragma once

#include <vector>

#include "gaptlz/symbol.hpp"

namespace gaptlz {

// Distribution of the number of unit-circle eigenvalues (of a Haar-random
// n x n unitary matrix) falling on the arc |theta| < theta0.
struct CountDistribution {
  int n = 0;
  real_t theta0;
  std::vector<real_t> probs;  // p_0 .. p_n

  real_t mean() const;
  real_t total() const;
  // P(X >= p)
  real_t upper_tail(int p) const;
};

// moment generating function E e^{lambda X} = e^{n lambda} D_n(s = e^{-lambda})
real_t mgf(const real_t& theta0, int n, const real_t& lambda);

// exact p_k by evaluating the generating polynomial E t^X at the (n+1)-st
// roots of unity and inverting the discrete Fourier transform; a singular
// evaluation node triggers one deterministic rotation of the node set
CountDistribution count_distribution(const real_t& theta0, int n);

// Chernoff bound e^{-p lambda} E e^{lambda X} on P(X >= p), log-space inside;
// lambda defaults to n * x_c(theta0)
real_t tail_bound(const real_t& theta0, int n, int p);
real_t tail_bound(const real_t& theta0, int n, int p, const real_t& lambda);

}  // namespace gaptlz
