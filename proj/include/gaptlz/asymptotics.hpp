#pragma once

#include <map>
#include <string>

#include "gaptlz/symbol.hpp"

namespace gaptlz {

// A closed-form expansion evaluated with a named term breakdown; the terms
// sum to value exactly, and truncation_bound estimates the discarded series
// tail (0 when the sums are finite).
struct ExpansionValue {
  cplx value;
  std::map<std::string, cplx> terms;
  real_t truncation_bound;
};

// x_c = -2 ln tan(theta0/4)
real_t x_critical(const real_t& theta0);

// k-th Fourier coefficient of W(e^{2i arcsin(sin(theta0/2) sin(theta/2))})
real_t arc_pushforward_coeff(const real_t& theta0, const std::map<int, cplx>& W, int k);

// ln D_n(s=0) expansion: n^2 ln sin(theta0/2) + n Wt_0 - (1/4) ln n
//   + sum k Wt_k Wt_{-k} - (1/4) ln cos(theta0/2) + (1/12) ln 2 + 3 zeta'(-1)
ExpansionValue widom_expansion(const real_t& theta0, const std::map<int, cplx>& W,
                               int n, int k_max);

// ln D_n(s=1) expansion: n W_0 + sum_{k>=1} k W_k W_{-k}
ExpansionValue szego_expansion(const std::map<int, cplx>& W, int n);

// ln D_n expansion for fixed s in (0,1), jump singularities at e^{+-i theta0}
ExpansionValue fisher_hartwig_expansion(const real_t& s, const real_t& theta0,
                                        const std::map<int, cplx>& W, int n);

// error envelope n^{-1/2} e^{x_c n} s with unit constant; weighted variant
// carries the extra (pi - theta0)^{1/2} factor
real_t theorem_error_envelope(int n, const real_t& theta0, const real_t& s,
                              bool weighted = false);

}  // namespace gaptlz
