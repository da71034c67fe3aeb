#pragma once

#include <vector>

#include "gaptlz/matrix2.hpp"
#include "gaptlz/symbol.hpp"

namespace gaptlz {

struct LogDetResult {
  int n = 0;
  cplx ln_D;
  // pivot_logs[j] = ln(D_{j+1}/D_j); they sum to ln_D
  std::vector<cplx> pivot_logs;
  unsigned precision_bits = 0;
  bool validated = false;
};

struct OPUCData {
  int n = 0;
  cplx chi_nm1, chi_n;
  // orthonormal polynomial coefficients, ascending degree
  std::vector<cplx> phi_n_coeffs;
  std::vector<cplx> hat_phi_nm1_coeffs;
  cplx y12_at_0;    // = chi_n^{-2}
  cplx y11_at_z0;   // monic phi_n at e^{i theta0}
};

// default working precision for size-n determinants of this symbol family:
// the smallest pivot scales like e^{2 n ln sin(theta0/2)}, doubled for headroom
unsigned default_precision_bits(const SymbolSpec& spec, int n);

// ln det (f_{j-k})_{j,k<n} by pivot accumulation, re-validated at +64 bits
LogDetResult log_det(const SymbolSpec& spec, int n, unsigned precision_bits);
LogDetResult log_det(const SymbolSpec& spec, int n);

OPUCData opuc(const SymbolSpec& spec, int n, unsigned precision_bits);

// the 2x2 orthogonal-polynomial matrix; z off the unit circle
Matrix2C y_matrix(const SymbolSpec& spec, int n, const cplx& z, unsigned precision_bits);

// exact d/ds ln D_n via tr(T^{-1} dT/ds), requires the (a=1, b=s) regime
cplx ds_log_det(const SymbolSpec& spec, int n, unsigned precision_bits);

// d/ds ln D_n as the gap-arc contour integral of z^{-n}[Y^{-1}Y']_{21} e^W
cplx diff_identity_general(const SymbolSpec& spec, int n, unsigned precision_bits);

// d/ds ln D_n (W=0) via -2n ds(chi_n)/chi_n plus the boundary bracket at
// e^{i theta0}, with s-derivatives by centered finite differences
real_t diff_identity_w0(const SymbolSpec& spec, int n, const real_t& fd_step,
                        unsigned precision_bits);

// |LHS - RHS| of the Christoffel-Darboux formula at z (W=0 symbols)
real_t cd_residual(const SymbolSpec& spec, int n, const cplx& z, unsigned precision_bits);

}  // namespace gaptlz
