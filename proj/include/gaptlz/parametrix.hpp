#pragma once

#include <map>
#include <string>

#include "gaptlz/matrix2.hpp"

namespace gaptlz {

// Evaluation context for the steepest-descent model objects attached to the
// arc endpoints z0 = e^{i theta0}, conj(z0) and to the gap midpoint -1.
// Lenses are circular arcs through z0 and conj(z0) with sagitta lens_offset
// (inner lens through 1 - lens_offset, outer through 1 + lens_offset).
struct ParametrixContext {
  real_t theta0;
  std::map<int, cplx> W;  // trigonometric polynomial W(z) = sum_k W_k z^k
  int n = 8;
  real_t x;               // gap weight exponent, x >= x_c(theta0)
  real_t disk_radius;     // default 0.4 (pi - theta0) min(1, theta0)
  real_t lens_offset;     // default disk_radius / 4

  ParametrixContext(const real_t& th0, std::map<int, cplx> w, int n_,
                    const real_t& x_);
  ParametrixContext(const real_t& th0, std::map<int, cplx> w, int n_,
                    const real_t& x_, const real_t& r, const real_t& lens);
  void validate() const;
};

enum class LocalCenter { z0, zbar0, minus1 };

// Contours carrying jump conditions: the lens/gap system of the deformed
// problem (S), the local parametrix contour inside D(z0,r) (P), the model
// contour of the Bessel problem (Psi), its modification (PsiHat), and the
// arc cut of the outer parametrix (Pinf).
enum class JumpObject { S, P, Psi, PsiHat, Pinf };

// W(z) = sum_k W_k z^k for a raw coefficient map
cplx w_poly(const std::map<int, cplx>& W, const cplx& z);

// sqrt((z - z0)(z - conj z0)) branched along the arc |arg z| <= theta0 of the
// unit circle, ~ z at infinity
cplx q_gamma(const real_t& theta0, const cplx& z);

// ((z - conj z0)/(z - z0))^{1/4}, same cut, -> 1 at infinity
cplx beta_ratio(const real_t& theta0, const cplx& z);

// g(z) = int log(z - e^{i theta}) du(theta) against the one-arc equilibrium
// density, log branch continuous in theta from the principal value at -theta0
cplx g_function(const ParametrixContext& ctx, const cplx& z);

// phi(z) = int_{z0}^{z} (xi + 1) / (q_gamma(xi) xi) dxi along a radial-plus-
// circular path avoiding the arc cut and the origin
cplx phi_function(const ParametrixContext& ctx, const cplx& z);

// closed form of phi(e^{i alpha}) on the gap (theta0 < alpha < 2 pi - theta0);
// real, 0 at the arc endpoints, maximum x_c at alpha = pi
real_t phi_on_gap(const ParametrixContext& ctx, const real_t& alpha);

// Szego-type function h: Cauchy integral of W over the arc against the
// boundary values of q_gamma; satisfies h_+ + h_- = W on the arc
cplx szego_h(const ParametrixContext& ctx, const cplx& z);
cplx szego_h_infinity(const ParametrixContext& ctx);

// outer parametrix P_inf(z) built from beta_ratio, h and h_infinity
Matrix2C global_parametrix(const ParametrixContext& ctx, const cplx& z);

// Bessel model matrix Psi(zeta), sector-wise in arg zeta with boundaries at
// the negative axis and the rays arg zeta = +-2pi/3
Matrix2C bessel_model_psi(const cplx& zeta);

// entire matrix F(zeta) used to build the rank-one modification of Psi
Matrix2C bessel_model_f(const cplx& zeta);

// modified model matrix: (I + A(zeta)) Psi(zeta) with
// A = e^{-nx} F [[0, -ln(-zeta)/(2 pi i)], [0, 0]] F^{-1}
Matrix2C psi_hat(const cplx& zeta, const real_t& nx);

// conformal coordinate zeta(z) = phi(z)^2 / 16 near z0
cplx zeta_map(const ParametrixContext& ctx, const cplx& z);

// local parametrix on D(z0,r) (Bessel model conjugated by the analytic
// prefactor E), its reflection on D(conj z0, r), and the rank-one Cauchy
// correction P_inf [[1, h~],[0,1]] on D(-1,r)
Matrix2C local_parametrix(const ParametrixContext& ctx, const cplx& z,
                          LocalCenter which);

// analytic prefactor E(z) of the z0 parametrix (exposed for the removable-
// singularity check at z0)
Matrix2C local_prefactor_e(const ParametrixContext& ctx, const cplx& z);

// point on the lens arcs: inner = true picks the arc through 1 - lens_offset;
// t in (0,1) runs from z0 (t=0) to conj(z0) (t=1)
cplx lens_point(const ParametrixContext& ctx, bool inner, const real_t& t);

// jump residual ||L_+ - L_- J|| at a contour point, one-sided values taken at
// +-offset normal displacement. For JumpObject::S (whose matrix is never
// built) the deviation ||J - I|| of the jump matrix itself is reported.
real_t jump_residual(const ParametrixContext& ctx, JumpObject object,
                     const cplx& point, const real_t& offset);

// "object,point_re,point_im,offset,residual"
std::string residual_csv_row(const std::string& object, const cplx& point,
                             const real_t& offset, const real_t& residual);

}  // namespace gaptlz
