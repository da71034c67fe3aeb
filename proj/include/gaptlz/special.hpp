#pragma once

#include "gaptlz/complex.hpp"
#include "gaptlz/errors.hpp"

namespace gaptlz {

enum class Bessel0Kind { I, K, H1, H2, Ip, Kp, H1p, H2p };

// Order-zero modified Bessel (I0, K0) and Hankel (H0^(1), H0^(2)) values and
// first derivatives at complex z, principal branch. Power series below a
// precision-dependent crossover radius, compound asymptotic series beyond.
cplx bessel0(Bessel0Kind kind, const cplx& z);

// Crossover radius used by bessel0 at the current working precision
// (exposed for the overlap-validation tests).
real_t bessel0_crossover_radius();

// ln G(1+z), principal value; Taylor series inside the unit disk combined
// with the recurrence G(1+z) = Gamma(z) G(z).
cplx ln_barnes_g(const cplx& z);

// ln Gamma(z), principal branch (continuous on C minus the negative real axis).
cplx ln_gamma(const cplx& z);

// zeta'(-1) at the current working precision.
real_t zeta_prime_at_minus_one();
real_t zeta_prime_at_minus_one(unsigned precision_bits);

}  // namespace gaptlz
