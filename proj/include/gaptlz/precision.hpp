#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <algorithm>
#include <string>

namespace gaptlz {

namespace mp = boost::multiprecision;

// Arbitrary-precision binary float. Working precision is taken from the
// thread-default at construction/assignment time; scope it with PrecisionGuard.
using real_t = mp::number<mp::mpfr_float_backend<0, mp::allocate_dynamic>, mp::et_off>;

inline unsigned bits_to_digits10(unsigned bits) {
  return static_cast<unsigned>(bits * 0.3010299957) + 3;
}

inline unsigned digits10_to_bits(unsigned digits10) {
  return static_cast<unsigned>(digits10 * 3.3219280949) + 2;
}

inline unsigned current_precision_bits() {
  return digits10_to_bits(real_t::default_precision());
}

// RAII scope for the working precision, in bits (>= 64 per the PrecReal
// invariant; smaller requests are clamped up).
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned bits)
      : saved_digits_(real_t::default_precision()) {
    real_t::default_precision(bits_to_digits10(std::max(bits, 64u)));
  }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;
  ~PrecisionGuard() { real_t::default_precision(saved_digits_); }

 private:
  unsigned saved_digits_;
};

inline real_t const_pi() {
  real_t p;
  mpfr_const_pi(p.backend().data(), MPFR_RNDN);
  return p;
}

inline real_t const_euler_gamma() {
  real_t g;
  mpfr_const_euler(g.backend().data(), MPFR_RNDN);
  return g;
}

// Riemann zeta at integer argument k >= 2.
inline real_t zeta_int(unsigned k) {
  real_t z;
  mpfr_zeta_ui(z.backend().data(), k, MPFR_RNDN);
  return z;
}

// Copy of x carrying the current working precision. Arithmetic results here
// inherit the precision of their first operand, so routines that raise the
// working precision must renormalize their inputs through this.
inline real_t to_precision(const real_t& x) {
  real_t y;
  mpfr_set(y.backend().data(), x.backend().data(), MPFR_RNDN);
  return y;
}

inline real_t real_infinity() {
  real_t v;
  mpfr_set_inf(v.backend().data(), 1);
  return v;
}

inline bool is_infinite(const real_t& v) {
  return mpfr_inf_p(v.backend().data()) != 0;
}

inline std::string to_str(const real_t& v, unsigned digits = 0) {
  return v.str(digits == 0 ? 17 : digits);
}

}  // namespace gaptlz
