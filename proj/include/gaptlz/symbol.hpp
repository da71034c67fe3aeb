#pragma once

#include <map>
#include <string>

#include "gaptlz/complex.hpp"
#include "gaptlz/errors.hpp"

namespace gaptlz {

// Piecewise-constant symbol on the unit circle times e^W: value `arc_value`
// on the arc |theta| < theta0, `gap_value` on the complementary arc, with W a
// trigonometric polynomial W(z) = sum_k W_k z^k.
struct SymbolSpec {
  real_t theta0;
  cplx arc_value = cplx(1);
  cplx gap_value = cplx(0);
  std::map<int, cplx> W;
  // asserts W_{-k} = W_k with all coefficients real (checked by validate)
  bool symmetric_real = false;

  SymbolSpec() : theta0(0) {}
  SymbolSpec(const real_t& th0, const cplx& s) : theta0(th0), gap_value(s) {
    validate();
  }
  SymbolSpec(const real_t& th0, const cplx& a, const cplx& b,
             std::map<int, cplx> w, bool sym = false)
      : theta0(th0), arc_value(a), gap_value(b), W(std::move(w)),
        symmetric_real(sym) {
    validate();
  }

  void validate() const;
  bool w_zero() const { return W.empty(); }
};

// gap parameter x with s = e^{-x n}; x may be +infinity (s = 0)
struct GapParameter {
  real_t x;
  int n;

  real_t s_value() const {
    return is_infinite(x) ? real_t(0) : exp(-x * n);
  }
  static GapParameter from_s(const real_t& s, int n);
};

// W(z) = sum_k W_k z^k
cplx w_eval(const SymbolSpec& spec, const cplx& z);

// f_k = (1/2pi) int_0^{2pi} f(e^{i theta}) e^{-ik theta} dtheta
cplx fourier_coeff(const SymbolSpec& spec, int k, unsigned precision_bits);
cplx fourier_coeff(const SymbolSpec& spec, int k);

// d/ds f_k in the (a=1, b=s) regime: (1/2pi) int_{gap} e^W e^{-ik theta} dtheta
cplx ds_fourier_coeff(const SymbolSpec& spec, int k);

// pointwise value f(e^{i theta}); throws JumpPointError at theta = +/- theta0
cplx symbol_eval(const SymbolSpec& spec, const real_t& theta);

// JSON round-trip: {"theta0": str, "s": str | "a"/"b": [re,im], "W": [{"k","re","im"}]}
std::string symbol_to_json(const SymbolSpec& spec);
SymbolSpec symbol_from_json(const std::string& text);

}  // namespace gaptlz
