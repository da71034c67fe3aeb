#include "gaptlz/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

namespace gaptlz {

namespace {

// Legendre P_m and P_m' by the three-term recurrence.
std::pair<real_t, real_t> legendre_pair(unsigned m, const real_t& x) {
  real_t pm1 = 1, p = x;
  for (unsigned k = 2; k <= m; ++k) {
    real_t pk = ((2 * int(k) - 1) * x * p - (int(k) - 1) * pm1) / int(k);
    pm1 = p;
    p = pk;
  }
  // P_m'(x) = m (x P_m - P_{m-1}) / (x^2 - 1)
  real_t dp = int(m) * (x * p - pm1) / (x * x - 1);
  return {p, dp};
}

QuadratureRule build_rule(unsigned m, unsigned bits) {
  PrecisionGuard guard(bits + 32);
  QuadratureRule rule;
  rule.order = m;
  rule.precision_bits = bits;
  rule.nodes.resize(m);
  rule.weights.resize(m);
  if (m == 1) {
    rule.nodes[0] = 0;
    rule.weights[0] = 2;
    return rule;
  }
  real_t pi = const_pi();
  real_t tol = pow(real_t(2), -int(bits + 16));
  for (unsigned i = 0; i < (m + 1) / 2; ++i) {
    // Chebyshev-like initial guess, then Newton at full precision.
    real_t x = -cos(pi * (4 * int(i) + 3) / (4 * int(m) + 2));
    for (int it = 0; it < 200; ++it) {
      auto [p, dp] = legendre_pair(m, x);
      real_t dx = p / dp;
      x -= dx;
      if (abs(dx) < tol) break;
    }
    auto [p, dp] = legendre_pair(m, x);
    (void)p;
    real_t w = 2 / ((1 - x * x) * dp * dp);
    rule.nodes[i] = x;
    rule.weights[i] = w;
    rule.nodes[m - 1 - i] = -x;
    rule.weights[m - 1 - i] = w;
  }
  if (m % 2 == 1) {
    rule.nodes[m / 2] = 0;
    auto [p, dp] = legendre_pair(m, real_t(0));
    (void)p;
    rule.weights[m / 2] = 2 / (dp * dp);
  }
  return rule;
}

}  // namespace

const QuadratureRule& gauss_legendre(unsigned m, unsigned precision_bits) {
  if (m < 1) throw DomainError("gauss_legendre: order must be >= 1");
  static std::map<std::pair<unsigned, unsigned>, QuadratureRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(m, precision_bits);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, build_rule(m, precision_bits)).first;
  }
  return it->second;
}

}  // namespace gaptlz
