#include "gaptlz/cue.hpp"

#include "gaptlz/asymptotics.hpp"
#include "gaptlz/toeplitz.hpp"

namespace gaptlz {

namespace {

unsigned distribution_bits(const real_t& theta0, int n) {
  // the smallest probability is p_0 ~ e^{n^2 ln sin(theta0/2)} (all
  // eigenvalues expelled from the arc); resolve it with headroom
  real_t need = -real_t(n) * n * log(sin(theta0 / 2)) / log(real_t(2));
  unsigned extra = need > 0 ? unsigned(ceil(need).convert_to<long>()) : 0;
  return std::max(192u, extra + 128);
}

}  // namespace

real_t CountDistribution::mean() const {
  real_t acc = 0;
  for (int k = 0; k <= n; ++k) acc += k * probs[k];
  return acc;
}

real_t CountDistribution::total() const {
  real_t acc = 0;
  for (int k = 0; k <= n; ++k) acc += probs[k];
  return acc;
}

real_t CountDistribution::upper_tail(int p) const {
  real_t acc = 0;
  for (int k = p; k <= n; ++k) acc += probs[k];
  return acc;
}

real_t mgf(const real_t& theta0, int n, const real_t& lambda) {
  if (lambda < 0) throw DomainError("mgf: lambda must be >= 0");
  if (n < 1) throw DomainError("mgf: n must be >= 1");
  unsigned bits = current_precision_bits();
  SymbolSpec spec(to_precision(theta0), cplx(exp(-to_precision(lambda))));
  unsigned p = std::max(bits, default_precision_bits(spec, n));
  PrecisionGuard guard(p + 32);
  real_t lam = to_precision(lambda);
  cplx ln_f = cplx(real_t(n) * lam) + log_det(spec, n, p).ln_D;
  return to_precision(exp(ln_f.re));
}

CountDistribution count_distribution(const real_t& theta0, int n) {
  if (n < 1) throw DomainError("count_distribution: n must be >= 1");
  unsigned bits = std::max(current_precision_bits(),
                           distribution_bits(to_precision(theta0), n));
  PrecisionGuard guard(bits + 32);
  real_t th = to_precision(theta0);
  real_t pi = const_pi();
  real_t step = 2 * pi / (n + 1);

  auto evaluate = [&](const real_t& delta, std::vector<cplx>& vals) {
    vals.clear();
    for (int j = 0; j <= n; ++j) {
      cplx t = unit(delta + j * step);
      SymbolSpec spec(th, t, cplx(1), {});
      vals.push_back(exp(log_det(spec, n, bits).ln_D));
    }
  };

  std::vector<cplx> vals;
  real_t delta = 0;
  try {
    evaluate(delta, vals);
  } catch (const SingularMinor&) {
    // rotate the whole node set off the bad configuration and retry once
    delta = step / 7;
    evaluate(delta, vals);
  }

  CountDistribution dist;
  dist.n = n;
  dist.theta0 = th;
  dist.probs.resize(n + 1);
  real_t clamp_floor = -pow(real_t(10), -20);
  for (int k = 0; k <= n; ++k) {
    cplx acc = 0;
    for (int j = 0; j <= n; ++j) acc += vals[j] * unit(-k * (delta + j * step));
    real_t p = acc.re / (n + 1);
    if (p < 0 && p >= clamp_floor) p = 0;
    dist.probs[k] = to_precision(p);
  }
  return dist;
}

real_t tail_bound(const real_t& theta0, int n, int p, const real_t& lambda) {
  if (p < 0 || p > n) throw DomainError("tail_bound: need 0 <= p <= n");
  if (lambda < 0) throw DomainError("tail_bound: lambda must be >= 0");
  unsigned bits = current_precision_bits();
  SymbolSpec spec(to_precision(theta0), cplx(exp(-to_precision(lambda))));
  unsigned pb = std::max(bits, default_precision_bits(spec, n));
  PrecisionGuard guard(pb + 32);
  real_t lam = to_precision(lambda);
  cplx ln_b = cplx(real_t(n - p) * lam) + log_det(spec, n, pb).ln_D;
  return to_precision(exp(ln_b.re));
}

real_t tail_bound(const real_t& theta0, int n, int p) {
  return tail_bound(theta0, n, p, real_t(n) * x_critical(to_precision(theta0)));
}

}  // namespace gaptlz
