#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gaptlz/asymptotics.hpp"
#include "gaptlz/cue.hpp"

using namespace gaptlz;

TEST_CASE("mgf closed forms and convexity") {
  PrecisionGuard guard(128);
  real_t pi = const_pi();

  CHECK(abs(mgf(pi / 2, 5, real_t(0)) - 1) < real_t("1e-30"));

  // single eigenvalue, uniform on the circle: F(lambda) = (1 + e^lambda)/2
  real_t f = mgf(pi / 2, 1, real_t(1));
  CHECK(abs(f - (1 + exp(real_t(1))) / 2) < pow(real_t(2), -100));
  CHECK(abs(f - real_t("1.8591")) < real_t("1e-4"));

  // log-convexity on a midpoint triple
  real_t l0 = log(mgf(pi / 3, 4, real_t(1) / 2));
  real_t l1 = log(mgf(pi / 3, 4, real_t(1)));
  real_t l2 = log(mgf(pi / 3, 4, real_t(3) / 2));
  CHECK(l1 <= (l0 + l2) / 2 + real_t("1e-30"));

  CHECK_THROWS_AS(mgf(pi / 2, 3, real_t(-1)), DomainError);
}

TEST_CASE("count_distribution axioms and closed forms") {
  PrecisionGuard guard(128);
  real_t pi = const_pi();

  CountDistribution d1 = count_distribution(pi / 2, 1);
  CHECK(abs(d1.probs[0] - real_t(1) / 2) < real_t("1e-30"));
  CHECK(abs(d1.probs[1] - real_t(1) / 2) < real_t("1e-30"));

  CountDistribution d6 = count_distribution(pi / 3, 6);
  CHECK(abs(d6.mean() - 2) < real_t("1e-10"));
  CHECK(abs(d6.total() - 1) < real_t("1e-12"));
  for (const real_t& p : d6.probs) CHECK(p >= 0);

  CountDistribution d8 = count_distribution(real_t(2), 8);
  CHECK(abs(d8.total() - 1) < real_t("1e-12"));
  CHECK(abs(d8.mean() - 8 * real_t(2) / pi) < real_t("1e-10"));

  // arc/gap exchange: theta0 <-> pi - theta0 reverses the distribution
  CountDistribution dr = count_distribution(pi - pi / 3, 6);
  for (int k = 0; k <= 6; ++k)
    CHECK(abs(d6.probs[k] - dr.probs[6 - k]) < real_t("1e-12"));
}

TEST_CASE("mgf equals the distribution moment sum") {
  PrecisionGuard guard(128);
  real_t pi = const_pi();
  int n = 6;
  real_t lambda = real_t(7) / 10;
  CountDistribution d = count_distribution(pi / 3, n);
  real_t from_probs = 0;
  for (int k = 0; k <= n; ++k) from_probs += d.probs[k] * exp(lambda * k);
  real_t direct = mgf(pi / 3, n, lambda);
  CHECK(abs(direct - from_probs) / direct < real_t("1e-10"));
}

TEST_CASE("tail_bound dominates the exact tail") {
  PrecisionGuard guard(128);
  real_t pi = const_pi();
  int n = 8;
  CountDistribution d = count_distribution(pi / 2, n);

  // spec point: p = 7 at the optimized lambda
  CHECK(tail_bound(pi / 2, n, 7) >= d.upper_tail(7));

  // dominance for every p at two lambda values
  real_t lam_opt = real_t(n) * x_critical(pi / 2);
  for (int p = 0; p <= n; ++p) {
    CHECK(tail_bound(pi / 2, n, p, lam_opt) >= d.upper_tail(p) - real_t("1e-20"));
    CHECK(tail_bound(pi / 2, n, p, real_t(1)) >= d.upper_tail(p) - real_t("1e-20"));
  }

  // p = 0 bound is the MGF itself, at least 1
  real_t b0 = tail_bound(pi / 2, n, 0, real_t(2));
  CHECK(abs(b0 - mgf(pi / 2, n, real_t(2))) == 0);
  CHECK(b0 >= 1);

  CHECK_THROWS_AS(tail_bound(pi / 2, n, -1), DomainError);
  CHECK_THROWS_AS(tail_bound(pi / 2, n, n + 1), DomainError);
}

TEST_CASE("full-count rate approaches ln sin(theta0/2)") {
  PrecisionGuard guard(128);
  real_t pi = const_pi();
  real_t phi = log(sin(pi / 4));
  real_t prev_gap = real_infinity();
  for (int n : {8, 16, 32}) {
    real_t rate = log(tail_bound(pi / 2, n, n)) / (real_t(n) * n);
    real_t gap = abs(rate - phi);
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
}
