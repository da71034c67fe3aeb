#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gaptlz/asymptotics.hpp"
#include "gaptlz/quadrature.hpp"
#include "gaptlz/toeplitz.hpp"

using namespace gaptlz;

namespace {

real_t tol_bits(int b) { return pow(real_t(2), -b); }

}  // namespace

TEST_CASE("x_critical") {
  PrecisionGuard guard(128);
  real_t pi = const_pi();
  // tan(pi/8) = sqrt(2) - 1
  real_t ref = -2 * log(sqrt(real_t(2)) - 1);
  CHECK(abs(x_critical(pi / 2) - ref) < tol_bits(120));
  CHECK(abs(x_critical(pi / 2) - real_t("1.762747")) < real_t("1e-6"));
  CHECK(x_critical(pi / 3) > x_critical(pi / 2));
  CHECK(x_critical(pi - real_t("1e-9")) < real_t("1e-8"));
  CHECK_THROWS_AS(x_critical(real_t(4)), DomainError);
}

TEST_CASE("widom_expansion W=0 constants and log_det decay") {
  PrecisionGuard guard(192);
  real_t pi = const_pi();
  ExpansionValue ev = widom_expansion(pi / 2, {}, 10, 5);
  CHECK(abs(ev.terms.at("series")) == 0);
  CHECK(abs(ev.terms.at("linear")) == 0);
  CHECK(ev.truncation_bound == 0);
  CHECK(abs(ev.value - cplx(real_t("-35.5845"))) < real_t("5e-4"));
  // breakdown sums to the value
  cplx acc = 0;
  for (auto& [k, t] : ev.terms) acc += t;
  CHECK(abs(acc - ev.value) == 0);

  // residual against the exact determinant shrinks with n
  SymbolSpec s0(pi / 2, cplx(0));
  real_t r10 = abs(widom_expansion(pi / 2, {}, 10, 5).value - log_det(s0, 10).ln_D);
  real_t r20 = abs(widom_expansion(pi / 2, {}, 20, 5).value - log_det(s0, 20).ln_D);
  CHECK(r20 < r10);
  CHECK(r10 < real_t(0.1));
}

TEST_CASE("widom_expansion with W") {
  PrecisionGuard guard(192);
  real_t pi = const_pi();
  std::map<int, cplx> w{{1, cplx(0.3)}, {-1, cplx(0.3)}};
  // pushforward coefficient stable across quadrature refinement
  real_t w0a = arc_pushforward_coeff(pi / 2, w, 0);
  real_t w0b;
  {
    PrecisionGuard inner(256);
    w0b = arc_pushforward_coeff(pi / 2, w, 0);
  }
  CHECK(abs(w0a - w0b) < real_t("1e-20"));

  // k_max invariance beyond the tail threshold
  ExpansionValue e6 = widom_expansion(pi / 2, w, 12, 6);
  ExpansionValue e12 = widom_expansion(pi / 2, w, 12, 12);
  CHECK(abs(e6.value - e12.value) <= e6.truncation_bound + tol_bits(150));

  // asymmetric W rejected
  std::map<int, cplx> bad{{1, cplx(0.3)}};
  CHECK_THROWS_AS(widom_expansion(pi / 2, bad, 5, 3), SymmetryViolation);
  std::map<int, cplx> badc{{1, cplx(0.1, 0.2)}, {-1, cplx(0.1, 0.2)}};
  CHECK_THROWS_AS(widom_expansion(pi / 2, badc, 5, 3), SymmetryViolation);
}

TEST_CASE("szego_expansion") {
  PrecisionGuard guard(128);
  CHECK(abs(szego_expansion({}, 9).value) == 0);
  std::map<int, cplx> w{{1, cplx(real_t(3) / 10)}, {-1, cplx(real_t(3) / 10)}};
  CHECK(abs(szego_expansion(w, 3).value - cplx(real_t(9) / 100)) < tol_bits(110));
  std::map<int, cplx> w0{{0, cplx(real_t(1) / 10)}};
  CHECK(abs(szego_expansion(w0, 7).value - cplx(real_t(7) / 10)) < tol_bits(110));
}

TEST_CASE("fisher_hartwig_expansion") {
  PrecisionGuard guard(192);
  real_t pi = const_pi();
  std::map<int, cplx> w{{1, cplx(real_t(3) / 10)}, {-1, cplx(real_t(3) / 10)}};

  // s = 1 degenerates to the Szego expansion
  ExpansionValue fh1 = fisher_hartwig_expansion(real_t(1), pi / 2, w, 11);
  CHECK(abs(fh1.value - szego_expansion(w, 11).value) < tol_bits(150));

  // hand value of the cross term at s = 1/2
  ExpansionValue fh = fisher_hartwig_expansion(real_t(1) / 2, pi / 2, w, 11);
  cplx cross_ref = cplx(log(real_t(1) / 2) / pi * (real_t(6) / 10));
  CHECK(abs(fh.terms.at("cross") - cross_ref) < tol_bits(150));

  // difference to Szego shrinks monotonically as s -> 1 (W = 0)
  auto gap_at = [&](const real_t& s) {
    return abs(fisher_hartwig_expansion(s, pi / 2, {}, 11).value);
  };
  real_t g08 = gap_at(real_t(8) / 10);
  real_t g09 = gap_at(real_t(9) / 10);
  real_t g099 = gap_at(real_t(99) / 100);
  CHECK(g099 < g09);
  CHECK(g09 < g08);

  // determinant oracle: residual at n=40 below the n=20 one (s=0.5, W=0)
  SymbolSpec sp(pi / 2, cplx(real_t(1) / 2));
  real_t r20 = abs(fisher_hartwig_expansion(real_t(1) / 2, pi / 2, {}, 20).value -
                   log_det(sp, 20).ln_D);
  real_t r40 = abs(fisher_hartwig_expansion(real_t(1) / 2, pi / 2, {}, 40).value -
                   log_det(sp, 40).ln_D);
  CHECK(r40 < r20);
  CHECK(r20 < real_t(0.1));
}

TEST_CASE("theorem_error_envelope") {
  PrecisionGuard guard(128);
  real_t pi = const_pi();
  real_t xc = x_critical(pi / 2);
  CHECK(abs(theorem_error_envelope(9, pi / 2, exp(-9 * xc)) - real_t(1) / 3) <
        tol_bits(110));
  CHECK(theorem_error_envelope(9, pi / 2, real_t(0)) == 0);
  real_t e4 = theorem_error_envelope(4, pi / 2, exp(-4 * xc));
  real_t e16 = theorem_error_envelope(16, pi / 2, exp(-16 * xc));
  CHECK(abs(e16 / e4 - real_t(1) / 2) < tol_bits(100));
  CHECK_THROWS_AS(theorem_error_envelope(9, pi / 2, real_t(1) / 2), DomainError);
  // weighted variant carries (pi - theta0)^{1/2}
  real_t plain = theorem_error_envelope(9, pi / 2, exp(-9 * xc));
  real_t wtd = theorem_error_envelope(9, pi / 2, exp(-9 * xc), true);
  CHECK(abs(wtd / plain - sqrt(pi - pi / 2)) < tol_bits(100));
}
