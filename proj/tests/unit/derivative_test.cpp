#include <algorithm>
#include <cmath>
#include <numbers>

#include <doctest.h>

#include "gcalc/derivative.hpp"
#include "gcalc/error.hpp"
#include "helpers.hpp"
#include "oracle/classical.hpp"

using namespace gcalc;
using gcalc::testing::Random;
using gcalc::testing::log_close;

namespace {

GNum ev(double log) { return GNum::from_log(log); }

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected gcalc::Error");
  return ErrorKind::DomainError;
}

PositiveFunction gpower(int n) {
  return PositiveFunction::geometric([n](GNum x) { return gpow_int(x, n); });
}

}  // namespace

TEST_CASE("numeric G-derivative of simple functions") {
  const auto identity = PositiveFunction::geometric([](GNum x) { return x; });
  for (double u : {-2.0, -0.3, 0.0, 0.7, 3.0}) {
    CHECK(gderiv_numeric(identity, ev(u)) == GNum::unit());
  }

  const auto constant = PositiveFunction::ordinary([](double) { return 7.5; });
  CHECK(gderiv_numeric(constant, ev(1.3)) == GNum::zero());

  CHECK_LOG_CLOSE(gderiv_numeric(gpower(2), ev(3.0)), ev(6.0), 1e-8);

  // e^{x} has ln f(e^u) = e^u, so its G-derivative at x is e^{x}.
  const auto expo = PositiveFunction::ordinary([](double x) { return std::exp(x); });
  CHECK_LOG_CLOSE(gderiv_numeric(expo, ev(0.5)), ev(std::exp(0.5)), 1e-8);
}

TEST_CASE("numeric derivative matches the classical central difference") {
  Random rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = rng.uniform(-1.0, 1.0);
    const double b = rng.uniform(-1.0, 1.0);
    const double c = rng.uniform(-1.0, 1.0);
    const auto g = [=](double u) { return a * u * u * u + b * std::sin(u) + c; };
    const auto f = PositiveFunction::geometric([g](GNum x) { return GNum::from_log(g(x.log())); });
    const double u0 = rng.uniform(-2.0, 2.0);
    const double h = rng.uniform(1e-5, 1e-2);
    const GNum got = gderiv_numeric(f, ev(u0), {.step = h});
    CHECK(std::abs(got.log() - oracle::classical_central_difference(g, u0, h)) <= 1e-12);
  }
}

TEST_CASE("symmetric quotient is second order") {
  const auto f = PositiveFunction::ordinary([](double x) { return 1.0 + x * x * x; });
  const GNum x = ev(0.4);
  const double exact = 3.0 * std::exp(1.2) / (1.0 + std::exp(1.2));
  const double e1 = std::abs(gderiv_numeric(f, x, {.step = 1e-2}).log() - exact);
  const double e2 = std::abs(gderiv_numeric(f, x, {.step = 5e-3}).log() - exact);
  const double ratio = e1 / e2;
  CHECK(ratio >= 3.5);
  CHECK(ratio <= 4.5);

  const double one_sided = std::abs(gderiv_numeric(f, x, {.step = 1e-2, .one_sided = true}).log() - exact);
  const double one_sided_half =
      std::abs(gderiv_numeric(f, x, {.step = 5e-3, .one_sided = true}).log() - exact);
  CHECK(one_sided / one_sided_half == doctest::Approx(2.0).epsilon(0.1));

  const double rich = std::abs(gderiv_numeric(f, x, {.step = 1e-2, .richardson = true}).log() - exact);
  CHECK(rich < e1 / 100);
}

TEST_CASE("numeric derivative errors") {
  const auto negative = PositiveFunction::ordinary([](double x) { return 1.0 - x; });
  CHECK(kind_of([&] { gderiv_numeric(negative, ev(0.0)); }) == ErrorKind::NonPositiveSample);
  const auto nan = PositiveFunction::ordinary([](double) { return std::nan(""); });
  CHECK(kind_of([&] { gderiv_numeric(nan, ev(0.0)); }) == ErrorKind::NonPositiveSample);
  CHECK(kind_of([] { gderiv_nth(gpower(2), ev(0.0), 5); }) == ErrorKind::OrderTooHigh);
  CHECK(kind_of([] { gderiv_nth(gpower(2), ev(0.0), 2, {.one_sided = true}); }) ==
        ErrorKind::DomainError);
}

TEST_CASE("higher-order numeric derivatives") {
  // x^{3_G}: ln f(e^u) = u^3, so the second G-derivative is e^{6u}.
  const GNum x = ev(0.8);
  CHECK_LOG_CLOSE(gderiv_nth(gpower(3), x, 1), ev(3 * 0.64), 1e-8);
  CHECK_LOG_CLOSE(gderiv_nth(gpower(3), x, 2), ev(6 * 0.8), 1e-5);
  CHECK_LOG_CLOSE(gderiv_nth(gpower(3), x, 3), ev(6.0), 1e-3);
  CHECK_LOG_CLOSE(gderiv_nth(gpower(3), x, 4), GNum::zero(), 1e-1);
  CHECK_LOG_CLOSE(gderiv_nth(gpower(3), x, 2, {.richardson = true}), ev(6 * 0.8), 1e-6);
  CHECK(default_derivative_step(1) == kDefaultDerivativeStep);
  CHECK(default_derivative_step(2) > default_derivative_step(1));
}

TEST_CASE("exact polynomial derivatives") {
  const GPolynomial cubic({ev(1.0), ev(1.0), ev(1.0), ev(1.0)});
  const GPolynomial d1 = gderiv_poly(cubic);
  REQUIRE(d1.degree() == 2);
  CHECK(d1.coeffs()[0] == ev(3.0));
  CHECK(d1.coeffs()[1] == ev(2.0));
  CHECK(d1.coeffs()[2] == ev(1.0));
  CHECK(gderiv_poly(GPolynomial({ev(4.0)})).coeffs()[0] == GNum::zero());
  CHECK(std::ranges::equal(gderiv_poly(cubic, 0).coeffs(), cubic.coeffs()));
  CHECK(gderiv_nth(cubic, ev(0.7), 0) == cubic(ev(0.7)));
  // Third derivative of a cubic with unit leading coefficient is e^{3!}.
  CHECK_LOG_CLOSE(gderiv_nth(cubic, ev(0.7), 3), ev(6.0), 1e-14);
  CHECK(gderiv_nth(cubic, ev(0.7), 4) == GNum::zero());

  for (int n = 1; n <= 6; ++n) {
    const GPolynomial p = GPolynomial::monomial(n);
    CHECK_LOG_CLOSE(gderiv_nth(p, ev(0.37), n), ev(std::tgamma(n + 1.0)), 1e-12);
    CHECK(gderiv_nth(p, ev(0.37), n + 1) == GNum::zero());
  }
}

TEST_CASE("exact derivative agrees with the classical derivative") {
  Random rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const int degree = rng.integer(0, 6);
    std::vector<GNum> coeffs;
    std::vector<double> logs;
    for (int k = 0; k <= degree; ++k) {
      coeffs.push_back(rng.gnum());
      logs.push_back(coeffs.back().log());
    }
    const GPolynomial p(coeffs);
    const auto dlogs = oracle::classical_poly_derivative(logs);
    const double u = rng.uniform(-1.5, 1.5);
    CHECK(std::abs(gderiv_nth(p, ev(u), 1).log() - oracle::classical_poly_eval(dlogs, u)) <=
          1e-10 * (1.0 + std::abs(oracle::classical_poly_eval(dlogs, u))));

    // Numeric and exact derivatives agree on smooth polynomials.
    const auto f = PositiveFunction::geometric([&p](GNum x) { return p(x); });
    CHECK_LOG_CLOSE(gderiv_numeric(f, ev(u)), gderiv_nth(p, ev(u), 1),
                    1e-6 * (1.0 + std::abs(gderiv_nth(p, ev(u), 1).log())));
  }
}
