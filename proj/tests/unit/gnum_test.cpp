#include <cmath>

#include <doctest.h>

#include "gcalc/error.hpp"
#include "gcalc/gnum.hpp"
#include "helpers.hpp"

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

}  // namespace

TEST_CASE("construction from values and logarithms") {
  CHECK(GNum::from_value(1.0).log() == 0.0);
  CHECK(GNum::from_value(1.0) == GNum::zero());
  CHECK(GNum::from_value(7.38906).log() == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(GNum::unit().log() == 1.0);
  CHECK(kind_of([] { GNum::from_value(0.0); }) == ErrorKind::NonPositiveValue);
  CHECK(kind_of([] { GNum::from_value(-2.0); }) == ErrorKind::NonPositiveValue);
  CHECK(kind_of([] { GNum::from_value(NAN); }) == ErrorKind::NotFinite);
  CHECK(kind_of([] { GNum::from_value(INFINITY); }) == ErrorKind::NotFinite);
  CHECK(kind_of([] { GNum::from_log(INFINITY); }) == ErrorKind::NotFinite);

  // Representable even though its value overflows.
  const GNum huge = ev(1000.0);
  CHECK(std::isinf(huge.value()));
  CHECK(huge.log() == 1000.0);
}

TEST_CASE("addition and subtraction multiply and divide values") {
  CHECK(gadd(GNum::from_value(2.0), GNum::from_value(3.0)).value() == doctest::Approx(6.0));
  const GNum x = GNum::from_value(4.2);
  CHECK(gsub(x, x) == GNum::zero());
  CHECK_LOG_CLOSE(gadd(ev(0.12), ev(0.02)), ev(0.14), 1e-15);
  CHECK(gadd(x, GNum::zero()) == x);
}

TEST_CASE("negation") {
  CHECK(gneg(GNum::unit()).log() == -1.0);
  CHECK(gneg(GNum::zero()) == GNum::zero());
  const GNum x = ev(0.37);
  CHECK(gneg(gneg(x)) == x);
  CHECK(-x == gneg(x));
}

TEST_CASE("multiplication and division") {
  const GNum x = ev(-1.7);
  CHECK(gmul(x, GNum::unit()) == x);
  CHECK(gmul(ev(0.25), ev(4.0)) == GNum::unit());
  CHECK(gdiv(ev(4.0), ev(2.0)) == ev(2.0));
  CHECK(kind_of([&] { gdiv(x, GNum::zero()); }) == ErrorKind::GeometricDivisionByZero);
  // x (*) y = x^{ln y} in the value domain.
  const GNum a = GNum::from_value(3.0);
  const GNum b = GNum::from_value(5.0);
  CHECK(gmul(a, b).value() == doctest::Approx(std::pow(3.0, std::log(5.0))));
  CHECK(gdiv(a, b).value() == doctest::Approx(std::pow(3.0, 1.0 / std::log(5.0))));
}

TEST_CASE("integer and real powers") {
  const GNum x = ev(1.3);
  CHECK(gpow_int(x, 2) == gmul(x, x));
  CHECK(gpow_int(ev(3.0), 2) == ev(9.0));
  CHECK(gpow_int(x, 0) == GNum::unit());
  CHECK(gpow_int(x, 1) == x);
  CHECK(gpow_int(ev(2.0), -2).log() == 0.25);
  CHECK(kind_of([] { gpow_int(GNum::zero(), -1); }) == ErrorKind::GeometricDivisionByZero);

  CHECK(gpow_real(ev(4.0), 0.5) == ev(2.0));
  CHECK(gpow_real(ev(0.5), 2.0) == ev(0.25));
  CHECK(gpow_real(ev(-2.0), 3.0) == ev(-8.0));
  CHECK(kind_of([] { gpow_real(GNum::from_value(0.5), 0.5); }) == ErrorKind::DomainError);
}

TEST_CASE("square root, inverse and absolute value") {
  CHECK(gsqrt(ev(9.0)) == ev(3.0));
  CHECK(kind_of([] { gsqrt(ev(-1.0)); }) == ErrorKind::DomainError);
  CHECK(ginv(ev(2.0)) == ev(0.5));
  CHECK(gmul(ev(2.0), ginv(ev(2.0))) == GNum::unit());
  CHECK(kind_of([] { ginv(GNum::zero()); }) == ErrorKind::GeometricDivisionByZero);

  CHECK(gabs(GNum::from_value(0.5)).value() == doctest::Approx(2.0));
  CHECK(gabs(GNum::zero()) == GNum::zero());
  CHECK(gabs(ev(-3.0)) == ev(3.0));
  const GNum x = ev(-0.8);
  CHECK_LOG_CLOSE(gsqrt(gpow_int(x, 2)), gabs(x), 1e-15);
}

TEST_CASE("ordering follows the logarithm") {
  CHECK(gcompare(GNum::unit(), ev(2.0)) == std::strong_ordering::less);
  CHECK(gcompare(ev(0.3), ev(0.3)) == std::strong_ordering::equal);
  CHECK(gcompare(GNum::from_value(0.5), GNum::zero()) == std::strong_ordering::less);
  CHECK(ev(2.0) > GNum::unit());
}

TEST_CASE("geometric factorial") {
  const double expected[] = {1, 1, 2, 6, 24, 120};
  for (int n = 0; n <= 5; ++n) CHECK(gfactorial(n).log() == expected[n]);
  CHECK(gfactorial(0) == GNum::unit());
  CHECK(gfactorial(3).value() == doctest::Approx(4.03429e2).epsilon(1e-5));
  CHECK(gfactorial(5).value() == doctest::Approx(1.30418e52).epsilon(1e-5));
  CHECK(gfactorial(20).log() == 2432902008176640000.0);
  CHECK(gfactorial(22).log() == 1124000727777607680000.0);
  CHECK(kind_of([] { gfactorial(23); }) == ErrorKind::Overflow);
  CHECK(kind_of([] { gfactorial(-1); }) == ErrorKind::DomainError);
}

TEST_CASE("binomial coefficients") {
  CHECK(gbinom_coeff(2, 1) == ev(2.0));
  CHECK(gbinom_coeff(7, 0) == GNum::unit());
  CHECK(gbinom_coeff(4, 2) == ev(6.0));
  CHECK(gbinom_coeff(56, 28).log() == 7648690600760440.0);
  CHECK(kind_of([] { gbinom_coeff(2, 3); }) == ErrorKind::IndexError);
  CHECK(gbinom_coeff(60, 30).log() == 118264581564861424.0);
  CHECK(kind_of([] { gbinom_coeff(57, 25); }) == ErrorKind::Overflow);
}

TEST_CASE("binomial expansion") {
  const GNum a = ev(0.7);
  CHECK(gbinom_expand(a, GNum::zero(), 5, false) == gpow_int(a, 5));
  CHECK_LOG_CLOSE(gbinom_expand(ev(2.0), GNum::unit(), 2, true), GNum::unit(), 1e-14);

  Random rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const GNum x = rng.gnum(-1.5, 1.5);
    const GNum y = rng.gnum(-1.5, 1.5);
    const int n = rng.integer(0, 8);
    const double scale = std::max(1.0, std::pow(std::abs(x.log()) + std::abs(y.log()), n));
    CHECK(log_close(gbinom_expand(x, y, n, false), gpow_int(gadd(x, y), n), 1e-10 * scale));
    CHECK(log_close(gbinom_expand(x, y, n, true), gpow_int(gsub(x, y), n), 1e-10 * scale));
  }
}

TEST_CASE("operations are ordinary arithmetic on logarithms") {
  Random rng(1);
  for (int trial = 0; trial < 500; ++trial) {
    const GNum x = rng.gnum();
    const GNum y = rng.gnum();
    CHECK(gadd(x, y).log() == x.log() + y.log());
    CHECK(gsub(x, y).log() == x.log() - y.log());
    CHECK(gmul(x, y).log() == x.log() * y.log());
    CHECK(gdiv(x, y).log() == x.log() / y.log());
  }
}

TEST_CASE("field axioms") {
  Random rng(2);
  const double tol = 1e-12;
  for (int trial = 0; trial < 500; ++trial) {
    const GNum x = rng.gnum();
    const GNum y = rng.gnum();
    const GNum z = rng.gnum();
    auto close = [&](GNum a, GNum b) {
      return std::abs(a.log() - b.log()) <= tol * std::max(1.0, std::abs(a.log()));
    };
    CHECK(gadd(x, y) == gadd(y, x));
    CHECK(gmul(x, y) == gmul(y, x));
    CHECK(close(gadd(gadd(x, y), z), gadd(x, gadd(y, z))));
    CHECK(close(gmul(gmul(x, y), z), gmul(x, gmul(y, z))));
    CHECK(close(gmul(x, gadd(y, z)), gadd(gmul(x, y), gmul(x, z))));
    CHECK(gadd(x, GNum::zero()) == x);
    CHECK(gmul(x, GNum::unit()) == x);
    CHECK(gadd(x, gneg(x)) == GNum::zero());
    CHECK(close(gmul(x, ginv(x)), GNum::unit()));
  }
}

TEST_CASE("absolute value properties") {
  Random rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const GNum x = rng.gnum();
    const GNum y = rng.gnum();
    CHECK(gabs(x) >= GNum::zero());
    CHECK(gabs(gmul(x, y)) == gmul(gabs(x), gabs(y)));
    CHECK(gcompare(gabs(gadd(x, y)), gadd(gabs(x), gabs(y))) != std::strong_ordering::greater);
    // |x (-) y| >= |x| (-) |y|
    CHECK(gcompare(gabs(gsub(x, y)), gsub(gabs(x), gabs(y))) != std::strong_ordering::less);
  }
}

TEST_CASE("e^n (*) x = x^n") {
  Random rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const GNum x = rng.gnum();
    const int n = rng.integer(-5, 5);
    const GNum en = GNum::from_value(std::exp(static_cast<double>(n)));
    CHECK(gmul(en, x).log() == doctest::Approx(n * x.log()).epsilon(1e-12));
    CHECK(gmul(en, x).value() == doctest::Approx(std::pow(x.value(), n)).epsilon(1e-12));
  }
}

TEST_CASE("textual form") {
  CHECK(format_gnum(GNum::from_value(6.0)) == "6.000000");
  CHECK(format_gnum(ev(120.0)) == "e^120");
  CHECK(format_gnum(ev(-16.25)) == "e^-16.25");
  CHECK(format_gnum(ev(15.0)) == "3269017.372472");
  CHECK(format_gnum(GNum::from_value(0.903341)) == "0.903341");
  CHECK(format_gnum(GNum::from_value(2.5), 2) == "2.50");
  CHECK(format_exp_form(ev(0.12)) == "e^0.12");
  CHECK(format_exp_form(GNum::zero()) == "e^0");

  CHECK(parse_gnum("e^0.12").log() == 0.12);
  CHECK(parse_gnum("e^-3").log() == -3.0);
  CHECK(parse_gnum("e^+1.5e2").log() == 150.0);
  CHECK(parse_gnum("2.5").value() == doctest::Approx(2.5));
  CHECK(parse_gnum(".5").value() == doctest::Approx(0.5));
  CHECK(kind_of([] { parse_gnum("0"); }) == ErrorKind::NonPositiveValue);
  CHECK(kind_of([] { parse_gnum("-1"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_gnum("e^"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_gnum("1.2.3"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_gnum(""); }) == ErrorKind::ParseError);

  // Large elements print in e^ form and read back to the printed exponent.
  Random rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const GNum x = rng.gnum(16.0, 500.0);
    CHECK(std::abs(parse_gnum(format_gnum(x, 9)).log() - x.log()) <= 5e-10);
  }
}
