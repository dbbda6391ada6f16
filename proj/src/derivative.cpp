#include "gcalc/derivative.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include <fmt/format.h>

#include "gcalc/error.hpp"

namespace gcalc {

PositiveFunction PositiveFunction::geometric(Geometric f) {
  return PositiveFunction(std::move(f));
}

PositiveFunction PositiveFunction::ordinary(Ordinary f) {
  return PositiveFunction([f = std::move(f)](GNum x) {
    const double y = f(x.value());
    if (!std::isfinite(y) || y <= 0.0) {
      throw Error(ErrorKind::NonPositiveSample,
                  fmt::format("f({}) = {} is not a finite positive value", x.value(), y));
    }
    return GNum::from_value(y);
  });
}

GNum PositiveFunction::operator()(GNum x) const {
  try {
    return f_(x);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NonPositiveValue || e.kind() == ErrorKind::NotFinite) {
      throw Error(ErrorKind::NonPositiveSample,
                  fmt::format("sampling at e^{}: {}", x.log(), e.what()));
    }
    throw;
  }
}

double default_derivative_step(int order) {
  if (order <= 1) return kDefaultDerivativeStep;
  return std::pow(std::numeric_limits<double>::epsilon(), 1.0 / (order + 2));
}

namespace {

double step_of(const DerivativeOptions& options, int order) {
  const double u = options.step.value_or(default_derivative_step(order));
  if (!(u > 0.0) || !std::isfinite(u)) {
    throw Error(ErrorKind::DomainError, fmt::format("derivative step {} must be > 0", u));
  }
  return u;
}

double first_quotient(const PositiveFunction& f, GNum x, double u, bool one_sided) {
  const GNum h = GNum::from_log(u);
  const GNum right = gadd(x, h);
  const GNum left = one_sided ? x : gsub(x, h);
  return gdiv(gsub(f(right), f(left)), gsub(right, left)).log();
}

// n-th central difference of g(t) = ln f(e^t), nodes at t0 + (n/2 - k) u.
double central_quotient(const PositiveFunction& f, GNum x, int n, double u) {
  double sum = 0.0;
  double binom = 1.0;
  for (int k = 0; k <= n; ++k) {
    const double offset = (0.5 * n - k) * u;
    const double sample = f(GNum::from_log(x.log() + offset)).log();
    sum += (k % 2 == 0 ? binom : -binom) * sample;
    binom = binom * (n - k) / (k + 1);
  }
  return sum / std::pow(u, n);
}

}  // namespace

GNum gderiv_numeric(const PositiveFunction& f, GNum x, const DerivativeOptions& options) {
  const double u = step_of(options, 1);
  const double coarse = first_quotient(f, x, u, options.one_sided);
  if (!options.richardson) return GNum::from_log(coarse);
  const double fine = first_quotient(f, x, 0.5 * u, options.one_sided);
  // Error is O(u) one-sided, O(u^2) symmetric.
  const double gain = options.one_sided ? 2.0 : 4.0;
  return GNum::from_log((gain * fine - coarse) / (gain - 1.0));
}

GNum gderiv_nth(const PositiveFunction& f, GNum x, int n, const DerivativeOptions& options) {
  if (n < 1) throw Error(ErrorKind::DomainError, "derivative order must be >= 1");
  if (n > kMaxNumericDerivativeOrder) {
    throw Error(ErrorKind::OrderTooHigh,
                fmt::format("numeric derivatives are limited to order {}",
                            kMaxNumericDerivativeOrder));
  }
  if (n == 1) return gderiv_numeric(f, x, options);
  if (options.one_sided) {
    throw Error(ErrorKind::DomainError, "one-sided quotients are first-order only");
  }
  const double u = step_of(options, n);
  const double coarse = central_quotient(f, x, n, u);
  if (!options.richardson) return GNum::from_log(coarse);
  const double fine = central_quotient(f, x, n, 0.5 * u);
  return GNum::from_log((4.0 * fine - coarse) / 3.0);
}

GPolynomial gderiv_poly(const GPolynomial& p) {
  const auto coeffs = p.coeffs();
  const std::size_t n = p.degree();
  if (n == 0) return GPolynomial({GNum::zero()});
  std::vector<GNum> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto power = static_cast<double>(n - k);
    out.push_back(gmul(GNum::from_log(power), coeffs[k]));
  }
  return GPolynomial(std::move(out));
}

GPolynomial gderiv_poly(const GPolynomial& p, int n) {
  if (n < 0) throw Error(ErrorKind::DomainError, "derivative order must be >= 0");
  GPolynomial out = p;
  for (int i = 0; i < n; ++i) out = gderiv_poly(out);
  return out;
}

GNum gderiv_nth(const GPolynomial& p, GNum x, int n) { return gderiv_poly(p, n)(x); }

}  // namespace gcalc
