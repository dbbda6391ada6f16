#pragma once

/// \file
/// G-differentiation.
///
/// The G-derivative of a positive function is the limit of the geometric
/// difference quotient as the geometric step shrinks to 1:
///
///     f^G(x) = lim_{u -> 0} [f(e^u x) / f(x)]^{1/u}
///
/// which is exp of d/du ln f(e^u) at u = ln x. The numeric routines here
/// sample f at geometrically shifted points and form that quotient; the
/// polynomial routines apply x^{n_G} -> e^n (*) x^{(n-1)_G} exactly.

#include <functional>
#include <optional>

#include "gcalc/gnum.hpp"
#include "gcalc/polynomial.hpp"

namespace gcalc {

/// A caller-supplied map from positive reals to positive reals. It may be
/// given in the geometric domain (GNum -> GNum, sampled without leaving
/// the log domain) or as an ordinary double -> double function.
class PositiveFunction {
 public:
  using Geometric = std::function<GNum(GNum)>;
  using Ordinary = std::function<double(double)>;

  static PositiveFunction geometric(Geometric f);
  static PositiveFunction ordinary(Ordinary f);

  /// Throws NonPositiveSample if the sample is not a finite positive real.
  GNum operator()(GNum x) const;

 private:
  explicit PositiveFunction(Geometric f) : f_(std::move(f)) {}
  Geometric f_;
};

struct DerivativeOptions {
  /// Log-domain step u. Unset picks a per-order default.
  std::optional<double> step;
  /// Use [f(x (+) h) (-) f(x)] (/) h instead of the symmetric quotient.
  bool one_sided = false;
  /// Combine steps u and u/2 to cancel the leading error term.
  bool richardson = false;
};

inline constexpr double kDefaultDerivativeStep = 1e-6;
inline constexpr int kMaxNumericDerivativeOrder = 4;

/// Step used when DerivativeOptions::step is unset: 1e-6 for first
/// derivatives, eps^(1/(n+2)) for order n >= 2.
double default_derivative_step(int order);

/// Symmetric estimate [f(e^u x) / f(e^{-u} x)]^{1/(2u)}, second order in u.
/// The quotient is divided by the log spacing the samples actually have,
/// so f(x) = x yields e exactly.
GNum gderiv_numeric(const PositiveFunction& f, GNum x, const DerivativeOptions& options = {});

/// Order-n G-derivative from an n-fold central difference of ln f(e^u).
/// Throws OrderTooHigh for n > kMaxNumericDerivativeOrder.
GNum gderiv_nth(const PositiveFunction& f, GNum x, int n, const DerivativeOptions& options = {});

/// Exact G-derivative of a geometric polynomial.
GPolynomial gderiv_poly(const GPolynomial& p);

/// n-fold exact derivative; n = 0 returns p.
GPolynomial gderiv_poly(const GPolynomial& p, int n);

/// f^{(n_G)}(x) for a geometric polynomial; n = 0 evaluates p.
GNum gderiv_nth(const GPolynomial& p, GNum x, int n);

}  // namespace gcalc
