#pragma once

/// \file
/// Geometric arithmetic over the positive reals.
///
/// The exponential function generates an arithmetic on (0, inf):
///
///     x (+) y = x * y            x (-) y = x / y
///     x (*) y = x^(ln y)         x (/) y = x^(1 / ln y)
///
/// Under ln these become ordinary +, -, *, / on the logarithms, so a
/// GNum stores only ln of the value it represents. Every operation works
/// on that logarithm directly and never visits the value domain, which
/// keeps things like e^(5!) = e^120 exact and far away from overflow.
///
/// The geometric zero is 1 (log 0) and the geometric unit is e (log 1).

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace gcalc {

class GNum {
 public:
  /// The geometric zero, 1.
  constexpr GNum() noexcept = default;

  /// Element whose natural logarithm is `log`. Throws NotFinite when
  /// `log` is NaN or infinite.
  static GNum from_log(double log);

  /// Element with ordinary value `value`. Throws NonPositiveValue for
  /// value <= 0 and NotFinite for NaN/inf.
  static GNum from_value(double value);

  static constexpr GNum zero() noexcept { return GNum(); }
  static constexpr GNum unit() noexcept { return GNum(1.0, Unchecked{}); }

  constexpr double log() const noexcept { return log_; }

  /// exp(log()). May overflow to +inf or underflow to 0 even though the
  /// element itself is perfectly valid.
  double value() const noexcept;

  /// Bitwise equality of the stored logarithm.
  friend constexpr bool operator==(const GNum& a, const GNum& b) noexcept {
    return a.log_ == b.log_;
  }

 private:
  struct Unchecked {};
  constexpr GNum(double log, Unchecked) noexcept : log_(log) {}

  double log_ = 0.0;
};

// Field operations. Results whose logarithm leaves the finite doubles
// throw Overflow.
GNum gadd(GNum x, GNum y);
GNum gsub(GNum x, GNum y);
GNum gneg(GNum x);
GNum gmul(GNum x, GNum y);
/// Throws GeometricDivisionByZero when y is 1.
GNum gdiv(GNum x, GNum y);

/// x^{n_G}: the n-fold geometric product of x, log (ln x)^n.
GNum gpow_int(GNum x, std::int64_t n);
/// Real geometric power, log (ln x)^p. Non-integral p needs ln x > 0.
GNum gpow_real(GNum x, double p);
GNum gsqrt(GNum x);
GNum ginv(GNum x);
/// e^{|ln x|}; always >= 1.
GNum gabs(GNum x);

std::strong_ordering gcompare(GNum x, GNum y) noexcept;

inline std::strong_ordering operator<=>(GNum x, GNum y) noexcept {
  return gcompare(x, y);
}

inline GNum operator+(GNum x, GNum y) { return gadd(x, y); }
inline GNum operator-(GNum x, GNum y) { return gsub(x, y); }
inline GNum operator-(GNum x) { return gneg(x); }
inline GNum operator*(GNum x, GNum y) { return gmul(x, y); }
inline GNum operator/(GNum x, GNum y) { return gdiv(x, y); }

/// Largest n for which n! is an exactly representable double.
inline constexpr int kMaxExactFactorial = 22;

/// n!_G = e^{n!}. Throws Overflow for n > kMaxExactFactorial.
GNum gfactorial(int n);

/// e^{C(n, r)}, with C(n, r) computed in integers. Throws IndexError for
/// r > n and Overflow when C(n, r) is not exactly representable.
GNum gbinom_coeff(int n, int r);

/// Right-hand side of the geometric binomial formula
/// (a (+/-) b)^{n_G} = sum_r (-e)^{r_G} (*) e^{C(n,r)} (*) a^{(n-r)_G} (*) b^{r_G},
/// with the alternating factor only when `subtract` is set.
GNum gbinom_expand(GNum a, GNum b, int n, bool subtract);

/// Elements with |ln x| <= this print as decimals, larger ones as e^<log>.
inline constexpr double kDecimalFormLimit = 15.0;

/// Textual form: decimal value with `precision` places when
/// |log| <= kDecimalFormLimit, "e^<log>" otherwise.
std::string format_gnum(GNum x, int precision = 6);

/// Always the "e^<log>" form, with the exponent printed to `precision`
/// places and trailing zeros dropped ("e^120", "e^0.12").
std::string format_exp_form(GNum x, int precision = 6);

/// Accepts a positive decimal literal or "e^" followed by a signed
/// decimal. The e^ form stores its exponent verbatim as the logarithm.
/// Throws ParseError on malformed text, NonPositiveValue on zero.
GNum parse_gnum(std::string_view text);

}  // namespace gcalc
