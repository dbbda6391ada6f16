#include "gcalc/gnum.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "gcalc/error.hpp"
#include "literal.hpp"

namespace gcalc {

namespace {

GNum checked(double log, const char* op) {
  if (!std::isfinite(log)) {
    throw Error(ErrorKind::Overflow,
                fmt::format("{}: logarithm of the result is not finite", op));
  }
  return GNum::from_log(log);
}

__extension__ using u128 = unsigned __int128;

// Converts an exact integer to double, refusing if the conversion rounds.
double exact_to_double(u128 value, const char* what) {
  const auto as_double = static_cast<double>(value);
  if (as_double >= 0x1p127 || static_cast<u128>(as_double) != value) {
    throw Error(ErrorKind::Overflow,
                fmt::format("{} is not exactly representable as a double", what));
  }
  return as_double;
}

}  // namespace

GNum GNum::from_log(double log) {
  if (!std::isfinite(log)) {
    throw Error(ErrorKind::NotFinite, fmt::format("logarithm {} is not finite", log));
  }
  return GNum(log, Unchecked{});
}

GNum GNum::from_value(double value) {
  if (std::isnan(value) || std::isinf(value)) {
    throw Error(ErrorKind::NotFinite, fmt::format("value {} is not finite", value));
  }
  if (value <= 0.0) {
    throw Error(ErrorKind::NonPositiveValue,
                fmt::format("value {} is not a positive real", value));
  }
  return GNum(std::log(value), Unchecked{});
}

double GNum::value() const noexcept { return std::exp(log_); }

GNum gadd(GNum x, GNum y) { return checked(x.log() + y.log(), "gadd"); }
GNum gsub(GNum x, GNum y) { return checked(x.log() - y.log(), "gsub"); }
GNum gneg(GNum x) { return GNum::from_log(-x.log()); }
GNum gmul(GNum x, GNum y) { return checked(x.log() * y.log(), "gmul"); }

GNum gdiv(GNum x, GNum y) {
  if (y.log() == 0.0) {
    throw Error(ErrorKind::GeometricDivisionByZero, "geometric division by zero");
  }
  return checked(x.log() / y.log(), "gdiv");
}

GNum gpow_int(GNum x, std::int64_t n) {
  const double base = x.log();
  if (n < 0 && base == 0.0) {
    throw Error(ErrorKind::GeometricDivisionByZero,
                "negative geometric power of the geometric zero");
  }
  const std::uint64_t m = n < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(n)
                                : static_cast<std::uint64_t>(n);
  double acc = 1.0;
  if (m <= 64) {
    // n-fold left fold, so that x^{2_G} is bit-identical to x (*) x.
    for (std::uint64_t i = 0; i < m; ++i) acc *= base;
  } else {
    acc = std::pow(base, static_cast<double>(m));
  }
  if (n < 0) acc = 1.0 / acc;
  return checked(acc, "gpow_int");
}

GNum gpow_real(GNum x, double p) {
  if (!std::isfinite(p)) {
    throw Error(ErrorKind::NotFinite, "geometric exponent is not finite");
  }
  if (std::trunc(p) == p && std::abs(p) < 0x1p62) {
    return gpow_int(x, static_cast<std::int64_t>(p));
  }
  if (x.log() <= 0.0) {
    throw Error(ErrorKind::DomainError,
                fmt::format("non-integral geometric power {} of an element <= 1", p));
  }
  return checked(std::pow(x.log(), p), "gpow_real");
}

GNum gsqrt(GNum x) {
  if (x.log() < 0.0) {
    throw Error(ErrorKind::DomainError, "geometric square root of an element < 1");
  }
  return GNum::from_log(std::sqrt(x.log()));
}

GNum ginv(GNum x) {
  if (x.log() == 0.0) {
    throw Error(ErrorKind::GeometricDivisionByZero,
                "geometric inverse of the geometric zero");
  }
  return checked(1.0 / x.log(), "ginv");
}

GNum gabs(GNum x) { return GNum::from_log(std::abs(x.log())); }

std::strong_ordering gcompare(GNum x, GNum y) noexcept {
  if (x.log() < y.log()) return std::strong_ordering::less;
  if (x.log() > y.log()) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

GNum gfactorial(int n) {
  if (n < 0) {
    throw Error(ErrorKind::DomainError, "factorial of a negative integer");
  }
  if (n > kMaxExactFactorial) {
    throw Error(ErrorKind::Overflow,
                fmt::format("{}! is not exactly representable (limit {})", n,
                            kMaxExactFactorial));
  }
  u128 f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<u128>(k);
  return GNum::from_log(exact_to_double(f, "n!"));
}

GNum gbinom_coeff(int n, int r) {
  if (n < 0 || r < 0 || r > n) {
    throw Error(ErrorKind::IndexError,
                fmt::format("binomial coefficient C({}, {}) needs 0 <= r <= n", n, r));
  }
  const int k_max = r < n - r ? r : n - r;
  constexpr u128 kLimit = ~u128(0);
  u128 c = 1;
  for (int k = 0; k < k_max; ++k) {
    const auto factor = static_cast<u128>(n - k);
    if (c > kLimit / factor) {
      throw Error(ErrorKind::Overflow, fmt::format("C({}, {}) overflows", n, r));
    }
    c = c * factor / static_cast<u128>(k + 1);
  }
  return GNum::from_log(exact_to_double(c, "binomial coefficient"));
}

GNum gbinom_expand(GNum a, GNum b, int n, bool subtract) {
  if (n < 0) {
    throw Error(ErrorKind::DomainError, "binomial expansion needs n >= 0");
  }
  const GNum minus_unit = gneg(GNum::unit());
  GNum sum;
  for (int r = 0; r <= n; ++r) {
    GNum term = gmul(gbinom_coeff(n, r), gmul(gpow_int(a, n - r), gpow_int(b, r)));
    if (subtract) term = gmul(gpow_int(minus_unit, r), term);
    sum = gadd(sum, term);
  }
  return sum;
}

std::string format_gnum(GNum x, int precision) {
  if (std::abs(x.log()) <= kDecimalFormLimit) {
    return fmt::format("{:.{}f}", x.value(), precision);
  }
  return format_exp_form(x, precision);
}

std::string format_exp_form(GNum x, int precision) {
  std::string exponent = fmt::format("{:.{}f}", x.log(), precision);
  if (exponent.find('.') != std::string::npos) {
    while (exponent.back() == '0') exponent.pop_back();
    if (exponent.back() == '.') exponent.pop_back();
  }
  if (exponent == "-0") exponent = "0";
  return "e^" + exponent;
}

GNum parse_gnum(std::string_view text) { return detail::literal_to_gnum(text); }

namespace detail {

namespace {
bool is_digit(char c) { return c >= '0' && c <= '9'; }
}  // namespace

std::size_t scan_decimal(std::string_view s, std::size_t pos) {
  std::size_t i = pos;
  std::size_t digits = 0;
  while (i < s.size() && is_digit(s[i])) ++i, ++digits;
  // A '.' belongs to the number only when a digit follows it, so "2.+3"
  // lexes as 2 .+ 3.
  if (i + 1 < s.size() && s[i] == '.' && is_digit(s[i + 1])) {
    ++i;
    while (i < s.size() && is_digit(s[i])) ++i, ++digits;
  }
  if (digits == 0) return pos;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    std::size_t j = i + 1;
    if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
    if (j < s.size() && is_digit(s[j])) {
      while (j < s.size() && is_digit(s[j])) ++j;
      i = j;
    }
  }
  return i;
}

std::size_t scan_signed_decimal(std::string_view s, std::size_t pos) {
  std::size_t start = pos;
  if (start < s.size() && (s[start] == '+' || s[start] == '-')) ++start;
  const std::size_t end = scan_decimal(s, start);
  return end == start ? pos : end;
}

double decimal_to_double(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec == std::errc::result_out_of_range) {
    throw Error(ErrorKind::NotFinite,
                fmt::format("literal '{}' is out of range", text));
  }
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::ParseError, fmt::format("malformed number '{}'", text));
  }
  return out;
}

GNum literal_to_gnum(std::string_view text) {
  if (text.size() >= 2 && text[0] == 'e' && text[1] == '^') {
    const auto end = scan_signed_decimal(text, 2);
    if (end == 2 || end != text.size()) {
      throw Error(ErrorKind::ParseError,
                  fmt::format("malformed geometric literal '{}'", text));
    }
    return GNum::from_log(decimal_to_double(text.substr(2)));
  }
  const auto end = scan_decimal(text, 0);
  if (end == 0 || end != text.size()) {
    throw Error(ErrorKind::ParseError, fmt::format("malformed number '{}'", text));
  }
  return GNum::from_value(decimal_to_double(text));
}

}  // namespace detail

}  // namespace gcalc
