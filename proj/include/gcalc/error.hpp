#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gcalc {

enum class ErrorKind {
  NonPositiveValue,
  NotFinite,
  GeometricDivisionByZero,
  DomainError,
  Overflow,
  IndexError,
  OrderTooHigh,
  DuplicateNodes,
  UnsortedNodes,
  StepIsZero,
  NotUniform,
  NonPositiveSample,
  LexError,
  ParseError,
  FormatError,
};

std::string_view to_string(ErrorKind kind);

/// Half-open byte range [begin, end) into some source text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const Span&, const Span&) = default;
};

/// The single exception type thrown by the library. The kind is the
/// machine-readable part; the message is for humans. Errors raised while
/// evaluating or lexing source text carry the span they refer to.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  Error(ErrorKind kind, const std::string& message, Span span);

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<Span>& span() const noexcept { return span_; }

  /// Same error, annotated with `span` unless it already has one.
  Error with_span(Span span) const;

 private:
  ErrorKind kind_;
  std::optional<Span> span_;
};

}  // namespace gcalc
