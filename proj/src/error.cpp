#include "gcalc/error.hpp"

namespace gcalc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPositiveValue: return "non-positive value";
    case ErrorKind::NotFinite: return "value is not finite";
    case ErrorKind::GeometricDivisionByZero: return "geometric division by zero";
    case ErrorKind::DomainError: return "domain error";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::IndexError: return "index out of range";
    case ErrorKind::OrderTooHigh: return "order too high";
    case ErrorKind::DuplicateNodes: return "duplicate nodes";
    case ErrorKind::UnsortedNodes: return "unsorted nodes";
    case ErrorKind::StepIsZero: return "step is the geometric zero";
    case ErrorKind::NotUniform: return "nodes are not geometrically equispaced";
    case ErrorKind::NonPositiveSample: return "function returned a non-positive sample";
    case ErrorKind::LexError: return "lex error";
    case ErrorKind::ParseError: return "parse error";
    case ErrorKind::FormatError: return "format error";
  }
  return "unknown error";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

Error::Error(ErrorKind kind, const std::string& message, Span span)
    : std::runtime_error(message), kind_(kind), span_(span) {}

Error Error::with_span(Span span) const {
  if (span_) return *this;
  return Error(kind_, what(), span);
}

}  // namespace gcalc
