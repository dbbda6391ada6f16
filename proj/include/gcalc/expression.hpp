#pragma once

/// \file
/// A small closed-expression language over geometric arithmetic.
///
///     expr    := term (('.+' | '.-') term)*
///     term    := unary (('.*' | './') unary)*
///     unary   := '.-' unary | primary
///     primary := NUMBER | 'e^' SIGNED | '(' expr ')' | IDENT '(' args ')'
///
/// `.+ .- .* ./` are geometric addition, subtraction, multiplication and
/// division; the symbols U+2295, U+2296, U+2299 and U+2298 are accepted as
/// aliases. NUMBER is a positive decimal, `e^<signed decimal>` is the
/// element with that logarithm. Functions:
///
///     gabs(x)  gsqrt(x)  ginv(x)  gpow(x, p)  gfact(n)  gbinom(n, r)
///
/// where p, n and r are ordinary (signed) numbers, n and r integers.

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gcalc/error.hpp"
#include "gcalc/gnum.hpp"

namespace gcalc {

enum class TokenKind { Number, GLiteral, Op, Ident, LParen, RParen, Comma };

struct Token {
  TokenKind kind;
  std::string text;
  Span span;
};

/// Maximal-munch lexer. Throws LexError carrying the offending offset.
std::vector<Token> tokenize(std::string_view src);

enum class BinaryOp { Add, Sub, Mul, Div };
enum class Function { Abs, Sqrt, Inv, Pow, Fact, Binom };

std::string_view spelling(BinaryOp op);
std::string_view name(Function fn);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// A geometric number.
struct Literal {
  GNum value;
};

/// An ordinary real number; only valid as a parameter of gpow, gfact or
/// gbinom.
struct Scalar {
  double value;
};

struct Negate {
  ExprPtr operand;
};

struct Binary {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Call {
  Function fn;
  std::vector<ExprPtr> args;
};

struct Expr {
  std::variant<Literal, Scalar, Negate, Binary, Call> node;
  Span span;
};

ExprPtr make_literal(GNum value, Span span = {});
ExprPtr make_scalar(double value, Span span = {});
ExprPtr make_negate(ExprPtr operand, Span span = {});
ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs, Span span = {});
/// Throws ParseError if the argument count or argument kinds do not fit
/// the function.
ExprPtr make_call(Function fn, std::vector<ExprPtr> args, Span span = {});

/// Throws ParseError with the span of the offending token (an empty span
/// at the end of input for a premature end). Literals equal to zero
/// raise NonPositiveValue at their span.
ExprPtr parse(const std::vector<Token>& tokens, std::string_view src);

/// tokenize + parse.
ExprPtr parse(std::string_view src);

/// Folds the tree through the geometric operations. Errors are rethrown
/// with the span of the innermost node that raised them.
GNum evaluate(const Expr& expr);

/// Canonical source text; parse(to_source(e)) prints back identically.
std::string to_source(const Expr& expr);

}  // namespace gcalc
