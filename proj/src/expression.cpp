#include "gcalc/expression.hpp"

#include <array>
#include <cmath>

#include <fmt/format.h>

#include "literal.hpp"

namespace gcalc {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

struct UnicodeOp {
  std::string_view utf8;
  BinaryOp op;
};

constexpr std::array<UnicodeOp, 4> kUnicodeOps{{
    {"⊕", BinaryOp::Add},
    {"⊖", BinaryOp::Sub},
    {"⊙", BinaryOp::Mul},
    {"⊘", BinaryOp::Div},
}};

std::optional<BinaryOp> op_from_text(std::string_view text) {
  if (text == ".+") return BinaryOp::Add;
  if (text == ".-") return BinaryOp::Sub;
  if (text == ".*") return BinaryOp::Mul;
  if (text == "./") return BinaryOp::Div;
  for (const auto& u : kUnicodeOps) {
    if (text == u.utf8) return u.op;
  }
  return std::nullopt;
}

enum class ArgKind { Geometric, Real, Integer };

struct Signature {
  Function fn;
  std::string_view name;
  std::vector<ArgKind> args;
};

const std::vector<Signature>& signatures() {
  static const std::vector<Signature> table{
      {Function::Abs, "gabs", {ArgKind::Geometric}},
      {Function::Sqrt, "gsqrt", {ArgKind::Geometric}},
      {Function::Inv, "ginv", {ArgKind::Geometric}},
      {Function::Pow, "gpow", {ArgKind::Geometric, ArgKind::Real}},
      {Function::Fact, "gfact", {ArgKind::Integer}},
      {Function::Binom, "gbinom", {ArgKind::Integer, ArgKind::Integer}},
  };
  return table;
}

const Signature& signature(Function fn) {
  for (const auto& s : signatures()) {
    if (s.fn == fn) return s;
  }
  throw Error(ErrorKind::DomainError, "unknown function");
}

const Signature* find_signature(std::string_view name) {
  for (const auto& s : signatures()) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

Span cover(Span a, Span b) { return {std::min(a.begin, b.begin), std::max(a.end, b.end)}; }

}  // namespace

std::string_view spelling(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return ".+";
    case BinaryOp::Sub: return ".-";
    case BinaryOp::Mul: return ".*";
    case BinaryOp::Div: return "./";
  }
  return "?";
}

std::string_view name(Function fn) { return signature(fn).name; }

// ---------------------------------------------------------------------------
// Lexer

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  auto emit = [&](TokenKind kind, std::size_t end) {
    tokens.push_back({kind, std::string(src.substr(pos, end - pos)), {pos, end}});
    pos = end;
  };

  while (pos < src.size()) {
    const char c = src[pos];
    const char next = pos + 1 < src.size() ? src[pos + 1] : '\0';

    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++pos;
    } else if (c == '.' && (next == '+' || next == '-' || next == '*' || next == '/')) {
      emit(TokenKind::Op, pos + 2);
    } else if (is_digit(c) || c == '.') {
      const auto end = detail::scan_decimal(src, pos);
      if (end == pos) throw Error(ErrorKind::LexError, "unexpected '.'", {pos, pos + 1});
      emit(TokenKind::Number, end);
    } else if (c == '+' || c == '-') {
      const auto end = detail::scan_signed_decimal(src, pos);
      if (end == pos) {
        throw Error(ErrorKind::LexError,
                    fmt::format("unexpected '{}' (operators are spelled .{})", c, c),
                    {pos, pos + 1});
      }
      emit(TokenKind::Number, end);
    } else if (c == 'e' && next == '^') {
      const auto end = detail::scan_signed_decimal(src, pos + 2);
      if (end == pos + 2) {
        throw Error(ErrorKind::LexError, "'e^' must be followed by a decimal exponent",
                    {pos, pos + 2});
      }
      emit(TokenKind::GLiteral, end);
    } else if (is_ident_start(c)) {
      std::size_t end = pos + 1;
      while (end < src.size() && is_ident_char(src[end])) ++end;
      emit(TokenKind::Ident, end);
    } else if (c == '(') {
      emit(TokenKind::LParen, pos + 1);
    } else if (c == ')') {
      emit(TokenKind::RParen, pos + 1);
    } else if (c == ',') {
      emit(TokenKind::Comma, pos + 1);
    } else {
      bool matched = false;
      for (const auto& u : kUnicodeOps) {
        if (src.substr(pos, u.utf8.size()) == u.utf8) {
          emit(TokenKind::Op, pos + u.utf8.size());
          matched = true;
          break;
        }
      }
      if (!matched) {
        throw Error(ErrorKind::LexError,
                    fmt::format("unexpected character '{}' at offset {}", c, pos),
                    {pos, pos + 1});
      }
    }
  }
  return tokens;
}

// ---------------------------------------------------------------------------
// AST construction

ExprPtr make_literal(GNum value, Span span) {
  return std::make_shared<const Expr>(Expr{Literal{value}, span});
}

ExprPtr make_scalar(double value, Span span) {
  return std::make_shared<const Expr>(Expr{Scalar{value}, span});
}

ExprPtr make_negate(ExprPtr operand, Span span) {
  return std::make_shared<const Expr>(Expr{Negate{std::move(operand)}, span});
}

ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs, Span span) {
  return std::make_shared<const Expr>(Expr{Binary{op, std::move(lhs), std::move(rhs)}, span});
}

ExprPtr make_call(Function fn, std::vector<ExprPtr> args, Span span) {
  const auto& sig = signature(fn);
  if (args.size() != sig.args.size()) {
    throw Error(ErrorKind::ParseError,
                fmt::format("{} takes {} argument(s), got {}", sig.name, sig.args.size(),
                            args.size()),
                span);
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    const auto* scalar = std::get_if<Scalar>(&args[i]->node);
    if (sig.args[i] == ArgKind::Geometric) {
      if (scalar) {
        throw Error(ErrorKind::ParseError,
                    fmt::format("argument {} of {} must be a geometric value", i + 1,
                                sig.name),
                    args[i]->span);
      }
    } else if (!scalar) {
      throw Error(ErrorKind::ParseError,
                  fmt::format("argument {} of {} must be a plain number", i + 1, sig.name),
                  args[i]->span);
    } else if (sig.args[i] == ArgKind::Integer && std::trunc(scalar->value) != scalar->value) {
      throw Error(ErrorKind::ParseError,
                  fmt::format("argument {} of {} must be an integer", i + 1, sig.name),
                  args[i]->span);
    }
  }
  return std::make_shared<const Expr>(Expr{Call{fn, std::move(args)}, span});
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  Parser(const std::vector<Token>& tokens, std::size_t src_size)
      : tokens_(tokens), end_(src_size) {}

  ExprPtr parse_all() {
    auto expr = parse_expr();
    if (!at_end()) fail_expected("an operator or end of input");
    return expr;
  }

 private:
  bool at_end() const { return pos_ >= tokens_.size(); }
  const Token& peek() const { return tokens_[pos_]; }

  [[noreturn]] void fail_expected(std::string_view what) const {
    if (at_end()) {
      throw Error(ErrorKind::ParseError,
                  fmt::format("expected {}, found end of input", what), {end_, end_});
    }
    throw Error(ErrorKind::ParseError,
                fmt::format("expected {}, found '{}'", what, peek().text), peek().span);
  }

  const Token& expect(TokenKind kind, std::string_view what) {
    if (at_end() || peek().kind != kind) fail_expected(what);
    return tokens_[pos_++];
  }

  std::optional<BinaryOp> peek_op() const {
    if (at_end() || peek().kind != TokenKind::Op) return std::nullopt;
    return op_from_text(peek().text);
  }

  ExprPtr parse_expr() {
    auto lhs = parse_term();
    while (auto op = peek_op()) {
      if (*op != BinaryOp::Add && *op != BinaryOp::Sub) break;
      ++pos_;
      auto rhs = parse_term();
      const Span span = cover(lhs->span, rhs->span);
      lhs = make_binary(*op, std::move(lhs), std::move(rhs), span);
    }
    return lhs;
  }

  ExprPtr parse_term() {
    auto lhs = parse_unary();
    while (auto op = peek_op()) {
      if (*op != BinaryOp::Mul && *op != BinaryOp::Div) break;
      ++pos_;
      auto rhs = parse_unary();
      const Span span = cover(lhs->span, rhs->span);
      lhs = make_binary(*op, std::move(lhs), std::move(rhs), span);
    }
    return lhs;
  }

  ExprPtr parse_unary() {
    if (auto op = peek_op(); op && *op == BinaryOp::Sub) {
      const Span start = peek().span;
      ++pos_;
      auto operand = parse_unary();
      const Span span = cover(start, operand->span);
      return make_negate(std::move(operand), span);
    }
    return parse_primary();
  }

  ExprPtr parse_primary() {
    if (at_end()) fail_expected("a value");
    const Token& tok = peek();
    switch (tok.kind) {
      case TokenKind::Number: {
        ++pos_;
        if (tok.text.front() == '+' || tok.text.front() == '-') {
          throw Error(ErrorKind::ParseError,
                      "signed numbers are only allowed as function parameters", tok.span);
        }
        return literal(tok);
      }
      case TokenKind::GLiteral:
        ++pos_;
        return literal(tok);
      case TokenKind::LParen: {
        ++pos_;
        auto inner = parse_expr();
        expect(TokenKind::RParen, "')'");
        return inner;
      }
      case TokenKind::Ident:
        return parse_call();
      default:
        fail_expected("a value");
    }
  }

  ExprPtr literal(const Token& tok) {
    try {
      return make_literal(detail::literal_to_gnum(tok.text), tok.span);
    } catch (const Error& e) {
      throw e.with_span(tok.span);
    }
  }

  ExprPtr parse_call() {
    const Token& ident = tokens_[pos_++];
    const Signature* sig = find_signature(ident.text);
    if (!sig) {
      throw Error(ErrorKind::ParseError, fmt::format("unknown function '{}'", ident.text),
                  ident.span);
    }
    expect(TokenKind::LParen, "'(' after function name");
    std::vector<ExprPtr> args;
    for (std::size_t i = 0; i < sig->args.size(); ++i) {
      if (i > 0) expect(TokenKind::Comma, "','");
      if (sig->args[i] == ArgKind::Geometric) {
        args.push_back(parse_expr());
      } else {
        const Token& num = expect(TokenKind::Number, "a plain number");
        args.push_back(make_scalar(detail::decimal_to_double(num.text), num.span));
      }
    }
    const Token& close = expect(TokenKind::RParen, "')'");
    return make_call(sig->fn, std::move(args), cover(ident.span, close.span));
  }

  const std::vector<Token>& tokens_;
  std::size_t end_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse(const std::vector<Token>& tokens, std::string_view src) {
  return Parser(tokens, src.size()).parse_all();
}

ExprPtr parse(std::string_view src) { return parse(tokenize(src), src); }

// ---------------------------------------------------------------------------
// Evaluation

namespace {

struct Evaluator {
  GNum operator()(const Literal& lit) const { return lit.value; }

  GNum operator()(const Scalar&) const {
    throw Error(ErrorKind::DomainError, "a plain number is not a geometric value");
  }

  GNum operator()(const Negate& neg) const { return gneg(evaluate(*neg.operand)); }

  GNum operator()(const Binary& bin) const {
    const GNum lhs = evaluate(*bin.lhs);
    const GNum rhs = evaluate(*bin.rhs);
    switch (bin.op) {
      case BinaryOp::Add: return gadd(lhs, rhs);
      case BinaryOp::Sub: return gsub(lhs, rhs);
      case BinaryOp::Mul: return gmul(lhs, rhs);
      case BinaryOp::Div: return gdiv(lhs, rhs);
    }
    throw Error(ErrorKind::DomainError, "unknown operator");
  }

  GNum operator()(const Call& call) const {
    auto scalar = [&](std::size_t i) { return std::get<Scalar>(call.args[i]->node).value; };
    auto integer = [&](std::size_t i) {
      const double v = scalar(i);
      if (std::abs(v) > 1e9) {
        throw Error(ErrorKind::Overflow, fmt::format("integer argument {} is too large", v));
      }
      return static_cast<int>(v);
    };
    switch (call.fn) {
      case Function::Abs: return gabs(evaluate(*call.args[0]));
      case Function::Sqrt: return gsqrt(evaluate(*call.args[0]));
      case Function::Inv: return ginv(evaluate(*call.args[0]));
      case Function::Pow: return gpow_real(evaluate(*call.args[0]), scalar(1));
      case Function::Fact: return gfactorial(integer(0));
      case Function::Binom: return gbinom_coeff(integer(0), integer(1));
    }
    throw Error(ErrorKind::DomainError, "unknown function");
  }
};

int precedence(const Expr& e) {
  if (const auto* bin = std::get_if<Binary>(&e.node)) {
    return bin->op == BinaryOp::Add || bin->op == BinaryOp::Sub ? 1 : 2;
  }
  if (std::holds_alternative<Negate>(e.node)) return 3;
  return 4;
}

std::string wrapped(const Expr& e, bool parens) {
  return parens ? "(" + to_source(e) + ")" : to_source(e);
}

}  // namespace

GNum evaluate(const Expr& expr) {
  try {
    return std::visit(Evaluator{}, expr.node);
  } catch (const Error& e) {
    throw e.with_span(expr.span);
  }
}

std::string to_source(const Expr& expr) {
  return std::visit(
      [&](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Literal>) {
          return fmt::format("e^{}", node.value.log());
        } else if constexpr (std::is_same_v<T, Scalar>) {
          return fmt::format("{}", node.value);
        } else if constexpr (std::is_same_v<T, Negate>) {
          return ".- " + wrapped(*node.operand, precedence(*node.operand) < 3);
        } else if constexpr (std::is_same_v<T, Binary>) {
          const int prec = precedence(expr);
          return wrapped(*node.lhs, precedence(*node.lhs) < prec) + " " +
                 std::string(spelling(node.op)) + " " +
                 wrapped(*node.rhs, precedence(*node.rhs) <= prec);
        } else {
          std::string out(name(node.fn));
          out += '(';
          for (std::size_t i = 0; i < node.args.size(); ++i) {
            if (i > 0) out += ", ";
            out += to_source(*node.args[i]);
          }
          out += ')';
          return out;
        }
      },
      expr.node);
}

}  // namespace gcalc
