#pragma once

// Noncommutative polynomials in x, y evaluated in the integer group ring of S4.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' INT)*
//   primary := INT | 'x' | 'y' | '(' expr ')'
//
// Juxtaposition is not multiplication: "xy" is rejected, write "x*y".

#include "gdet/ring.hpp"

#include <cctype>
#include <memory>
#include <string>
#include <string_view>

namespace gdet {

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}
  [[nodiscard]] std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

inline constexpr std::uint64_t kMaxExprExponent = 1U << 16;

struct RingExpr {
  enum class Kind { literal, x, y, add, sub, mul, neg, pow };

  Kind kind = Kind::literal;
  BigInt value;               // literal
  std::uint64_t exponent = 0; // pow
  std::unique_ptr<RingExpr> lhs, rhs;

  static std::unique_ptr<RingExpr> leaf(Kind k, BigInt v = 0) {
    auto e = std::make_unique<RingExpr>();
    e->kind = k;
    e->value = std::move(v);
    return e;
  }
  static std::unique_ptr<RingExpr> binary(Kind k, std::unique_ptr<RingExpr> l, std::unique_ptr<RingExpr> r) {
    auto e = std::make_unique<RingExpr>();
    e->kind = k;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
  }
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  std::unique_ptr<RingExpr> parse() {
    auto e = expr();
    skip_space();
    if (pos_ != text_.size()) fail(unexpected_message());
    return e;
  }

 private:
  std::unique_ptr<RingExpr> expr() {
    auto lhs = term();
    for (;;) {
      skip_space();
      if (accept('+')) {
        lhs = RingExpr::binary(RingExpr::Kind::add, std::move(lhs), term());
      } else if (accept('-')) {
        lhs = RingExpr::binary(RingExpr::Kind::sub, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<RingExpr> term() {
    auto lhs = unary();
    for (;;) {
      skip_space();
      if (!accept('*')) return lhs;
      lhs = RingExpr::binary(RingExpr::Kind::mul, std::move(lhs), unary());
    }
  }

  std::unique_ptr<RingExpr> unary() {
    skip_space();
    if (accept('-')) return RingExpr::binary(RingExpr::Kind::neg, unary(), nullptr);
    if (accept('+')) return unary();
    return power();
  }

  std::unique_ptr<RingExpr> power() {
    auto base = primary();
    for (;;) {
      skip_space();
      if (!accept('^')) return base;
      skip_space();
      const std::size_t at = pos_;
      if (at >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[at]))) {
        fail("expected a nonnegative integer exponent");
      }
      const BigInt e = digits();
      if (e > kMaxExprExponent) throw ParseError("exponent overflow (limit " + std::to_string(kMaxExprExponent) + ")", at);
      auto node = RingExpr::binary(RingExpr::Kind::pow, std::move(base), nullptr);
      node->exponent = e.convert_to<std::uint64_t>();
      base = std::move(node);
    }
  }

  std::unique_ptr<RingExpr> primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    std::unique_ptr<RingExpr> node;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      node = RingExpr::leaf(RingExpr::Kind::literal, digits());
    } else if (c == 'x' || c == 'y') {
      ++pos_;
      node = RingExpr::leaf(c == 'x' ? RingExpr::Kind::x : RingExpr::Kind::y);
    } else if (c == '(') {
      ++pos_;
      node = expr();
      skip_space();
      if (!accept(')')) fail("expected ')'");
    } else {
      fail(unexpected_message());
    }
    // Reject implicit multiplication such as "xy", "2x" or "(x)(y)".
    if (pos_ < text_.size()) {
      const char next = text_[pos_];
      if (next == 'x' || next == 'y' || next == '(' || std::isalnum(static_cast<unsigned char>(next))) {
        fail("implicit multiplication is not allowed; use '*'");
      }
    }
    return node;
  }

  BigInt digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string unexpected_message() const {
    if (pos_ >= text_.size()) return "unexpected end of input";
    return std::string("unexpected character '") + text_[pos_] + "'";
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline std::unique_ptr<RingExpr> parse_ring_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

inline RingElement evaluate(const RingExpr& e, const GroupPtr& group) {
  using K = RingExpr::Kind;
  switch (e.kind) {
    case K::literal: return RingElement::scalar(group, e.value);
    case K::x: return RingElement::basis(group, kS4Alpha);
    case K::y: return RingElement::basis(group, kS4Beta);
    case K::add: return evaluate(*e.lhs, group) + evaluate(*e.rhs, group);
    case K::sub: return evaluate(*e.lhs, group) - evaluate(*e.rhs, group);
    case K::mul: return convolve(evaluate(*e.lhs, group), evaluate(*e.rhs, group));
    case K::neg: return -evaluate(*e.lhs, group);
    case K::pow: return power(evaluate(*e.lhs, group), e.exponent);
  }
  throw Error("corrupt expression tree");
}

/// Parses `text` and reduces it to a coefficient vector over S4.
inline RingElement parse_expr(std::string_view text, const GroupPtr& group = s4_group()) {
  if (group->kind().family != GroupFamily::symmetric4) {
    throw InvalidArgument("expressions in x, y are defined over S4 only");
  }
  return evaluate(*parse_ring_expr(text), group);
}

}  // namespace gdet
