#include "mtdec/expr.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

#include "mtdec/errors.hpp"

namespace mtdec {

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExprPtr expr() {
    // optional leading sign
    ExprPtr lhs;
    if (peek() == '-') {
      ++pos_;
      auto neg = std::make_shared<ExprNode>();
      neg->kind = ExprNode::Kind::Product;
      auto minus_one = std::make_shared<ExprNode>();
      minus_one->kind = ExprNode::Kind::Number;
      minus_one->number = -1.0;
      neg->lhs = minus_one;
      neg->rhs = term();
      lhs = neg;
    } else {
      if (peek() == '+') ++pos_;
      lhs = term();
    }
    for (;;) {
      char c = peek();
      if (c != '+' && c != '-') return lhs;
      ++pos_;
      auto node = std::make_shared<ExprNode>();
      node->kind = ExprNode::Kind::Sum;
      node->subtract = (c == '-');
      node->lhs = lhs;
      node->rhs = term();
      lhs = node;
    }
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    for (;;) {
      char c = peek();
      if (c != '*' && c != '/') return lhs;
      ++pos_;
      auto node = std::make_shared<ExprNode>();
      node->kind = (c == '*') ? ExprNode::Kind::Product
                              : ExprNode::Kind::Quotient;
      node->lhs = lhs;
      node->rhs = factor();
      lhs = node;
    }
  }

  ExprPtr factor() {
    ExprPtr b = base();
    if (peek() != '^') return b;
    ++pos_;
    auto node = std::make_shared<ExprNode>();
    node->kind = ExprNode::Kind::Power;
    node->lhs = b;
    node->exponent = exponent();
    return node;
  }

  Rational exponent() {
    skip_ws();
    if (consume('(')) {
      long long num = integer();
      long long den = 1;
      if (consume('/')) {
        den = integer();
        if (den == 0) fail("zero denominator in exponent");
      }
      if (!consume(')')) fail("expected ')' after exponent");
      return {num, den};
    }
    return {integer(), 1};
  }

  long long integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
      ++pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    long long v = 0;
    auto res = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (res.ec != std::errc() || res.ptr != text_.data() + pos_ ||
        pos_ == start)
      fail("expected integer");
    return v;
  }

  ExprPtr base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];

    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      if (!consume(')')) fail("expected ')'");
      return e;
    }

    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
      return number();

    // `d/d<sym>[...]` derivative form.
    if (c == 'd' && text_.substr(pos_).size() > 3 &&
        text_.substr(pos_, 3) == "d/d") {
      std::size_t p = pos_ + 3;
      if (p < text_.size() && is_ident_start(text_[p])) {
        std::size_t q = p;
        while (q < text_.size() && is_ident_char(text_[q])) ++q;
        if (q < text_.size() && text_[q] == '[') {
          auto node = std::make_shared<ExprNode>();
          node->kind = ExprNode::Kind::Derivative;
          node->name = std::string(text_.substr(p, q - p));
          pos_ = q + 1;
          node->lhs = expr();
          if (!consume(']')) fail("expected ']' closing derivative");
          return node;
        }
      }
    }

    if (is_ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      auto node = std::make_shared<ExprNode>();
      node->kind = ExprNode::Kind::Symbol;
      node->name = std::string(text_.substr(start, pos_ - start));
      return node;
    }

    fail(std::string("unexpected character '") + c + "'");
  }

  ExprPtr number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E' ||
            ((text_[pos_] == '+' || text_[pos_] == '-') && pos_ > start &&
             (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E'))))
      ++pos_;
    std::string s(text_.substr(start, pos_ - start));
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size()) {
      pos_ = start;
      fail("malformed number");
    }
    auto node = std::make_shared<ExprNode>();
    node->kind = ExprNode::Kind::Number;
    node->number = v;
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string render_number(double v) {
  // Integers render without a decimal point.
  if (v == static_cast<long long>(v))
    return std::to_string(static_cast<long long>(v));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

std::string ExprNode::str() const {
  switch (kind) {
    case Kind::Symbol:
      return name;
    case Kind::Number:
      return render_number(number);
    case Kind::Sum:
      return "(" + lhs->str() + (subtract ? " - " : " + ") + rhs->str() + ")";
    case Kind::Product:
      return lhs->str() + "*" + rhs->str();
    case Kind::Quotient:
      return lhs->str() + "/" + rhs->str();
    case Kind::Power: {
      std::string e = exponent.is_integer() ? exponent.str()
                                            : "(" + exponent.str() + ")";
      return "(" + lhs->str() + ")^" + e;
    }
    case Kind::Derivative:
      return "d/d" + name + "[" + lhs->str() + "]";
  }
  return {};
}

ExprPtr parse_expression(std::string_view text) {
  return Parser(text).parse();
}

}  // namespace mtdec
