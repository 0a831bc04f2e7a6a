#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "mtdec/rational.hpp"

namespace mtdec {

// Expression tree for formulas and unit expressions.
//
// Grammar (parenthesized infix):
//   expr     := term (('+'|'-') term)*
//   term     := factor (('*'|'/') factor)*
//   factor   := base ('^' exponent)?
//   base     := number | symbol | '(' expr ')' | 'd/d' symbol '[' expr ']'
//   exponent := integer | '(' integer ('/' integer)? ')'
//
// `d/d<sym>[...]` is a derivative with respect to <sym>; the prefix `d/d`
// is reserved and cannot start a plain symbol reference.
struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Kind { Symbol, Number, Sum, Product, Quotient, Power, Derivative };

  Kind kind;
  std::string name;      // Symbol: identifier; Derivative: variable
  double number = 0.0;   // Number
  bool subtract = false; // Sum: rhs sign
  Rational exponent;     // Power
  ExprPtr lhs, rhs;      // binary nodes; unary nodes use lhs only

  // Re-renders the subtree for diagnostics.
  std::string str() const;
};

// Parses `text` into a tree. Throws ParseError with the byte offset of the
// first offending character.
ExprPtr parse_expression(std::string_view text);

}  // namespace mtdec
