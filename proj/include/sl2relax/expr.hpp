#pragma once

#include <memory>
#include <string_view>

#include "sl2relax/errors.hpp"

namespace sl2relax {

// AST for profile expressions in the single variable t.
//
// Grammar (operators +, -, *, /, ^ with the usual precedence; ^ is
// right-associative and binds tighter than unary minus, so -t^2 = -(t^2)):
//   expr   := term (("+" | "-") term)*
//   term   := factor (("*" | "/") factor)*
//   factor := "-" factor | atom ("^" factor)?
//   atom   := NUMBER | "t" | FUNC "(" expr ")" | "(" expr ")"
//   FUNC   := "abs" | "sqrt" | "log" | "exp"

enum class ExprOp {
  constant,
  variable,
  negate,
  add,
  sub,
  mul,
  div,
  pow,
  abs,
  sqrt,
  log,
  exp,
};

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  ExprOp op;
  double value = 0.0;  // constant payload
  ExprPtr lhs, rhs;    // rhs empty for unary nodes
};

// Throws ParseError with a byte offset and the expected token set.
ExprPtr parse_expr(std::string_view source);

// Throws EvalError on log of a nonpositive argument, division by zero,
// sqrt of a negative argument, 0 raised to a negative power, and any
// non-finite intermediate result.
double eval_expr(const ExprNode& ast, double t);
double eval_expr(const ExprPtr& ast, double t);

}  // namespace sl2relax
