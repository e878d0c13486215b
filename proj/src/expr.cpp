#include "sl2relax/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <string>

namespace sl2relax {

namespace {

ExprPtr make_node(ExprOp op, ExprPtr lhs = nullptr, ExprPtr rhs = nullptr) {
  auto n = std::make_shared<ExprNode>();
  n->op = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

ExprPtr make_const(double v) {
  auto n = std::make_shared<ExprNode>();
  n->op = ExprOp::constant;
  n->value = v;
  return n;
}

struct Parser {
  std::string_view src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= src.size();
  }

  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& expected) {
    skip_ws();
    throw ParseError(pos, expected);
  }

  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    for (;;) {
      if (consume('+')) {
        lhs = make_node(ExprOp::add, lhs, parse_term());
      } else if (consume('-')) {
        lhs = make_node(ExprOp::sub, lhs, parse_term());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_factor();
    for (;;) {
      if (consume('*')) {
        lhs = make_node(ExprOp::mul, lhs, parse_factor());
      } else if (consume('/')) {
        lhs = make_node(ExprOp::div, lhs, parse_factor());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr parse_factor() {
    if (consume('-')) return make_node(ExprOp::negate, parse_factor());
    ExprPtr base = parse_atom();
    if (consume('^')) return make_node(ExprOp::pow, base, parse_factor());
    return base;
  }

  ExprPtr parse_atom() {
    skip_ws();
    if (pos >= src.size()) fail("a number, 't', a function name, '(' or '-'");
    const char c = src[pos];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_name();
    if (c == '(') {
      ++pos;
      ExprPtr inner = parse_expr();
      if (!consume(')')) fail("')'");
      return inner;
    }
    fail("a number, 't', a function name, '(' or '-'");
  }

  ExprPtr parse_number() {
    const std::size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
    if (pos < src.size() && src[pos] == '.') {
      ++pos;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    if (pos - start == 0 || (pos - start == 1 && src[start] == '.')) {
      pos = start;
      fail("a decimal literal");
    }
    if (pos < src.size() && (src[pos] == 'e' || src[pos] == 'E')) {
      std::size_t exp_pos = pos + 1;
      if (exp_pos < src.size() && (src[exp_pos] == '+' || src[exp_pos] == '-')) ++exp_pos;
      std::size_t digits = exp_pos;
      while (digits < src.size() && std::isdigit(static_cast<unsigned char>(src[digits]))) ++digits;
      if (digits > exp_pos) pos = digits;  // otherwise the 'e' is not part of the number
    }
    const std::string text(src.substr(start, pos - start));
    return make_const(std::strtod(text.c_str(), nullptr));
  }

  ExprPtr parse_name() {
    const std::size_t start = pos;
    while (pos < src.size() && std::isalpha(static_cast<unsigned char>(src[pos]))) ++pos;
    const std::string_view name = src.substr(start, pos - start);
    if (name == "t") return make_node(ExprOp::variable);
    ExprOp op;
    if (name == "abs") {
      op = ExprOp::abs;
    } else if (name == "sqrt") {
      op = ExprOp::sqrt;
    } else if (name == "log") {
      op = ExprOp::log;
    } else if (name == "exp") {
      op = ExprOp::exp;
    } else {
      pos = start;
      fail("'t', 'abs', 'sqrt', 'log' or 'exp'");
    }
    if (!consume('(')) fail("'(' after function name");
    ExprPtr arg = parse_expr();
    if (!consume(')')) fail("')'");
    return make_node(op, std::move(arg));
  }
};

double checked(double v, double t) {
  if (!std::isfinite(v)) throw EvalError("non-finite result", t);
  return v;
}

}  // namespace

ExprPtr parse_expr(std::string_view source) {
  Parser p{source};
  ExprPtr root = p.parse_expr();
  if (!p.at_end()) p.fail("an operator or end of input");
  return root;
}

double eval_expr(const ExprNode& n, double t) {
  switch (n.op) {
    case ExprOp::constant:
      return n.value;
    case ExprOp::variable:
      return t;
    case ExprOp::negate:
      return -eval_expr(*n.lhs, t);
    case ExprOp::add:
      return checked(eval_expr(*n.lhs, t) + eval_expr(*n.rhs, t), t);
    case ExprOp::sub:
      return checked(eval_expr(*n.lhs, t) - eval_expr(*n.rhs, t), t);
    case ExprOp::mul:
      return checked(eval_expr(*n.lhs, t) * eval_expr(*n.rhs, t), t);
    case ExprOp::div: {
      const double num = eval_expr(*n.lhs, t);
      const double den = eval_expr(*n.rhs, t);
      if (den == 0.0) throw EvalError("division by zero", t);
      return checked(num / den, t);
    }
    case ExprOp::pow: {
      const double base = eval_expr(*n.lhs, t);
      const double exponent = eval_expr(*n.rhs, t);
      if (base == 0.0 && exponent < 0.0) throw EvalError("0 raised to a negative power", t);
      return checked(std::pow(base, exponent), t);
    }
    case ExprOp::abs:
      return std::fabs(eval_expr(*n.lhs, t));
    case ExprOp::sqrt: {
      const double arg = eval_expr(*n.lhs, t);
      if (arg < 0.0) throw EvalError("sqrt of a negative value", t);
      return std::sqrt(arg);
    }
    case ExprOp::log: {
      const double arg = eval_expr(*n.lhs, t);
      if (arg <= 0.0) throw EvalError("log of a nonpositive value", t);
      return checked(std::log(arg), t);
    }
    case ExprOp::exp:
      return checked(std::exp(eval_expr(*n.lhs, t)), t);
  }
  throw EvalError("malformed expression node", t);
}

double eval_expr(const ExprPtr& ast, double t) { return eval_expr(*ast, t); }

}  // namespace sl2relax
