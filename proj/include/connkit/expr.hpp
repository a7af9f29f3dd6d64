#pragma once

// The coefficient expression language.
//
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' unary)?            (right associative)
//   atom   := NUMBER | IDENT | IDENT '(' expr (',' expr)* ')' | '(' expr ')'
//   NUMBER := digits ('.' digits)? (('e'|'E') ('+'|'-')? digits)?
//
// Functions: sin cos tan exp log sqrt, and pow(a,b) ≡ a^b.  Variables are the
// chart coordinate names, bound at parse time; an unknown name is an error
// then, not at evaluation.
//
// `^` with a literal integer exponent (possibly negated, possibly
// parenthesized) becomes an integer-power node: evaluated by repeated
// multiplication, exact on jets, defined for negative bases.  Any other
// exponent evaluates as exp(b·log a) and requires a positive base.  Division
// by zero, log/sqrt domain violations and non-positive general-power bases
// raise EvalError carrying the source offset of the operator.
//
// Evaluation is generic over the numeric tower (double and nested jets); the
// plain-real result is bit-identical to the value component of any jet
// evaluation because both run the same operations.

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "connkit/errors.hpp"
#include "connkit/jet.hpp"

namespace connkit {

enum class TokenKind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  TokenKind kind;
  double number = 0.0;
  std::string text;
  std::size_t offset = 0;
};

std::vector<Token> tokenize(std::string_view src);

struct ExprNode {
  enum class Op { Num, Var, Add, Sub, Mul, Div, Neg, Pow, PowInt, Sin, Cos, Tan, Exp, Log, Sqrt };
  Op op;
  double number = 0.0;    // Num
  long long ipow = 0;     // PowInt exponent
  int var = -1;           // Var slot
  int a = -1, b = -1;     // children
  std::size_t offset = 0;
};

class Expr {
 public:
  Expr() = default;

  // Parse `src` with the given variable names bound to evaluation slots.
  static Expr parse(std::string_view src, std::span<const std::string> variables);

  bool valid() const { return ast_ != nullptr; }
  std::size_t variable_count() const;

  // Canonical s-expression of the tree (stable across releases; golden-file
  // friendly).
  std::string dump() const;

  // Minimal-parenthesis infix; parsing the result reproduces this exact tree.
  std::string print() const;

  template <class T>
  T eval(std::span<const T> vars) const;

  double eval_real(std::span<const double> vars) const { return eval<double>(vars); }

 private:
  struct Ast {
    std::vector<ExprNode> nodes;
    std::vector<std::string> variables;
    int root = -1;
  };
  std::shared_ptr<const Ast> ast_;

  template <class T>
  T eval_node(int idx, std::span<const T> vars) const;
};

namespace expr_detail {

inline void check_positive(double s, const char* what, std::size_t offset) {
  if (!(s > 0.0)) throw EvalError(std::string(what), offset);
}

}  // namespace expr_detail

// The evaluator calls math functions unqualified so the jet overloads bind by
// ADL; these declarations let the same calls resolve for plain double (which
// has no associated namespace).  They must precede the template definition.
using std::cos;
using std::exp;
using std::log;
using std::sin;
using std::sqrt;
using std::tan;

template <class T>
T Expr::eval_node(int idx, std::span<const T> vars) const {
  using Op = ExprNode::Op;
  const ExprNode& n = ast_->nodes[static_cast<std::size_t>(idx)];
  switch (n.op) {
    case Op::Num:
      return T(n.number);
    case Op::Var:
      return vars[static_cast<std::size_t>(n.var)];
    case Op::Add:
      return eval_node(n.a, vars) + eval_node(n.b, vars);
    case Op::Sub:
      return eval_node(n.a, vars) - eval_node(n.b, vars);
    case Op::Mul:
      return eval_node(n.a, vars) * eval_node(n.b, vars);
    case Op::Div: {
      T den = eval_node(n.b, vars);
      if (scalar_part(den) == 0.0) throw EvalError("division by zero", n.offset);
      return eval_node(n.a, vars) / den;
    }
    case Op::Neg:
      return -eval_node(n.a, vars);
    case Op::Pow: {
      T base = eval_node(n.a, vars);
      expr_detail::check_positive(scalar_part(base),
                                  "non-integer power requires a positive base", n.offset);
      return pow_general(base, eval_node(n.b, vars));
    }
    case Op::PowInt: {
      T base = eval_node(n.a, vars);
      if (n.ipow < 0 && scalar_part(base) == 0.0)
        throw EvalError("zero raised to a negative power", n.offset);
      return pow_int(base, n.ipow);
    }
    case Op::Sin:
      return sin(eval_node(n.a, vars));
    case Op::Cos:
      return cos(eval_node(n.a, vars));
    case Op::Tan:
      return tan(eval_node(n.a, vars));
    case Op::Exp:
      return exp(eval_node(n.a, vars));
    case Op::Log: {
      T arg = eval_node(n.a, vars);
      expr_detail::check_positive(scalar_part(arg), "log of a non-positive value", n.offset);
      return log(arg);
    }
    case Op::Sqrt: {
      T arg = eval_node(n.a, vars);
      if (scalar_part(arg) < 0.0) throw EvalError("sqrt of a negative value", n.offset);
      return sqrt(arg);
    }
  }
  throw DomainError("corrupt expression node");
}

template <class T>
T Expr::eval(std::span<const T> vars) const {
  if (!ast_) throw DomainError("evaluating an empty expression");
  if (vars.size() != ast_->variables.size())
    throw DomainError("expression expects " + std::to_string(ast_->variables.size()) +
                      " variables, got " + std::to_string(vars.size()));
  return eval_node(ast_->root, vars);
}

}  // namespace connkit
