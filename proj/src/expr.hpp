#ifndef CFRAC_EXPR_HPP
#define CFRAC_EXPR_HPP

#include <cstdint>
#include <memory>
#include <string>

#include "scalar.hpp"

namespace cfrac {

// Arithmetic expression in one integer variable `n`.  Produced by the DSL
// parser and by programmatic builders (criterion parameter sequences).
// Immutable; shared subtrees are fine.
struct Expr {
  enum class Kind {
    Literal,   // scalar constant
    ImagUnit,  // i
    Var,       // n
    Neg,       // -lhs
    Add,
    Sub,
    Mul,
    Div,
    Pow,   // lhs ^ rhs, rhs must evaluate to an exact integer
    Sqrt,  // principal branch
    Abs,   // modulus
  };

  Kind kind;
  Scalar literal;  // Kind::Literal only
  std::shared_ptr<const Expr> lhs, rhs;
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr expr_literal(Scalar v);
ExprPtr expr_var();
ExprPtr expr_imag();
ExprPtr expr_unary(Expr::Kind k, ExprPtr operand);
ExprPtr expr_binary(Expr::Kind k, ExprPtr lhs, ExprPtr rhs);

// Evaluate at index n.  Results are exact rationals whenever every literal is
// rational and only field operations occur; sqrt/abs stay exact on perfect
// squares and force the big-float backend (at `prec`) otherwise.
Scalar eval_expr(const Expr& e, std::uint64_t n, Precision prec);

bool expr_is_constant(const Expr& e);

// Canonical text form; parsing it back yields an expression with identical
// values at every index.
std::string print_expr(const Expr& e);

}  // namespace cfrac

#endif  // CFRAC_EXPR_HPP
