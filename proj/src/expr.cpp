#include "expr.hpp"

#include <cassert>

namespace cfrac {

ExprPtr expr_literal(Scalar v) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Literal;
  e->literal = std::move(v);
  return e;
}

ExprPtr expr_var() {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Var;
  return e;
}

ExprPtr expr_imag() {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::ImagUnit;
  return e;
}

ExprPtr expr_unary(Expr::Kind k, ExprPtr operand) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->lhs = std::move(operand);
  return e;
}

ExprPtr expr_binary(Expr::Kind k, ExprPtr lhs, ExprPtr rhs) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

Scalar eval_expr(const Expr& e, std::uint64_t n, Precision prec) {
  switch (e.kind) {
    case Expr::Kind::Literal:
      return e.literal;
    case Expr::Kind::ImagUnit:
      return Scalar::rational(mpq_class(0), mpq_class(1));
    case Expr::Kind::Var: {
      mpz_class z;
      mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
      return Scalar::rational(mpq_class(z));
    }
    case Expr::Kind::Neg:
      return -eval_expr(*e.lhs, n, prec);
    case Expr::Kind::Add:
      return eval_expr(*e.lhs, n, prec) + eval_expr(*e.rhs, n, prec);
    case Expr::Kind::Sub:
      return eval_expr(*e.lhs, n, prec) - eval_expr(*e.rhs, n, prec);
    case Expr::Kind::Mul:
      return eval_expr(*e.lhs, n, prec) * eval_expr(*e.rhs, n, prec);
    case Expr::Kind::Div:
      return eval_expr(*e.lhs, n, prec) / eval_expr(*e.rhs, n, prec);
    case Expr::Kind::Pow: {
      Scalar base = eval_expr(*e.lhs, n, prec);
      Scalar ex = eval_expr(*e.rhs, n, prec);
      if (!ex.is_rational() || ex.rat_im() != 0 || ex.rat_re().get_den() != 1)
        throw EvalError("exponent must be an exact integer");
      return base.pow_int(ex.rat_re().get_num());
    }
    case Expr::Kind::Sqrt:
      return eval_expr(*e.lhs, n, prec).sqrt(prec);
    case Expr::Kind::Abs:
      return eval_expr(*e.lhs, n, prec).abs(prec);
  }
  throw EvalError("corrupt expression node");
}

bool expr_is_constant(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Var:
      return false;
    case Expr::Kind::Literal:
    case Expr::Kind::ImagUnit:
      return true;
    default:
      return (!e.lhs || expr_is_constant(*e.lhs)) &&
             (!e.rhs || expr_is_constant(*e.rhs));
  }
}

namespace {

// Precedence levels: additive 1, multiplicative 2, unary minus 3, power 4,
// atom 5.  Printing a node in a context of higher precedence adds parens, so
// re-parsing reconstructs the identical tree (and thus identical rounding in
// the float backend).
int node_prec(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      return 2;
    case Expr::Kind::Neg:
      return 3;
    case Expr::Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

std::string rat_string(const mpq_class& q) { return q.get_str(); }

// Literals print as (possibly parenthesized) exact rational text; float
// literals use their dyadic expansion, which re-parses to the same value.
std::string literal_string(const Scalar& s, int ctx) {
  std::string re, im;
  bool has_im = !s.is_real();
  if (s.is_rational()) {
    re = rat_string(s.rat_re());
    if (has_im) im = rat_string(s.rat_im());
  } else {
    re = s.flt_re().exact_string();
    if (has_im) im = s.flt_im().exact_string();
  }
  if (!has_im) {
    bool neg = !re.empty() && re[0] == '-';
    bool frac = re.find('/') != std::string::npos;
    int p = neg ? 3 : (frac ? 2 : 5);
    if (p < ctx) return "(" + re + ")";
    return re;
  }
  std::string out = "(" + re + "+(" + im + ")*i)";
  return out;
}

void print_node(const Expr& e, int ctx, std::string& out) {
  int p = node_prec(e.kind);
  bool paren = p < ctx;
  if (paren) out += "(";
  switch (e.kind) {
    case Expr::Kind::Literal:
      out += literal_string(e.literal, paren ? 0 : ctx);
      break;
    case Expr::Kind::ImagUnit:
      out += "i";
      break;
    case Expr::Kind::Var:
      out += "n";
      break;
    case Expr::Kind::Neg:
      out += "-";
      print_node(*e.lhs, 3, out);
      break;
    case Expr::Kind::Add:
      print_node(*e.lhs, 1, out);
      out += "+";
      print_node(*e.rhs, 2, out);
      break;
    case Expr::Kind::Sub:
      print_node(*e.lhs, 1, out);
      out += "-";
      print_node(*e.rhs, 2, out);
      break;
    case Expr::Kind::Mul:
      print_node(*e.lhs, 2, out);
      out += "*";
      print_node(*e.rhs, 3, out);
      break;
    case Expr::Kind::Div:
      print_node(*e.lhs, 2, out);
      out += "/";
      print_node(*e.rhs, 3, out);
      break;
    case Expr::Kind::Pow:
      print_node(*e.lhs, 5, out);
      out += "^";
      print_node(*e.rhs, 4, out);
      break;
    case Expr::Kind::Sqrt:
      out += "sqrt(";
      print_node(*e.lhs, 0, out);
      out += ")";
      break;
    case Expr::Kind::Abs:
      out += "abs(";
      print_node(*e.lhs, 0, out);
      out += ")";
      break;
  }
  if (paren) out += ")";
}

}  // namespace

std::string print_expr(const Expr& e) {
  std::string out;
  print_node(e, 0, out);
  return out;
}

}  // namespace cfrac
