#ifndef KMILNOR_EXPR_HPP
#define KMILNOR_EXPR_HPP

#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "kmilnor/error.hpp"

namespace kmil {

// Parsed expression in the polynomial grammar:
// integer literals, variables t, x, y1..y9, z1..z9, + - * / ^, parentheses.
struct Expr {
    enum Kind { Num, Var, Add, Sub, Mul, Div, Pow, Neg } kind = Num;
    mpz_class num;
    std::string var;
    unsigned exponent = 0;
    std::shared_ptr<const Expr> a, b;
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse_expr(const std::string& text);

// Splits "{a, b, c}" (braces optional) into its top-level comma-separated parts.
std::vector<std::string> split_symbol(const std::string& text);

// Variables occurring in an expression.
void collect_vars(const Expr& e, std::vector<std::string>& out);

// Evaluates an expression into any ring described by Ops:
//   R num(const mpz_class&), R var(const std::string&), add, sub, mul, div, neg, pow(R, unsigned)
template <class Ops>
auto eval_expr(const Expr& e, const Ops& ops) -> decltype(ops.num(e.num))
{
    switch (e.kind) {
    case Expr::Num: return ops.num(e.num);
    case Expr::Var: return ops.var(e.var);
    case Expr::Add: return ops.add(eval_expr(*e.a, ops), eval_expr(*e.b, ops));
    case Expr::Sub: return ops.sub(eval_expr(*e.a, ops), eval_expr(*e.b, ops));
    case Expr::Mul: return ops.mul(eval_expr(*e.a, ops), eval_expr(*e.b, ops));
    case Expr::Div: return ops.div(eval_expr(*e.a, ops), eval_expr(*e.b, ops));
    case Expr::Neg: return ops.neg(eval_expr(*e.a, ops));
    case Expr::Pow: return ops.pow(eval_expr(*e.a, ops), e.exponent);
    }
    fail(Errc::ParseError, "bad expression node");
}

} // namespace kmil

#endif
