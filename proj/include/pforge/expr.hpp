#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "pforge/ratfunc.hpp"

namespace pforge {

namespace ast {

enum class Kind { Integer, Var, Zeta, Neg, Add, Sub, Mul, Div, Pow };

struct Node;
using NodePtr = std::unique_ptr<Node>;

struct Node {
    Kind kind;
    mpz_class int_value;        // Integer
    std::string name;           // Var
    int zeta_p = 0;             // Zeta
    uint32_t exponent = 0;      // Pow
    std::vector<NodePtr> kids;  // 1 for Neg/Pow, 2 for binary ops
};

}  // namespace ast

// Grammar: ^ (integer exponents only) binds tighter than unary minus, which
// binds tighter than * and /, which bind tighter than + and -; * / + - are
// left-associative. Identifiers are registered as variables in appearance
// order. Throws ParseError with a byte offset.
ast::NodePtr parse_expr(std::string_view text);

// Lower an AST to a canonical RatFunc. zeta must appear with one consistent
// order p; field_hint forces the coefficient field when the text itself has
// no zeta occurrence (0 keeps rationals).
RatFunc lower(const ast::Node& node, int field_hint = 0);

RatFunc parse_ratfunc(std::string_view text, int field_hint = 0);

std::string print_canonical(const Scalar& s);
std::string print_canonical(const Poly& f);
std::string print_canonical(const RatFunc& f);

}  // namespace pforge
