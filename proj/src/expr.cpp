#include "pforge/expr.hpp"

#include <cctype>

namespace pforge {

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Lexer {
    std::string_view s;
    size_t pos = 0;
    Tok tok = Tok::End;
    size_t tok_pos = 0;
    std::string text;  // Ident / Int payload

    explicit Lexer(std::string_view in) : s(in) { advance(); }

    void advance() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
        tok_pos = pos;
        if (pos == s.size()) {
            tok = Tok::End;
            return;
        }
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                ++pos;
            text.assign(s.substr(start, pos - start));
            tok = Tok::Int;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            text.assign(s.substr(start, pos - start));
            tok = Tok::Ident;
            return;
        }
        ++pos;
        switch (c) {
            case '+': tok = Tok::Plus; return;
            case '-': tok = Tok::Minus; return;
            case '*': tok = Tok::Star; return;
            case '/': tok = Tok::Slash; return;
            case '^': tok = Tok::Caret; return;
            case '(': tok = Tok::LParen; return;
            case ')': tok = Tok::RParen; return;
            default:
                throw ParseError(tok_pos, std::string("unexpected character '") + c + "'");
        }
    }
};

struct Parser {
    Lexer lx;
    explicit Parser(std::string_view in) : lx(in) {}

    ast::NodePtr make(ast::Kind k) {
        auto n = std::make_unique<ast::Node>();
        n->kind = k;
        return n;
    }

    ast::NodePtr parse() {
        auto e = expr();
        if (lx.tok != Tok::End)
            throw ParseError(lx.tok_pos, "trailing input after expression");
        return e;
    }

    ast::NodePtr expr() {
        auto left = term();
        while (lx.tok == Tok::Plus || lx.tok == Tok::Minus) {
            ast::Kind k = lx.tok == Tok::Plus ? ast::Kind::Add : ast::Kind::Sub;
            lx.advance();
            auto right = term();
            auto n = make(k);
            n->kids.push_back(std::move(left));
            n->kids.push_back(std::move(right));
            left = std::move(n);
        }
        return left;
    }

    ast::NodePtr term() {
        auto left = factor();
        while (lx.tok == Tok::Star || lx.tok == Tok::Slash) {
            ast::Kind k = lx.tok == Tok::Star ? ast::Kind::Mul : ast::Kind::Div;
            lx.advance();
            auto right = factor();
            auto n = make(k);
            n->kids.push_back(std::move(left));
            n->kids.push_back(std::move(right));
            left = std::move(n);
        }
        return left;
    }

    ast::NodePtr factor() {
        if (lx.tok == Tok::Minus) {
            size_t at = lx.tok_pos;
            lx.advance();
            if (lx.tok == Tok::End)
                throw ParseError(at, "operand missing after unary minus");
            auto n = make(ast::Kind::Neg);
            n->kids.push_back(factor());
            return n;
        }
        return power();
    }

    ast::NodePtr power() {
        auto base = atom();
        while (lx.tok == Tok::Caret) {
            lx.advance();
            if (lx.tok != Tok::Int)
                throw ParseError(lx.tok_pos,
                                 "exponent must be a non-negative integer literal");
            mpz_class e(lx.text);
            if (!e.fits_uint_p())
                throw ParseError(lx.tok_pos, "exponent too large");
            auto n = make(ast::Kind::Pow);
            n->exponent = static_cast<uint32_t>(e.get_ui());
            n->kids.push_back(std::move(base));
            base = std::move(n);
            lx.advance();
        }
        return base;
    }

    ast::NodePtr atom() {
        switch (lx.tok) {
            case Tok::Int: {
                auto n = make(ast::Kind::Integer);
                n->int_value = mpz_class(lx.text);
                lx.advance();
                return n;
            }
            case Tok::Ident: {
                std::string name = lx.text;
                size_t at = lx.tok_pos;
                lx.advance();
                if (name == "zeta") {
                    if (lx.tok != Tok::LParen)
                        throw ParseError(at, "zeta requires an order: zeta(p)");
                    lx.advance();
                    if (lx.tok != Tok::Int)
                        throw ParseError(lx.tok_pos, "zeta order must be an integer");
                    mpz_class p(lx.text);
                    if (!p.fits_sint_p() || !is_prime(static_cast<int>(p.get_si())))
                        throw ParseError(lx.tok_pos, "zeta order must be a prime >= 2");
                    auto n = make(ast::Kind::Zeta);
                    n->zeta_p = static_cast<int>(p.get_si());
                    lx.advance();
                    if (lx.tok != Tok::RParen)
                        throw ParseError(lx.tok_pos, "expected ')'");
                    lx.advance();
                    return n;
                }
                var(name);  // register in appearance order
                auto n = make(ast::Kind::Var);
                n->name = std::move(name);
                return n;
            }
            case Tok::LParen: {
                size_t at = lx.tok_pos;
                lx.advance();
                auto e = expr();
                if (lx.tok != Tok::RParen)
                    throw ParseError(at, "unbalanced '('");
                lx.advance();
                return e;
            }
            case Tok::RParen:
                throw ParseError(lx.tok_pos, "unbalanced ')'");
            default:
                throw ParseError(lx.tok_pos, "operand expected");
        }
    }
};

void collect_zeta_orders(const ast::Node& n, std::set<int>& out) {
    if (n.kind == ast::Kind::Zeta) out.insert(n.zeta_p);
    for (const auto& k : n.kids) collect_zeta_orders(*k, out);
}

RatFunc lower_rec(const ast::Node& n, int p) {
    switch (n.kind) {
        case ast::Kind::Integer: {
            Scalar c(n.int_value);
            return RatFunc(p ? c.promoted(p) : c);
        }
        case ast::Kind::Var: {
            RatFunc v = RatFunc::variable(var(n.name));
            return p ? v.promoted(p) : v;
        }
        case ast::Kind::Zeta:
            return RatFunc(Scalar::zeta(n.zeta_p));
        case ast::Kind::Neg:
            return -lower_rec(*n.kids[0], p);
        case ast::Kind::Add:
            return lower_rec(*n.kids[0], p) + lower_rec(*n.kids[1], p);
        case ast::Kind::Sub:
            return lower_rec(*n.kids[0], p) - lower_rec(*n.kids[1], p);
        case ast::Kind::Mul:
            return lower_rec(*n.kids[0], p) * lower_rec(*n.kids[1], p);
        case ast::Kind::Div: {
            RatFunc d = lower_rec(*n.kids[1], p);
            if (d.is_zero())
                throw MathError("division by an identically zero expression");
            return lower_rec(*n.kids[0], p) / d;
        }
        case ast::Kind::Pow:
            return lower_rec(*n.kids[0], p).pow(n.exponent);
    }
    throw MathError("corrupt expression tree");
}

}  // namespace

ast::NodePtr parse_expr(std::string_view text) {
    Parser p(text);
    return p.parse();
}

RatFunc lower(const ast::Node& node, int field_hint) {
    std::set<int> orders;
    collect_zeta_orders(node, orders);
    if (orders.size() > 1)
        throw MathError("mixed zeta orders in one expression");
    int p = orders.empty() ? field_hint : *orders.begin();
    if (!orders.empty() && field_hint != 0 && field_hint != p)
        throw MathError("zeta order conflicts with requested field");
    return lower_rec(node, p);
}

RatFunc parse_ratfunc(std::string_view text, int field_hint) {
    return lower(*parse_expr(text), field_hint);
}

// ----------------------------------------------------------------- printer

namespace {

// abs-value text of a coefficient known to be rational or a single
// cyclotomic term
std::string scalar_abs_text(const Scalar& c) {
    if (c.is_rational()) {
        mpq_class a = abs(c.rat());
        return a.get_str();
    }
    const auto& v = c.coords();
    for (size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        mpq_class a = abs(v[k]);
        if (k == 0) return a.get_str();
        std::string z = "zeta(" + std::to_string(c.field_p()) + ")";
        if (k > 1) z += "^" + std::to_string(k);
        return a == 1 ? z : a.get_str() + "*" + z;
    }
    return "0";
}

bool scalar_abs_is_one(const Scalar& c) {
    if (c.is_rational()) return abs(c.rat()) == 1;
    const auto& v = c.coords();
    for (size_t k = 0; k < v.size(); ++k)
        if (v[k] != 0) return k == 0 && abs(v[k]) == 1;
    return false;
}

std::string monomial_text(const Monomial& m) {
    std::string out;
    for (const auto& [v, k] : m.entries()) {
        if (!out.empty()) out += "*";
        out += v.name();
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace

std::string print_canonical(const Scalar& s) { return s.str(); }

std::string print_canonical(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        bool wrap = !c.is_single_cyclotomic_term();
        int sign = wrap ? 1 : c.print_sign();
        std::string body;
        if (m.is_one()) {
            body = wrap ? "(" + c.str() + ")" : scalar_abs_text(c);
        } else {
            std::string mono = monomial_text(m);
            if (wrap) {
                body = "(" + c.str() + ")*" + mono;
            } else if (scalar_abs_is_one(c)) {
                body = mono;
            } else {
                body = scalar_abs_text(c) + "*" + mono;
            }
        }
        if (first) {
            out = (sign < 0 ? "-" : "") + body;
            first = false;
        } else {
            out += (sign < 0 ? " - " : " + ") + body;
        }
    }
    return out;
}

std::string print_canonical(const RatFunc& f) {
    if (f.is_polynomial()) return print_canonical(f.num());
    return "(" + print_canonical(f.num()) + ")/(" + print_canonical(f.den()) + ")";
}

std::string RatFunc::str() const { return print_canonical(*this); }

}  // namespace pforge
