#pragma once

#include "pforge/poly.hpp"

namespace pforge {

// Normalized quotient of polynomials: denominator nonzero and monic
// (leading graded-lex coefficient 1), gcd(numerator, denominator) = 1.
// The universal value type of the library.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    explicit RatFunc(const Scalar& c) : num_(c), den_(1) { match_den_field(); }
    RatFunc(Poly num);  // NOLINT: polynomials embed
    RatFunc(Poly num, Poly den);
    static RatFunc variable(Variable v);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const {
        return num_.is_constant() && den_.is_constant();
    }
    int field_p() const { return num_.is_zero() ? den_.field_p() : num_.field_p(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
    RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }

    RatFunc inverse() const;
    RatFunc pow(long e) const;
    RatFunc promoted(int p) const;

    // canonical representation equality
    bool operator==(const RatFunc& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }
    // cross-multiplication equality, independent of canonical form
    bool equal_cross(const RatFunc& o) const;

    void collect_vars(std::set<Variable>& out) const;

    std::string str() const;  // canonical text (defined with the printer)

private:
    Poly num_, den_;
    void reduce();           // cancel gcd, make denominator monic
    void match_den_field();  // align the constant denominator's field
};

// Accumulates a sum of rational functions over a running common
// denominator and normalizes once at the end; much cheaper than repeated
// canonical additions when intermediate sums cancel heavily.
class RatFuncSum {
public:
    void add(const RatFunc& x);
    void add_product(const RatFunc& x, const RatFunc& y);
    RatFunc value() const;

private:
    Poly num_, den_;
    bool any_ = false;
};

}  // namespace pforge
