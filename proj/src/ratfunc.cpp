#include "pforge/ratfunc.hpp"

namespace pforge {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(1) {
    match_den_field();
}

RatFunc::RatFunc(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw MathError("zero denominator");
    reduce();
}

RatFunc RatFunc::variable(Variable v) { return RatFunc(Poly::variable(v)); }

void RatFunc::match_den_field() {
    int p = num_.field_p();
    if (p != 0 && den_.field_p() == 0) den_ = den_.promoted(p);
    if (p == 0 && den_.field_p() != 0 && !num_.is_zero())
        num_ = num_.promoted(den_.field_p());
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (num_.field_p() != den_.field_p()) match_den_field();
    if (!den_.is_one()) {
        Poly g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
        const Scalar& lc = den_.leading_coeff();
        if (!lc.is_one()) {
            Scalar inv = lc.inverse();
            num_ = num_.mul_scalar(inv);
            den_ = den_.mul_scalar(inv);
        }
    }
    match_den_field();
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    RatFunc r;
    if (a.den_ == b.den_) {
        r.num_ = a.num_ + b.num_;
        r.den_ = a.den_;
        if (r.num_.is_zero()) return RatFunc();
        r.reduce();
        return r;
    }
    Poly g = poly_gcd(a.den_, b.den_);
    if (g.is_one()) {
        r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
        if (r.num_.is_zero()) return RatFunc();
        // coprime denominators each coprime to their numerator: the sum is
        // already reduced, only the monic normalization remains
        const Scalar& lc = r.den_.leading_coeff();
        if (!lc.is_one()) {
            Scalar inv = lc.inverse();
            r.num_ = r.num_.mul_scalar(inv);
            r.den_ = r.den_.mul_scalar(inv);
        }
        r.match_den_field();
        return r;
    }
    Poly bp = a.den_.exact_div(g);
    Poly dp = b.den_.exact_div(g);
    Poly t = a.num_ * dp + b.num_ * bp;
    if (t.is_zero()) return RatFunc();
    Poly h = poly_gcd(t, g);
    if (!h.is_one()) {
        t = t.exact_div(h);
        g = g.exact_div(h);
    }
    r.num_ = std::move(t);
    r.den_ = bp * dp * g;
    const Scalar& lc = r.den_.leading_coeff();
    if (!lc.is_one()) {
        Scalar inv = lc.inverse();
        r.num_ = r.num_.mul_scalar(inv);
        r.den_ = r.den_.mul_scalar(inv);
    }
    r.match_den_field();
    return r;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    RatFunc r;
    Poly g1 = poly_gcd(a.num_, b.den_);
    Poly g2 = poly_gcd(b.num_, a.den_);
    Poly an = g1.is_one() ? a.num_ : a.num_.exact_div(g1);
    Poly bd = g1.is_one() ? b.den_ : b.den_.exact_div(g1);
    Poly bn = g2.is_one() ? b.num_ : b.num_.exact_div(g2);
    Poly ad = g2.is_one() ? a.den_ : a.den_.exact_div(g2);
    r.num_ = an * bn;
    r.den_ = ad * bd;
    const Scalar& lc = r.den_.leading_coeff();
    if (!lc.is_one()) {
        Scalar inv = lc.inverse();
        r.num_ = r.num_.mul_scalar(inv);
        r.den_ = r.den_.mul_scalar(inv);
    }
    r.match_den_field();
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw MathError("division by zero rational function");
    RatFunc r;
    r.num_ = den_;
    r.den_ = num_;
    const Scalar& lc = r.den_.leading_coeff();
    if (!lc.is_one()) {
        Scalar inv = lc.inverse();
        r.num_ = r.num_.mul_scalar(inv);
        r.den_ = r.den_.mul_scalar(inv);
    }
    return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    return a * b.inverse();
}

RatFunc RatFunc::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc acc(1);
    if (field_p() != 0) acc = acc.promoted(field_p());
    RatFunc base(*this);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

RatFunc RatFunc::promoted(int p) const {
    RatFunc r(*this);
    r.num_ = r.num_.promoted(p);
    r.den_ = r.den_.promoted(p);
    return r;
}

bool RatFunc::equal_cross(const RatFunc& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

void RatFuncSum::add(const RatFunc& x) {
    if (x.is_zero()) return;
    if (!any_) {
        num_ = x.num();
        den_ = x.den();
        any_ = true;
        return;
    }
    if (den_ == x.den()) {
        num_ += x.num();
        return;
    }
    Poly g = poly_gcd(den_, x.den());
    if (g.is_one()) {
        num_ = num_ * x.den() + x.num() * den_;
        den_ = den_ * x.den();
        return;
    }
    Poly mine = den_.exact_div(g);
    Poly theirs = x.den().exact_div(g);
    num_ = num_ * theirs + x.num() * mine;
    den_ = den_ * theirs;
}

void RatFuncSum::add_product(const RatFunc& x, const RatFunc& y) {
    if (x.is_zero() || y.is_zero()) return;
    add(x * y);
}

RatFunc RatFuncSum::value() const {
    if (!any_) return RatFunc();
    return RatFunc(num_, den_);
}

void RatFunc::collect_vars(std::set<Variable>& out) const {
    num_.collect_vars(out);
    den_.collect_vars(out);
}

}  // namespace pforge
