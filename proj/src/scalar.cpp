#include "pforge/scalar.hpp"

#include <algorithm>
#include <cstdlib>

namespace pforge {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Scalar Scalar::rational(long num, long den) {
    return rational(mpz_class(num), mpz_class(den));
}

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw MathError("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

Scalar Scalar::zeta(int p) {
    std::vector<mpq_class> c(1, mpq_class(0));
    c.push_back(mpq_class(1));  // coordinates (0, 1): the element z
    return cyclotomic(p, std::move(c));
}

Scalar Scalar::cyclotomic(int p, std::vector<mpq_class> coords) {
    if (!is_prime(p)) throw MathError("zeta order must be a prime >= 2");
    // reduce exponents mod p (z^p = 1), then eliminate z^{p-1} via
    // z^{p-1} = -(1 + z + ... + z^{p-2})
    std::vector<mpq_class> folded(static_cast<size_t>(p), mpq_class(0));
    for (size_t k = 0; k < coords.size(); ++k)
        folded[k % static_cast<size_t>(p)] += coords[k];
    Scalar s;
    s.p_ = p;
    s.cyc_.assign(static_cast<size_t>(p - 1), mpq_class(0));
    for (int k = 0; k < p - 1; ++k) s.cyc_[static_cast<size_t>(k)] = folded[static_cast<size_t>(k)];
    const mpq_class& top = folded[static_cast<size_t>(p - 1)];
    if (top != 0)
        for (auto& c : s.cyc_) c -= top;
    return s;
}

bool Scalar::is_zero() const {
    if (p_ == 0) return rat_ == 0;
    return std::all_of(cyc_.begin(), cyc_.end(),
                       [](const mpq_class& c) { return c == 0; });
}

bool Scalar::is_one() const {
    if (p_ == 0) return rat_ == 1;
    if (cyc_[0] != 1) return false;
    return std::all_of(cyc_.begin() + 1, cyc_.end(),
                       [](const mpq_class& c) { return c == 0; });
}

const mpq_class& Scalar::rat() const {
    if (p_ != 0) throw MathError("scalar is not rational");
    return rat_;
}

const std::vector<mpq_class>& Scalar::coords() const {
    if (p_ == 0) throw MathError("scalar is not cyclotomic");
    return cyc_;
}

Scalar Scalar::promoted(int p) const {
    if (p_ == p) return *this;
    if (p_ != 0)
        throw MathError("cannot promote between distinct cyclotomic fields");
    std::vector<mpq_class> c(1, rat_);
    return cyclotomic(p, std::move(c));
}

void Scalar::require_same_field(const Scalar& a, const Scalar& b) {
    if (a.p_ != b.p_)
        throw MathError(
            "mixed coefficient fields; promote explicitly with promoted(p)");
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    if (p_ == 0) {
        r.rat_ = -r.rat_;
    } else {
        for (auto& c : r.cyc_) c = -c;
    }
    return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar::require_same_field(a, b);
    Scalar r(a);
    if (a.p_ == 0) {
        r.rat_ += b.rat_;
    } else {
        for (size_t k = 0; k < r.cyc_.size(); ++k) r.cyc_[k] += b.cyc_[k];
    }
    return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar::require_same_field(a, b);
    if (a.p_ == 0) {
        Scalar r(a);
        r.rat_ *= b.rat_;
        return r;
    }
    std::vector<mpq_class> conv(a.cyc_.size() + b.cyc_.size() - 1,
                                mpq_class(0));
    for (size_t i = 0; i < a.cyc_.size(); ++i) {
        if (a.cyc_[i] == 0) continue;
        for (size_t j = 0; j < b.cyc_.size(); ++j)
            if (b.cyc_[j] != 0) conv[i + j] += a.cyc_[i] * b.cyc_[j];
    }
    return Scalar::cyclotomic(a.p_, std::move(conv));
}

namespace {

// dense univariate polynomials over Q, coefficients low -> high
using UPoly = std::vector<mpq_class>;

void utrim(UPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

UPoly umul(const UPoly& f, const UPoly& g) {
    if (f.empty() || g.empty()) return {};
    UPoly r(f.size() + g.size() - 1, mpq_class(0));
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j) r[i + j] += f[i] * g[j];
    utrim(r);
    return r;
}

UPoly usub(UPoly f, const UPoly& g) {
    if (f.size() < g.size()) f.resize(g.size(), mpq_class(0));
    for (size_t i = 0; i < g.size(); ++i) f[i] -= g[i];
    utrim(f);
    return f;
}

UPoly uscale(UPoly f, const mpq_class& c) {
    for (auto& x : f) x *= c;
    utrim(f);
    return f;
}

// f mod g with quotient, g monic not required
std::pair<UPoly, UPoly> udivmod(UPoly f, const UPoly& g) {
    UPoly q;
    utrim(f);
    if (g.empty()) throw MathError("univariate division by zero");
    while (f.size() >= g.size()) {
        size_t shift = f.size() - g.size();
        mpq_class c = f.back() / g.back();
        if (q.size() < shift + 1) q.resize(shift + 1, mpq_class(0));
        q[shift] += c;
        for (size_t i = 0; i < g.size(); ++i) f[shift + i] -= c * g[i];
        utrim(f);
        if (!f.empty() && f.size() >= g.size() && f.back() == 0) utrim(f);
    }
    return {q, f};
}

}  // namespace

Scalar Scalar::inverse() const {
    if (is_zero()) throw MathError("division by zero");
    if (p_ == 0) {
        Scalar r;
        r.rat_ = 1 / rat_;
        return r;
    }
    // extended Euclid: find u with u*f = 1 mod Phi_p
    UPoly phi(static_cast<size_t>(p_), mpq_class(1));  // 1 + z + ... + z^{p-1}
    UPoly f(cyc_.begin(), cyc_.end());
    utrim(f);
    UPoly r0 = phi, r1 = f;
    UPoly s0 = {}, s1 = {mpq_class(1)};  // coefficients of f
    while (!r1.empty()) {
        auto [q, rem] = udivmod(r0, r1);
        UPoly s2 = usub(s0, umul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd (a nonzero constant since Phi_p is irreducible and f != 0)
    if (r0.size() != 1)
        throw MathError("cyclotomic inverse: unexpected non-unit gcd");
    UPoly u = uscale(s0, 1 / r0[0]);
    std::vector<mpq_class> coords(u.begin(), u.end());
    return cyclotomic(p_, std::move(coords));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    Scalar::require_same_field(a, b);
    if (b.is_zero()) throw MathError("division by zero");
    if (a.p_ == 0) {
        Scalar r(a);
        r.rat_ /= b.rat_;
        return r;
    }
    return a * b.inverse();
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar base(*this);
    Scalar acc(1);
    if (p_ != 0) acc = acc.promoted(p_);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& b) const {
    if (p_ != b.p_) return false;
    if (p_ == 0) return rat_ == b.rat_;
    return cyc_ == b.cyc_;
}

int Scalar::print_sign() const {
    if (p_ == 0) return sgn(rat_);
    for (const auto& c : cyc_)
        if (c != 0) return sgn(c);
    return 0;
}

bool Scalar::is_single_cyclotomic_term() const {
    if (p_ == 0) return true;
    int nonzero = 0;
    for (const auto& c : cyc_)
        if (c != 0) ++nonzero;
    return nonzero <= 1;
}

std::string Scalar::str() const {
    if (p_ == 0) return rat_.get_str();
    std::string out;
    bool first = true;
    for (size_t k = 0; k < cyc_.size(); ++k) {
        const mpq_class& c = cyc_[k];
        if (c == 0) continue;
        mpq_class a = abs(c);
        std::string term;
        if (k == 0) {
            term = a.get_str();
        } else {
            std::string z = "zeta(" + std::to_string(p_) + ")";
            if (k > 1) z += "^" + std::to_string(k);
            term = (a == 1) ? z : a.get_str() + "*" + z;
        }
        if (first) {
            out = (c < 0 ? "-" : "") + term;
            first = false;
        } else {
            out += (c < 0 ? " - " : " + ") + term;
        }
    }
    return first ? "0" : out;
}

}  // namespace pforge
