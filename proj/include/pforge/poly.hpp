#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "pforge/scalar.hpp"
#include "pforge/vars.hpp"

namespace pforge {

// Power product: sorted by variable id, no zero exponents stored.
class Monomial {
public:
    using Entry = std::pair<Variable, uint32_t>;

    Monomial() = default;
    static Monomial of(Variable v, uint32_t k = 1);

    bool is_one() const { return e_.empty(); }
    uint32_t degree() const;
    uint32_t exponent(Variable v) const;
    const std::vector<Entry>& entries() const { return e_; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    // *this / o; requires o.divides(*this)
    Monomial divided_by(const Monomial& o) const;
    static Monomial gcd(const Monomial& a, const Monomial& b);
    Monomial pow(uint32_t k) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }

    // graded-lex: total degree first; ties broken lexicographically with
    // earlier-registered variables more significant. Returns <0, 0, >0 as
    // a <, =, > b.
    static int cmp(const Monomial& a, const Monomial& b);

private:
    std::vector<Entry> e_;
};

struct MonomialGrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::cmp(a, b) > 0;
    }
};

// Sparse multivariate polynomial with exact Scalar coefficients, all in one
// coefficient field. Terms are kept in descending graded-lex order, so
// begin() is the leading term. Immutable in spirit: every operation returns
// a fresh value.
class Poly {
public:
    using TermMap = std::map<Monomial, Scalar, MonomialGrlexGreater>;

    Poly() : p_(0) {}
    Poly(long n) : Poly(Scalar(n)) {}  // NOLINT: implicit by design
    explicit Poly(const Scalar& c);
    static Poly variable(Variable v);
    static Poly term(const Scalar& c, const Monomial& m);

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    bool is_monomial_term() const { return t_.size() == 1; }
    int field_p() const { return p_; }

    const TermMap& terms() const { return t_; }
    size_t term_count() const { return t_.size(); }
    const Monomial& leading_monomial() const;
    const Scalar& leading_coeff() const;
    Scalar constant_value() const;  // requires is_constant()
    Scalar coeff(const Monomial& m) const;

    uint32_t total_degree() const;
    uint32_t degree_in(Variable v) const;
    void collect_vars(std::set<Variable>& out) const;
    std::set<Variable> vars() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& b);
    Poly& operator-=(const Poly& b);
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    // assemble from a term map, dropping zero coefficients
    static Poly from_terms(TermMap terms);

    Poly mul_scalar(const Scalar& c) const;
    Poly mul_monomial(const Monomial& m) const;
    // exact; every term must be divisible by m
    Poly div_monomial(const Monomial& m) const;
    Poly pow(uint32_t k) const;
    Poly promoted(int p) const;

    // leading grlex coefficient scaled to 1
    Poly monic() const;

    // exact division; nullopt when g does not divide *this
    std::optional<Poly> divided_exactly(const Poly& g) const;
    // throwing flavor for divisions known to be exact
    Poly exact_div(const Poly& g) const;

    // view as a univariate polynomial in v with Poly coefficients
    std::map<uint32_t, Poly> univariate_in(Variable v) const;
    static Poly from_univariate(Variable v, const std::map<uint32_t, Poly>& u);
    Poly coeff_of(Variable v, uint32_t k) const;

    bool operator==(const Poly& o) const { return t_ == o.t_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

private:
    TermMap t_;
    int p_;  // coefficient field; zero polynomial is field-agnostic

    void add_term(const Monomial& m, const Scalar& c);
    static void require_compatible(const Poly& a, const Poly& b);
};

// gcd, normalized monic; gcd(f, 0) = monic f.
Poly poly_gcd(const Poly& f, const Poly& g);
Poly poly_lcm(const Poly& f, const Poly& g);

// pseudo-remainder of a by b with respect to v: lc_v(b)^(deg_a-deg_b+1) * a
// reduced modulo b, no divisions performed.
Poly pseudo_rem(const Poly& a, const Poly& b, Variable v);

}  // namespace pforge
