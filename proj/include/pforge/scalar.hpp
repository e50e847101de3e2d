#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "pforge/errors.hpp"

namespace pforge {

// Exact coefficient: either a rational number or an element of Q(zeta_p)
// for a prime p, stored in the power basis 1, z, ..., z^{p-2} of
// Q[z]/Phi_p(z), Phi_p(z) = 1 + z + ... + z^{p-1}.
//
// Rationals and cyclotomic elements never mix implicitly; promote with
// promoted(p). All values are immutable after construction.
class Scalar {
public:
    Scalar() : p_(0), rat_(0) {}
    Scalar(long n) : p_(0), rat_(n) {}  // NOLINT: implicit by design
    explicit Scalar(const mpz_class& n) : p_(0), rat_(n) {}
    explicit Scalar(mpq_class q) : p_(0), rat_(std::move(q)) {
        rat_.canonicalize();
    }

    static Scalar rational(long num, long den);
    static Scalar rational(const mpz_class& num, const mpz_class& den);
    // zeta_p itself; p must be a prime >= 2
    static Scalar zeta(int p);
    // element of Q(zeta_p) from power-basis coordinates (any length;
    // reduced modulo Phi_p)
    static Scalar cyclotomic(int p, std::vector<mpq_class> coords);

    int field_p() const { return p_; }
    bool is_rational() const { return p_ == 0; }
    bool is_zero() const;
    bool is_one() const;

    // rational value; requires is_rational()
    const mpq_class& rat() const;
    // power-basis coordinates, size p-1; requires !is_rational()
    const std::vector<mpq_class>& coords() const;

    // explicit field promotion Q -> Q(zeta_p); identity on matching field
    Scalar promoted(int p) const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    Scalar inverse() const;
    Scalar pow(long e) const;  // e may be negative if invertible

    bool operator==(const Scalar& b) const;
    bool operator!=(const Scalar& b) const { return !(*this == b); }

    // Sign used by the canonical printer: sign of the rational value, or
    // of the first nonzero power-basis coordinate.
    int print_sign() const;

    // True when the element is a single term r*zeta^k (k possibly 0).
    bool is_single_cyclotomic_term() const;

    // Canonical text form, parseable by the expression grammar.
    std::string str() const;

private:
    int p_;                        // 0 = rational
    mpq_class rat_;                // valid when p_ == 0
    std::vector<mpq_class> cyc_;   // size p_-1 when p_ > 0

    static void require_same_field(const Scalar& a, const Scalar& b);
};

bool is_prime(int p);

}  // namespace pforge
