#pragma once

#include <cstdint>

#include "pforge/matrix.hpp"
#include "pforge/report.hpp"

namespace pforge {

// Counts of the split symmetric-power picture of a p-point set: tuples,
// diagonal, multisets, the unique all-distinct class, and its fiber.
struct CensusReport {
    int p = 0;
    uint64_t tuples = 0;          // p^p
    uint64_t diagonal = 0;        // tuples with a repeated label
    uint64_t off_diagonal = 0;    // p!
    uint64_t multisets = 0;       // C(2p-1, p)
    uint64_t distinct_classes = 0;  // 1
    uint64_t fiber_over_u = 0;    // p
    Report checks;
};

// Exhaustive enumeration; p prime, p <= 7.
CensusReport sympower_census(int p);

// Rational function field L = Q(b)(x_0..x_{p-2}) with the defined
// generator x_{p-1} = b/(x_0...x_{p-2}) and the order-p shift
// sigma: x_i -> x_{i+1 mod p}. The product relation x_0...x_{p-1} = b
// holds identically because x_{p-1} is eliminated.
class CyclicFunctionField {
public:
    explicit CyclicFunctionField(int p, const std::string& prefix = "");

    int p() const { return p_; }
    RatFunc b() const { return RatFunc::variable(bvar_); }
    // generator x_i for 0 <= i < p; i = p-1 is the eliminated one
    RatFunc x(int i) const;
    Substitution sigma() const;
    RatFunc apply_sigma(const RatFunc& f, int times = 1) const;

    // product relation and sigma^p = identity on every generator
    Report relation_checks() const;

private:
    int p_;
    Variable bvar_;
    std::vector<Variable> gens_;  // x_0..x_{p-2}
};

// Split Severi-Brauer coordinate map t_i/t_0 -> x sigma(x)...sigma^{i-1}(x)
// with inverse sigma^i(x) -> t_{i+1}/t_i: equivariance, two-sided inverse,
// and the projective shift-with-b identity, all as exact RatFunc identities.
Report sb_split_map(int p);

// prod sigma^i(u) for a generic linear combination u is sigma-invariant.
Report galois_norm_invariance(int p);

// Product of the entries of a split diagonal element; asserts agreement
// with the fraction-free determinant of diag(d).
RatFunc diagonal_nrd(const std::vector<RatFunc>& d);

bool distinct_eigenvalues(const std::vector<RatFunc>& d);

// Randomized Nrd = det trials over Q(zeta_p), multiplicativity, the
// distinct-eigenvalue witness with Nrd = c, and the reported norm of the
// <c/zeta^{(p-1)/2}, zeta, ..., zeta^{p-1}> diagonal element.
Report nrd_report(int p, uint64_t seed, int trials);

}  // namespace pforge
