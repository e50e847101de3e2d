#pragma once

#include "pforge/qform.hpp"
#include "pforge/report.hpp"

namespace pforge {

// Practical size cap for the recursive constructions; PFORGE_CAP_N
// overrides the default of 4.
struct BuildCaps {
    int n_cap = 4;
    static BuildCaps from_env();
};

// The similarity matrix C_n realizing phi_n ~ c*phi_n over k(x_i), built by
// the block recursion C_n = [[C, C'], [-b C', -C'CC'/t]] from a 1x1 base.
// checks records the construction-time verification of its defining
// identities.
struct CnRecord {
    int n = 0;
    std::vector<RatFunc> params;  // a_1..a_n
    std::vector<Variable> x;      // x_1..x_{2^n}
    QForm phi;                    // <<a_1,...,a_n>>
    Matrix Cn;
    RatFunc c;  // phi_n(x_1..x_{2^n}) = s - a_n t
    RatFunc s;  // phi_{n-1}(lower half)
    RatFunc t;  // phi_{n-1}(upper half)
    std::optional<Matrix> C, Cprime, D;  // recursion blocks, absent at n = 1
    Report checks;
};

// params empty -> the default symbols a1..an; x variables are x1..x{2^n}.
CnRecord build_cn(int n, std::vector<RatFunc> params = {},
                  const BuildCaps& caps = BuildCaps::from_env());

// Raw recursive builder over caller-chosen coordinate variables; xs must
// have 2^params.size() entries. c_out, when given, receives
// phi(xs) = s - a_n t.
Matrix cn_matrix_over(const std::vector<RatFunc>& params,
                      const std::vector<Variable>& xs, RatFunc* c_out = nullptr);

// Independently replays the proof's intermediate congruences at level n:
// step (i) diag(C,C'), step (j) [[I,I],[bt I, s I]], step (k) diag(I,D),
// the closing sign flip, and the blockwise direct expansion of
// C_n A C_n^t. Requires n >= 2.
Report verify_cn_steps(int n, std::vector<RatFunc> params = {},
                       const BuildCaps& caps = BuildCaps::from_env());

// C_n with x_1 = 1 and the first row and column removed, plus the two
// identities M^2 = phi(1,x..) I - (c_i x_i x_j) and
// det(M) = phi(1,x..)^(2^{n-1}-1) (squared form at n = 1).
struct MRecord {
    int n = 0;
    std::vector<RatFunc> params;
    Matrix M;
    RatFunc phi1;  // phi(1, x_2, ..., x_{2^n})
    QForm phi;
    Report checks;
};

MRecord build_m(int n, std::vector<RatFunc> params = {},
                const BuildCaps& caps = BuildCaps::from_env());

// char poly of the rank-1 matrix (a_i b_j); throws VerifyError unless it
// equals x^{n-1} (x - sum a_i b_i) exactly.
UnivarPoly rank1_charpoly(const std::vector<RatFunc>& a,
                          const std::vector<RatFunc>& b, Variable x);

// phi(x) phi(y) = phi(y C_n(x)) as an exact identity in 2^{n+1} variables.
Report multiplicativity_check(int n, const BuildCaps& caps = BuildCaps::from_env());

}  // namespace pforge
