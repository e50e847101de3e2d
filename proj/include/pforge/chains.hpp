#pragma once

#include "pforge/cn.hpp"
#include "pforge/qform.hpp"
#include "pforge/report.hpp"

namespace pforge {

// Affine hypersurface F = 0 in the variables of F.
struct Hypersurface {
    std::string label;
    Poly equation;  // nonzero
};

// Certificate that subst carries the target equation to an exact nonzero
// RatFunc multiple of the source equation:
//   substitute(to.equation, subst) = multiplier * from.equation.
struct ChainStep {
    Hypersurface from, to;
    Substitution subst;  // to's coordinates in terms of from's
    RatFunc multiplier;  // nonzero
};

// Computes the pullback of `to` under s, divides exactly by `from` in the
// rational function field, and certifies the step. Throws VerifyError when
// the pullback vanishes identically or is not an exact multiple (the
// substitution then does not carry the zero locus generically).
ChainStep verify_step(const Hypersurface& from, const Hypersurface& to,
                      const Substitution& s);

struct SubstChain {
    std::vector<ChainStep> steps;
    Substitution composed;       // final coordinates in source coordinates
    RatFunc composed_multiplier;

    const Hypersurface& source() const { return steps.front().from; }
    const Hypersurface& target() const { return steps.back().to; }
    // re-checks every stored certificate and the composition
    Report reverify() const;
};

// Assembles verified steps: endpoints of consecutive steps must agree; the
// composed substitution and multiplier are checked against the step-by-step
// composition.
SubstChain make_chain(std::vector<ChainStep> steps);

// phi perp <-b phi> perp <-c>  ~  phi perp <-c phi> perp <-b>, as the
// certified three-substitution chain x' = x Cn(y)/phi(y), y' = y/phi(y),
// x'' = x'/z with z' = 1/z. Parameters must be polynomial. name_prefix
// isolates the generated coordinate names.
SubstChain build_interchange_chain(const std::vector<RatFunc>& pfisterParams,
                                   const RatFunc& b, const RatFunc& c,
                                   const std::string& name_prefix = "");

// phi perp <-b phi(x0)>  ~  phi perp <-b>: scale by phi(x0), then
// x' = x Cn(x0), y' = phi(x0) y.
SubstChain build_scalar_chain(const std::vector<RatFunc>& pfisterParams,
                              const RatFunc& b,
                              const std::vector<Variable>& x0,
                              const std::string& name_prefix = "");

// theta = psi(u) psi(v) - b(u,v)^2 for the generic plane
// u = (1,0,x_2..x_{2^n}), v = (0,1,y_2..y_{2^n}) against
// psi = phi_n perp <-a_{n+1}>, reduced to
// -a_{n+1} phi(1,x..) + phi'(z..) with z = (0,y..) Cn|_{x1=1}.
// params has n+1 entries (empty -> symbols a1..a_{n+1}).
Report theta_reduce(int n, std::vector<RatFunc> params = {},
                    const BuildCaps& caps = BuildCaps::from_env());

// m^2 - a_{n+1} phi(1,x..) w^2 + phi'(z..) w^2
//   = phi_{n+1}(m, w z_2..w z_{2^n}, w, w x_2..w x_{2^n}), exactly.
Report norm_identity(int n, std::vector<RatFunc> params = {},
                     const BuildCaps& caps = BuildCaps::from_env());

enum class MoveKind { IsometrySlotRewrite, InterchangeLemma, ScalarLemma };

// One rewriting move on a subform presentation (a_1..a_n), read as
// psi = <<a_1..a_{n-1}>> perp <-a_n>.
struct PfisterMove {
    MoveKind kind = MoveKind::IsometrySlotRewrite;
    std::string role;  // "rewrite" | "transpose" | "interchange"
    std::vector<RatFunc> before, after;
    std::optional<CongruenceWitness> witness;  // isometry moves
    std::optional<SubstChain> chain;           // interchange payloads
    bool deferred = false;  // payload template-verified at small dimension
    std::string note;
};

struct MoveList {
    std::vector<RatFunc> initial;
    std::vector<RatFunc> final_presentation;
    std::vector<PfisterMove> moves;
};

struct DispatchOptions {
    // interchange payloads are built fully while the inner Pfister factor
    // has dimension <= chain_dim_cap; beyond that they are emitted as
    // deferred template markers unless allow_long is set
    int chain_dim_cap = 4;
    bool allow_long = false;
};

// Emits the case (i)/(j)/(iii) move sequence replacing (a_i, a_j) by the
// witness's target parameters; every isometry payload is verified at the
// presentation's dimension. 1-based indices, 1 <= i < j <= n.
MoveList dispatch_pequiv_move(const std::vector<RatFunc>& presentation, int i,
                              int j, const CongruenceWitness& witness,
                              const DispatchOptions& opt = {});

}  // namespace pforge
