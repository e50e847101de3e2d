#include "pforge/chains.hpp"

#include <numeric>

#include "pforge/expr.hpp"

namespace pforge {

namespace {

Poly as_poly(const RatFunc& f, const char* what) {
    if (!f.is_polynomial())
        throw MathError(std::string(what) + " must be polynomial");
    return f.num();
}

std::vector<Variable> fresh_vars(const std::string& prefix, int count) {
    std::vector<Variable> vs;
    for (int i = 1; i <= count; ++i)
        vs.push_back(var(prefix + std::to_string(i)));
    return vs;
}

std::vector<RatFunc> as_ratfuncs(const std::vector<Variable>& vs) {
    std::vector<RatFunc> out;
    out.reserve(vs.size());
    for (Variable v : vs) out.push_back(RatFunc::variable(v));
    return out;
}

void fix_symbols_of(Substitution& s, const std::vector<RatFunc>& exprs) {
    std::set<Variable> vars;
    for (const auto& e : exprs) e.collect_vars(vars);
    for (Variable v : vars) s.fix(v);
}

void fix_equation_vars(Substitution& s, const Poly& eq) {
    for (Variable v : eq.vars()) s.fix(v);
}

void require_fresh(const std::vector<Variable>& generated,
                   const std::vector<RatFunc>& symbols) {
    std::set<Variable> used;
    for (const auto& e : symbols) e.collect_vars(used);
    for (Variable v : generated)
        if (used.count(v))
            throw MathError("coordinate name " + v.name() +
                            " collides with a parameter; pass a name prefix");
}

}  // namespace

ChainStep verify_step(const Hypersurface& from, const Hypersurface& to,
                      const Substitution& s) {
    if (from.equation.is_zero() || to.equation.is_zero())
        throw MathError("hypersurface equation must be nonzero");
    RatFunc pulled = substitute(to.equation, s);
    if (pulled.is_zero())
        throw VerifyError("pullback of '" + to.label +
                          "' vanishes identically");
    auto h = pulled.num().divided_exactly(from.equation);
    if (!h)
        throw VerifyError(
            "pullback of '" + to.label +
                "' is not an exact multiple of '" + from.label + "'",
            print_canonical(pulled));
    return ChainStep{from, to, s, RatFunc(std::move(*h), pulled.den())};
}

SubstChain make_chain(std::vector<ChainStep> steps) {
    if (steps.empty()) throw MathError("empty chain");
    for (size_t k = 1; k < steps.size(); ++k)
        if (steps[k].from.equation != steps[k - 1].to.equation)
            throw MathError("chain endpoints disagree at step " +
                            std::to_string(k));
    Substitution sigma = steps[0].subst;
    RatFunc mult = steps[0].multiplier;
    for (size_t k = 1; k < steps.size(); ++k) {
        mult = mult * substitute(steps[k].multiplier, sigma);
        sigma = compose(steps[k].subst, sigma);
    }
    RatFunc pulled = substitute(steps.back().to.equation, sigma);
    if (pulled != mult * RatFunc(steps.front().from.equation))
        throw VerifyError("composed chain certificate failed",
                          print_canonical(pulled));
    SubstChain c;
    c.steps = std::move(steps);
    c.composed = std::move(sigma);
    c.composed_multiplier = std::move(mult);
    return c;
}

Report SubstChain::reverify() const {
    Report r;
    r.kind = "chain";
    for (size_t k = 0; k < steps.size(); ++k) {
        const ChainStep& st = steps[k];
        bool ok = false;
        std::string detail;
        try {
            RatFunc pulled = substitute(st.to.equation, st.subst);
            ok = pulled == st.multiplier * RatFunc(st.from.equation) &&
                 !st.multiplier.is_zero();
        } catch (const std::exception& e) {
            detail = e.what();
        }
        r.add("step " + std::to_string(k + 1) + ": " + st.from.label +
                  " -> " + st.to.label,
              ok, detail);
    }
    bool comp_ok = false;
    try {
        comp_ok = substitute(steps.back().to.equation, composed) ==
                  composed_multiplier * RatFunc(steps.front().from.equation);
    } catch (const std::exception&) {
    }
    r.add("composed substitution certificate", comp_ok,
          "multiplier " + print_canonical(composed_multiplier));
    return r;
}

SubstChain build_interchange_chain(const std::vector<RatFunc>& pfisterParams,
                                   const RatFunc& b, const RatFunc& c,
                                   const std::string& name_prefix) {
    QForm phi = QForm::pfister(pfisterParams);
    int m = phi.dim();
    Poly bp = as_poly(b, "b");
    Poly cp = as_poly(c, "c");

    std::vector<Variable> xs = fresh_vars(name_prefix + "x", m);
    std::vector<Variable> ys = fresh_vars(name_prefix + "y", m);
    Variable z = var(name_prefix + "z");
    std::vector<Variable> xps = fresh_vars(name_prefix + "xp", m);
    std::vector<Variable> yps = fresh_vars(name_prefix + "yp", m);
    std::vector<Variable> xpps = fresh_vars(name_prefix + "xpp", m);
    Variable zp = var(name_prefix + "zp");

    std::vector<RatFunc> symbols = pfisterParams;
    symbols.push_back(b);
    symbols.push_back(c);
    std::vector<Variable> generated;
    auto note = [&](const std::vector<Variable>& vs) {
        generated.insert(generated.end(), vs.begin(), vs.end());
    };
    note(xs);
    note(ys);
    note(xps);
    note(yps);
    note(xpps);
    generated.push_back(z);
    generated.push_back(zp);
    require_fresh(generated, symbols);

    auto rf = [](Variable v) { return RatFunc::variable(v); };
    RatFunc phix = qform_eval(phi, as_ratfuncs(xs));
    RatFunc phiy = qform_eval(phi, as_ratfuncs(ys));
    RatFunc phixp = qform_eval(phi, as_ratfuncs(xps));
    RatFunc phiyp = qform_eval(phi, as_ratfuncs(yps));
    RatFunc phixpp = qform_eval(phi, as_ratfuncs(xpps));

    Hypersurface h0{
        "phi(x) - b*phi(y) - c*z^2",
        as_poly(phix - b * phiy - c * rf(z) * rf(z), "source equation")};
    Hypersurface h1{"phi(y)*phi(x') - b*phi(y) - c*z^2",
                    as_poly(phiy * phixp - b * phiy - c * rf(z) * rf(z),
                            "equation")};
    Hypersurface h2{"phi(x') - b - c*z^2*phi(y')",
                    as_poly(phixp - b - c * rf(z) * rf(z) * phiyp,
                            "equation")};
    Hypersurface h3{"phi(x'') - c*phi(y') - b*z'^2",
                    as_poly(phixpp - c * phiyp - b * rf(zp) * rf(zp),
                            "equation")};

    // x' = x * Cn(y) / phi(y), the inverse similarity over k(y)
    Matrix cn_y = cn_matrix_over(pfisterParams, ys);
    std::vector<RatFunc> ximg = row_times_matrix(as_ratfuncs(xs), cn_y);
    Substitution s1;
    for (int i = 0; i < m; ++i)
        s1.set(xps[static_cast<size_t>(i)],
               ximg[static_cast<size_t>(i)] / phiy);
    fix_equation_vars(s1, h0.equation);
    fix_symbols_of(s1, symbols);
    ChainStep st1 = verify_step(h0, h1, s1);

    // y' = y / phi(y)
    Substitution s2;
    for (int i = 0; i < m; ++i)
        s2.set(yps[static_cast<size_t>(i)], rf(ys[static_cast<size_t>(i)]) / phiy);
    fix_equation_vars(s2, h1.equation);
    fix_symbols_of(s2, symbols);
    ChainStep st2 = verify_step(h1, h2, s2);

    // x'' = x'/z, z' = 1/z
    Substitution s3;
    for (int i = 0; i < m; ++i)
        s3.set(xpps[static_cast<size_t>(i)],
               rf(xps[static_cast<size_t>(i)]) / rf(z));
    s3.set(zp, RatFunc(1) / rf(z));
    fix_equation_vars(s3, h2.equation);
    fix_symbols_of(s3, symbols);
    ChainStep st3 = verify_step(h2, h3, s3);

    return make_chain({std::move(st1), std::move(st2), std::move(st3)});
}

SubstChain build_scalar_chain(const std::vector<RatFunc>& pfisterParams,
                              const RatFunc& b,
                              const std::vector<Variable>& x0,
                              const std::string& name_prefix) {
    QForm phi = QForm::pfister(pfisterParams);
    int m = phi.dim();
    if (static_cast<int>(x0.size()) != m)
        throw MathError("x0 must have the form's dimension");
    as_poly(b, "b");

    std::vector<Variable> xs = fresh_vars(name_prefix + "x", m);
    Variable y = var(name_prefix + "y");
    std::vector<Variable> xps = fresh_vars(name_prefix + "xp", m);
    Variable yp = var(name_prefix + "yp");

    std::vector<RatFunc> symbols = pfisterParams;
    symbols.push_back(b);
    for (Variable v : x0) symbols.push_back(RatFunc::variable(v));
    std::vector<Variable> generated(xs);
    generated.insert(generated.end(), xps.begin(), xps.end());
    generated.push_back(y);
    generated.push_back(yp);
    require_fresh(generated, symbols);

    auto rf = [](Variable v) { return RatFunc::variable(v); };
    RatFunc phix = qform_eval(phi, as_ratfuncs(xs));
    RatFunc phix0 = qform_eval(phi, as_ratfuncs(x0));
    RatFunc phixp = qform_eval(phi, as_ratfuncs(xps));

    Hypersurface k0{
        "phi(x) - b*phi(x0)*y^2",
        as_poly(phix - b * phix0 * rf(y) * rf(y), "source equation")};
    Hypersurface k0s{"phi(x0)*(phi(x) - b*phi(x0)*y^2)",
                     as_poly(phix0 * (phix - b * phix0 * rf(y) * rf(y)),
                             "equation")};
    Hypersurface k1{"phi(x') - b*y'^2",
                    as_poly(phixp - b * rf(yp) * rf(yp), "equation")};

    // stage 1: scale the equation by phi(x0); coordinates unchanged
    Substitution s1;
    fix_equation_vars(s1, k0s.equation);
    fix_symbols_of(s1, symbols);
    ChainStep st1 = verify_step(k0, k0s, s1);

    // stage 2: x' = x * Cn(x0), y' = phi(x0) * y
    Matrix cn_x0 = cn_matrix_over(pfisterParams, x0);
    std::vector<RatFunc> ximg = row_times_matrix(as_ratfuncs(xs), cn_x0);
    Substitution s2;
    for (int i = 0; i < m; ++i)
        s2.set(xps[static_cast<size_t>(i)], ximg[static_cast<size_t>(i)]);
    s2.set(yp, phix0 * rf(y));
    fix_equation_vars(s2, k0s.equation);
    fix_symbols_of(s2, symbols);
    ChainStep st2 = verify_step(k0s, k1, s2);

    return make_chain({std::move(st1), std::move(st2)});
}

namespace {

// shared setup for the quadric theorem identities: C_n at x1 = 1 and the
// coordinates z = (0, y_2..y_{2^n}) * Cn|_{x1=1}
struct ThetaData {
    QForm phi;
    RatFunc an1;
    std::vector<RatFunc> one_x;  // (1, x2..x_{2^n})
    std::vector<RatFunc> zero_y;  // (0, y2..y_{2^n})
    std::vector<RatFunc> z;
    Matrix Ct;  // Cn with x1 = 1
    RatFunc phi1;
    RatFunc phip_z;  // phi'(z_2..)
};

ThetaData theta_setup(int n, std::vector<RatFunc> params,
                      const BuildCaps& caps) {
    if (n < 1) throw MathError("level must be >= 1");
    if (n > caps.n_cap)
        throw MathError("level above cap; raise PFORGE_CAP_N to allow it");
    if (params.empty())
        for (int i = 1; i <= n + 1; ++i)
            params.push_back(RatFunc::variable(var("a" + std::to_string(i))));
    if (static_cast<int>(params.size()) != n + 1)
        throw MathError("expected n+1 parameters");

    ThetaData d;
    std::vector<RatFunc> head(params.begin(), params.end() - 1);
    d.an1 = params.back();
    d.phi = QForm::pfister(head);
    int m = 1 << n;

    std::vector<Variable> xs, ys;
    for (int i = 1; i <= m; ++i) xs.push_back(var("x" + std::to_string(i)));
    for (int i = 2; i <= m; ++i) ys.push_back(var("y" + std::to_string(i)));

    Matrix cn = cn_matrix_over(head, xs);
    Substitution set_x1;
    set_x1.set(xs[0], RatFunc(1));
    for (size_t i = 1; i < xs.size(); ++i) set_x1.fix(xs[i]);
    std::set<Variable> pv;
    for (const auto& p : params) p.collect_vars(pv);
    for (Variable v : pv) set_x1.fix(v);
    d.Ct = substitute(cn, set_x1);

    d.one_x.push_back(RatFunc(1));
    for (size_t i = 1; i < xs.size(); ++i)
        d.one_x.push_back(RatFunc::variable(xs[i]));
    d.zero_y.push_back(RatFunc());
    for (Variable v : ys) d.zero_y.push_back(RatFunc::variable(v));

    d.z = row_times_matrix(d.zero_y, d.Ct);
    d.phi1 = qform_eval(d.phi, d.one_x);
    for (size_t i = 1; i < d.z.size(); ++i)
        d.phip_z += d.phi.diag()[i] * d.z[i] * d.z[i];
    return d;
}

}  // namespace

Report theta_reduce(int n, std::vector<RatFunc> params, const BuildCaps& caps) {
    ThetaData d = theta_setup(n, std::move(params), caps);
    Report r;
    r.kind = "theta-reduce n=" + std::to_string(n);
    int m = 1 << n;

    // psi = <1> perp <-a_{n+1}> perp phi' over the plane u, v
    std::vector<RatFunc> psi_diag;
    psi_diag.push_back(RatFunc(1));
    psi_diag.push_back(-d.an1);
    for (size_t i = 1; i < d.phi.diag().size(); ++i)
        psi_diag.push_back(d.phi.diag()[i]);
    QForm psi(psi_diag);

    std::vector<RatFunc> u, v;
    u.push_back(RatFunc(1));
    u.push_back(RatFunc());
    for (int i = 1; i < m; ++i) u.push_back(d.one_x[static_cast<size_t>(i)]);
    v.push_back(RatFunc());
    v.push_back(RatFunc(1));
    for (int i = 1; i < m; ++i) v.push_back(d.zero_y[static_cast<size_t>(i)]);

    RatFunc buv = bilinear(psi, u, v);
    RatFunc theta = qform_eval(psi, u) * qform_eval(psi, v) - buv * buv;
    RatFunc closed = -d.an1 * d.phi1 + d.phip_z;

    r.add("z_1 equals b(u,v)", d.z[0] == buv, print_canonical(d.z[0]));
    bool ok = theta == closed;
    r.add("theta = -a_{n+1}*phi(1,x..) + phi'(z..)", ok,
          ok ? "theta = " + print_canonical(theta)
             : "difference " + print_canonical(theta - closed));
    RatFunc detM = det_fraction_free(d.Ct.minor_matrix(0, 0));
    r.add("M invertible (det nonzero)", !detM.is_zero(),
          print_canonical(detM));
    return r;
}

Report norm_identity(int n, std::vector<RatFunc> params, const BuildCaps& caps) {
    std::vector<RatFunc> all = params;
    ThetaData d = theta_setup(n, std::move(params), caps);
    if (all.empty())
        for (int i = 1; i <= n + 1; ++i)
            all.push_back(RatFunc::variable(var("a" + std::to_string(i))));
    Report r;
    r.kind = "norm-identity n=" + std::to_string(n);
    int m = 1 << n;

    RatFunc mm = RatFunc::variable(var("m"));
    RatFunc w = RatFunc::variable(var("w"));

    RatFunc lhs = mm * mm - d.an1 * d.phi1 * w * w + d.phip_z * w * w;

    QForm phi_next = QForm::pfister(all);
    std::vector<RatFunc> vec;
    vec.push_back(mm);
    for (int i = 1; i < m; ++i) vec.push_back(w * d.z[static_cast<size_t>(i)]);
    vec.push_back(w);
    for (int i = 1; i < m; ++i)
        vec.push_back(w * d.one_x[static_cast<size_t>(i)]);
    RatFunc rhs = qform_eval(phi_next, vec);

    bool ok = lhs == rhs;
    r.add("m^2 - a_{n+1}*phi(1,x..)*w^2 + phi'(z..)*w^2 = phi_{n+1}(t..)", ok,
          ok ? "" : "difference " + print_canonical(lhs - rhs));
    return r;
}

// ------------------------------------------------------------- dispatcher

MoveList dispatch_pequiv_move(const std::vector<RatFunc>& presentation, int i,
                              int j, const CongruenceWitness& witness,
                              const DispatchOptions& opt) {
    int n = static_cast<int>(presentation.size());
    if (n < 2) throw MathError("presentation needs at least two parameters");
    if (i < 1 || j <= i || j > n) throw MathError("need 1 <= i < j <= n");

    const auto& sp = witness.source.pfister_params();
    const auto& tp = witness.target.pfister_params();
    if (!sp || !tp || sp->size() != 2 || tp->size() != 2)
        throw MathError("witness must connect two 2-fold Pfister forms");
    if (!((*sp)[0] == presentation[static_cast<size_t>(i - 1)] &&
          (*sp)[1] == presentation[static_cast<size_t>(j - 1)]))
        throw MathError("witness source parameters do not match (a_i, a_j)");
    verify_congruence(witness.C, witness.source, witness.target);
    RatFunc aip = (*tp)[0], ajp = (*tp)[1];

    MoveList out;
    out.initial = presentation;
    std::vector<RatFunc> cur = presentation;
    int pf = n - 1;  // slots of the Pfister part
    int move_no = 0;

    auto psi_of = [](const std::vector<RatFunc>& p) {
        return QForm::subform_psi(p);
    };
    auto with_last_slot = [&](const Matrix& w) {
        Matrix zc(w.rows(), 1), zr(1, w.cols()), one(1, 1);
        one.at(0, 0) = RatFunc(1);
        return Matrix::block2x2(w, zc, zr, one);
    };

    auto add_transpose = [&](int r, int s) {
        std::vector<RatFunc> next = cur;
        std::swap(next[static_cast<size_t>(r)], next[static_cast<size_t>(s)]);
        std::vector<int> sigma(static_cast<size_t>(pf));
        std::iota(sigma.begin(), sigma.end(), 0);
        std::swap(sigma[static_cast<size_t>(r)], sigma[static_cast<size_t>(s)]);
        Matrix full = with_last_slot(pfister_slot_permutation(pf, sigma));
        PfisterMove mv;
        mv.kind = MoveKind::IsometrySlotRewrite;
        mv.role = "transpose";
        mv.before = cur;
        mv.after = next;
        mv.witness = verify_congruence(full, psi_of(cur), psi_of(next));
        out.moves.push_back(std::move(mv));
        cur = std::move(next);
        ++move_no;
    };

    auto add_rewrite = [&](int r, int s) {
        std::vector<RatFunc> next = cur;
        next[static_cast<size_t>(r)] = aip;
        next[static_cast<size_t>(s)] = ajp;
        Matrix full = with_last_slot(extend_two_slot_witness(witness.C, pf, r, s));
        PfisterMove mv;
        mv.kind = MoveKind::IsometrySlotRewrite;
        mv.role = "rewrite";
        mv.before = cur;
        mv.after = next;
        mv.witness = verify_congruence(full, psi_of(cur), psi_of(next));
        out.moves.push_back(std::move(mv));
        cur = std::move(next);
        ++move_no;
    };

    auto add_interchange = [&]() {
        std::vector<RatFunc> next = cur;
        std::swap(next[static_cast<size_t>(n - 2)],
                  next[static_cast<size_t>(n - 1)]);
        PfisterMove mv;
        mv.kind = MoveKind::InterchangeLemma;
        mv.role = "interchange";
        mv.before = cur;
        mv.after = next;
        std::vector<RatFunc> inner(cur.begin(), cur.begin() + (n - 2));
        int dim = 1 << (n - 2);
        if (dim <= opt.chain_dim_cap || opt.allow_long) {
            mv.chain = build_interchange_chain(
                inner, cur[static_cast<size_t>(n - 2)],
                cur[static_cast<size_t>(n - 1)],
                "m" + std::to_string(move_no) + "_");
        } else {
            mv.deferred = true;
            mv.note = "deferred: verified at dim <= 4 template";
        }
        out.moves.push_back(std::move(mv));
        cur = std::move(next);
        ++move_no;
    };

    if (j < n) {
        add_rewrite(i - 1, j - 1);  // case (i)
    } else if (i < n - 1) {         // case (j)
        add_interchange();
        add_rewrite(i - 1, n - 2);
        add_interchange();
    } else {  // case (iii): i = n-1, j = n
        if (n < 3)
            throw MathError("case (iii) needs a presentation of length >= 3");
        add_transpose(n - 3, n - 2);
        add_interchange();
        add_rewrite(n - 3, n - 2);
        add_interchange();
        add_transpose(n - 3, n - 2);
    }
    out.final_presentation = cur;
    return out;
}

}  // namespace pforge
