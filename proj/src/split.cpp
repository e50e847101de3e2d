#include "pforge/split.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "pforge/expr.hpp"

namespace pforge {

namespace {

uint64_t ipow(uint64_t b, int e) {
    uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

uint64_t factorial(int n) {
    uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<uint64_t>(i);
    return r;
}

uint64_t binomial(int n, int k) {
    uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<uint64_t>(n - k + i) / static_cast<uint64_t>(i);
    return r;
}

void check_census_scale(int p) {
    if (!is_prime(p)) throw MathError("p must be prime");
    if (p > 7) throw MathError("census capped at p = 7");
}

}  // namespace

CensusReport sympower_census(int p) {
    check_census_scale(p);
    CensusReport rep;
    rep.p = p;
    Report& r = rep.checks;
    r.kind = "census p=" + std::to_string(p);

    // all tuples in {1..p}^p by odometer
    std::vector<int> t(static_cast<size_t>(p), 0);
    uint64_t tuples = 0, diag = 0, off = 0;
    bool done = false;
    while (!done) {
        ++tuples;
        std::vector<bool> seen(static_cast<size_t>(p), false);
        bool repeat = false;
        for (int v : t) {
            if (seen[static_cast<size_t>(v)]) {
                repeat = true;
                break;
            }
            seen[static_cast<size_t>(v)] = true;
        }
        (repeat ? diag : off) += 1;
        int k = p - 1;
        while (k >= 0 && t[static_cast<size_t>(k)] == p - 1) {
            t[static_cast<size_t>(k)] = 0;
            --k;
        }
        if (k < 0) {
            done = true;
        } else {
            ++t[static_cast<size_t>(k)];
        }
    }
    rep.tuples = tuples;
    rep.diagonal = diag;
    rep.off_diagonal = off;

    // multisets of size p over p labels: non-decreasing tuples
    uint64_t multisets = 0, distinct_classes = 0;
    std::vector<int> m(static_cast<size_t>(p), 0);
    std::vector<int> the_distinct_class;
    done = false;
    while (!done) {
        ++multisets;
        bool all_distinct = true;
        for (int i = 1; i < p; ++i)
            if (m[static_cast<size_t>(i)] == m[static_cast<size_t>(i - 1)])
                all_distinct = false;
        if (all_distinct) {
            ++distinct_classes;
            the_distinct_class = m;
        }
        int k = p - 1;
        while (k >= 0 && m[static_cast<size_t>(k)] == p - 1) --k;
        if (k < 0) {
            done = true;
        } else {
            int v = m[static_cast<size_t>(k)] + 1;
            for (int i = k; i < p; ++i) m[static_cast<size_t>(i)] = v;
        }
    }
    rep.multisets = multisets;
    rep.distinct_classes = distinct_classes;

    // fiber of p: X x S^{p-1}(X) -> S^p(X), (n, y) -> n + y, over the
    // distinct class
    uint64_t fiber = 0;
    bool fibers_are_complements = true;
    std::vector<int> y(static_cast<size_t>(p - 1), 0);
    for (int n = 0; n < p; ++n) {
        std::fill(y.begin(), y.end(), 0);
        bool ydone = false;
        while (!ydone) {
            std::vector<int> sum(y);
            sum.push_back(n);
            std::sort(sum.begin(), sum.end());
            bool all_distinct = true;
            for (int i = 1; i < p; ++i)
                if (sum[static_cast<size_t>(i)] == sum[static_cast<size_t>(i - 1)])
                    all_distinct = false;
            if (all_distinct) {
                ++fiber;
                // the S^{p-1} part must be exactly the complement of n
                std::vector<int> expect;
                for (int v = 0; v < p; ++v)
                    if (v != n) expect.push_back(v);
                std::vector<int> got(y);
                std::sort(got.begin(), got.end());
                if (got != expect) fibers_are_complements = false;
            }
            int k = p - 2;
            while (k >= 0 && y[static_cast<size_t>(k)] == p - 1) --k;
            if (k < 0) {
                ydone = true;
            } else {
                int v = y[static_cast<size_t>(k)] + 1;
                for (int i = k; i < p - 1; ++i) y[static_cast<size_t>(i)] = v;
            }
        }
    }
    rep.fiber_over_u = fiber;

    // the S_p-orbit of (1,2,...,p) is exactly the off-diagonal part
    std::vector<int> perm(static_cast<size_t>(p));
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t orbit = 0;
    do {
        ++orbit;
    } while (std::next_permutation(perm.begin(), perm.end()));

    r.add("|X^p| = p^p", tuples == ipow(static_cast<uint64_t>(p), p),
          std::to_string(tuples));
    r.add("|X^p \\ diag| = p!", off == factorial(p), std::to_string(off));
    r.add("|S^p(X)| = C(2p-1, p)", multisets == binomial(2 * p - 1, p),
          std::to_string(multisets));
    r.add("|U| = 1 and U = {1..p}",
          distinct_classes == 1 && the_distinct_class.size() == static_cast<size_t>(p),
          std::to_string(distinct_classes));
    r.add("|p^{-1}(U)| = p, each fiber point (n, complement)",
          fiber == static_cast<uint64_t>(p) && fibers_are_complements,
          std::to_string(fiber));
    r.add("off-diagonal is one free S_p-orbit", orbit == off,
          std::to_string(orbit));
    return rep;
}

// --------------------------------------------------- cyclic function field

CyclicFunctionField::CyclicFunctionField(int p, const std::string& prefix)
    : p_(p) {
    if (!is_prime(p)) throw MathError("p must be prime");
    bvar_ = var(prefix + "b");
    for (int i = 0; i + 1 < p; ++i)
        gens_.push_back(var(prefix + "x" + std::to_string(i)));
}

RatFunc CyclicFunctionField::x(int i) const {
    i = ((i % p_) + p_) % p_;
    if (i + 1 < p_) return RatFunc::variable(gens_[static_cast<size_t>(i)]);
    RatFunc prod(1);
    for (int k = 0; k + 1 < p_; ++k)
        prod *= RatFunc::variable(gens_[static_cast<size_t>(k)]);
    return b() / prod;
}

Substitution CyclicFunctionField::sigma() const {
    Substitution s;
    for (int i = 0; i + 1 < p_; ++i)
        s.set(gens_[static_cast<size_t>(i)], x(i + 1));
    s.fix(bvar_);
    return s;
}

RatFunc CyclicFunctionField::apply_sigma(const RatFunc& f, int times) const {
    Substitution s = sigma();
    RatFunc out = f;
    for (int k = 0; k < times; ++k) out = substitute(out, s);
    return out;
}

Report CyclicFunctionField::relation_checks() const {
    Report r;
    r.kind = "cyclic-field p=" + std::to_string(p_);
    RatFunc prod(1);
    for (int i = 0; i < p_; ++i) prod *= x(i);
    r.add("x_0 * ... * x_{p-1} = b", prod == b(), print_canonical(prod));
    bool order_ok = true;
    bool faithful = true;
    for (int i = 0; i < p_; ++i) {
        if (apply_sigma(x(i), p_) != x(i)) order_ok = false;
        if (apply_sigma(x(i)) == x(i)) faithful = false;
    }
    r.add("sigma^p = identity on generators", order_ok);
    r.add("sigma has no fixed generator", faithful);
    return r;
}

Report sb_split_map(int p) {
    if (!is_prime(p)) throw MathError("p must be prime");
    if (p > 7) throw MathError("split map capped at p = 7");
    CyclicFunctionField F(p);
    Report r;
    r.kind = "sb-split-map p=" + std::to_string(p);
    r.merge(F.relation_checks());

    // f(t_i/t_0) = x sigma(x) ... sigma^{i-1}(x) = x_0 x_1 ... x_{i-1},
    // with t_p/t_0 = b closing the cycle
    auto fimg = [&](int i) {
        if (i == p) return F.b();
        RatFunc prod(1);
        for (int k = 0; k < i; ++k) prod *= F.x(k);
        return prod;
    };

    // (a) equivariance through sigma.(t_i/t_0) = (t_{i+1}/t_0)/(t_1/t_0)
    bool equiv = true;
    for (int i = 0; i < p; ++i)
        if (fimg(i + 1) / fimg(1) != F.apply_sigma(fimg(i))) equiv = false;
    r.add("f(sigma.(t_i/t_0)) = sigma.f(t_i/t_0) for all i", equiv);
    r.add("i = 0: f(t_0/t_0) = 1", fimg(0) == RatFunc(1));

    // (b) inverse sigma^i(x) -> t_{i+1}/t_i, both directions
    std::vector<RatFunc> tau;  // tau_0 = 1, tau_1..tau_{p-1} variables, tau_p = b
    tau.push_back(RatFunc(1));
    for (int i = 1; i < p; ++i)
        tau.push_back(RatFunc::variable(var("tau" + std::to_string(i))));
    tau.push_back(F.b());
    auto ginv = [&](int i) { return tau[static_cast<size_t>(i + 1)] / tau[static_cast<size_t>(i)]; };

    bool inv_on_x = true;
    for (int i = 0; i < p; ++i) {
        // x_i -> tau_{i+1}/tau_i -> fimg(i+1)/fimg(i)
        RatFunc back = fimg(i + 1) / fimg(i);
        if (back != F.x(i)) inv_on_x = false;
    }
    r.add("f o f^{-1} = id on sigma^i(x)", inv_on_x);

    bool inv_on_t = true;
    for (int i = 0; i <= p; ++i) {
        // t_i/t_0 -> x_0..x_{i-1} -> telescoping product of tau ratios
        RatFunc back(1);
        for (int k = 0; k < i; ++k) back *= ginv(k);
        if (back != tau[static_cast<size_t>(i)]) inv_on_t = false;
    }
    r.add("f^{-1} o f = id on t_i/t_0", inv_on_t);

    // (c) projective equivariance: the shift-with-b matrix against the
    // sigma-translated point, common scalar x_0
    std::vector<RatFunc> v;  // (x : x sigma(x) : ... : b)
    for (int i = 0; i < p; ++i) v.push_back(fimg(i + 1));
    std::vector<RatFunc> shifted;  // S*v = (v_1, ..., v_{p-1}, b v_0)
    for (int i = 1; i < p; ++i) shifted.push_back(v[static_cast<size_t>(i)]);
    shifted.push_back(F.b() * v[0]);
    std::vector<RatFunc> translated;  // sigma applied coordinatewise
    for (int i = 0; i < p; ++i)
        translated.push_back(F.apply_sigma(v[static_cast<size_t>(i)]));

    bool ratios = true;
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            if (shifted[static_cast<size_t>(i)] * translated[static_cast<size_t>(j)] !=
                shifted[static_cast<size_t>(j)] * translated[static_cast<size_t>(i)])
                ratios = false;
    r.add("projective point identity (all cross-ratios)", ratios);

    bool scalar_ok = true;
    for (int i = 0; i < p; ++i)
        if (shifted[static_cast<size_t>(i)] != F.x(0) * translated[static_cast<size_t>(i)])
            scalar_ok = false;
    r.add("common scalar is x itself", scalar_ok);
    return r;
}

Report galois_norm_invariance(int p) {
    if (!is_prime(p)) throw MathError("p must be prime");
    if (p > 7) throw MathError("capped at p = 7");
    CyclicFunctionField F(p);
    Report r;
    r.kind = "galois-norm p=" + std::to_string(p);
    RatFunc u;
    for (int i = 0; i < p; ++i)
        u += RatFunc::variable(var("lam" + std::to_string(i))) * F.x(i);
    RatFunc norm(1);
    RatFunc pow = u;
    for (int i = 0; i < p; ++i) {
        norm *= pow;
        if (i + 1 < p) pow = F.apply_sigma(pow);
    }
    // sigma permutes the factors cyclically, so the product is fixed; the
    // lambda coefficients are sigma-invariant symbols
    Substitution s = F.sigma();
    for (int i = 0; i < p; ++i) s.fix(var("lam" + std::to_string(i)));
    bool ok = substitute(norm, s) == norm;
    r.add("prod sigma^i(u) is sigma-invariant", ok);
    return r;
}

// --------------------------------------------------------- diagonal model

RatFunc diagonal_nrd(const std::vector<RatFunc>& d) {
    RatFunc prod(1);
    if (!d.empty() && d[0].field_p() != 0) prod = prod.promoted(d[0].field_p());
    for (const auto& e : d) prod *= e;
    RatFunc det = det_fraction_free(Matrix::diagonal(d));
    if (det != prod)
        throw VerifyError("diagonal norm disagrees with the determinant",
                          print_canonical(det));
    return prod;
}

bool distinct_eigenvalues(const std::vector<RatFunc>& d) {
    for (size_t i = 0; i < d.size(); ++i)
        for (size_t j = i + 1; j < d.size(); ++j)
            if (d[i] == d[j]) return false;
    return true;
}

Report nrd_report(int p, uint64_t seed, int trials) {
    if (!is_prime(p) || p < 3) throw MathError("p must be an odd prime");
    Report r;
    r.kind = "nrd p=" + std::to_string(p);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);

    auto random_scalar = [&]() {
        std::vector<mpq_class> coords;
        for (int k = 0; k + 1 < p; ++k)
            coords.emplace_back(num(rng), den(rng));
        Scalar s = Scalar::cyclotomic(p, std::move(coords));
        if (s.is_zero()) s = Scalar(1).promoted(p);
        return s;
    };
    auto random_element = [&]() {
        std::vector<RatFunc> d;
        for (int i = 0; i < p; ++i) d.emplace_back(random_scalar());
        return d;
    };

    bool det_ok = true, mult_ok = true;
    for (int t = 0; t < trials; ++t) {
        auto d = random_element();
        auto e = random_element();
        RatFunc nd, ne;
        try {
            nd = diagonal_nrd(d);
            ne = diagonal_nrd(e);
        } catch (const VerifyError&) {
            det_ok = false;
            break;
        }
        std::vector<RatFunc> de;
        for (int i = 0; i < p; ++i)
            de.push_back(d[static_cast<size_t>(i)] * e[static_cast<size_t>(i)]);
        if (diagonal_nrd(de) != nd * ne) mult_ok = false;
    }
    r.add("Nrd = prod = det over " + std::to_string(trials) + " trials", det_ok);
    r.add("Nrd is multiplicative on entrywise products", mult_ok);

    // distinct-eigenvalue witness with Nrd exactly c:
    // (c zeta^{-s}, zeta, ..., zeta^{p-1}), s = p(p-1)/2 mod p
    RatFunc c = RatFunc::variable(var("c")).promoted(p);
    Scalar zeta = Scalar::zeta(p);
    long s_exp = (static_cast<long>(p) * (p - 1) / 2) % p;
    std::vector<RatFunc> witness;
    witness.push_back(c * RatFunc(zeta.pow(-s_exp)));
    for (int k = 1; k < p; ++k) witness.push_back(RatFunc(zeta.pow(k)));
    RatFunc wn = diagonal_nrd(witness);
    r.add("witness Nrd = c", wn == c, print_canonical(wn));
    r.add("witness has pairwise-distinct entries", distinct_eigenvalues(witness));

    // the (c/zeta^{(p-1)/2}, zeta, ..., zeta^{p-1}) element: report its
    // actual norm, c * zeta^{(p-1)^2/2}
    std::vector<RatFunc> verbatim;
    verbatim.push_back(c / RatFunc(zeta.pow((p - 1) / 2)));
    for (int k = 1; k < p; ++k) verbatim.push_back(RatFunc(zeta.pow(k)));
    RatFunc vn = diagonal_nrd(verbatim);
    long expo = ((static_cast<long>(p) - 1) * (p - 1) / 2) % p;
    r.add("reported norm of the <c/zeta^{(p-1)/2}, ...> element equals c*zeta^" +
              std::to_string(expo),
          vn == c * RatFunc(zeta.pow(expo)), print_canonical(vn));
    r.add("that norm differs from c (the quotient is zeta^" +
              std::to_string(expo) + ")",
          expo != 0 && vn != c);
    return r;
}

}  // namespace pforge
