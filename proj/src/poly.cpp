#include "pforge/poly.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>

namespace pforge {

// gcd profiling counters, enabled with PFORGE_GCD_STATS=1
namespace {
struct GcdStats {
    std::atomic<long> calls{0}, heur_ok{0}, heur_fail{0}, fallback{0};
    std::atomic<long> us_heur{0}, us_prs{0};
    bool enabled = std::getenv("PFORGE_GCD_STATS") != nullptr;
    ~GcdStats() {
        if (enabled)
            std::fprintf(stderr,
                         "[gcd] calls=%ld heur_ok=%ld heur_fail=%ld "
                         "fallback=%ld heur_ms=%ld prs_ms=%ld\n",
                         calls.load(), heur_ok.load(), heur_fail.load(),
                         fallback.load(), us_heur.load() / 1000,
                         us_prs.load() / 1000);
    }
};
GcdStats g_gcd_stats;
long now_us() {
    return std::chrono::duration_cast<std::chrono::microseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}
}  // namespace

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(Variable v, uint32_t k) {
    Monomial m;
    if (k > 0) m.e_.emplace_back(v, k);
    return m;
}

uint32_t Monomial::degree() const {
    uint32_t d = 0;
    for (const auto& [v, k] : e_) d += k;
    return d;
}

uint32_t Monomial::exponent(Variable v) const {
    for (const auto& [w, k] : e_)
        if (w == v) return k;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.e_.reserve(e_.size() + o.e_.size());
    size_t i = 0, j = 0;
    while (i < e_.size() && j < o.e_.size()) {
        if (e_[i].first < o.e_[j].first) {
            r.e_.push_back(e_[i++]);
        } else if (o.e_[j].first < e_[i].first) {
            r.e_.push_back(o.e_[j++]);
        } else {
            r.e_.emplace_back(e_[i].first, e_[i].second + o.e_[j].second);
            ++i;
            ++j;
        }
    }
    for (; i < e_.size(); ++i) r.e_.push_back(e_[i]);
    for (; j < o.e_.size(); ++j) r.e_.push_back(o.e_[j]);
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    size_t j = 0;
    for (const auto& [v, k] : e_) {
        while (j < o.e_.size() && o.e_[j].first < v) ++j;
        if (j == o.e_.size() || !(o.e_[j].first == v) || o.e_[j].second < k)
            return false;
    }
    return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
    Monomial r;
    size_t j = 0;
    for (const auto& [v, k] : e_) {
        uint32_t sub = 0;
        while (j < o.e_.size() && o.e_[j].first < v) ++j;
        if (j < o.e_.size() && o.e_[j].first == v) sub = o.e_[j].second;
        if (sub > k) throw MathError("monomial division is not exact");
        if (k > sub) r.e_.emplace_back(v, k - sub);
    }
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    size_t i = 0, j = 0;
    while (i < a.e_.size() && j < b.e_.size()) {
        if (a.e_[i].first < b.e_[j].first) {
            ++i;
        } else if (b.e_[j].first < a.e_[i].first) {
            ++j;
        } else {
            r.e_.emplace_back(a.e_[i].first,
                              std::min(a.e_[i].second, b.e_[j].second));
            ++i;
            ++j;
        }
    }
    return r;
}

Monomial Monomial::pow(uint32_t k) const {
    Monomial r;
    if (k == 0) return r;
    r.e_ = e_;
    for (auto& [v, e] : r.e_) e *= k;
    return r;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
    uint32_t da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    size_t i = 0, j = 0;
    while (i < a.e_.size() && j < b.e_.size()) {
        if (a.e_[i].first < b.e_[j].first) return 1;   // a has the earlier var
        if (b.e_[j].first < a.e_[i].first) return -1;  // b has the earlier var
        if (a.e_[i].second != b.e_[j].second)
            return a.e_[i].second < b.e_[j].second ? -1 : 1;
        ++i;
        ++j;
    }
    if (i < a.e_.size()) return 1;
    if (j < b.e_.size()) return -1;
    return 0;
}

// -------------------------------------------------------------------- Poly

Poly::Poly(const Scalar& c) : p_(c.field_p()) {
    if (!c.is_zero()) t_.emplace(Monomial(), c);
    if (t_.empty()) p_ = 0;
}

Poly Poly::variable(Variable v) {
    Poly r;
    r.t_.emplace(Monomial::of(v), Scalar(1));
    return r;
}

Poly Poly::term(const Scalar& c, const Monomial& m) {
    Poly r;
    if (!c.is_zero()) {
        r.t_.emplace(m, c);
        r.p_ = c.field_p();
    }
    return r;
}

bool Poly::is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one());
}

bool Poly::is_one() const {
    return t_.size() == 1 && t_.begin()->first.is_one() &&
           t_.begin()->second.is_one();
}

const Monomial& Poly::leading_monomial() const {
    if (t_.empty()) throw MathError("zero polynomial has no leading term");
    return t_.begin()->first;
}

const Scalar& Poly::leading_coeff() const {
    if (t_.empty()) throw MathError("zero polynomial has no leading term");
    return t_.begin()->second;
}

Scalar Poly::constant_value() const {
    if (t_.empty()) return Scalar(0);
    if (!is_constant()) throw MathError("polynomial is not constant");
    return t_.begin()->second;
}

Scalar Poly::coeff(const Monomial& m) const {
    auto it = t_.find(m);
    if (it == t_.end()) {
        Scalar z(0);
        return p_ ? z.promoted(p_) : z;
    }
    return it->second;
}

uint32_t Poly::total_degree() const {
    uint32_t d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, m.degree());
    return d;
}

uint32_t Poly::degree_in(Variable v) const {
    uint32_t d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, m.exponent(v));
    return d;
}

void Poly::collect_vars(std::set<Variable>& out) const {
    for (const auto& [m, c] : t_)
        for (const auto& [v, k] : m.entries()) out.insert(v);
}

std::set<Variable> Poly::vars() const {
    std::set<Variable> s;
    collect_vars(s);
    return s;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
    } else {
        Scalar s = it->second + c;
        if (s.is_zero()) {
            t_.erase(it);
        } else {
            it->second = std::move(s);
        }
    }
}

void Poly::require_compatible(const Poly& a, const Poly& b) {
    if (!a.t_.empty() && !b.t_.empty() && a.p_ != b.p_)
        throw MathError(
            "polynomials over different coefficient fields; promote first");
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

Poly Poly::from_terms(TermMap terms) {
    Poly r;
    r.t_ = std::move(terms);
    for (auto it = r.t_.begin(); it != r.t_.end();) {
        if (it->second.is_zero()) {
            it = r.t_.erase(it);
        } else {
            r.p_ = it->second.field_p();
            ++it;
        }
    }
    return r;
}

Poly& Poly::operator+=(const Poly& b) {
    require_compatible(*this, b);
    if (t_.empty()) p_ = b.p_;
    for (const auto& [m, c] : b.t_) add_term(m, c);
    if (t_.empty()) p_ = 0;
    return *this;
}

Poly& Poly::operator-=(const Poly& b) {
    require_compatible(*this, b);
    if (t_.empty()) p_ = b.p_;
    for (const auto& [m, c] : b.t_) add_term(m, -c);
    if (t_.empty()) p_ = 0;
    return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r(a);
    r += b;
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r(a);
    r -= b;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly::require_compatible(a, b);
    if (a.t_.empty() || b.t_.empty()) return Poly();
    if (b.t_.size() == 1)
        return a.mul_monomial(b.t_.begin()->first)
            .mul_scalar(b.t_.begin()->second);
    if (a.t_.size() == 1)
        return b.mul_monomial(a.t_.begin()->first)
            .mul_scalar(a.t_.begin()->second);
    // accumulate all cross products, sort once, coalesce
    std::vector<std::pair<Monomial, Scalar>> prods;
    prods.reserve(a.t_.size() * b.t_.size());
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_)
            prods.emplace_back(ma * mb, ca * cb);
    std::sort(prods.begin(), prods.end(),
              [](const auto& x, const auto& y) {
                  return Monomial::cmp(x.first, y.first) > 0;
              });
    Poly::TermMap out;
    auto hint = out.begin();
    size_t i = 0;
    while (i < prods.size()) {
        Monomial m = std::move(prods[i].first);
        Scalar c = std::move(prods[i].second);
        size_t j = i + 1;
        while (j < prods.size() && Monomial::cmp(prods[j].first, m) == 0) {
            c += prods[j].second;
            ++j;
        }
        if (!c.is_zero())
            hint = out.emplace_hint(out.end(), std::move(m), std::move(c));
        i = j;
    }
    return Poly::from_terms(std::move(out));
}

Poly Poly::mul_scalar(const Scalar& c) const {
    if (c.is_zero()) return Poly();
    Poly r;
    r.p_ = p_;
    if (t_.empty()) return r;
    Scalar cc = (p_ != 0 && c.is_rational()) ? c.promoted(p_) : c;
    if (cc.field_p() != p_)
        throw MathError("scalar field mismatch in mul_scalar");
    for (const auto& [m, k] : t_) r.t_.emplace_hint(r.t_.end(), m, k * cc);
    return r;
}

Poly Poly::mul_monomial(const Monomial& m) const {
    // grlex order is preserved under multiplication by a fixed monomial
    Poly r;
    r.p_ = p_;
    for (const auto& [mm, c] : t_) r.t_.emplace_hint(r.t_.end(), mm * m, c);
    return r;
}

Poly Poly::div_monomial(const Monomial& m) const {
    Poly r;
    r.p_ = p_;
    for (const auto& [mm, c] : t_)
        r.t_.emplace_hint(r.t_.end(), mm.divided_by(m), c);
    return r;
}

Poly Poly::pow(uint32_t k) const {
    Poly acc(1);
    if (p_ != 0) acc = acc.promoted(p_);
    Poly base(*this);
    while (k > 0) {
        if (k & 1u) acc = acc * base;
        base = base * base;
        k >>= 1u;
    }
    return acc;
}

Poly Poly::promoted(int p) const {
    if (p == p_ || t_.empty()) return *this;
    Poly r;
    r.p_ = p;
    for (const auto& [m, c] : t_)
        r.t_.emplace_hint(r.t_.end(), m, c.promoted(p));
    return r;
}

Poly Poly::monic() const {
    if (t_.empty()) return *this;
    const Scalar& lc = leading_coeff();
    if (lc.is_one()) return *this;
    Poly r;
    r.p_ = p_;
    for (const auto& [m, c] : t_) r.t_.emplace_hint(r.t_.end(), m, c / lc);
    return r;
}

std::optional<Poly> Poly::divided_exactly(const Poly& g) const {
    if (g.is_zero()) throw MathError("division by zero polynomial");
    Poly q;
    q.p_ = p_ ? p_ : g.p_;
    Poly r(*this);
    const Monomial& gm = g.leading_monomial();
    const Scalar& gc = g.leading_coeff();
    while (!r.is_zero()) {
        const Monomial& rm = r.leading_monomial();
        if (!gm.divides(rm)) return std::nullopt;
        Poly t = Poly::term(r.leading_coeff() / gc, rm.divided_by(gm));
        q += t;
        r -= t * g;
    }
    return q;
}

Poly Poly::exact_div(const Poly& g) const {
    auto q = divided_exactly(g);
    if (!q) throw MathError("polynomial division expected to be exact");
    return *q;
}

std::map<uint32_t, Poly> Poly::univariate_in(Variable v) const {
    std::map<uint32_t, Poly> u;
    for (const auto& [m, c] : t_) {
        uint32_t k = m.exponent(v);
        Monomial rest;
        for (const auto& [w, e] : m.entries())
            if (w != v) rest = rest * Monomial::of(w, e);
        u[k] += Poly::term(c, rest);
    }
    return u;
}

Poly Poly::from_univariate(Variable v, const std::map<uint32_t, Poly>& u) {
    Poly r;
    for (const auto& [k, c] : u) r += c.mul_monomial(Monomial::of(v, k));
    return r;
}

Poly Poly::coeff_of(Variable v, uint32_t k) const {
    Poly r;
    for (const auto& [m, c] : t_) {
        if (m.exponent(v) != k) continue;
        Monomial rest;
        for (const auto& [w, e] : m.entries())
            if (w != v) rest = rest * Monomial::of(w, e);
        r += Poly::term(c, rest);
    }
    return r;
}

// --------------------------------------------------------------------- gcd

Poly pseudo_rem(const Poly& a, const Poly& b, Variable v) {
    uint32_t db = b.degree_in(v);
    if (b.is_zero()) throw MathError("pseudo-remainder by zero");
    uint32_t da = a.degree_in(v);
    if (da < db) return a;
    Poly lb = b.coeff_of(v, db);
    Poly r = a;
    long e = static_cast<long>(da) - static_cast<long>(db) + 1;
    while (!r.is_zero()) {
        uint32_t dr = r.degree_in(v);
        if (dr < db) break;
        Poly s = r.coeff_of(v, dr);
        r = lb * r - (s * b).mul_monomial(Monomial::of(v, dr - db));
        --e;
    }
    for (; e > 0; --e) r = r * lb;
    return r;
}

namespace {

Monomial monomial_content(const Poly& f) {
    Monomial m;
    bool first = true;
    for (const auto& [mm, c] : f.terms()) {
        if (first) {
            m = mm;
            first = false;
        } else {
            m = Monomial::gcd(m, mm);
        }
        if (m.is_one()) break;
    }
    return m;
}

// Scale making every rational coordinate an integer and their collective
// gcd 1; keeps the coefficient numbers small through the PRS.
Scalar integer_normalizer(const Poly& f) {
    mpz_class g(0), l(1);
    auto feed = [&](const mpq_class& q) {
        if (q == 0) return;
        g = gcd(g, q.get_num());
        l = lcm(l, q.get_den());
    };
    for (const auto& [m, c] : f.terms()) {
        if (c.is_rational()) {
            feed(c.rat());
        } else {
            for (const auto& q : c.coords()) feed(q);
        }
    }
    if (g == 0) return Scalar(1);
    return Scalar(mpq_class(l, g));
}

// ---- heuristic gcd (integer evaluation + digit reconstruction) ----------
// Sound: a candidate is accepted only after exact trial division by both
// inputs; on failure the subresultant PRS below takes over.

mpz_class poly_height(const Poly& f) {
    mpz_class h(0);
    auto feed = [&](const mpq_class& q) {
        mpz_class a = abs(q.get_num());
        if (a > h) h = a;
    };
    for (const auto& [m, c] : f.terms()) {
        if (c.is_rational()) {
            feed(c.rat());
        } else {
            for (const auto& q : c.coords()) feed(q);
        }
    }
    return h;
}

Poly eval_var_at(const Poly& f, Variable v, const mpz_class& xi) {
    std::map<uint32_t, mpz_class> powers;
    std::vector<std::pair<Monomial, Scalar>> terms;
    terms.reserve(f.terms().size());
    for (const auto& [m, c] : f.terms()) {
        uint32_t e = m.exponent(v);
        Monomial rest;
        for (const auto& [w, k] : m.entries())
            if (w != v) rest = rest * Monomial::of(w, k);
        auto it = powers.find(e);
        if (it == powers.end()) {
            mpz_class p;
            mpz_pow_ui(p.get_mpz_t(), xi.get_mpz_t(), e);
            it = powers.emplace(e, std::move(p)).first;
        }
        terms.emplace_back(std::move(rest), c * Scalar(mpq_class(it->second)));
    }
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
        return Monomial::cmp(x.first, y.first) > 0;
    });
    Poly::TermMap out;
    size_t i = 0;
    while (i < terms.size()) {
        Monomial m = std::move(terms[i].first);
        Scalar c = std::move(terms[i].second);
        size_t j = i + 1;
        while (j < terms.size() && Monomial::cmp(terms[j].first, m) == 0) {
            c += terms[j].second;
            ++j;
        }
        if (!c.is_zero()) out.emplace_hint(out.end(), std::move(m), std::move(c));
        i = j;
    }
    return Poly::from_terms(std::move(out));
}

// symmetric remainder of every (integer) coefficient modulo xi
Poly smod_coeffs(const Poly& f, const mpz_class& xi) {
    Poly::TermMap out;
    mpz_class half = xi / 2;
    for (const auto& [m, c] : f.terms()) {
        mpz_class r;
        mpz_mod(r.get_mpz_t(), c.rat().get_num().get_mpz_t(), xi.get_mpz_t());
        if (r > half) r -= xi;
        if (r != 0) out.emplace_hint(out.end(), m, Scalar(r));
    }
    return Poly::from_terms(std::move(out));
}

std::optional<Poly> heugcd(const Poly& f, const Poly& g, int depth) {
    static const bool trace = std::getenv("PFORGE_GCD_TRACE") != nullptr;
    if (depth > 40) return std::nullopt;
    std::set<Variable> vars = f.vars();
    g.collect_vars(vars);
    if (vars.empty()) {
        mpz_class a = f.constant_value().rat().get_num();
        mpz_class b = g.constant_value().rat().get_num();
        mpz_class d = gcd(a, b);
        return Poly(Scalar(d));
    }
    Variable v = *vars.begin();
    uint32_t dv = std::min(f.degree_in(v), g.degree_in(v));
    if (trace)
        std::fprintf(stderr, "%*sheugcd d=%d |f|=%zu |g|=%zu v=%s dv=%u\n",
                     depth, "", depth, f.term_count(), g.term_count(),
                     v.name().c_str(), dv);

    mpz_class hf = poly_height(f), hg = poly_height(g);
    mpz_class xi = 2 * (hf < hg ? hf : hg) + 29;
    for (int tries = 0; tries < 6; ++tries) {
        Poly F = eval_var_at(f, v, xi);
        Poly G = eval_var_at(g, v, xi);
        if (!F.is_zero() && !G.is_zero()) {
            auto sub = heugcd(F, G, depth + 1);
            if (sub) {
                // xi-adic digit reconstruction in v
                Poly h;
                Poly rem = *sub;
                uint32_t i = 0;
                bool ok = true;
                while (!rem.is_zero()) {
                    if (i > dv) {
                        ok = false;
                        break;
                    }
                    Poly digit = smod_coeffs(rem, xi);
                    h += digit.mul_monomial(Monomial::of(v, i));
                    rem = (rem - digit).mul_scalar(
                        Scalar(mpq_class(mpz_class(1), xi)));
                    // the division must stay integral
                    for (const auto& [m, c] : rem.terms())
                        if (c.rat().get_den() != 1) {
                            ok = false;
                            break;
                        }
                    if (!ok) break;
                    ++i;
                }
                if (ok && !h.is_zero()) {
                    // integer content must ride along: deeper levels encode
                    // the gcd's evaluated image in it, and the parent level
                    // reconstructs from these digits
                    if (h.is_constant()) {
                        if (trace)
                            std::fprintf(stderr, "%*s-> constant digit\n",
                                         depth, "");
                        return h;
                    }
                    if (f.divided_exactly(h) && g.divided_exactly(h)) {
                        if (trace)
                            std::fprintf(stderr, "%*s-> divisor |h|=%zu\n",
                                         depth, "", h.term_count());
                        return h;
                    }
                    if (trace)
                        std::fprintf(stderr, "%*s-> division check failed\n",
                                     depth, "");
                }
            }
        }
        xi = 73794 * xi * xi / 27011;
    }
    if (trace) std::fprintf(stderr, "%*s-> heuristic failed\n", depth, "");
    return std::nullopt;
}

// gcd of the coefficients of the univariate view (the content in v)
Poly content_in(const std::map<uint32_t, Poly>& u) {
    Poly c;
    for (const auto& [k, coeff] : u) {
        c = poly_gcd(c, coeff);
        if (c.is_one()) break;
    }
    return c;
}

Poly primitive_part_in(const Poly& f, Variable v) {
    auto u = f.univariate_in(v);
    Poly c = content_in(u);
    if (c.is_one()) return f;
    return f.exact_div(c);
}

}  // namespace

Poly poly_gcd(const Poly& f, const Poly& g) {
    if (f.is_zero()) return g.is_zero() ? Poly() : g.monic();
    if (g.is_zero()) return f.monic();
    if (f.is_constant() || g.is_constant()) {
        Poly one(1);
        int p = f.field_p() ? f.field_p() : g.field_p();
        return p ? one.promoted(p) : one;
    }

    Monomial m = Monomial::gcd(monomial_content(f), monomial_content(g));
    Poly F = f.div_monomial(monomial_content(f));
    Poly G = g.div_monomial(monomial_content(g));

    if (F.is_constant() || G.is_constant()) return Poly::term(Scalar(1), m);

    std::set<Variable> vf = F.vars(), vg = G.vars(), common;
    std::set_intersection(vf.begin(), vf.end(), vg.begin(), vg.end(),
                          std::inserter(common, common.begin()));
    Poly monomial_part = Poly::term(Scalar(1), m);
    if (common.empty()) return monomial_part;

    // fast path: one stripped operand exactly divides the other
    if (auto q = F.divided_exactly(G); q) return (monomial_part * G).monic();
    if (auto q = G.divided_exactly(F); q) return (monomial_part * F).monic();

    F = F.mul_scalar(integer_normalizer(F));
    G = G.mul_scalar(integer_normalizer(G));

    if (F.field_p() == 0) {
        g_gcd_stats.calls++;
        long t0 = g_gcd_stats.enabled ? now_us() : 0;
        auto h = heugcd(F, G, 0);
        if (g_gcd_stats.enabled) g_gcd_stats.us_heur += now_us() - t0;
        if (h) {
            g_gcd_stats.heur_ok++;
            if (h->is_constant()) return monomial_part.monic();
            // h is a verified common divisor but possibly not all of the
            // gcd: gcd(f,g) = h * gcd(f/h, g/h)
            Poly rest = poly_gcd(F.exact_div(*h), G.exact_div(*h));
            return (monomial_part * *h * rest).monic();
        }
        g_gcd_stats.heur_fail++;
    }
    long t_prs = g_gcd_stats.enabled ? now_us() : 0;
    struct PrsTimer {
        long t0;
        ~PrsTimer() {
            if (g_gcd_stats.enabled) g_gcd_stats.us_prs += now_us() - t0;
        }
    } prs_timer{t_prs};
    g_gcd_stats.fallback++;

    // main variable: smallest maximal degree, ties to earliest registration
    Variable v = *common.begin();
    uint32_t best = UINT32_MAX;
    for (Variable w : common) {
        uint32_t d = std::max(F.degree_in(w), G.degree_in(w));
        if (d < best) {
            best = d;
            v = w;
        }
    }

    auto uf = F.univariate_in(v);
    auto ug = G.univariate_in(v);
    Poly cf = content_in(uf), cg = content_in(ug);
    Poly ppf = cf.is_one() ? F : F.exact_div(cf);
    Poly ppg = cg.is_one() ? G : G.exact_div(cg);
    Poly c = poly_gcd(cf, cg);

    // subresultant PRS on the primitive parts: the divisions by g*h^delta
    // are exact and avoid per-step content extraction
    Poly a = ppf, b = ppg;
    if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
    Poly one(1);
    if (int p = a.field_p(); p != 0) one = one.promoted(p);
    Poly gg = one, hh = one;
    Poly h;
    while (true) {
        uint32_t da = a.degree_in(v), db = b.degree_in(v);
        uint32_t delta = da - db;
        Poly r = pseudo_rem(a, b, v);
        if (r.is_zero()) {
            h = primitive_part_in(b, v);
            break;
        }
        if (r.degree_in(v) == 0) {
            // a nonzero v-free remainder: the primitive parts are coprime
            h = one;
            break;
        }
        a = b;
        Poly divisor = gg * hh.pow(delta);
        b = r.exact_div(divisor);
        gg = a.coeff_of(v, a.degree_in(v));
        if (delta == 1) {
            hh = gg;
        } else if (delta > 1) {
            hh = gg.pow(delta).exact_div(hh.pow(delta - 1));
        }
    }
    return (monomial_part * c * h).monic();
}

Poly poly_lcm(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return Poly();
    return (f * g).exact_div(poly_gcd(f, g)).monic();
}

}  // namespace pforge
