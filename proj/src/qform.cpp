#include "pforge/qform.hpp"

#include "pforge/expr.hpp"

namespace pforge {

QForm::QForm(std::vector<RatFunc> diag,
             std::optional<std::vector<RatFunc>> pfister_params)
    : diag_(std::move(diag)), params_(std::move(pfister_params)) {
    if (diag_.empty()) throw MathError("empty quadratic form");
    for (const auto& d : diag_)
        if (d.is_zero()) throw MathError("zero diagonal entry in a form");
}

QForm QForm::pfister(std::vector<RatFunc> params) {
    for (const auto& a : params)
        if (a.is_zero()) throw MathError("zero Pfister parameter");
    size_t n = params.size();
    if (n > 30) throw MathError("Pfister form too large");
    std::vector<RatFunc> diag(size_t(1) << n);
    diag[0] = RatFunc(1);
    for (size_t j = 0; j < n; ++j) {
        size_t half = size_t(1) << j;
        for (size_t i = 0; i < half; ++i) diag[half + i] = -params[j] * diag[i];
    }
    return QForm(std::move(diag), std::move(params));
}

QForm QForm::subform_psi(const std::vector<RatFunc>& params) {
    if (params.empty()) throw MathError("subform needs at least one parameter");
    std::vector<RatFunc> head(params.begin(), params.end() - 1);
    QForm base = pfister(std::move(head));
    std::vector<RatFunc> diag = base.diag();
    diag.push_back(-params.back());
    return QForm(std::move(diag));
}

RatFunc qform_eval(const QForm& q, const std::vector<RatFunc>& v) {
    if (static_cast<int>(v.size()) != q.dim())
        throw MathError("evaluation vector length mismatch");
    RatFuncSum acc;
    for (size_t i = 0; i < v.size(); ++i)
        acc.add_product(q.diag()[i], v[i] * v[i]);
    return acc.value();
}

RatFunc bilinear(const QForm& q, const std::vector<RatFunc>& u,
                 const std::vector<RatFunc>& v) {
    if (static_cast<int>(u.size()) != q.dim() ||
        static_cast<int>(v.size()) != q.dim())
        throw MathError("bilinear vector length mismatch");
    RatFuncSum acc;
    for (size_t i = 0; i < u.size(); ++i)
        acc.add_product(q.diag()[i], u[i] * v[i]);
    return acc.value();
}

QForm perp(const QForm& a, const QForm& b) {
    std::vector<RatFunc> diag = a.diag();
    diag.insert(diag.end(), b.diag().begin(), b.diag().end());
    // keep Pfister structure across the doubling phi perp <-c>phi
    if (a.pfister_params() && a.dim() == b.dim()) {
        RatFunc c = -b.diag()[0];
        if (!c.is_zero()) {
            bool doubling = true;
            for (int i = 0; i < a.dim(); ++i)
                if (b.diag()[size_t(i)] != -c * a.diag()[size_t(i)]) {
                    doubling = false;
                    break;
                }
            if (doubling) {
                std::vector<RatFunc> params = *a.pfister_params();
                params.push_back(c);
                return QForm(std::move(diag), std::move(params));
            }
        }
    }
    return QForm(std::move(diag));
}

QForm scale(const RatFunc& c, const QForm& q) {
    if (c.is_zero()) throw MathError("scaling a form by zero");
    if (c.is_one()) return q;
    std::vector<RatFunc> diag;
    diag.reserve(q.diag().size());
    for (const auto& d : q.diag()) diag.push_back(c * d);
    return QForm(std::move(diag));
}

CongruenceWitness verify_congruence(const Matrix& C, const QForm& src,
                                    const QForm& dst) {
    if (src.dim() != dst.dim())
        throw MathError("source and target dimensions differ");
    if (C.rows() != src.dim() || C.cols() != src.dim())
        throw MathError("witness matrix dimension mismatch");
    Matrix lhs = C * src.gram() * C.transposed();
    Matrix rhs = dst.gram();
    for (int i = 0; i < lhs.rows(); ++i)
        for (int j = 0; j < lhs.cols(); ++j)
            if (lhs.at(i, j) != rhs.at(i, j))
                throw VerifyError(
                    "congruence fails at entry (" + std::to_string(i) + "," +
                        std::to_string(j) + ")",
                    print_canonical(lhs.at(i, j)) + " != " +
                        print_canonical(rhs.at(i, j)));
    return CongruenceWitness{C, src, dst};
}

Matrix pfister_slot_permutation(int nslots, const std::vector<int>& sigma) {
    if (static_cast<int>(sigma.size()) != nslots)
        throw MathError("permutation length mismatch");
    int n = 1 << nslots;
    Matrix P(n, n);
    for (int m = 0; m < n; ++m) {
        int img = 0;
        for (int k = 0; k < nslots; ++k)
            if (m >> k & 1) img |= 1 << sigma[static_cast<size_t>(k)];
        P.at(m, img) = RatFunc(1);
    }
    return P;
}

Matrix extend_two_slot_witness(const Matrix& T, int nslots, int r, int s) {
    if (T.rows() != 4 || T.cols() != 4)
        throw MathError("two-slot witness must be 4x4");
    if (r == s || r < 0 || s < 0 || r >= nslots || s >= nslots)
        throw MathError("invalid slot indices");
    int n = 1 << nslots;
    auto tbits = [&](int m) { return ((m >> r) & 1) | (((m >> s) & 1) << 1); };
    auto rest = [&](int m) { return m & ~((1 << r) | (1 << s)); };
    Matrix W(n, n);
    for (int m = 0; m < n; ++m)
        for (int mp = 0; mp < n; ++mp)
            if (rest(m) == rest(mp)) W.at(m, mp) = T.at(tbits(m), tbits(mp));
    return W;
}

}  // namespace pforge
