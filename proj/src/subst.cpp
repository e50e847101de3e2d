#include "pforge/subst.hpp"

namespace pforge {

Substitution& Substitution::set(Variable v, RatFunc image) {
    fixed_.erase(v);
    map_[v] = std::move(image);
    return *this;
}

Substitution& Substitution::fix(Variable v) {
    if (!maps(v)) fixed_.insert(v);
    return *this;
}

RatFunc Substitution::image(Variable v) const {
    auto it = map_.find(v);
    if (it != map_.end()) return it->second;
    if (fixes(v)) return RatFunc::variable(v);
    throw MathError("substitution does not cover variable " + v.name());
}

RatFunc substitute(const Poly& f, const Substitution& s) {
    int p = f.field_p();
    RatFunc acc;
    if (p != 0) acc = acc.promoted(p);
    for (const auto& [m, c] : f.terms()) {
        RatFunc term{Scalar(c)};
        for (const auto& [v, k] : m.entries()) {
            RatFunc img = s.image(v);
            if (p != 0 && img.field_p() == 0) img = img.promoted(p);
            term *= img.pow(k);
        }
        acc += term;
    }
    return acc;
}

RatFunc substitute(const RatFunc& f, const Substitution& s) {
    RatFunc den = substitute(f.den(), s);
    if (den.is_zero())
        throw MathError("substitution makes a denominator vanish identically");
    return substitute(f.num(), s) / den;
}

Substitution compose(const Substitution& later, const Substitution& earlier) {
    Substitution out;
    for (const auto& [v, img] : later.mapped())
        out.set(v, substitute(img, earlier));
    for (Variable v : later.fixed()) {
        if (earlier.maps(v)) {
            out.set(v, earlier.image(v));
        } else if (earlier.fixes(v)) {
            out.fix(v);
        } else {
            throw MathError("composition leaves variable " + v.name() +
                            " uncovered");
        }
    }
    return out;
}

}  // namespace pforge
