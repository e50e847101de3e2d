#pragma once

#include "pforge/ratfunc.hpp"

namespace pforge {

// Field homomorphism data: images for substituted variables plus an
// explicit set of variables declared fixed. Substituting an expression
// whose variable is neither mapped nor fixed is an error.
class Substitution {
public:
    Substitution& set(Variable v, RatFunc image);
    Substitution& fix(Variable v);
    template <typename It>
    Substitution& fix_all(It first, It last) {
        for (; first != last; ++first) fix(*first);
        return *this;
    }

    bool maps(Variable v) const { return map_.count(v) > 0; }
    bool fixes(Variable v) const { return fixed_.count(v) > 0; }
    bool covers(Variable v) const { return maps(v) || fixes(v); }
    RatFunc image(Variable v) const;  // fixed variables map to themselves

    const std::map<Variable, RatFunc>& mapped() const { return map_; }
    const std::set<Variable>& fixed() const { return fixed_; }

private:
    std::map<Variable, RatFunc> map_;
    std::set<Variable> fixed_;
};

RatFunc substitute(const Poly& f, const Substitution& s);
RatFunc substitute(const RatFunc& f, const Substitution& s);

// compose(later, earlier): first apply `later`, then rewrite its images
// through `earlier`; the result maps later's domain into earlier's codomain.
Substitution compose(const Substitution& later, const Substitution& earlier);

}  // namespace pforge
