#include "pforge/vars.hpp"

#include "pforge/errors.hpp"

namespace pforge {

VarTable& VarTable::instance() {
    static VarTable t;
    return t;
}

Variable VarTable::intern(const std::string& name) {
    if (name.empty()) throw MathError("empty variable name");
    std::lock_guard<std::mutex> lock(mu_);
    auto it = ids_.find(name);
    if (it != ids_.end()) return Variable(it->second);
    uint32_t id = static_cast<uint32_t>(names_.size());
    names_.push_back(name);
    ids_.emplace(name, id);
    return Variable(id);
}

std::optional<Variable> VarTable::find(const std::string& name) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = ids_.find(name);
    if (it == ids_.end()) return std::nullopt;
    return Variable(it->second);
}

const std::string& VarTable::name(Variable v) const {
    std::lock_guard<std::mutex> lock(mu_);
    if (v.id() >= names_.size()) throw MathError("unknown variable handle");
    return names_[v.id()];
}

size_t VarTable::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return names_.size();
}

void VarTable::reset() {
    std::lock_guard<std::mutex> lock(mu_);
    names_.clear();
    ids_.clear();
}

const std::string& Variable::name() const {
    return VarTable::instance().name(*this);
}

Variable var(const std::string& name) {
    return VarTable::instance().intern(name);
}

}  // namespace pforge
