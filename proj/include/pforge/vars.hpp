#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace pforge {

// Handle to a registered variable. Ordering of handles follows registration
// order, which is the order variables first appear in parsed input; this is
// the global variable order underlying the graded-lex monomial order.
class Variable {
public:
    Variable() : id_(UINT32_MAX) {}
    explicit Variable(uint32_t id) : id_(id) {}
    uint32_t id() const { return id_; }
    bool operator==(const Variable& o) const { return id_ == o.id_; }
    bool operator!=(const Variable& o) const { return id_ != o.id_; }
    bool operator<(const Variable& o) const { return id_ < o.id_; }
    const std::string& name() const;

private:
    uint32_t id_;
};

// Process-wide append-only variable registry.
class VarTable {
public:
    static VarTable& instance();

    Variable intern(const std::string& name);
    std::optional<Variable> find(const std::string& name) const;
    const std::string& name(Variable v) const;
    size_t size() const;

    // Clears the registry. Invalidates every outstanding value that holds
    // variables; used by test cases and at CLI startup to make canonical
    // forms independent of anything run before.
    void reset();

private:
    VarTable() = default;
    mutable std::mutex mu_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, uint32_t> ids_;
};

// Shorthand for VarTable::instance().intern(name).
Variable var(const std::string& name);

}  // namespace pforge
