#pragma once

#include <string>
#include <vector>

namespace pforge {

// One named exact check and its outcome. detail carries canonical text of
// the offending value when a check fails, or supplementary output (both
// sides of an identity, counts) when it passes.
struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::string kind;
    std::vector<Check> checks;

    void add(std::string name, bool pass, std::string detail = "") {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }
    void merge(const Report& other) {
        for (const auto& c : other.checks) checks.push_back(c);
    }
    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const Check* first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return &c;
        return nullptr;
    }
};

}  // namespace pforge
