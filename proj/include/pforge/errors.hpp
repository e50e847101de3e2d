#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pforge {

// Domain errors: division by zero, mixed coefficient fields, dimension
// mismatch, singular matrix, substitution gaps.
struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Expression syntax errors; offset is a byte position into the input.
struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(std::size_t off, const std::string& what)
        : std::runtime_error(what + " (at byte " + std::to_string(off) + ")"),
          offset(off) {}
};

// A claimed identity failed an exact check. detail carries the first
// offending entry or the difference that should have been zero.
struct VerifyError : std::runtime_error {
    std::string detail;
    explicit VerifyError(const std::string& what, std::string det = "")
        : std::runtime_error(what), detail(std::move(det)) {}
};

}  // namespace pforge
