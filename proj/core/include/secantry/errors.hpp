#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace secantry {

// Thrown when an operation is called outside its stated domain. `code` is a
// short machine-readable tag ("NOT_RHO_ZERO", "COLLISION", "OVERFLOW",
// "CONTEXT_MISMATCH", "PRECONDITION_FAIL", "INVARIANT", "DOMAIN").
class PreconditionError : public std::runtime_error {
public:
    PreconditionError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// An exact computation produced a non-integral value where integrality is
// provable. This is never caused by bad input; it signals a bug in the
// evaluation itself.
class IntegralityError : public std::logic_error {
public:
    explicit IntegralityError(const std::string& message)
        : std::logic_error(message) {}
};

}  // namespace secantry
