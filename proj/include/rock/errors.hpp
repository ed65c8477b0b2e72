#pragma once

#include <stdexcept>
#include <string>

namespace rock {

// Input violates a documented precondition (bad partition string, N too small, ...).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input is well-formed but outside the mathematical domain of the operation
// (non-Rouquier core, weight not a multiple of delta, partition outside a block).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// An internal consistency check failed.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace rock
