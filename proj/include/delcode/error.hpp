#pragma once

#include <stdexcept>
#include <string>

namespace delcode {

/// Raised when an argument violates a documented precondition (bad word,
/// length mismatch, cap exceeded, parameter out of range).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an operation is called on an object that does not satisfy a
/// semantic precondition, e.g. `is_perfect` on a code that is not
/// t-deletion-correcting.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace delcode
