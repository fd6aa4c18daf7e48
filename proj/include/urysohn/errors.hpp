#pragma once

#include <stdexcept>
#include <string>

namespace urysohn {

/// Malformed input: bad rational literal, bad JSON shape, unknown field type.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called with arguments that violate its contract.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Argument outside the admissible domain (n = 0, r <= 0, p < 1, ...).
class InvalidArgument : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Matrix shape or label list is inconsistent. Not an axiom violation.
class StructuralError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class LookupError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// A re-checked postcondition failed. Always a bug.
class PostconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace urysohn
