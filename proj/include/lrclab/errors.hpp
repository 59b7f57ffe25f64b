#ifndef LRCLAB_ERRORS_HPP
#define LRCLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lrclab {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad construction input: reducible modulus, degree out of range, ...
struct FieldError : Error {
    using Error::Error;
};

/// Two elements from different fields were combined.
struct FieldMismatchError : Error {
    using Error::Error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

/// Argument outside the mathematical domain of the operation (e.g. Tr = 0).
struct DomainError : Error {
    using Error::Error;
};

/// A verified structural invariant of a tower/code failed to hold.
struct StructuralError : Error {
    using Error::Error;
};

/// Requested computation exceeds a configured cap or budget.
struct CapacityError : Error {
    explicit CapacityError(const std::string& what, unsigned long long required = 0)
        : Error(what), required_budget(required) {}
    unsigned long long required_budget;
};

/// Erasure repair cannot proceed (missing fiber data, undefined locality).
struct RepairError : Error {
    using Error::Error;
};

/// Bad user input at the tool level.
struct UsageError : Error {
    using Error::Error;
};

}  // namespace lrclab

#endif
