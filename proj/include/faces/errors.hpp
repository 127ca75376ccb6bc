#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace faces {

/// A precondition of an operation was violated by its arguments.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// An internal invariant broke (inexact division, non-terminating recursion,
/// negative defect, ...). Always signals a bug or an unsupported input regime.
class IntegrityError : public std::logic_error {
public:
    explicit IntegrityError(const std::string& what) : std::logic_error(what) {}
};

/// Checked 64-bit arithmetic overflowed.
class OverflowError : public std::overflow_error {
public:
    explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

inline int checked_exp_add(int a, int b) {
    int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("exponent overflow");
    return r;
}

}  // namespace detail
}  // namespace faces
