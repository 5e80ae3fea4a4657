#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace schurdiv {

// Input text could not be parsed; `position` is the byte offset of the offending
// character in the original string.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// A series operation that requires an invertible constant term received one equal
// to zero.
class ZeroConstantTerm : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The requested output order cannot be produced from the orders of the inputs.
class InsufficientPrecision : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A closed form is undefined because its normalizing Schur determinant vanishes.
// `vanishing` names the witness, e.g. "S_(4,4,4)".
class NonGenericError : public std::domain_error {
public:
    NonGenericError(const std::string& what, std::string vanishing)
        : std::domain_error(what + " [vanishing " + vanishing + "]"),
          vanishing_(std::move(vanishing)) {}

    const std::string& vanishing() const noexcept { return vanishing_; }

private:
    std::string vanishing_;
};

// An exact linear solve met a singular coefficient matrix.
class SingularSystem : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace schurdiv
