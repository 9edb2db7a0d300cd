#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace splitmeasure {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input. `position` is the byte offset of the offending character.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// An argument outside the mathematical domain of an operation (composite "prime", bad degree, ...).
class InputError : public Error {
public:
    using Error::Error;
};

/// Evaluation of a splitting measure at z = 0 or z = 1.
class PoleError : public InputError {
public:
    using InputError::InputError;
};

/// A computation would exceed its size or enumeration budget.
class BudgetError : public Error {
public:
    using Error::Error;
};

}  // namespace splitmeasure
