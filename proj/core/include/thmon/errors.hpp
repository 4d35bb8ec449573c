// errors.hpp -- exception types thrown by the thmon library.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thmon {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed values: bad letters, non-prefix-code domains, duplicate entries.
class InvalidInput : public Error {
public:
    using Error::Error;
};

class PreconditionViolation : public Error {
public:
    using Error::Error;
};

class NotASubideal : public Error {
public:
    using Error::Error;
};

class NotInjective : public Error {
public:
    using Error::Error;
};

class UnsupportedAlphabet : public Error {
public:
    using Error::Error;
};

// Raised when a computation would exceed a configured size cap.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// A self-check inside the library failed; indicates a bug, never bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace thmon
