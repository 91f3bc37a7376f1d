#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tonetext {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid argument or parameter value (bad ranges, Nyquist violations, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed input data (bad WAV layout, unmappable characters, ...).
class FormatError : public Error {
public:
    using Error::Error;
};

// Text parse failure with source position, 1-based.
class ParseError : public FormatError {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : FormatError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Underlying stream or file failure.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace tonetext
