#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mp {

/// Precondition violated by a caller-supplied value.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed text input. `offset()` is the byte (or line, for line-oriented
/// formats) position where parsing stopped.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset);
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Request outside the sizes this library is built to handle exactly.
class Unsupported : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace mp
