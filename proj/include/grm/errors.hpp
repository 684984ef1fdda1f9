#pragma once

#include <stdexcept>
#include <string>

namespace grm {

// Input text error carrying a 1-based line/column position.
class ParseError : public std::runtime_error {
public:
    ParseError(unsigned line, unsigned column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    unsigned line() const { return line_; }
    unsigned column() const { return column_; }

private:
    unsigned line_;
    unsigned column_;
};

// Raised when an operation needs a tree or cycle support but got something else.
class UnsupportedSupportError : public std::runtime_error {
public:
    explicit UnsupportedSupportError(const std::string& message)
        : std::runtime_error(message) {}
};

} // namespace grm
