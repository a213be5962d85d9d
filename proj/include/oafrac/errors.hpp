#pragma once

#include <stdexcept>
#include <string>

namespace oafrac {

/// Bad arguments or preconditions violated by the caller.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input admissible in principle but outside the configured size limits.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Factor orders do not match any supported construction case.
class UnsupportedCaseError : public UsageError {
public:
    using UsageError::UsageError;
};

/// Array text that cannot be parsed; carries a 1-based position.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// A built-in catalog entry failed to reproduce its recorded values.
class CatalogError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace oafrac
