#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oa {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A size bound was exceeded (n too large for dense storage or enumeration).
class SizeLimitError : public Error {
public:
    using Error::Error;
};

/// Invalid parameter combination, e.g. strength outside [1, n].
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Operand lengths or matrix shapes do not agree.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Checked 64-bit arithmetic would have wrapped.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// A coefficient vector does not describe a fraction (non-integer or negative counts).
class NotCountingFunctionError : public Error {
public:
    using Error::Error;
};

/// Operation requires a 0/1 replicate vector.
class NotIndicatorError : public Error {
public:
    using Error::Error;
};

/// A solver ran out of its resource budget. Carries the number of basis
/// elements found before giving up.
class BudgetExhaustedError : public Error {
public:
    BudgetExhaustedError(const std::string& what, std::size_t found)
        : Error(what), found_(found) {}
    std::size_t found() const noexcept { return found_; }

private:
    std::size_t found_;
};

/// The brute-force oracle would need more search nodes than its cap allows.
class OracleInfeasibleError : public Error {
public:
    using Error::Error;
};

/// Malformed text input. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace oa
