#pragma once

#include <stdexcept>
#include <string>

namespace tridkit {

/// Inverse requested for a matrix whose determinant is zero.
class SingularMatrixError : public std::runtime_error {
public:
    explicit SingularMatrixError(const std::string& what_arg)
        : std::runtime_error(what_arg) {}
};

/// A continued-fraction pivot vanished inside a formula that cannot
/// tolerate it (the hybrid algorithms never throw this; the diagnostic
/// recurrence-based inverse does).
class BreakdownError : public std::runtime_error {
public:
    explicit BreakdownError(const std::string& what_arg)
        : std::runtime_error(what_arg) {}
};

/// Operation requires equal super- and subdiagonals.
class NotSymmetricError : public std::invalid_argument {
public:
    explicit NotSymmetricError(const std::string& what_arg)
        : std::invalid_argument(what_arg) {}
};

/// Band lengths or grid shapes do not agree.
class DimensionMismatchError : public std::invalid_argument {
public:
    explicit DimensionMismatchError(const std::string& what_arg)
        : std::invalid_argument(what_arg) {}
};

/// Malformed band-format text. Carries a 1-based line and column.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int column)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// A band row holds the wrong number of values.
class DimensionError : public ParseError {
public:
    using ParseError::ParseError;
};

/// A token could not be read as a scalar in the requested mode.
class ValueError : public ParseError {
public:
    using ParseError::ParseError;
};

} // namespace tridkit
