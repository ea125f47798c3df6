#pragma once

#include <stdexcept>
#include <string>

namespace skewcfc {

/// Base of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    SingularMatrix() : Error("matrix is singular") {}
};

class InvalidPermutation : public Error {
public:
    using Error::Error;
};

class InvalidBlock : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A rule's witness failed exact verification, or rules do not chain.
class RuleError : public Error {
public:
    using Error::Error;
};

/// Precondition of a planner operation was violated (e.g. solve on an
/// inconsistent query, non-skew right-hand side).
class QueryError : public Error {
public:
    using Error::Error;
};

/// Something the algorithms guarantee did not hold. Always a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace skewcfc
