#ifndef INTLAB_ERRORS_HPP
#define INTLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace intlab {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An enumeration would exceed the configured cap (or is infinite).
class CombinatorialBlowup : public Error {
public:
    using Error::Error;
};

/// A value does not have the type an operation requires.
class TypeMismatch : public Error {
public:
    using Error::Error;
};

/// Vector/linear-map operands live in incompatible spaces.
class SpaceMismatch : public Error {
public:
    using Error::Error;
};

/// A vector is not exactly in the image of the embedding.
class NotInImage : public Error {
public:
    using Error::Error;
};

/// Concrete-syntax parse failure, with 1-based position.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& msg, int line, int column)
        : Error(msg), line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Static type error in an expression.
class TypeError : public Error {
public:
    TypeError(const std::string& msg, std::string expected, std::string found)
        : Error(msg), expected_(std::move(expected)), found_(std::move(found)) {}
    const std::string& expected() const { return expected_; }
    const std::string& found() const { return found_; }

private:
    std::string expected_;
    std::string found_;
};

/// A variable occurs free without a binder or assignment.
class UnboundVariable : public Error {
public:
    using Error::Error;
};

/// A custom null-set oracle declined a pointwise membership query.
class UndecidableMembership : public Error {
public:
    using Error::Error;
};

/// A sort id is not declared in the model.
class UnknownSort : public Error {
public:
    using Error::Error;
};

/// A continuous dependent quantification was issued without a query window.
class UnboundedQuery : public Error {
public:
    using Error::Error;
};

/// Model file or model-consistency failure (missing intension, bad table, ...).
class ModelError : public Error {
public:
    using Error::Error;
};

}  // namespace intlab

#endif  // INTLAB_ERRORS_HPP
