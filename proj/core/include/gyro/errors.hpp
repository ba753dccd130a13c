#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gyro {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    DimensionError(std::size_t lhs, std::size_t rhs);

    std::size_t lhs_dim() const noexcept { return lhs_; }
    std::size_t rhs_dim() const noexcept { return rhs_; }

private:
    std::size_t lhs_;
    std::size_t rhs_;
};

/// A value reached (or passed) the rim of the unit ball, i.e. 1 - kBoundaryGuard.
class BoundaryError : public Error {
public:
    BoundaryError(const std::string& what, double value);

    double value() const noexcept { return value_; }

private:
    double value_;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Unknown model, gyronorm, suite or conversion route.
class LookupError : public Error {
public:
    LookupError(const std::string& kind, const std::string& name, const std::vector<std::string>& valid);

    const std::vector<std::string>& valid_names() const noexcept { return valid_; }

private:
    std::vector<std::string> valid_;
};

/// A checked precondition failed on a sampled instance. Carries the witness.
class PreconditionError : public Error {
public:
    PreconditionError(const std::string& what, std::vector<std::vector<double>> inputs, double lhs, double rhs);

    const std::vector<std::vector<double>>& inputs() const noexcept { return inputs_; }
    double lhs() const noexcept { return lhs_; }
    double rhs() const noexcept { return rhs_; }

private:
    std::vector<std::vector<double>> inputs_;
    double lhs_;
    double rhs_;
};

/// Every probed gyration is the identity map (the model is a group).
class DegeneracyError : public Error {
public:
    using Error::Error;
};

}  // namespace gyro
