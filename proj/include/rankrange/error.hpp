#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace rankrange {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shape mismatch or non-square input where a square matrix is required.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Input violates a structural precondition (not Hermitian, not an isometry).
class StructureError : public Error {
public:
    using Error::Error;
};

/// Scalar parameter out of its admissible range.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Malformed matrix file or unreadable input.
class InputError : public Error {
public:
    using Error::Error;
};

/// A non-empty convex set was required but the computed set is empty.
///
/// When available, `violated_angle()` is the grid direction whose half-plane
/// is most violated at the least-infeasible point, and `depth()` the
/// (negative) optimal depth of the feasibility program.
class EmptinessError : public Error {
public:
    explicit EmptinessError(const std::string& what,
                            std::optional<double> violated_angle = std::nullopt,
                            std::optional<double> depth = std::nullopt)
        : Error(what), violated_angle_(violated_angle), depth_(depth) {}

    std::optional<double> violated_angle() const noexcept { return violated_angle_; }
    std::optional<double> depth() const noexcept { return depth_; }

private:
    std::optional<double> violated_angle_;
    std::optional<double> depth_;
};

}  // namespace rankrange
