#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace kfission {

enum class ErrorKind {
    SingularMatrix,
    DegenerateSegment,
    EpsilonTooLarge,
    OddPointCount,
    NotGeneralPosition,
    DuplicateParam,
    ConstructionFailed,
    SearchExhausted,
    PlanInvariantViolation,
    InvariantViolation,
    NotOneForest,
    TooLarge,
    ArithmeticMismatch,
    NoCommonFrame,
    Parse,
    InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Base exception for every failure the library reports.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Raised when three input points are collinear or two coincide. For
/// duplicates the third index repeats the second.
class NotGeneralPositionError : public Error {
public:
    NotGeneralPositionError(std::array<std::size_t, 3> witness, const std::string& what)
        : Error(ErrorKind::NotGeneralPosition, what), witness_(witness) {}

    const std::array<std::size_t, 3>& witness() const noexcept { return witness_; }

private:
    std::array<std::size_t, 3> witness_;
};

}  // namespace kfission
