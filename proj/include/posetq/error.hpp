#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace posetq {

enum class ErrorKind {
    NonPrimeModulus,
    ReduciblePolynomial,
    DivisionByZero,
    CycleDetected,
    IndexOutOfRange,
    MixedLengths,
    EmptyAmbient,
    CodeTooLarge,
    LengthMismatch,
    TrivialCode,
    DependentRows,
    KOutOfRange,
    NotNested,
    EqualCodes,
    FormAmbientMismatch,
    QuotientNotInBaseField,
    NotSelfOrthogonal,
    NotPure,
    KNotAboveOne,
    SearchExhausted,
    DimensionCap,
    InvalidArgument,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

// Every library failure carries a machine-checkable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace posetq
