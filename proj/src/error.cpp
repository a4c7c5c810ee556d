#include "posetq/error.hpp"

namespace posetq {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonPrimeModulus: return "NonPrimeModulus";
        case ErrorKind::ReduciblePolynomial: return "ReduciblePolynomial";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::CycleDetected: return "CycleDetected";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::MixedLengths: return "MixedLengths";
        case ErrorKind::EmptyAmbient: return "EmptyAmbient";
        case ErrorKind::CodeTooLarge: return "CodeTooLarge";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::TrivialCode: return "TrivialCode";
        case ErrorKind::DependentRows: return "DependentRows";
        case ErrorKind::KOutOfRange: return "KOutOfRange";
        case ErrorKind::NotNested: return "NotNested";
        case ErrorKind::EqualCodes: return "EqualCodes";
        case ErrorKind::FormAmbientMismatch: return "FormAmbientMismatch";
        case ErrorKind::QuotientNotInBaseField: return "QuotientNotInBaseField";
        case ErrorKind::NotSelfOrthogonal: return "NotSelfOrthogonal";
        case ErrorKind::NotPure: return "NotPure";
        case ErrorKind::KNotAboveOne: return "KNotAboveOne";
        case ErrorKind::SearchExhausted: return "SearchExhausted";
        case ErrorKind::DimensionCap: return "DimensionCap";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace posetq
