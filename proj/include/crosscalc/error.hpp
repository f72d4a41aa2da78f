#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace crosscalc {

enum class Errc {
    EmptyPath,
    NonMonotoneTime,
    JumpAtOrigin,
    NonFiniteValue,
    InconsistentSegment,
    OutOfDomain,
    NonpositiveWidth,
    UnboundedIntegrand,
    QuadratureFailed,
    MissingAntiderivative,
    SmoothnessMismatch,
    NotSimpleLevel,
    LevelAtExtremum,
    ContractViolation,
    InvalidSpec,
    ParseError,
};

constexpr std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::EmptyPath: return "EMPTY_PATH";
        case Errc::NonMonotoneTime: return "NON_MONOTONE_TIME";
        case Errc::JumpAtOrigin: return "JUMP_AT_ORIGIN";
        case Errc::NonFiniteValue: return "NON_FINITE_VALUE";
        case Errc::InconsistentSegment: return "INCONSISTENT_SEGMENT";
        case Errc::OutOfDomain: return "OUT_OF_DOMAIN";
        case Errc::NonpositiveWidth: return "NONPOSITIVE_WIDTH";
        case Errc::UnboundedIntegrand: return "UNBOUNDED_INTEGRAND";
        case Errc::QuadratureFailed: return "NO_ANTIDERIVATIVE_AND_QUADRATURE_FAILED";
        case Errc::MissingAntiderivative: return "MISSING_ANTIDERIVATIVE";
        case Errc::SmoothnessMismatch: return "SMOOTHNESS_MISMATCH";
        case Errc::NotSimpleLevel: return "NOT_SIMPLE_LEVEL";
        case Errc::LevelAtExtremum: return "LEVEL_AT_EXTREMUM";
        case Errc::ContractViolation: return "CONTRACT_VIOLATION";
        case Errc::InvalidSpec: return "INVALID_SPEC";
        case Errc::ParseError: return "PARSE_ERROR";
    }
    return "UNKNOWN";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    [[nodiscard]] Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace crosscalc
