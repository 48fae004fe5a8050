#pragma once

#include <stdexcept>
#include <string>

namespace prodineq {

enum class Errc {
    EmptyTuple,
    NonPositiveExponent,
    LengthMismatch,
    ExponentZero,
    ZeroPolynomial,
    EndpointIsRoot,
    InvalidInterval,
    NoNegativeValue,
    PivotUnavailable,
    DominanceNotSatisfied,
    DominanceLost,
    UnequalSums,
    ConstraintViolated,
    BadInput,
    Internal,
};

const char* errc_name(Errc c) noexcept;

/// All library failures throw this; code() distinguishes input errors from
/// internal invariant breaks (Errc::DominanceLost, Errc::Internal).
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(Errc c) noexcept {
    switch (c) {
        case Errc::EmptyTuple: return "EmptyTuple";
        case Errc::NonPositiveExponent: return "NonPositiveExponent";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::ExponentZero: return "ExponentZero";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::EndpointIsRoot: return "EndpointIsRoot";
        case Errc::InvalidInterval: return "InvalidInterval";
        case Errc::NoNegativeValue: return "NoNegativeValue";
        case Errc::PivotUnavailable: return "PivotUnavailable";
        case Errc::DominanceNotSatisfied: return "DominanceNotSatisfied";
        case Errc::DominanceLost: return "DominanceLost";
        case Errc::UnequalSums: return "UnequalSums";
        case Errc::ConstraintViolated: return "ConstraintViolated";
        case Errc::BadInput: return "BadInput";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace prodineq
