#pragma once

#include <stdexcept>
#include <string>

namespace stein {

enum class ErrorCode {
    InvalidSpec,
    IllDefined,
    NotAUnit,
    NotInGamma,
    MismatchedSpec,
    NotAPartition,
    NotABijection,
    SlopeNotInLambda,
    BreakpointNotInGamma,
    MismatchedLength,
    LambdaTooLarge,
    RangeEscapes,
    IdentityElement,
    EmptySet,
    EqualPoints,
    OverlappingSourceRange,
    OutOfRange,
    AlphaOutOfRange,
    CoverNotFound,
    NotStabilized,
    DegreeOutOfRange,
    SameColor,
    LabelOutOfRange,
    TooDeep,
    ParseError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace stein
