#include "stein/error.hpp"

namespace stein {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidSpec: return "InvalidSpec";
        case ErrorCode::IllDefined: return "IllDefined";
        case ErrorCode::NotAUnit: return "NotAUnit";
        case ErrorCode::NotInGamma: return "NotInGamma";
        case ErrorCode::MismatchedSpec: return "MismatchedSpec";
        case ErrorCode::NotAPartition: return "NotAPartition";
        case ErrorCode::NotABijection: return "NotABijection";
        case ErrorCode::SlopeNotInLambda: return "SlopeNotInLambda";
        case ErrorCode::BreakpointNotInGamma: return "BreakpointNotInGamma";
        case ErrorCode::MismatchedLength: return "MismatchedLength";
        case ErrorCode::LambdaTooLarge: return "LambdaTooLarge";
        case ErrorCode::RangeEscapes: return "RangeEscapes";
        case ErrorCode::IdentityElement: return "IdentityElement";
        case ErrorCode::EmptySet: return "EmptySet";
        case ErrorCode::EqualPoints: return "EqualPoints";
        case ErrorCode::OverlappingSourceRange: return "OverlappingSourceRange";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
        case ErrorCode::CoverNotFound: return "CoverNotFound";
        case ErrorCode::NotStabilized: return "NotStabilized";
        case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
        case ErrorCode::SameColor: return "SameColor";
        case ErrorCode::LabelOutOfRange: return "LabelOutOfRange";
        case ErrorCode::TooDeep: return "TooDeep";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace stein
