#include "daisy/errors.hpp"

namespace daisy {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::LabelWidthMismatch: return "LabelWidthMismatch";
        case ErrorCode::NonUnitHammingEdge: return "NonUnitHammingEdge";
        case ErrorCode::DuplicateLabel: return "DuplicateLabel";
        case ErrorCode::BaseOutOfRange: return "BaseOutOfRange";
        case ErrorCode::Unreachable: return "Unreachable";
        case ErrorCode::EmptySet: return "EmptySet";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::NotBipartite: return "NotBipartite";
        case ErrorCode::NotPartialCube: return "NotPartialCube";
        case ErrorCode::IsometryViolation: return "IsometryViolation";
        case ErrorCode::SingletonGraph: return "SingletonGraph";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
        case ErrorCode::ArityMismatch: return "ArityMismatch";
        case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::WidthMismatch: return "WidthMismatch";
        case ErrorCode::EmptyX: return "EmptyX";
        case ErrorCode::LimitExceeded: return "LimitExceeded";
        case ErrorCode::StageLimitExceeded: return "StageLimitExceeded";
        case ErrorCode::IntermediateNotPartialCube: return "IntermediateNotPartialCube";
        case ErrorCode::InvalidSpec: return "InvalidSpec";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace daisy
