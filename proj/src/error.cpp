#include "ddc/error.hpp"

namespace ddc {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidLetter: return "InvalidLetter";
        case ErrorCode::NotReduced: return "NotReduced";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ResourceLimit: return "ResourceLimit";
        case ErrorCode::EmptySet: return "EmptySet";
        case ErrorCode::NotEquiLength: return "NotEquiLength";
        case ErrorCode::BadDiameter: return "BadDiameter";
        case ErrorCode::BadParameter: return "BadParameter";
        case ErrorCode::MalformedTable: return "MalformedTable";
        case ErrorCode::NonAssociative: return "NonAssociative";
        case ErrorCode::UnreachableElements: return "UnreachableElements";
        case ErrorCode::UnknownElement: return "UnknownElement";
        case ErrorCode::NotADdc: return "NotADdc";
        case ErrorCode::DiameterTooSmall: return "DiameterTooSmall";
    }
    return "Unknown";
}

}  // namespace ddc
