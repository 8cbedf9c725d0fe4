#include "nashtoric/error.hpp"

namespace nashtoric {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ConeNotTwoDimensional: return "ConeNotTwoDimensional";
        case ErrorCode::ConeNotStrictlyConvex: return "ConeNotStrictlyConvex";
        case ErrorCode::UnboundedSearch: return "UnboundedSearch";
        case ErrorCode::NotMinimal: return "NotMinimal";
        case ErrorCode::LatticeNotFull: return "LatticeNotFull";
        case ErrorCode::EmptyEdge: return "EmptyEdge";
        case ErrorCode::TooFewGenerators: return "TooFewGenerators";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::NotSquare: return "NotSquare";
        case ErrorCode::ExponentOverflow: return "ExponentOverflow";
        case ErrorCode::NotSameEdge: return "NotSameEdge";
        case ErrorCode::NotARelation: return "NotARelation";
        case ErrorCode::NonMonomialResidue: return "NonMonomialResidue";
        case ErrorCode::RankDeficient: return "RankDeficient";
        case ErrorCode::EmptyIdeal: return "EmptyIdeal";
        case ErrorCode::TorusSingular: return "TorusSingular";
        case ErrorCode::NotFound: return "NotFound";
        case ErrorCode::Precondition: return "Precondition";
        case ErrorCode::TheoremViolation: return "TheoremViolation";
        case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

bool Error::is_validation_failure() const noexcept {
    switch (code_) {
        case ErrorCode::ConeNotTwoDimensional:
        case ErrorCode::ConeNotStrictlyConvex:
        case ErrorCode::UnboundedSearch:
        case ErrorCode::NotMinimal:
        case ErrorCode::LatticeNotFull:
        case ErrorCode::EmptyEdge:
        case ErrorCode::TooFewGenerators:
        case ErrorCode::Precondition:
            return true;
        default:
            return false;
    }
}

}  // namespace nashtoric
