#include "symflex/error.hpp"

namespace symflex {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::IdentityMap: return "IdentityMap";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Truncated: return "Truncated";
    case ErrorCode::NotNac: return "NotNAC";
    case ErrorCode::NotPseudoRs: return "NotPseudoRS";
    case ErrorCode::NotRsNoCycle: return "NotRSNoCycle";
    case ErrorCode::DegenerateBasepoints: return "DegenerateBasepoints";
    case ErrorCode::ConditionsFailed: return "ConditionsFailed";
    case ErrorCode::EmptyParameterDomain: return "EmptyParameterDomain";
    case ErrorCode::BranchDiscontinuity: return "BranchDiscontinuity";
    case ErrorCode::NotWalkIndependent: return "NotWalkIndependent";
    case ErrorCode::NotCartesian: return "NotCartesian";
    case ErrorCode::ClassInvariant: return "ClassInvariant";
    case ErrorCode::NonTermination: return "NonTermination";
    case ErrorCode::Schema: return "Schema";
    case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

} // namespace symflex
