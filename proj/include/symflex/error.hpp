#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symflex {

enum class ErrorCode {
    NotInvolution,
    IdentityMap,
    NotAutomorphism,
    Disconnected,
    NotSimple,
    UnknownVertex,
    InvalidArgument,
    BudgetExceeded,
    Truncated,
    NotNac,
    NotPseudoRs,
    NotRsNoCycle,
    DegenerateBasepoints,
    ConditionsFailed,
    EmptyParameterDomain,
    BranchDiscontinuity,
    NotWalkIndependent,
    NotCartesian,
    ClassInvariant,
    NonTermination,
    Schema,
    Io,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries a machine-readable code and,
/// where one exists, the element that witnesses the violation (a vertex id,
/// an edge key, a JSON pointer, ...).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::string witness = {})
        : std::runtime_error(std::string(to_string(code)) + ": " + message)
        , code_(code)
        , witness_(std::move(witness))
    {
    }

    ErrorCode code() const noexcept { return code_; }
    const std::string& witness() const noexcept { return witness_; }

private:
    ErrorCode code_;
    std::string witness_;
};

} // namespace symflex
