#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wtreereg {

enum class ErrorCode {
    InvalidGraph,
    UnknownVertex,
    UnknownEdge,
    NotATree,
    NotAPath,
    TrivialWeights,
    NonTrivialWeights,
    NotIntegrallyClosed,
    PowerTooLarge,
    TooManyGenerators,
    LatticeTooLarge,
    UndefinedRegularity,
    PartitionInvalid,
    InfeasibleConstraints,
    InvalidInput,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every precondition or guard failure in the library is reported through
/// this type; `code()` identifies which contract was violated.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace wtreereg
