#include "wtreereg/error.hpp"

namespace wtreereg {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidGraph: return "InvalidGraph";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::UnknownEdge: return "UnknownEdge";
        case ErrorCode::NotATree: return "NotATree";
        case ErrorCode::NotAPath: return "NotAPath";
        case ErrorCode::TrivialWeights: return "TrivialWeights";
        case ErrorCode::NonTrivialWeights: return "NonTrivialWeights";
        case ErrorCode::NotIntegrallyClosed: return "NotIntegrallyClosed";
        case ErrorCode::PowerTooLarge: return "PowerTooLarge";
        case ErrorCode::TooManyGenerators: return "TooManyGenerators";
        case ErrorCode::LatticeTooLarge: return "LatticeTooLarge";
        case ErrorCode::UndefinedRegularity: return "UndefinedRegularity";
        case ErrorCode::PartitionInvalid: return "PartitionInvalid";
        case ErrorCode::InfeasibleConstraints: return "InfeasibleConstraints";
        case ErrorCode::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

}  // namespace wtreereg
