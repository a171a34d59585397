#include "nsg/error.hpp"

namespace nsg {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::NonPositive: return "NonPositive";
    case ErrorCode::NonCoprime: return "NonCoprime";
    case ErrorCode::NonMinimal: return "NonMinimal";
    case ErrorCode::TrivialSemigroup: return "TrivialSemigroup";
    case ErrorCode::NotAGenerator: return "NotAGenerator";
    case ErrorCode::TooManyGenerators: return "TooManyGenerators";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::SingularAtOne: return "SingularAtOne";
    case ErrorCode::DivisionByZeroPolynomial: return "DivisionByZeroPolynomial";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::NegativeArgument: return "NegativeArgument";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::InconsistentBetti: return "InconsistentBetti";
    case ErrorCode::InvalidTable: return "InvalidTable";
    case ErrorCode::NotTelescopic: return "NotTelescopic";
    case ErrorCode::NotPseudosymmetric: return "NotPseudosymmetric";
    case ErrorCode::NotMED: return "NotMED";
    case ErrorCode::NotCI: return "NotCI";
    case ErrorCode::NotM3: return "NotM3";
    case ErrorCode::PerfectSquareViolated: return "PerfectSquareViolated";
    case ErrorCode::NoEvenGenerator: return "NoEvenGenerator";
    case ErrorCode::ModulusDividesNothing: return "ModulusDividesNothing";
    case ErrorCode::BadResidue: return "BadResidue";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NeedsSyzygyTable: return "NeedsSyzygyTable";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code), detail_(detail) {}

} // namespace nsg
