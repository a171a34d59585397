#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nsg {

enum class ErrorCode {
    Empty,
    NonPositive,
    NonCoprime,
    NonMinimal,
    TrivialSemigroup,
    NotAGenerator,
    TooManyGenerators,
    OrderMismatch,
    NotInvertible,
    SingularAtOne,
    DivisionByZeroPolynomial,
    NotMonic,
    NegativeArgument,
    InternalInconsistency,
    InconsistentBetti,
    InvalidTable,
    NotTelescopic,
    NotPseudosymmetric,
    NotMED,
    NotCI,
    NotM3,
    PerfectSquareViolated,
    NoEvenGenerator,
    ModulusDividesNothing,
    BadResidue,
    NotSymmetric,
    NeedsSyzygyTable,
    InvalidArgument,
    InstanceTooLarge,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail);

    ErrorCode code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

} // namespace nsg
