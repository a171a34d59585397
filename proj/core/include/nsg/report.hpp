#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nsg/cyclotomic.hpp"
#include "nsg/numbers.hpp"

namespace nsg {

enum class Family {
    Theorem1,
    Theorem2,
    Corollary1,
    CI,
    Telescopic,
    SymmetricEven,
    SymmetricOdd,
    Bresinsky4,
    Symmetric5,
    M3,
    Pseudosymmetric,
    MED,
    AlmostSymmetricMED,
    Appendix,
    WaveSum,
    Lemma1,
};

std::string_view to_string(Family f);
std::optional<Family> family_from_string(std::string_view name);
const std::vector<Family>& all_families();

/// Identity checks count toward N; cross checks confirm the same fact by another route.
enum class CheckRole { Identity, CrossCheck };

enum class CheckStatus { Pass, Fail, Skipped };

using ExactValue = std::variant<BigRational, CyclotomicNumber>;

std::string to_string(const ExactValue& v);
bool exact_equal(const ExactValue& a, const ExactValue& b);
ExactValue exact_difference(const ExactValue& a, const ExactValue& b);

struct CheckParams {
    std::optional<std::int64_t> q, n, r, k, s;
};

struct Check {
    Family family = Family::Theorem1;
    std::string name;
    CheckParams params;
    ExactValue expected = BigRational(0);
    ExactValue actual = BigRational(0);
    CheckRole role = CheckRole::Identity;
    CheckStatus status = CheckStatus::Pass;
    std::string note;

    bool passed() const { return status == CheckStatus::Pass; }
};

/// Compares exactly and sets status.
Check make_check(Family family, std::string name, CheckParams params, ExactValue expected, ExactValue actual,
                 CheckRole role = CheckRole::Identity);
Check make_skipped(Family family, std::string name, std::string reason);

using IdentityReport = std::vector<Check>;

/// Stable order: family, name, then parameters.
void sort_report(IdentityReport& report);

} // namespace nsg
