#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nsg/cyclotomic.hpp"
#include "nsg/hilbert.hpp"
#include "nsg/polynomial.hpp"
#include "nsg/report.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

/// A_k: for k >= 1, -sum_(c>0) q_c c^k; for k = 0, the alternating Betti sum Q(1).
BigInt power_sums(const SparseIntPolynomial& q, unsigned k);

/// m identity checks, k = 0..m-1, plus the (1-z)^(m-1) divisibility cross check.
IdentityReport theorem1_verify(const SparseIntPolynomial& q, const GeneratorTuple& t);

/// E(q,n,r) = -sum_(c>0) q_c c^r xi_q^(n c)
CyclotomicNumber exponential_sums(const SparseIntPolynomial& poly, const GeneratorTuple& t, std::uint64_t q,
                                  std::uint64_t n, unsigned r);

/// Only moduli in `moduli` when given (used to split work across threads).
IdentityReport theorem2_verify(const SparseIntPolynomial& q, const GeneratorTuple& t,
                               std::optional<std::vector<std::uint64_t>> moduli = std::nullopt);

IdentityReport corollary1_verify(const SparseIntPolynomial& q, const GeneratorTuple& t);

struct IdentityCount {
    BigInt total;
    std::size_t from_theorem1 = 0;
    std::uint64_t from_q2 = 0;
    BigInt from_higher; // half of sum_(q>=3) omega_q phi(q)
};

IdentityCount identity_count(const GeneratorTuple& t);

/// Subset-sum identities of prod (1 - z^e_j) and its root-of-unity sums. Throws NotCI.
IdentityReport ci_identity_suite(std::span<const std::uint64_t> degrees, const GeneratorTuple& t);
/// Telescopic orderings: degrees from the ordering, product and numerator cross checks. Throws NotTelescopic.
IdentityReport telescopic_suite(std::span<const std::uint64_t> ordering, const GeneratorTuple& t);

/// Needs a validated table; throws NeedsSyzygyTable when absent.
IdentityReport symmetric_identity_suite(const SparseIntPolynomial& q, const GeneratorTuple& t,
                                        const ClassificationFlags& flags, const std::optional<SyzygyTable>& table);

/// q_1, q_2 from the three relation degrees; throws PerfectSquareViolated.
std::pair<BigInt, BigInt> m3_second_kind_degrees(std::span<const std::uint64_t> e, const GeneratorTuple& t);
IdentityReport m3_suite(const GeneratorTuple& t, const SparseIntPolynomial& q);
IdentityReport pseudosymmetric_suite(const GeneratorTuple& t, const SparseIntPolynomial& q);

IdentityReport med_identity_suite(const GeneratorTuple& t, const SparseIntPolynomial& q);

/// sum over nonempty S of (-1)^(|S|+1) (sum_S e)^k
BigInt alternating_subset_power_sum(std::span<const std::uint64_t> e, unsigned k);

struct AppendixOutcome {
    BigInt algebraic;       // alternating subset power sum
    BigInt expected;        // 0 for k < n, (-1)^(n+1) n! prod e for k = n
    BigInt covering_words;  // words that use every colour, by enumeration
    BigInt missing_by_count;     // words missing a colour, by enumeration
    BigInt missing_by_inclusion; // the same through inclusion-exclusion
    bool pass = false;
};

constexpr std::uint64_t kAppendixEnumerationLimit = 10'000'000;

/// Algebraic route always; literal enumeration of E^k words when enumerate is set (InstanceTooLarge above the limit).
AppendixOutcome appendix_oracle(std::span<const std::uint64_t> e, unsigned k, bool enumerate = true);
IdentityReport appendix_report(std::span<const std::uint64_t> e, unsigned k, bool enumerate = true);

} // namespace nsg
