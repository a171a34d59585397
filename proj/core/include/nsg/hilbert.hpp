#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nsg/polynomial.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

/// Q(z) = H(z) * prod (1 - z^d_i), degree F + sigma_1.
SparseIntPolynomial hilbert_numerator(const GeneratorTuple& t, const SemigroupProfile& p);
SparseIntPolynomial hilbert_numerator(const GeneratorTuple& t);

/// z^deg Q(1/z) == (-1)^(m-1) Q(z)
bool duality_check(const SparseIntPolynomial& q, std::size_t m);

/// prod (1 - z^e_j)
SparseIntPolynomial ci_numerator(std::span<const std::uint64_t> degrees);

/// Degrees e_1 <= ... <= e_(m-1) with Q = prod (1 - z^e_j), if such a factorization exists.
std::optional<std::vector<std::uint64_t>> factor_complete_intersection(const SparseIntPolynomial& q, std::size_t m);

/// classify() with the complete-intersection flag read off the numerator.
ClassificationFlags classify_semigroup(const GeneratorTuple& t, const SemigroupProfile& p);

/// e_j = d_(j+1) g_j / g_(j+1) along a telescopic ordering.
std::vector<std::uint64_t> telescopic_degrees(std::span<const std::uint64_t> ordering);

/// Frobenius number of a three-generated pseudosymmetric semigroup from the generators alone.
std::int64_t pseudosymmetric_frobenius(const GeneratorTuple& t);
SparseIntPolynomial pseudosymmetric_numerator(const GeneratorTuple& t, const SemigroupProfile& p);

enum class TableProvenance { Extracted, Supplied, Constructed };

/// kinds[i-1] lists the degrees C_(j,i) of the i-th kind, with repetition, ascending.
struct SyzygyTable {
    std::vector<std::vector<std::uint64_t>> kinds;
    TableProvenance provenance = TableProvenance::Extracted;

    std::vector<std::uint64_t> betti() const;
    /// 1 + sum_i (-1)^i sum_j z^C_(j,i)
    SparseIntPolynomial reassemble() const;
};

/// Monomial families of the maximal embedding dimension numerator, kind by kind.
SyzygyTable med_syzygy_table(const GeneratorTuple& t);
SparseIntPolynomial med_numerator(const GeneratorTuple& t, const SemigroupProfile& p);

/// Number of minimal relations of degree s: connected components of the factorization graph minus one.
std::uint64_t first_syzygy_multiplicity(const GeneratorTuple& t, std::uint64_t s);

struct SyzygyExtraction {
    std::optional<SyzygyTable> table;
    std::string ambiguity;
    bool ambiguous() const { return !table.has_value(); }
};

SyzygyExtraction extract_syzygy_table(const SparseIntPolynomial& q, const GeneratorTuple& t,
                                      const ClassificationFlags& flags);

/// Reassembly, Betti alternating sum, kind ordering and (when symmetric) duality. Throws InconsistentBetti.
void validate_syzygy_table(const SyzygyTable& table, const SparseIntPolynomial& q, const GeneratorTuple& t,
                           bool symmetric);

/// {"generators":[...], "kinds":[[...],...]}
SyzygyTable parse_syzygy_table(const std::string& json_text, const GeneratorTuple& t);
std::string syzygy_table_json(const SyzygyTable& table, const GeneratorTuple& t);

} // namespace nsg
