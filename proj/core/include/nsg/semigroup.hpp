#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nsg/numbers.hpp"

namespace nsg {

/// Sorted minimal generating set d_1 < ... < d_m of a numerical semigroup with gcd 1.
class GeneratorTuple {
public:
    /// Sorts, drops repeats and checks positivity, coprimality and minimality.
    static GeneratorTuple validate(std::span<const std::int64_t> raw);

    const std::vector<std::uint64_t>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    std::uint64_t operator[](std::size_t i) const { return gens_[i]; }
    std::uint64_t multiplicity() const { return gens_.front(); }
    std::uint64_t largest() const { return gens_.back(); }

    /// sigma_k = sum d_i^k
    BigInt sigma(unsigned k) const;
    /// pi_m = product of the generators
    const BigInt& product() const { return product_; }

    bool contains(std::int64_t s) const;
    /// Smallest element of each residue class modulo d_1.
    const std::vector<std::uint64_t>& apery_table() const { return apery_; }

    std::string to_string() const;

private:
    std::vector<std::uint64_t> gens_;
    BigInt product_;
    std::vector<std::uint64_t> apery_;
};

GeneratorTuple validate_generators(std::span<const std::int64_t> raw);
GeneratorTuple validate_generators(std::initializer_list<std::int64_t> raw);

bool membership(const GeneratorTuple& t, std::int64_t s);

struct SemigroupProfile {
    std::vector<std::uint64_t> gaps;
    std::int64_t frobenius = -1;
    std::uint64_t genus = 0;
    std::int64_t conductor = 0;
};

SemigroupProfile profile(const GeneratorTuple& t);

/// Ap(S, d) indexed by residue; d must be one of the generators.
std::vector<std::uint64_t> apery_set(const GeneratorTuple& t, std::uint64_t d);

struct ClassificationFlags {
    bool symmetric = false;
    bool pseudosymmetric = false;
    bool complete_intersection = false;
    bool telescopic = false;
    bool telescopic_decided = true;
    std::optional<std::vector<std::uint64_t>> telescopic_ordering;
    bool med = false;
    bool almost_symmetric_med = false;
    std::uint64_t med_pair_sum = 0;
};

using CompleteIntersectionTest = std::function<bool(const GeneratorTuple&)>;

/// Without a test callback complete_intersection mirrors telescopic.
ClassificationFlags classify(const GeneratorTuple& t, const SemigroupProfile& p,
                             const CompleteIntersectionTest& ci_test = {});

constexpr std::size_t kMaxTelescopicSearch = 8;

bool is_telescopic_ordering(std::span<const std::uint64_t> ordering);
/// Tries all orderings; throws TooManyGenerators beyond kMaxTelescopicSearch.
std::optional<std::vector<std::uint64_t>> find_telescopic_ordering(const GeneratorTuple& t);

/// Membership in the monoid generated by gens (no gcd condition), sieving up to s.
bool generated_by(std::span<const std::uint64_t> gens, std::uint64_t s);

} // namespace nsg
