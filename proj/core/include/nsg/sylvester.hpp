#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "nsg/cyclotomic.hpp"
#include "nsg/numbers.hpp"
#include "nsg/report.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

/// Number of nonnegative integer solutions of sum x_i d_i = s.
BigInt denumerant_dp(const GeneratorTuple& t, std::uint64_t s);
/// W(0) .. W(smax)
std::vector<BigInt> denumerant_table(const GeneratorTuple& t, std::uint64_t smax);

/// Moduli q > 1 dividing at least one generator, ascending.
std::vector<std::uint64_t> wave_moduli(const GeneratorTuple& t);

/// Split of the generators by divisibility by q.
struct WaveSpec {
    std::uint64_t q = 1;
    std::vector<std::uint64_t> divisible; // generators q divides
    std::vector<std::uint64_t> rest;
    std::size_t omega = 0;
    BigInt pi_omega; // product of the divisible generators

    /// power sums over the divisible (lambda) and remaining (gamma) generators
    BigInt lambda(unsigned k) const;
    BigInt gamma(unsigned k) const;
};

WaveSpec wave_spec(const GeneratorTuple& t, std::uint64_t q);

/// r! [t^r] e^(base t) prod_i (d_i t)/(e^(d_i t) - 1), r = 0..rmax.
std::vector<BigRational> umbral_bernoulli_powers(const BigRational& base, std::span<const std::uint64_t> d, unsigned rmax);
/// Same expansion with Euler values at zero in place of Bernoulli numbers.
std::vector<BigRational> umbral_euler_powers(const BigRational& base, std::span<const std::uint64_t> d, unsigned rmax);

/// Coefficients of W_1(s), highest power of s first (s^(m-1) .. s^0).
std::vector<BigRational> wave1_polynomial(const GeneratorTuple& t);

/// Coefficients of a partial wave, highest power of s first.
/// For q >= 3: L and i*M of the (n, q-n) pair. For q = 2: L only, rational, normalized so L_1 = 1.
struct WavePolynomials {
    std::uint64_t q = 1;
    std::uint64_t n = 1;
    std::size_t omega = 0;
    std::vector<CyclotomicNumber> L;
    std::vector<CyclotomicNumber> iM;
};

WavePolynomials wave2_polynomial(const GeneratorTuple& t);
WavePolynomials waveq_partial(const GeneratorTuple& t, std::uint64_t q, std::uint64_t n);

/// Leading coefficients (L_1, i*M_1) from their closed form, valid for q >= 2.
std::pair<CyclotomicNumber, CyclotomicNumber> leading_wave_coefficients(const GeneratorTuple& t, std::uint64_t q,
                                                                        std::uint64_t n);

/// Cached evaluator for all waves of one generator tuple. Thread-safe.
class SylvesterWaves {
public:
    explicit SylvesterWaves(GeneratorTuple t);

    const GeneratorTuple& tuple() const { return t_; }
    /// 1 followed by wave_moduli
    const std::vector<std::uint64_t>& moduli() const { return moduli_; }

    BigRational eval(std::uint64_t q, std::int64_t s) const;
    BigRational total(std::int64_t s) const;
    std::map<std::uint64_t, BigRational> breakdown(std::int64_t s) const;

private:
    struct ResidueTable {
        // coeffs[rho] = polynomial in s, highest power first
        std::vector<std::vector<BigRational>> coeffs;
    };
    const ResidueTable& table(std::uint64_t q) const;
    ResidueTable build_table(std::uint64_t q) const;

    GeneratorTuple t_;
    std::vector<std::uint64_t> moduli_;
    std::vector<BigRational> wave1_;
    mutable std::mutex mutex_;
    mutable std::map<std::uint64_t, std::shared_ptr<const ResidueTable>> tables_;
};

BigRational wave_eval(const GeneratorTuple& t, std::uint64_t q, std::int64_t s);
/// Sums the (n, q-n) pairs one by one; each pair must be real and their total rational.
BigRational wave_eval_direct(const GeneratorTuple& t, std::uint64_t q, std::int64_t s);

/// Wave sum against the denumerant on s >= 0, zeros on -sigma_1 < s < 0, reciprocity everywhere in range.
IdentityReport wave_sum_verify(const SylvesterWaves& waves, std::int64_t s_lo, std::int64_t s_hi);
IdentityReport wave_sum_verify(const GeneratorTuple& t, std::int64_t s_lo, std::int64_t s_hi);

enum class Lemma1Case { Integer, HalfInteger, Neither };

struct Lemma1Outcome {
    Lemma1Case which = Lemma1Case::Neither;
    bool l_vanishes = false;
    bool m_vanishes = false;
    bool l_expected_zero = false;
    bool m_expected_zero = false;
    bool pass = false;
};

Lemma1Outcome lemma1_evaluate(const GeneratorTuple& t, std::uint64_t q, std::uint64_t n);
bool lemma1_check(const GeneratorTuple& t, std::uint64_t q, std::uint64_t n);
/// One check per admissible (q, n), n < q/2.
IdentityReport lemma1_report(const GeneratorTuple& t);

} // namespace nsg
