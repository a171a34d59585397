#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "nsg/numbers.hpp"

namespace nsg {

/// Polynomial in one variable with integer coefficients, stored as degree -> nonzero coefficient.
class SparseIntPolynomial {
public:
    using Degree = std::uint64_t;
    static constexpr std::int64_t kZeroDegree = INT64_MIN;

    SparseIntPolynomial() = default;
    SparseIntPolynomial(std::initializer_list<std::pair<Degree, long>> terms);

    static SparseIntPolynomial constant(const BigInt& c);
    static SparseIntPolynomial monomial(Degree degree, const BigInt& coeff);
    /// 1 - z^e
    static SparseIntPolynomial one_minus_power(Degree e);

    const std::map<Degree, BigInt>& terms() const { return terms_; }
    BigInt coefficient(Degree degree) const;
    void add_term(Degree degree, const BigInt& coeff);

    /// kZeroDegree for the zero polynomial.
    std::int64_t degree() const;
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    BigInt leading_coefficient() const;

    BigInt value_at(const BigInt& z) const;
    BigRational value_at(const BigRational& z) const;

    /// z^deg * P(1/z)
    SparseIntPolynomial reflected() const;
    SparseIntPolynomial pow(unsigned exponent) const;

    SparseIntPolynomial& operator+=(const SparseIntPolynomial& other);
    SparseIntPolynomial& operator-=(const SparseIntPolynomial& other);
    SparseIntPolynomial operator-() const;
    friend SparseIntPolynomial operator+(SparseIntPolynomial a, const SparseIntPolynomial& b) { return a += b; }
    friend SparseIntPolynomial operator-(SparseIntPolynomial a, const SparseIntPolynomial& b) { return a -= b; }
    friend SparseIntPolynomial operator*(const SparseIntPolynomial& a, const SparseIntPolynomial& b);
    friend bool operator==(const SparseIntPolynomial& a, const SparseIntPolynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const SparseIntPolynomial& a, const SparseIntPolynomial& b) { return !(a == b); }

    std::string to_string(char var = 'z') const;

private:
    std::map<Degree, BigInt> terms_;
};

struct PolynomialDivision {
    SparseIntPolynomial quotient;
    SparseIntPolynomial remainder;
};

/// Long division by a divisor whose leading coefficient is +1 or -1.
PolynomialDivision poly_exact_divide(const SparseIntPolynomial& num, const SparseIntPolynomial& den);

/// Phi_q, memoized.
const SparseIntPolynomial& cyclotomic_polynomial(std::uint64_t q);

} // namespace nsg
