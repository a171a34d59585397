#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nsg/numbers.hpp"

namespace nsg {

/// Arithmetic context for Q(xi_q): power basis 1, xi, ..., xi^(phi(q)-1) modulo Phi_q.
struct CyclotomicField {
    std::uint64_t order = 1;
    std::size_t degree = 1;                       // phi(q)
    std::vector<BigInt> modulus;                  // Phi_q, low to high, monic
    std::vector<std::vector<BigRational>> powers; // xi^k reduced, k = 0..q-1

    void reduce(std::vector<BigRational>& poly) const;
};

/// Shared, memoized per order.
std::shared_ptr<const CyclotomicField> cyclotomic_field(std::uint64_t q);

class CyclotomicNumber {
public:
    CyclotomicNumber();
    explicit CyclotomicNumber(std::uint64_t q);
    CyclotomicNumber(std::uint64_t q, const BigRational& value);
    CyclotomicNumber(std::uint64_t q, std::vector<BigRational> coeffs);

    /// xi_q^k for any integer k
    static CyclotomicNumber root_power(std::uint64_t q, std::int64_t k);

    std::uint64_t order() const { return field_->order; }
    const std::vector<BigRational>& coeffs() const { return coeffs_; }
    const CyclotomicField& field() const { return *field_; }

    bool is_zero() const;
    CyclotomicNumber conjugate() const;
    CyclotomicNumber inverse() const;
    CyclotomicNumber times_root_power(std::int64_t k) const;

    CyclotomicNumber& operator+=(const CyclotomicNumber& other);
    CyclotomicNumber& operator-=(const CyclotomicNumber& other);
    CyclotomicNumber& operator*=(const CyclotomicNumber& other);
    CyclotomicNumber& operator*=(const BigRational& scalar);
    CyclotomicNumber operator-() const;

    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const BigRational& s) { return a *= s; }
    friend CyclotomicNumber operator*(const BigRational& s, CyclotomicNumber a) { return a *= s; }
    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

    std::complex<double> to_complex() const;
    /// "c0 + c1*x + ... (mod Phi_q)"
    std::string to_string() const;

private:
    void require_same_order(const CyclotomicNumber& other) const;

    std::shared_ptr<const CyclotomicField> field_;
    std::vector<BigRational> coeffs_;
};

/// The rational value when every non-constant basis coordinate vanishes.
std::optional<BigRational> is_rational(const CyclotomicNumber& a);

} // namespace nsg
