#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace nsg {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Canonical num/den.
BigRational make_rational(const BigInt& num, const BigInt& den);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
BigInt power(const BigInt& base, unsigned exponent);
BigRational power(const BigRational& base, unsigned exponent);

/// Square root when the argument is a perfect square, nothing otherwise.
std::optional<BigInt> exact_sqrt(const BigInt& value);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const BigInt& value);
std::string to_string(const BigRational& value);

std::uint64_t euler_phi(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
bool is_prime(std::uint64_t n);
int mobius(std::uint64_t n);

inline BigInt to_big(std::uint64_t v) {
    BigInt r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return r;
}

inline BigInt to_big(std::int64_t v) {
    if (v >= 0) return to_big(static_cast<std::uint64_t>(v));
    BigInt r = to_big(static_cast<std::uint64_t>(-(v + 1)));
    return -r - 1;
}

} // namespace nsg
