#include "nsg/numbers.hpp"

#include "nsg/error.hpp"

namespace nsg {

BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error(ErrorCode::NotInvertible, "zero denominator");
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned n, unsigned k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt power(const BigInt& base, unsigned exponent) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

BigRational power(const BigRational& base, unsigned exponent) {
    BigRational r(power(BigInt(base.get_num()), exponent), power(BigInt(base.get_den()), exponent));
    return r;
}

std::optional<BigInt> exact_sqrt(const BigInt& value) {
    if (value < 0) return std::nullopt;
    if (mpz_perfect_square_p(value.get_mpz_t()) == 0) return std::nullopt;
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), value.get_mpz_t());
    return r;
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const BigRational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> low, high;
    for (std::uint64_t k = 1; k * k <= n; ++k) {
        if (n % k != 0) continue;
        low.push_back(k);
        if (k != n / k) high.push_back(n / k);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

int mobius(std::uint64_t n) {
    int sign = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

} // namespace nsg
