#pragma once

#include <vector>

#include "nsg/cyclotomic.hpp"
#include "nsg/numbers.hpp"

namespace nsg {

/// B_k with B_1 = -1/2. Memoized and thread-safe.
BigRational bernoulli_number(unsigned k);

/// E_k(0), the Euler polynomials at zero.
BigRational euler_at_zero(unsigned k);

/// H_0(x) .. H_rmax(x) from (1 - x)/(e^t - x) = sum H_n(x) t^n / n!. Throws SingularAtOne at x = 1.
std::vector<CyclotomicNumber> frobenius_carlitz_sequence(unsigned rmax, const CyclotomicNumber& x);
std::vector<BigRational> frobenius_carlitz_sequence(unsigned rmax, const BigRational& x);

CyclotomicNumber frobenius_carlitz(unsigned r, const CyclotomicNumber& x);
BigRational frobenius_carlitz(unsigned r, const BigRational& x);

} // namespace nsg
