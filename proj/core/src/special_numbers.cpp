#include "nsg/special_numbers.hpp"

#include <mutex>

#include "nsg/error.hpp"

namespace nsg {

namespace {

std::mutex g_bernoulli_mutex;
std::vector<BigRational> g_bernoulli{BigRational(1)};

} // namespace

BigRational bernoulli_number(unsigned k) {
    std::lock_guard lock(g_bernoulli_mutex);
    // sum_{j=0}^{n} C(n+1, j) B_j = 0
    while (g_bernoulli.size() <= k) {
        const auto n = static_cast<unsigned>(g_bernoulli.size());
        BigRational acc = 0;
        for (unsigned j = 0; j < n; ++j) acc += BigRational(binomial(n + 1, j)) * g_bernoulli[j];
        BigRational b = -acc / BigRational(n + 1);
        b.canonicalize();
        g_bernoulli.push_back(b);
    }
    return g_bernoulli[k];
}

BigRational euler_at_zero(unsigned k) {
    if (k == 0) return 1;
    BigRational r = BigRational(-2 * (power(BigInt(2), k + 1) - 1)) * bernoulli_number(k + 1) / BigRational(k + 1);
    r.canonicalize();
    return r;
}

std::vector<CyclotomicNumber> frobenius_carlitz_sequence(unsigned rmax, const CyclotomicNumber& x) {
    const CyclotomicNumber one(x.order(), BigRational(1));
    const CyclotomicNumber shifted = x - one;
    if (shifted.is_zero()) throw Error(ErrorCode::SingularAtOne, "Frobenius-Carlitz numbers are singular at x = 1");
    const CyclotomicNumber inv = shifted.inverse();
    std::vector<CyclotomicNumber> h{one};
    h.reserve(rmax + 1);
    for (unsigned n = 1; n <= rmax; ++n) {
        CyclotomicNumber acc(x.order());
        for (unsigned j = 0; j < n; ++j) acc += h[j] * BigRational(binomial(n, j));
        h.push_back(acc * inv);
    }
    return h;
}

std::vector<BigRational> frobenius_carlitz_sequence(unsigned rmax, const BigRational& x) {
    if (x == 1) throw Error(ErrorCode::SingularAtOne, "Frobenius-Carlitz numbers are singular at x = 1");
    const BigRational inv = 1 / (x - 1);
    std::vector<BigRational> h{BigRational(1)};
    for (unsigned n = 1; n <= rmax; ++n) {
        BigRational acc = 0;
        for (unsigned j = 0; j < n; ++j) acc += BigRational(binomial(n, j)) * h[j];
        h.push_back(acc * inv);
    }
    return h;
}

CyclotomicNumber frobenius_carlitz(unsigned r, const CyclotomicNumber& x) {
    return frobenius_carlitz_sequence(r, x).back();
}

BigRational frobenius_carlitz(unsigned r, const BigRational& x) { return frobenius_carlitz_sequence(r, x).back(); }

} // namespace nsg
