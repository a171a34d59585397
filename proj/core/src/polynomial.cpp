#include "nsg/polynomial.hpp"

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

#include "nsg/error.hpp"

namespace nsg {

SparseIntPolynomial::SparseIntPolynomial(std::initializer_list<std::pair<Degree, long>> terms) {
    for (const auto& [d, c] : terms) add_term(d, BigInt(c));
}

SparseIntPolynomial SparseIntPolynomial::constant(const BigInt& c) { return monomial(0, c); }

SparseIntPolynomial SparseIntPolynomial::monomial(Degree degree, const BigInt& coeff) {
    SparseIntPolynomial p;
    p.add_term(degree, coeff);
    return p;
}

SparseIntPolynomial SparseIntPolynomial::one_minus_power(Degree e) {
    SparseIntPolynomial p;
    p.add_term(0, 1);
    p.add_term(e, -1);
    return p;
}

BigInt SparseIntPolynomial::coefficient(Degree degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void SparseIntPolynomial::add_term(Degree degree, const BigInt& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(degree, coeff);
    if (inserted) return;
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

std::int64_t SparseIntPolynomial::degree() const {
    if (terms_.empty()) return kZeroDegree;
    return static_cast<std::int64_t>(terms_.rbegin()->first);
}

BigInt SparseIntPolynomial::leading_coefficient() const {
    return terms_.empty() ? BigInt(0) : terms_.rbegin()->second;
}

BigInt SparseIntPolynomial::value_at(const BigInt& z) const {
    BigInt acc = 0;
    for (const auto& [d, c] : terms_) acc += c * power(z, static_cast<unsigned>(d));
    return acc;
}

BigRational SparseIntPolynomial::value_at(const BigRational& z) const {
    BigRational acc = 0;
    for (const auto& [d, c] : terms_) acc += BigRational(c) * power(z, static_cast<unsigned>(d));
    return acc;
}

SparseIntPolynomial SparseIntPolynomial::reflected() const {
    SparseIntPolynomial r;
    if (terms_.empty()) return r;
    const Degree top = terms_.rbegin()->first;
    for (const auto& [d, c] : terms_) r.terms_.emplace(top - d, c);
    return r;
}

SparseIntPolynomial SparseIntPolynomial::pow(unsigned exponent) const {
    SparseIntPolynomial result = constant(1);
    SparseIntPolynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

SparseIntPolynomial& SparseIntPolynomial::operator+=(const SparseIntPolynomial& other) {
    for (const auto& [d, c] : other.terms_) add_term(d, c);
    return *this;
}

SparseIntPolynomial& SparseIntPolynomial::operator-=(const SparseIntPolynomial& other) {
    for (const auto& [d, c] : other.terms_) add_term(d, -c);
    return *this;
}

SparseIntPolynomial SparseIntPolynomial::operator-() const {
    SparseIntPolynomial r = *this;
    for (auto& [d, c] : r.terms_) c = -c;
    return r;
}

SparseIntPolynomial operator*(const SparseIntPolynomial& a, const SparseIntPolynomial& b) {
    SparseIntPolynomial r;
    for (const auto& [da, ca] : a.terms_)
        for (const auto& [db, cb] : b.terms_) r.add_term(da + db, ca * cb);
    return r;
}

std::string SparseIntPolynomial::to_string(char var) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (d == 0) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1) out << mag.get_str() << "*";
        out << var;
        if (d != 1) out << "^" << d;
    }
    return out.str();
}

PolynomialDivision poly_exact_divide(const SparseIntPolynomial& num, const SparseIntPolynomial& den) {
    if (den.is_zero()) throw Error(ErrorCode::DivisionByZeroPolynomial, "divisor is the zero polynomial");
    const BigInt lead = den.leading_coefficient();
    if (lead != 1 && lead != -1)
        throw Error(ErrorCode::NotMonic, "divisor leading coefficient " + lead.get_str() + " is not a unit");
    const auto den_deg = static_cast<SparseIntPolynomial::Degree>(den.degree());

    PolynomialDivision out;
    SparseIntPolynomial rem = num;
    while (!rem.is_zero() && static_cast<SparseIntPolynomial::Degree>(rem.degree()) >= den_deg) {
        const auto shift = static_cast<SparseIntPolynomial::Degree>(rem.degree()) - den_deg;
        const BigInt factor = rem.leading_coefficient() * lead; // lead is its own inverse
        out.quotient.add_term(shift, factor);
        for (const auto& [d, c] : den.terms()) rem.add_term(d + shift, -factor * c);
    }
    out.remainder = std::move(rem);
    return out;
}

namespace {

std::shared_mutex g_cyclo_mutex;
std::unordered_map<std::uint64_t, std::unique_ptr<SparseIntPolynomial>> g_cyclo_table;

} // namespace

const SparseIntPolynomial& cyclotomic_polynomial(std::uint64_t q) {
    if (q == 0) throw Error(ErrorCode::NegativeArgument, "cyclotomic order must be positive");
    {
        std::shared_lock lock(g_cyclo_mutex);
        auto it = g_cyclo_table.find(q);
        if (it != g_cyclo_table.end()) return *it->second;
    }
    // x^q - 1 divided by Phi_d for every proper divisor d
    SparseIntPolynomial p;
    p.add_term(q, 1);
    p.add_term(0, -1);
    for (std::uint64_t d : divisors(q)) {
        if (d == q) continue;
        auto div = poly_exact_divide(p, cyclotomic_polynomial(d));
        if (!div.remainder.is_zero())
            throw Error(ErrorCode::InternalInconsistency, "cyclotomic division left a remainder");
        p = std::move(div.quotient);
    }
    std::unique_lock lock(g_cyclo_mutex);
    auto [it, inserted] = g_cyclo_table.try_emplace(q, std::make_unique<SparseIntPolynomial>(std::move(p)));
    return *it->second;
}

} // namespace nsg
