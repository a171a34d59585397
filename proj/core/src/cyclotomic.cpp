#include "nsg/cyclotomic.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

#include "nsg/error.hpp"
#include "nsg/polynomial.hpp"

namespace nsg {

void CyclotomicField::reduce(std::vector<BigRational>& poly) const {
    for (std::size_t i = poly.size(); i-- > degree;) {
        if (poly[i] == 0) continue;
        const BigRational c = poly[i];
        const std::size_t base = i - degree;
        for (std::size_t j = 0; j <= degree; ++j) {
            if (modulus[j] != 0) poly[base + j] -= c * modulus[j];
        }
    }
    poly.resize(degree);
}

namespace {

std::shared_mutex g_field_mutex;
std::unordered_map<std::uint64_t, std::shared_ptr<const CyclotomicField>> g_fields;

std::shared_ptr<const CyclotomicField> build_field(std::uint64_t q) {
    auto f = std::make_shared<CyclotomicField>();
    f->order = q;
    const SparseIntPolynomial& phi = cyclotomic_polynomial(q);
    f->degree = static_cast<std::size_t>(phi.degree());
    f->modulus.assign(f->degree + 1, BigInt(0));
    for (const auto& [d, c] : phi.terms()) f->modulus[d] = c;

    f->powers.reserve(q);
    std::vector<BigRational> cur(f->degree, BigRational(0));
    cur[0] = 1;
    for (std::uint64_t k = 0; k < q; ++k) {
        f->powers.push_back(cur);
        std::vector<BigRational> next(f->degree + 1, BigRational(0));
        for (std::size_t j = 0; j < f->degree; ++j) next[j + 1] = cur[j];
        f->reduce(next);
        cur = std::move(next);
    }
    return f;
}

std::int64_t floor_mod(std::int64_t k, std::uint64_t q) {
    const auto qq = static_cast<std::int64_t>(q);
    std::int64_t r = k % qq;
    return r < 0 ? r + qq : r;
}

} // namespace

std::shared_ptr<const CyclotomicField> cyclotomic_field(std::uint64_t q) {
    if (q == 0) throw Error(ErrorCode::NegativeArgument, "cyclotomic order must be positive");
    {
        std::shared_lock lock(g_field_mutex);
        auto it = g_fields.find(q);
        if (it != g_fields.end()) return it->second;
    }
    auto built = build_field(q);
    std::unique_lock lock(g_field_mutex);
    auto [it, inserted] = g_fields.try_emplace(q, std::move(built));
    return it->second;
}

CyclotomicNumber::CyclotomicNumber() : CyclotomicNumber(1) {}

CyclotomicNumber::CyclotomicNumber(std::uint64_t q)
    : field_(cyclotomic_field(q)), coeffs_(field_->degree, BigRational(0)) {}

CyclotomicNumber::CyclotomicNumber(std::uint64_t q, const BigRational& value) : CyclotomicNumber(q) {
    coeffs_[0] = value;
    coeffs_[0].canonicalize();
}

CyclotomicNumber::CyclotomicNumber(std::uint64_t q, std::vector<BigRational> coeffs)
    : field_(cyclotomic_field(q)), coeffs_(std::move(coeffs)) {
    // gmp equality assumes lowest terms; callers may hand in raw mpq_class(n, d)
    for (auto& c : coeffs_) c.canonicalize();
    if (coeffs_.size() < field_->degree) coeffs_.resize(field_->degree, BigRational(0));
    if (coeffs_.size() > field_->degree) field_->reduce(coeffs_);
}

CyclotomicNumber CyclotomicNumber::root_power(std::uint64_t q, std::int64_t k) {
    CyclotomicNumber r(q);
    r.coeffs_ = r.field_->powers[static_cast<std::size_t>(floor_mod(k, q))];
    return r;
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

CyclotomicNumber CyclotomicNumber::conjugate() const {
    CyclotomicNumber r(order());
    const auto q = order();
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        const auto& p = field_->powers[(q - j % q) % q];
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] != 0) r.coeffs_[i] += coeffs_[j] * p[i];
    }
    return r;
}

CyclotomicNumber CyclotomicNumber::times_root_power(std::int64_t k) const {
    const auto q = order();
    const auto shift = static_cast<std::size_t>(floor_mod(k, q));
    CyclotomicNumber r(q);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        const auto& p = field_->powers[(j + shift) % q];
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] != 0) r.coeffs_[i] += coeffs_[j] * p[i];
    }
    return r;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw Error(ErrorCode::NotInvertible, "zero has no inverse");
    const std::size_t n = coeffs_.size();
    // column j of the multiplication matrix is this * xi^j
    std::vector<std::vector<BigRational>> a(n, std::vector<BigRational>(n + 1, BigRational(0)));
    for (std::size_t j = 0; j < n; ++j) {
        CyclotomicNumber col = times_root_power(static_cast<std::int64_t>(j));
        for (std::size_t i = 0; i < n; ++i) a[i][j] = col.coeffs_[i];
    }
    a[0][n] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw Error(ErrorCode::NotInvertible, "singular multiplication matrix");
        std::swap(a[pivot], a[col]);
        const BigRational inv = 1 / a[col][col];
        for (std::size_t k = col; k <= n; ++k) a[col][k] *= inv;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const BigRational f = a[row][col];
            for (std::size_t k = col; k <= n; ++k) a[row][k] -= f * a[col][k];
        }
    }
    CyclotomicNumber r(order());
    for (std::size_t i = 0; i < n; ++i) r.coeffs_[i] = a[i][n];
    return r;
}

void CyclotomicNumber::require_same_order(const CyclotomicNumber& other) const {
    if (order() != other.order())
        throw Error(ErrorCode::OrderMismatch,
                    "orders " + std::to_string(order()) + " and " + std::to_string(other.order()));
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& other) {
    require_same_order(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& other) {
    require_same_order(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& other) {
    require_same_order(other);
    const std::size_t n = coeffs_.size();
    std::vector<BigRational> prod(2 * n - 1, BigRational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (other.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    field_->reduce(prod);
    coeffs_ = std::move(prod);
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const BigRational& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a.order() == b.order() && a.coeffs_ == b.coeffs_;
}

std::complex<double> CyclotomicNumber::to_complex() const {
    std::complex<double> acc = 0;
    const double step = 2.0 * std::numbers::pi / static_cast<double>(order());
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        acc += coeffs_[j].get_d() * std::polar(1.0, step * static_cast<double>(j));
    }
    return acc;
}

std::string CyclotomicNumber::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        if (!first) out << " + ";
        first = false;
        out << nsg::to_string(coeffs_[j]);
        if (j > 0) out << "*x" << (j > 1 ? "^" + std::to_string(j) : "");
    }
    if (first) out << "0";
    if (order() > 2) out << " (mod Phi_" << order() << ")";
    return out.str();
}

std::optional<BigRational> is_rational(const CyclotomicNumber& a) {
    const auto& c = a.coeffs();
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return std::nullopt;
    return c[0];
}

} // namespace nsg
