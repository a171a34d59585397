#include "nsg/sylvester.hpp"

#include <numeric>

#include "nsg/error.hpp"
#include "nsg/special_numbers.hpp"

namespace nsg {

namespace {

std::int64_t floor_mod(std::int64_t a, std::uint64_t q) {
    const auto qq = static_cast<std::int64_t>(q);
    const std::int64_t r = a % qq;
    return r < 0 ? r + qq : r;
}

// c_r = sum_k C(r,k) a_k b_(r-k), the moment sequence of a sum of independent umbrae.
template <typename T>
std::vector<T> umbral_convolve(const std::vector<T>& a, const std::vector<T>& b, const T& zero) {
    std::vector<T> c(a.size(), zero);
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t k = 0; k <= r; ++k)
            c[r] += a[k] * b[r - k] * BigRational(binomial(static_cast<unsigned>(r), static_cast<unsigned>(k)));
    return c;
}

std::vector<BigRational> base_powers(const BigRational& base, unsigned rmax) {
    std::vector<BigRational> v(rmax + 1);
    v[0] = 1;
    for (unsigned r = 1; r <= rmax; ++r) v[r] = v[r - 1] * base;
    return v;
}

template <typename Coeff>
std::vector<BigRational> umbral_powers(const BigRational& base, std::span<const std::uint64_t> d, unsigned rmax,
                                       Coeff coeff) {
    std::vector<BigRational> acc = base_powers(base, rmax);
    for (std::uint64_t di : d) {
        std::vector<BigRational> moments(rmax + 1);
        BigRational scale = 1;
        for (unsigned k = 0; k <= rmax; ++k) {
            moments[k] = coeff(k) * scale;
            scale *= BigRational(to_big(di));
        }
        acc = umbral_convolve(acc, moments, BigRational(0));
    }
    return acc;
}

BigRational sign_power(std::size_t e) { return (e % 2 == 0) ? BigRational(1) : BigRational(-1); }

void require_divides_something(const GeneratorTuple& t, std::uint64_t q) {
    for (std::uint64_t d : t.generators())
        if (d % q == 0) return;
    throw Error(ErrorCode::ModulusDividesNothing, std::to_string(q) + " divides no generator of " + t.to_string());
}

// Ramanujan sum c_q(j) = sum over units n of xi_q^(j n)
BigRational ramanujan_sum(std::uint64_t q, std::int64_t j) {
    const std::uint64_t g = std::gcd(static_cast<std::uint64_t>(floor_mod(j, q)), q);
    const std::uint64_t rest = q / g;
    return BigRational(mobius(rest) * static_cast<long>(euler_phi(q) / euler_phi(rest)));
}

} // namespace

BigInt denumerant_dp(const GeneratorTuple& t, std::uint64_t s) { return denumerant_table(t, s).back(); }

std::vector<BigInt> denumerant_table(const GeneratorTuple& t, std::uint64_t smax) {
    std::vector<BigInt> w(smax + 1, BigInt(0));
    w[0] = 1;
    for (std::uint64_t d : t.generators())
        for (std::uint64_t s = d; s <= smax; ++s) w[s] += w[s - d];
    return w;
}

std::vector<std::uint64_t> wave_moduli(const GeneratorTuple& t) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d : t.generators())
        for (std::uint64_t q : divisors(d))
            if (q > 1) out.push_back(q);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

BigInt WaveSpec::lambda(unsigned k) const {
    BigInt acc = 0;
    for (auto d : divisible) acc += power(to_big(d), k);
    return acc;
}

BigInt WaveSpec::gamma(unsigned k) const {
    BigInt acc = 0;
    for (auto d : rest) acc += power(to_big(d), k);
    return acc;
}

WaveSpec wave_spec(const GeneratorTuple& t, std::uint64_t q) {
    if (q == 0) throw Error(ErrorCode::BadResidue, "modulus must be positive");
    if (q > 1) require_divides_something(t, q);
    WaveSpec w;
    w.q = q;
    w.pi_omega = 1;
    for (std::uint64_t d : t.generators()) {
        if (d % q == 0) {
            w.divisible.push_back(d);
            w.pi_omega *= to_big(d);
        } else {
            w.rest.push_back(d);
        }
    }
    w.omega = w.divisible.size();
    return w;
}

std::vector<BigRational> umbral_bernoulli_powers(const BigRational& base, std::span<const std::uint64_t> d,
                                                 unsigned rmax) {
    return umbral_powers(base, d, rmax, [](unsigned k) { return bernoulli_number(k); });
}

std::vector<BigRational> umbral_euler_powers(const BigRational& base, std::span<const std::uint64_t> d, unsigned rmax) {
    return umbral_powers(base, d, rmax, [](unsigned k) { return euler_at_zero(k); });
}

std::vector<BigRational> wave1_polynomial(const GeneratorTuple& t) {
    const auto m = static_cast<unsigned>(t.size());
    const auto f = umbral_bernoulli_powers(BigRational(t.sigma(1)), t.generators(), m - 1);
    const BigRational scale = 1 / BigRational(factorial(m - 1) * t.product());
    std::vector<BigRational> coeffs;
    for (unsigned r = 0; r < m; ++r) coeffs.push_back(scale * BigRational(binomial(m - 1, r)) * f[r]);
    return coeffs;
}

WavePolynomials wave2_polynomial(const GeneratorTuple& t) {
    const WaveSpec spec = [&] {
        for (std::uint64_t d : t.generators())
            if (d % 2 == 0) return wave_spec(t, 2);
        throw Error(ErrorCode::NoEvenGenerator, t.to_string() + " has no even generator");
    }();
    const auto w = static_cast<unsigned>(spec.omega);
    const auto l = umbral_bernoulli_powers(BigRational(spec.lambda(1)), spec.divisible, w - 1);
    const auto g = umbral_euler_powers(BigRational(spec.gamma(1)), spec.rest, w - 1);
    WavePolynomials out;
    out.q = 2;
    out.n = 1;
    out.omega = spec.omega;
    for (unsigned r = 0; r < w; ++r) {
        BigRational acc = 0;
        for (unsigned k = 0; k <= r; ++k) acc += BigRational(binomial(r, k)) * g[k] * l[r - k];
        out.L.emplace_back(2, BigRational(binomial(w - 1, r)) * acc);
    }
    return out;
}

std::pair<CyclotomicNumber, CyclotomicNumber> leading_wave_coefficients(const GeneratorTuple& t, std::uint64_t q,
                                                                        std::uint64_t n) {
    const WaveSpec spec = wave_spec(t, q);
    CyclotomicNumber denom(q, BigRational(1));
    for (std::uint64_t d : spec.rest)
        denom *= CyclotomicNumber(q, BigRational(1)) - CyclotomicNumber::root_power(q, static_cast<std::int64_t>(d * n % q));
    const CyclotomicNumber inv = denom.inverse();
    const std::uint64_t s1 = static_cast<std::uint64_t>(mpz_fdiv_ui(t.sigma(1).get_mpz_t(), q));
    const CyclotomicNumber twist =
        CyclotomicNumber::root_power(q, static_cast<std::int64_t>(s1 * n % q)) * sign_power(t.size() - spec.omega);
    const CyclotomicNumber one(q, BigRational(1));
    return {(one + twist) * inv, (one - twist) * inv};
}

WavePolynomials waveq_partial(const GeneratorTuple& t, std::uint64_t q, std::uint64_t n) {
    if (q < 3) throw Error(ErrorCode::BadResidue, "partial waves are paired for q >= 3");
    const WaveSpec spec = wave_spec(t, q);
    if (n == 0 || 2 * n >= q || std::gcd(n, q) != 1)
        throw Error(ErrorCode::BadResidue, "need 1 <= n < q/2 with gcd(n, q) = 1, got n = " + std::to_string(n));

    const auto w = static_cast<unsigned>(spec.omega);
    const auto l = umbral_bernoulli_powers(BigRational(spec.lambda(1)), spec.divisible, w - 1);

    // h_k = (gamma_1 + sum H(xi^(d n)) d)^k, divided by prod (1 - xi^(d n))
    const CyclotomicNumber zero(q);
    const CyclotomicNumber one(q, BigRational(1));
    std::vector<CyclotomicNumber> h(w, zero);
    {
        BigRational base = BigRational(spec.gamma(1));
        BigRational p = 1;
        for (unsigned k = 0; k < w; ++k, p *= base) h[k] = CyclotomicNumber(q, p);
    }
    CyclotomicNumber denom = one;
    for (std::uint64_t d : spec.rest) {
        const auto x = CyclotomicNumber::root_power(q, static_cast<std::int64_t>(d * n % q));
        denom *= one - x;
        const auto carlitz = frobenius_carlitz_sequence(w - 1, x);
        std::vector<CyclotomicNumber> moments(w, zero);
        BigRational scale = 1;
        for (unsigned k = 0; k < w; ++k, scale *= BigRational(to_big(d))) moments[k] = carlitz[k] * scale;
        h = umbral_convolve(h, moments, zero);
    }
    const CyclotomicNumber inv = denom.inverse();

    WavePolynomials out;
    out.q = q;
    out.n = n;
    out.omega = spec.omega;
    std::vector<CyclotomicNumber> plus(w, zero), minus(w, zero);
    for (unsigned k = 0; k < w; ++k) {
        plus[k] = h[k] * inv;
        minus[k] = plus[k].conjugate();
    }
    for (unsigned r = 0; r < w; ++r) {
        CyclotomicNumber lsum = zero, msum = zero;
        for (unsigned k = 0; k <= r; ++k) {
            const BigRational c = BigRational(binomial(r, k)) * l[r - k];
            lsum += (plus[k] + minus[k]) * c;
            msum += (plus[k] - minus[k]) * c;
        }
        const BigRational outer = BigRational(binomial(w - 1, r));
        out.L.push_back(lsum * outer);
        out.iM.push_back(msum * outer);
    }

    const auto [l1, m1] = leading_wave_coefficients(t, q, n);
    if (out.L.front() != l1 || out.iM.front() != m1)
        throw Error(ErrorCode::InternalInconsistency, "leading wave coefficients disagree with their closed form");
    return out;
}

SylvesterWaves::SylvesterWaves(GeneratorTuple t) : t_(std::move(t)), wave1_(wave1_polynomial(t_)) {
    moduli_.push_back(1);
    for (auto q : wave_moduli(t_)) moduli_.push_back(q);
}

SylvesterWaves::ResidueTable SylvesterWaves::build_table(std::uint64_t q) const {
    ResidueTable table;
    const WaveSpec spec = wave_spec(t_, q);
    const auto w = static_cast<unsigned>(spec.omega);
    if (q == 2) {
        const WavePolynomials p = wave2_polynomial(t_);
        BigRational scale = 1 / BigRational(factorial(w - 1) * spec.pi_omega);
        for (std::size_t i = 0; i < t_.size() - spec.omega; ++i) scale /= 2;
        std::vector<BigRational> even, odd;
        for (const auto& c : p.L) {
            const BigRational v = *is_rational(c) * scale;
            even.push_back(v);
            odd.push_back(-v);
        }
        table.coeffs = {even, odd};
        return table;
    }
    // Summing the n-th partial over all units n is a Galois trace, evaluated with Ramanujan sums.
    const WavePolynomials p = waveq_partial(t_, q, 1);
    const BigRational scale = 1 / BigRational(factorial(w - 1) * spec.pi_omega);
    table.coeffs.assign(q, std::vector<BigRational>(w, BigRational(0)));
    std::vector<BigRational> trace_of_power(q);
    for (std::uint64_t j = 0; j < q; ++j) trace_of_power[j] = ramanujan_sum(q, static_cast<std::int64_t>(j));
    for (unsigned k = 0; k < w; ++k) {
        const CyclotomicNumber a = (p.L[k] + p.iM[k]) * BigRational(1, 2);
        const auto& c = a.coeffs();
        for (std::uint64_t rho = 0; rho < q; ++rho) {
            BigRational acc = 0;
            for (std::size_t j = 0; j < c.size(); ++j)
                if (c[j] != 0) acc += c[j] * trace_of_power[static_cast<std::size_t>(floor_mod(static_cast<std::int64_t>(j) - static_cast<std::int64_t>(rho), q))];
            table.coeffs[rho][k] = acc * scale;
        }
    }
    return table;
}

const SylvesterWaves::ResidueTable& SylvesterWaves::table(std::uint64_t q) const {
    {
        std::lock_guard lock(mutex_);
        auto it = tables_.find(q);
        if (it != tables_.end()) return *it->second;
    }
    auto built = std::make_shared<const ResidueTable>(build_table(q));
    std::lock_guard lock(mutex_);
    auto [it, inserted] = tables_.try_emplace(q, std::move(built));
    return *it->second;
}

namespace {

BigRational horner(const std::vector<BigRational>& coeffs, const BigRational& s) {
    BigRational acc = 0;
    for (const auto& c : coeffs) acc = acc * s + c;
    return acc;
}

} // namespace

BigRational SylvesterWaves::eval(std::uint64_t q, std::int64_t s) const {
    const BigRational x(to_big(s));
    if (q == 1) return horner(wave1_, x);
    if (std::find(moduli_.begin(), moduli_.end(), q) == moduli_.end())
        throw Error(ErrorCode::ModulusDividesNothing, std::to_string(q) + " divides no generator of " + t_.to_string());
    const auto& tab = table(q);
    return horner(tab.coeffs[static_cast<std::size_t>(floor_mod(s, q))], x);
}

BigRational SylvesterWaves::total(std::int64_t s) const {
    BigRational acc = 0;
    for (auto q : moduli_) acc += eval(q, s);
    return acc;
}

std::map<std::uint64_t, BigRational> SylvesterWaves::breakdown(std::int64_t s) const {
    std::map<std::uint64_t, BigRational> out;
    for (auto q : moduli_) out[q] = eval(q, s);
    return out;
}

BigRational wave_eval(const GeneratorTuple& t, std::uint64_t q, std::int64_t s) { return SylvesterWaves(t).eval(q, s); }

BigRational wave_eval_direct(const GeneratorTuple& t, std::uint64_t q, std::int64_t s) {
    const BigRational x(to_big(s));
    if (q == 1) return horner(wave1_polynomial(t), x);
    const WaveSpec spec = wave_spec(t, q);
    const auto w = static_cast<unsigned>(spec.omega);
    BigRational scale = 1 / BigRational(factorial(w - 1) * spec.pi_omega);
    if (q == 2) {
        for (std::size_t i = 0; i < t.size() - spec.omega; ++i) scale /= 2;
        std::vector<BigRational> l;
        for (const auto& c : wave2_polynomial(t).L) l.push_back(*is_rational(c));
        return scale * horner(l, x) * (s % 2 == 0 ? 1 : -1);
    }
    CyclotomicNumber acc(q);
    for (std::uint64_t n = 1; 2 * n < q; ++n) {
        if (std::gcd(n, q) != 1) continue;
        const WavePolynomials p = waveq_partial(t, q, n);
        CyclotomicNumber lval(q), mval(q);
        for (unsigned k = 0; k < w; ++k) {
            lval = lval * x + p.L[k];
            mval = mval * x + p.iM[k];
        }
        const auto fwd = CyclotomicNumber::root_power(q, s * static_cast<std::int64_t>(n));
        const auto back = CyclotomicNumber::root_power(q, -s * static_cast<std::int64_t>(n));
        // L cos + M sin, with cos and i sin written through xi^(+-sn)
        CyclotomicNumber pair = lval * (fwd + back) + mval * (back - fwd);
        pair *= BigRational(1, 2);
        if (pair.conjugate() != pair)
            throw Error(ErrorCode::InternalInconsistency, "paired partial wave is not real");
        acc += pair;
    }
    auto value = is_rational(acc);
    if (!value) throw Error(ErrorCode::InternalInconsistency, "wave sum is not rational");
    return *value * scale;
}

Lemma1Outcome lemma1_evaluate(const GeneratorTuple& t, std::uint64_t q, std::uint64_t n) {
    if (q < 2 || n == 0 || n >= q || std::gcd(n, q) != 1)
        throw Error(ErrorCode::BadResidue, "need q >= 2 and a unit n modulo q");
    const WaveSpec spec = wave_spec(t, q);
    const auto [l1, m1] = leading_wave_coefficients(t, q, n);
    Lemma1Outcome out;
    const BigInt num = t.sigma(1) * to_big(n);
    if (mpz_divisible_ui_p(num.get_mpz_t(), q)) {
        out.which = Lemma1Case::Integer;
    } else if (mpz_divisible_ui_p(BigInt(2 * num).get_mpz_t(), q)) {
        out.which = Lemma1Case::HalfInteger;
    }
    const bool parity_odd = (t.size() - spec.omega) % 2 == 1;
    if (out.which == Lemma1Case::Integer) {
        out.l_expected_zero = parity_odd;
        out.m_expected_zero = !parity_odd;
    } else if (out.which == Lemma1Case::HalfInteger) {
        out.l_expected_zero = !parity_odd;
        out.m_expected_zero = parity_odd;
    }
    out.l_vanishes = l1.is_zero();
    out.m_vanishes = m1.is_zero();
    out.pass = out.l_vanishes == out.l_expected_zero && out.m_vanishes == out.m_expected_zero;
    return out;
}

bool lemma1_check(const GeneratorTuple& t, std::uint64_t q, std::uint64_t n) { return lemma1_evaluate(t, q, n).pass; }

} // namespace nsg

namespace nsg {

IdentityReport wave_sum_verify(const SylvesterWaves& waves, std::int64_t s_lo, std::int64_t s_hi) {
    const GeneratorTuple& t = waves.tuple();
    IdentityReport report;
    const std::int64_t s1 = t.sigma(1).get_si();
    const BigRational reflect_sign = (t.size() % 2 == 1) ? BigRational(1) : BigRational(-1);
    std::vector<BigInt> dp;
    if (s_hi >= 0) dp = denumerant_table(t, static_cast<std::uint64_t>(s_hi));
    for (std::int64_t s = s_lo; s <= s_hi; ++s) {
        const BigRational value = waves.total(s);
        CheckParams params;
        params.s = s;
        if (s >= 0) {
            report.push_back(make_check(Family::WaveSum, "denumerant", params,
                                        BigRational(dp[static_cast<std::size_t>(s)]), value));
        } else if (s > -s1) {
            report.push_back(make_check(Family::WaveSum, "zero", params, BigRational(0), value));
        }
        report.push_back(make_check(Family::WaveSum, "reciprocity", params, reflect_sign * waves.total(-s - s1), value,
                                    CheckRole::CrossCheck));
    }
    return report;
}

IdentityReport wave_sum_verify(const GeneratorTuple& t, std::int64_t s_lo, std::int64_t s_hi) {
    return wave_sum_verify(SylvesterWaves(t), s_lo, s_hi);
}

IdentityReport lemma1_report(const GeneratorTuple& t) {
    IdentityReport report;
    for (std::uint64_t q : wave_moduli(t)) {
        for (std::uint64_t n = 1; 2 * n <= q; ++n) {
            if (std::gcd(n, q) != 1 || (2 * n == q && q != 2)) continue;
            const Lemma1Outcome o = lemma1_evaluate(t, q, n);
            CheckParams params;
            params.q = static_cast<std::int64_t>(q);
            params.n = static_cast<std::int64_t>(n);
            Check c = make_check(Family::Lemma1, "leading_vanishing", params, BigRational(1),
                                 BigRational(o.pass ? 1 : 0));
            const char* which = o.which == Lemma1Case::Integer       ? "integer"
                                : o.which == Lemma1Case::HalfInteger ? "half-integer"
                                                                     : "neither";
            c.note = std::string(which) + (o.l_vanishes ? ", L_1 = 0" : ", L_1 != 0") +
                     (o.m_vanishes ? ", M_1 = 0" : ", M_1 != 0");
            report.push_back(std::move(c));
        }
    }
    return report;
}

} // namespace nsg
