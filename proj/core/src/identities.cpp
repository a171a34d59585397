#include "nsg/identities.hpp"

#include <algorithm>
#include <numeric>

#include "nsg/error.hpp"
#include "nsg/sylvester.hpp"

namespace nsg {

namespace {

BigRational signed_one(std::size_t e) { return (e % 2 == 0) ? BigRational(1) : BigRational(-1); }

CheckParams with_k(std::int64_t k) {
    CheckParams p;
    p.k = k;
    return p;
}

CheckParams with_qnr(std::uint64_t q, std::uint64_t n, std::optional<unsigned> r = std::nullopt) {
    CheckParams p;
    p.q = static_cast<std::int64_t>(q);
    p.n = static_cast<std::int64_t>(n);
    if (r) p.r = *r;
    return p;
}

std::size_t omega_of(const GeneratorTuple& t, std::uint64_t q) {
    std::size_t w = 0;
    for (auto d : t.generators())
        if (d % q == 0) ++w;
    return w;
}

// units n modulo q with n < q/2 (n = 1 for q = 2)
std::vector<std::uint64_t> half_units(std::uint64_t q) {
    std::vector<std::uint64_t> out;
    if (q == 2) return {1};
    for (std::uint64_t n = 1; 2 * n < q; ++n)
        if (std::gcd(n, q) == 1) out.push_back(n);
    return out;
}

CyclotomicNumber from_residue_sums(std::uint64_t q, const std::vector<BigInt>& acc) {
    const auto field = cyclotomic_field(q);
    std::vector<BigRational> coeffs(field->degree, BigRational(0));
    for (std::uint64_t j = 0; j < q; ++j) {
        if (acc[j] == 0) continue;
        const auto& p = field->powers[j];
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] != 0) coeffs[i] += BigRational(acc[j]) * p[i];
    }
    return CyclotomicNumber(q, std::move(coeffs));
}

BigInt kind_power_sum(const std::vector<std::uint64_t>& kind, unsigned k) {
    BigInt acc = 0;
    for (auto c : kind) acc += power(to_big(c), k);
    return acc;
}

BigInt reflected_power_sum(const std::vector<std::uint64_t>& kind, const BigInt& top, unsigned k) {
    BigInt acc = 0;
    for (auto c : kind) acc += power(BigInt(top - to_big(c)), k);
    return acc;
}

} // namespace

BigInt power_sums(const SparseIntPolynomial& q, unsigned k) {
    BigInt acc = 0;
    if (k == 0) {
        for (const auto& [deg, c] : q.terms()) acc += c;
        return acc;
    }
    for (const auto& [deg, c] : q.terms())
        if (deg > 0) acc -= c * power(to_big(deg), k);
    return acc;
}

IdentityReport theorem1_verify(const SparseIntPolynomial& q, const GeneratorTuple& t) {
    IdentityReport report;
    const std::size_t m = t.size();
    for (std::size_t k = 0; k < m; ++k) {
        BigRational expected = 0;
        if (k == m - 1) expected = signed_one(m) * BigRational(factorial(static_cast<unsigned>(m - 1)) * t.product());
        report.push_back(make_check(Family::Theorem1, "power_sum", with_k(static_cast<std::int64_t>(k)), expected,
                                    BigRational(power_sums(q, static_cast<unsigned>(k)))));
    }
    // Q / (1-z)^(m-1) is a polynomial whose value at 1 is the product of the generators
    const auto div = poly_exact_divide(q, SparseIntPolynomial::one_minus_power(1).pow(static_cast<unsigned>(m - 1)));
    BigRational at_one = div.remainder.is_zero() ? BigRational(div.quotient.value_at(BigInt(1))) : BigRational(0);
    report.push_back(make_check(Family::Theorem1, "root_at_one", {}, BigRational(t.product()), at_one,
                                CheckRole::CrossCheck));
    return report;
}

CyclotomicNumber exponential_sums(const SparseIntPolynomial& poly, const GeneratorTuple& t, std::uint64_t q,
                                  std::uint64_t n, unsigned r) {
    if (q == 0) throw Error(ErrorCode::BadResidue, "modulus must be positive");
    if (q > 1 && omega_of(t, q) == 0)
        throw Error(ErrorCode::ModulusDividesNothing, std::to_string(q) + " divides no generator of " + t.to_string());
    if (n == 0 || n >= std::max<std::uint64_t>(q, 2) || std::gcd(n, q) != 1)
        throw Error(ErrorCode::BadResidue, "n = " + std::to_string(n) + " is not a unit modulo " + std::to_string(q));
    std::vector<BigInt> acc(q, BigInt(0));
    for (const auto& [deg, c] : poly.terms()) {
        if (deg == 0) continue;
        acc[(deg % q) * (n % q) % q] -= c * power(to_big(deg), r);
    }
    return from_residue_sums(q, acc);
}

IdentityReport theorem2_verify(const SparseIntPolynomial& q, const GeneratorTuple& t,
                               std::optional<std::vector<std::uint64_t>> moduli) {
    IdentityReport report;
    const auto qs = moduli ? *moduli : wave_moduli(t);
    for (std::uint64_t mod : qs) {
        const std::size_t omega = omega_of(t, mod);
        for (std::uint64_t n : half_units(mod)) {
            for (unsigned r = 0; r < omega; ++r) {
                const BigRational expected = (r == 0) ? BigRational(1) : BigRational(0);
                report.push_back(make_check(Family::Theorem2, "root_sum", with_qnr(mod, n, r), expected,
                                            exponential_sums(q, t, mod, n, r)));
            }
        }
        // Phi_q^omega divides Q
        const auto div = poly_exact_divide(q, cyclotomic_polynomial(mod).pow(static_cast<unsigned>(omega)));
        CheckParams p;
        p.q = static_cast<std::int64_t>(mod);
        report.push_back(make_check(Family::Theorem2, "cyclotomic_divisibility", p, BigRational(0),
                                    BigRational(static_cast<long>(div.remainder.term_count())), CheckRole::CrossCheck));
    }
    return report;
}

IdentityReport corollary1_verify(const SparseIntPolynomial& q, const GeneratorTuple& t) {
    IdentityReport report;
    for (std::uint64_t d : t.generators()) {
        for (std::uint64_t n = 1; 2 * n <= d; ++n) {
            if (std::gcd(n, d) != 1) continue;
            const CyclotomicNumber value = exponential_sums(q, t, d, n, 0);
            report.push_back(make_check(Family::Corollary1, "generator_root_sum", with_qnr(d, n), BigRational(1), value));
            if (2 * n != d)
                report.push_back(make_check(Family::Corollary1, "generator_root_sum", with_qnr(d, d - n), BigRational(1),
                                            value.conjugate()));
        }
    }
    return report;
}

IdentityCount identity_count(const GeneratorTuple& t) {
    IdentityCount c;
    c.from_theorem1 = t.size();
    c.from_q2 = omega_of(t, 2);
    BigInt higher = 0;
    for (std::uint64_t q = 3; q <= t.largest(); ++q) {
        const std::size_t w = omega_of(t, q);
        if (w > 0) higher += to_big(static_cast<std::uint64_t>(w) * euler_phi(q));
    }
    c.from_higher = higher / 2;
    c.total = BigInt(static_cast<unsigned long>(c.from_theorem1)) + to_big(c.from_q2) + c.from_higher;
    return c;
}

BigInt alternating_subset_power_sum(std::span<const std::uint64_t> e, unsigned k) {
    if (e.size() > 30) throw Error(ErrorCode::InstanceTooLarge, "too many degrees for subset enumeration");
    BigInt acc = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << e.size()); ++mask) {
        BigInt sum = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (mask >> i & 1U) sum += to_big(e[i]);
        const BigInt term = power(sum, k);
        if (__builtin_popcountll(mask) % 2 == 1)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

IdentityReport ci_identity_suite(std::span<const std::uint64_t> degrees, const GeneratorTuple& t) {
    const std::size_t m = t.size();
    const SparseIntPolynomial q = hilbert_numerator(t);
    if (degrees.size() + 1 != m || ci_numerator(degrees) != q)
        throw Error(ErrorCode::NotCI, "degrees do not factor the numerator of " + t.to_string());
    IdentityReport report;
    BigInt prod = 1;
    for (auto e : degrees) prod *= to_big(e);
    report.push_back(make_check(Family::CI, "degree_product", {}, BigRational(t.product()), BigRational(prod)));
    for (std::size_t k = 1; k < m; ++k) {
        BigRational expected = 0;
        if (k == m - 1) expected = signed_one(m) * BigRational(factorial(static_cast<unsigned>(m - 1)) * prod);
        report.push_back(make_check(Family::CI, "subset_power_sum", with_k(static_cast<std::int64_t>(k)), expected,
                                    BigRational(alternating_subset_power_sum(degrees, static_cast<unsigned>(k)))));
    }
    // the same root-of-unity sums, read off the unexpanded product
    for (std::uint64_t mod : wave_moduli(t)) {
        const std::size_t omega = omega_of(t, mod);
        for (std::uint64_t n : half_units(mod)) {
            for (unsigned r = 0; r < omega; ++r) {
                std::vector<BigInt> acc(mod, BigInt(0));
                for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << degrees.size()); ++mask) {
                    std::uint64_t sum = 0;
                    for (std::size_t i = 0; i < degrees.size(); ++i)
                        if (mask >> i & 1U) sum += degrees[i];
                    const BigInt term = power(to_big(sum), r);
                    auto& slot = acc[(sum % mod) * n % mod];
                    if (__builtin_popcountll(mask) % 2 == 1)
                        slot += term;
                    else
                        slot -= term;
                }
                const BigRational expected = (r == 0) ? BigRational(1) : BigRational(0);
                report.push_back(make_check(Family::CI, "subset_root_sum", with_qnr(mod, n, r), expected,
                                            from_residue_sums(mod, acc)));
            }
        }
    }
    return report;
}

IdentityReport telescopic_suite(std::span<const std::uint64_t> ordering, const GeneratorTuple& t) {
    const auto degrees = telescopic_degrees(ordering);
    IdentityReport report;
    BigInt prod = 1;
    for (auto e : degrees) prod *= to_big(e);
    report.push_back(make_check(Family::Telescopic, "degree_product", {}, BigRational(t.product()), BigRational(prod)));
    const bool same = ci_numerator(degrees) == hilbert_numerator(t);
    Check c = make_check(Family::Telescopic, "numerator_match", {}, BigRational(1), BigRational(same ? 1 : 0),
                         CheckRole::CrossCheck);
    std::string note = "e =";
    for (auto e : degrees) note += " " + std::to_string(e);
    c.note = note;
    report.push_back(std::move(c));
    return report;
}

IdentityReport symmetric_identity_suite(const SparseIntPolynomial& q, const GeneratorTuple& t,
                                        const ClassificationFlags& flags, const std::optional<SyzygyTable>& table) {
    if (!flags.symmetric) throw Error(ErrorCode::NotSymmetric, t.to_string() + " is not symmetric");
    if (!table) throw Error(ErrorCode::NeedsSyzygyTable, "no syzygy table for " + t.to_string());
    validate_syzygy_table(*table, q, t, true);

    const std::size_t m = t.size();
    const BigInt top = BigInt(static_cast<unsigned long>(q.degree()));
    const auto& kinds = table->kinds;
    const auto beta = table->betti();
    auto kind = [&](std::size_t i) -> const std::vector<std::uint64_t>& { return kinds[i - 1]; };
    auto J = [&](std::size_t r, unsigned k) { return kind_power_sum(kind(r), k); };
    const Family fam = (m % 2 == 0) ? Family::SymmetricEven : Family::SymmetricOdd;
    IdentityReport report;

    // duality: beta_k = beta_(m-1-k), degrees paired about deg Q
    for (std::size_t k = 0; k < m; ++k) {
        const std::size_t j = m - 1 - k;
        const std::uint64_t bk = (k == 0) ? 1 : beta[k - 1];
        const std::uint64_t bj = (j == 0) ? 1 : beta[j - 1];
        report.push_back(make_check(fam, "betti_duality", with_k(static_cast<std::int64_t>(k)),
                                    BigRational(static_cast<unsigned long>(bj)), BigRational(static_cast<unsigned long>(bk))));
        std::vector<std::uint64_t> lo = (k == 0) ? std::vector<std::uint64_t>{0} : kind(k);
        std::vector<std::uint64_t> hi = (j == 0) ? std::vector<std::uint64_t>{0} : kind(j);
        std::sort(lo.begin(), lo.end());
        std::sort(hi.rbegin(), hi.rend());
        unsigned long matched = 0;
        for (std::size_t i = 0; i < std::min(lo.size(), hi.size()); ++i)
            if (to_big(lo[i] + hi[i]) == top) ++matched;
        report.push_back(make_check(fam, "degree_duality", with_k(static_cast<std::int64_t>(k)),
                                    BigRational(static_cast<unsigned long>(bk)), BigRational(matched),
                                    CheckRole::CrossCheck));
    }

    const BigRational pi_term = BigRational(factorial(static_cast<unsigned>(m - 1)) * t.product());
    const std::size_t mu = m / 2;
    BigInt betti_alt = -1; // -1 + beta_1 - beta_2 + ... + (-1)^mu beta_(mu-1)
    for (std::size_t r = 1; r + 1 <= mu; ++r)
        betti_alt += ((r % 2 == 1) ? 1 : -1) * static_cast<long>(beta[r - 1]);

    for (unsigned k = 1; k < m; ++k) {
        BigInt lhs = power(top, k);
        for (std::size_t r = 1; r + 1 <= mu; ++r) {
            const BigInt a = J(r, k);
            const BigInt b = reflected_power_sum(kind(r), top, k);
            const BigInt pair = (m % 2 == 0) ? BigInt(a - b) : BigInt(a + b);
            const bool odd_r = r % 2 == 1;
            if (m % 2 == 0)
                lhs += odd_r ? pair : BigInt(-pair); // - (-1)^r {...}
            else
                lhs += odd_r ? BigInt(-pair) : pair; // + (-1)^r {...}
        }
        if (m % 2 == 1) lhs += (mu % 2 == 0) ? J(mu, k) : BigInt(-J(mu, k));
        const BigRational expected = (k == m - 1) ? pi_term : BigRational(0);
        report.push_back(make_check(fam, "dual_power_sum", with_k(k), expected, BigRational(lhs)));
    }

    if (m % 2 == 0 && m >= 4) {
        BigInt alt = 0;
        for (std::size_t r = 1; r + 1 <= mu; ++r) alt += (r % 2 == 1) ? J(r, 1) : BigInt(-J(r, 1));
        report.push_back(make_check(fam, "weighted_kind_sum", {}, make_rational(betti_alt * top, 2), BigRational(alt)));
    } else if (m % 2 == 1) {
        const BigInt expected = (mu % 2 == 0 ? 1 : -1) * betti_alt * top;
        report.push_back(make_check(fam, "middle_kind_sum", {}, BigRational(expected), BigRational(J(mu, 1))));
    }

    if (m == 4 && beta[0] == 5) {
        const BigInt i1 = J(1, 1), i2 = J(1, 2), i3 = J(1, 3);
        report.push_back(make_check(Family::Bresinsky4, "cubic", {}, BigRational(24 * t.product()),
                                    BigRational(8 * i3 - 6 * i2 * i1 + i1 * i1 * i1)));
        report.push_back(make_check(Family::Bresinsky4, "degree", {}, BigRational(top), make_rational(i1, 2)));
    }

    if (m == 5) {
        const BigInt b1 = static_cast<long>(beta[0]) - 1;
        const BigInt j11 = J(1, 1), j12 = J(1, 2), j13 = J(1, 3), j14 = J(1, 4);
        const BigInt j21 = J(2, 1), j22 = J(2, 2), j23 = J(2, 3), j24 = J(2, 4);
        const BigRational zero = 0;
        report.push_back(make_check(Family::Symmetric5, "first", with_k(1), BigRational(b1 * top), BigRational(j21)));
        report.push_back(make_check(Family::Symmetric5, "second", with_k(2), zero,
                                    BigRational(j21 * (2 * j11 - j21) + b1 * (j22 - 2 * j12))));
        report.push_back(make_check(Family::Symmetric5, "third", with_k(3), zero,
                                    BigRational(j21 * j21 * (3 * j11 - j21) - 3 * b1 * j12 * j21 + b1 * b1 * j23)));
        report.push_back(make_check(
            Family::Symmetric5, "fourth", with_k(4), zero,
            BigRational(j21 * j21 * j21 * (4 * j11 - j21) - 6 * b1 * j12 * j21 * j21 + 4 * b1 * b1 * j13 * j21 +
                        b1 * b1 * b1 * (j24 - 2 * j14 - 24 * t.product()))));
    }
    return report;
}

std::pair<BigInt, BigInt> m3_second_kind_degrees(std::span<const std::uint64_t> e, const GeneratorTuple& t) {
    if (e.size() != 3 || t.size() != 3) throw Error(ErrorCode::NotM3, "needs three generators and three relations");
    const BigInt a = to_big(e[0]), b = to_big(e[1]), c = to_big(e[2]);
    const BigInt disc = a * a + b * b + c * c - 2 * (a * b + b * c + c * a) + 4 * t.product();
    const auto root = exact_sqrt(disc);
    if (!root) throw Error(ErrorCode::PerfectSquareViolated, "discriminant " + disc.get_str() + " is not a perfect square");
    const BigInt sum = a + b + c;
    if ((sum + *root) % 2 != 0) throw Error(ErrorCode::PerfectSquareViolated, "second-kind degrees are not integers");
    return {(sum - *root) / 2, (sum + *root) / 2};
}

IdentityReport m3_suite(const GeneratorTuple& t, const SparseIntPolynomial& q) {
    if (t.size() != 3) throw Error(ErrorCode::NotM3, t.to_string() + " does not have three generators");
    std::vector<std::uint64_t> e, f;
    for (const auto& [deg, c] : q.terms()) {
        if (deg == 0) continue;
        auto& target = (c < 0) ? e : f;
        target.insert(target.end(), BigInt(abs(c)).get_ui(), deg);
    }
    IdentityReport report;
    BigInt se = 0, sf = 0, se2 = 0, sf2 = 0;
    for (auto x : e) se += to_big(x), se2 += to_big(x) * to_big(x);
    for (auto x : f) sf += to_big(x), sf2 += to_big(x) * to_big(x);
    report.push_back(make_check(Family::M3, "degree_sum", {}, BigRational(sf), BigRational(se)));
    report.push_back(make_check(Family::M3, "degree_square_sum", {}, BigRational(sf2 - 2 * t.product()), BigRational(se2)));

    if (e.size() == 3 && f.size() == 2) {
        try {
            const auto [lo, hi] = m3_second_kind_degrees(e, t);
            report.push_back(make_check(Family::M3, "second_kind_low", {}, BigRational(to_big(f[0])), BigRational(lo)));
            report.push_back(make_check(Family::M3, "second_kind_high", {}, BigRational(to_big(f[1])), BigRational(hi)));
            const auto frob = profile(t).frobenius;
            report.push_back(make_check(Family::M3, "frobenius", {}, BigRational(to_big(frob)),
                                        BigRational(hi - t.sigma(1))));
        } catch (const Error& err) {
            Check c = make_check(Family::M3, "second_kind_low", {}, BigRational(1), BigRational(0));
            c.note = err.what();
            report.push_back(std::move(c));
        }
    } else {
        report.push_back(make_skipped(Family::M3, "second_kind_low", "symmetric case has a single second-kind degree"));
    }

    for (std::uint64_t d : t.generators()) {
        if (!is_prime(d)) continue;
        for (std::uint64_t n = 1; n < d; ++n) {
            CyclotomicNumber lhs(d), rhs(d, BigRational(1));
            for (auto x : e) lhs += CyclotomicNumber::root_power(d, static_cast<std::int64_t>(x * n % d));
            for (auto x : f) rhs += CyclotomicNumber::root_power(d, static_cast<std::int64_t>(x * n % d));
            report.push_back(make_check(Family::M3, "root_balance", with_qnr(d, n), rhs, lhs));
        }
    }
    return report;
}

IdentityReport pseudosymmetric_suite(const GeneratorTuple& t, const SparseIntPolynomial& q) {
    const SemigroupProfile p = profile(t);
    if (t.size() != 3 || !classify(t, p).pseudosymmetric)
        throw Error(ErrorCode::NotPseudosymmetric, t.to_string() + " is not a pseudosymmetric three-generated semigroup");
    IdentityReport report;
    report.push_back(make_check(Family::Pseudosymmetric, "frobenius", {}, BigRational(to_big(p.frobenius)),
                                BigRational(to_big(pseudosymmetric_frobenius(t)))));
    bool same = false;
    std::string note;
    try {
        same = pseudosymmetric_numerator(t, p) == q;
    } catch (const Error& err) {
        note = err.what();
    }
    Check c = make_check(Family::Pseudosymmetric, "numerator", {}, BigRational(1), BigRational(same ? 1 : 0));
    c.note = note;
    report.push_back(std::move(c));
    return report;
}

IdentityReport med_identity_suite(const GeneratorTuple& t, const SparseIntPolynomial& q) {
    const std::size_t m = t.size();
    if (t.multiplicity() != m) throw Error(ErrorCode::NotMED, t.to_string() + " does not have maximal embedding dimension");
    const SyzygyTable families = med_syzygy_table(t);
    IdentityReport report;
    BigInt tail_product = 1;
    for (std::size_t j = 1; j < m; ++j) tail_product *= to_big(t[j]);
    for (unsigned k = 1; k < m; ++k) {
        BigInt acc = 0;
        for (std::size_t i = 0; i < families.kinds.size(); ++i) {
            const BigInt s = kind_power_sum(families.kinds[i], k);
            acc += (i % 2 == 0) ? s : BigInt(-s);
        }
        BigRational expected = 0;
        if (k == m - 1) expected = signed_one(m) * BigRational(factorial(static_cast<unsigned>(m)) * tail_product);
        report.push_back(make_check(Family::MED, "family_power_sum", with_k(k), expected, BigRational(acc)));
        report.push_back(make_check(Family::MED, "numerator_power_sum", with_k(k), BigRational(power_sums(q, k)),
                                    BigRational(acc), CheckRole::CrossCheck));
    }
    report.push_back(make_check(Family::MED, "numerator_match", {}, BigRational(1),
                                BigRational(families.reassemble() == q ? 1 : 0), CheckRole::CrossCheck));
    const SemigroupProfile p = profile(t);
    report.push_back(make_check(Family::MED, "frobenius", {}, BigRational(to_big(p.frobenius)),
                                BigRational(to_big(static_cast<std::int64_t>(t.largest()) - static_cast<std::int64_t>(m)))));

    const ClassificationFlags flags = classify(t, p);
    if (flags.almost_symmetric_med) {
        const BigRational target = make_rational(2 * t.sigma(1), BigInt(static_cast<unsigned long>(m)));
        for (std::size_t j = 0; 2 * j < m; ++j) {
            CheckParams params;
            params.k = static_cast<std::int64_t>(j + 1);
            report.push_back(make_check(Family::AlmostSymmetricMED, "pair_sum", params, BigRational(target),
                                        BigRational(to_big(t[j] + t[m - 1 - j]))));
        }
    }
    return report;
}

AppendixOutcome appendix_oracle(std::span<const std::uint64_t> e, unsigned k, bool enumerate) {
    const std::size_t n = e.size();
    if (n == 0 || k > n) throw Error(ErrorCode::InvalidArgument, "needs 1 <= k <= n");
    AppendixOutcome out;
    BigInt prod = 1;
    std::uint64_t total = 0;
    for (auto x : e) {
        if (x == 0) throw Error(ErrorCode::InvalidArgument, "colour sizes must be positive");
        prod *= to_big(x);
        total += x;
    }
    out.algebraic = alternating_subset_power_sum(e, k);
    out.expected = 0;
    if (k == n) out.expected = ((n % 2 == 1) ? 1 : -1) * factorial(static_cast<unsigned>(n)) * prod;
    const BigInt covering_expected = (k == n) ? BigInt(factorial(static_cast<unsigned>(n)) * prod) : BigInt(0);

    // inclusion-exclusion over the set T of colours left out
    out.missing_by_inclusion = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::uint64_t left = total;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1U) left -= e[i];
        const BigInt term = power(to_big(left), k);
        if (__builtin_popcountll(mask) % 2 == 1)
            out.missing_by_inclusion += term;
        else
            out.missing_by_inclusion -= term;
    }

    const BigInt words = power(to_big(total), k);
    if (!enumerate) {
        out.covering_words = covering_expected;
        out.missing_by_count = words - covering_expected;
        out.pass = out.algebraic == out.expected && out.missing_by_inclusion == words - covering_expected;
        return out;
    }
    if (words > kAppendixEnumerationLimit)
        throw Error(ErrorCode::InstanceTooLarge, "E^k = " + words.get_str() + " words exceed the enumeration limit");

    std::vector<std::size_t> colour;
    for (std::size_t i = 0; i < n; ++i) colour.insert(colour.end(), e[i], i);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::vector<std::size_t> word(k, 0);
    std::uint64_t covering = 0, missing = 0;
    for (bool done = false; !done;) {
        std::uint64_t used = 0;
        for (auto letter : word) used |= std::uint64_t{1} << colour[letter];
        (used == full ? covering : missing)++;
        std::size_t pos = 0;
        while (pos < k && ++word[pos] == total) word[pos++] = 0;
        done = pos == k;
    }
    out.covering_words = to_big(covering);
    out.missing_by_count = to_big(missing);
    out.pass = out.algebraic == out.expected && out.covering_words == covering_expected &&
               out.missing_by_count == out.missing_by_inclusion;
    return out;
}

IdentityReport appendix_report(std::span<const std::uint64_t> e, unsigned k, bool enumerate) {
    const AppendixOutcome o = appendix_oracle(e, k, enumerate);
    CheckParams p;
    p.n = static_cast<std::int64_t>(e.size());
    p.k = k;
    const BigInt prod = std::accumulate(e.begin(), e.end(), BigInt(1), [](const BigInt& a, std::uint64_t x) -> BigInt { return a * to_big(x); });
    const BigInt covering_expected =
        (k == e.size()) ? BigInt(factorial(static_cast<unsigned>(e.size())) * prod) : BigInt(0);
    IdentityReport report;
    report.push_back(make_check(Family::Appendix, "alternating_subset_sum", p, BigRational(o.expected),
                                BigRational(o.algebraic)));
    if (enumerate) {
        report.push_back(make_check(Family::Appendix, "covering_words", p, BigRational(covering_expected),
                                    BigRational(o.covering_words), CheckRole::CrossCheck));
        report.push_back(make_check(Family::Appendix, "inclusion_exclusion", p, BigRational(o.missing_by_count),
                                    BigRational(o.missing_by_inclusion), CheckRole::CrossCheck));
    }
    return report;
}

} // namespace nsg
