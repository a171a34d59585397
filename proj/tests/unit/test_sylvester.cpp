#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "nsg/error.hpp"
#include "nsg/special_numbers.hpp"
#include "nsg/sylvester.hpp"
#include "test_util.hpp"

using namespace nsg;
using testutil::tuple;

namespace {

template <class F>
void expect_error(ErrorCode code, F&& f) {
    try {
        f();
        ADD_FAILURE() << "expected " << to_string(code);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

std::vector<mpz_class> power_sums_of(const std::vector<std::uint64_t>& d, unsigned kmax) {
    std::vector<mpz_class> out(kmax + 1, 0);
    for (unsigned k = 0; k <= kmax; ++k)
        for (auto x : d) {
            mpz_class p;
            mpz_ui_pow_ui(p.get_mpz_t(), x, k);
            out[k] += p;
        }
    return out;
}

} // namespace

TEST(Denumerant, Examples) {
    const auto t = tuple({3, 5, 7});
    EXPECT_EQ(denumerant_dp(t, 10), 2);
    EXPECT_EQ(denumerant_dp(t, 0), 1);
    EXPECT_EQ(denumerant_dp(t, 4), 0);
}

TEST(Denumerant, AgreesWithEnumeration) {
    for (const auto& gens : testutil::corpus()) {
        const auto t = tuple(gens);
        const auto table = denumerant_table(t, 80);
        for (std::uint64_t s = 0; s <= 80; ++s) {
            const auto brute = oracle::count_representations(gens, s);
            ASSERT_EQ(table[s], brute) << t.to_string() << " s=" << s;
            ASSERT_EQ(denumerant_dp(t, s), brute);
        }
    }
}

TEST(Moduli, DivisorsOfGenerators) {
    EXPECT_EQ(wave_moduli(tuple({3, 5, 7})), (std::vector<std::uint64_t>{3, 5, 7}));
    EXPECT_EQ(wave_moduli(tuple({8, 9, 10, 12})), (std::vector<std::uint64_t>{2, 3, 4, 5, 6, 8, 9, 10, 12}));
    const auto spec = wave_spec(tuple({10, 14, 15, 21}), 7);
    EXPECT_EQ(spec.omega, 2U);
    EXPECT_EQ(spec.divisible, (std::vector<std::uint64_t>{14, 21}));
    EXPECT_EQ(spec.pi_omega, 294);
    expect_error(ErrorCode::ModulusDividesNothing, [] { wave_spec(tuple({3, 5, 7}), 4); });
}

TEST(Waves, PolynomialPart357) {
    const auto w1 = wave1_polynomial(tuple({3, 5, 7}));
    ASSERT_EQ(w1.size(), 3U);
    EXPECT_EQ(w1[0], BigRational(1, 210));
    EXPECT_EQ(w1[1], BigRational(1, 14));
    EXPECT_EQ(w1[2], BigRational(74, 315));
}

TEST(Waves, UmbralPowersMatchClosedForms) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const auto gens = oracle::random_tuple(rng, 6, 30);
        const auto sigma = power_sums_of(gens, 6);
        const auto f = umbral_bernoulli_powers(BigRational(sigma[1]), gens, 6);
        for (unsigned r = 0; r <= 6; ++r) EXPECT_EQ(f[r], oracle::f_closed(r, sigma)) << r;

        std::vector<std::uint64_t> odd;
        for (auto d : gens)
            if (d % 2 == 1) odd.push_back(d);
        const auto gamma = power_sums_of(odd, 5);
        const auto g = umbral_euler_powers(BigRational(gamma[1]), odd, 5);
        for (unsigned r = 0; r <= 5; ++r) EXPECT_EQ(g[r], oracle::g_closed(r, gamma)) << r;
    }
}

TEST(Waves, PolynomialPartFromClosedForms) {
    // W_1(s) = sum_r C(m-1, r) f_r s^(m-1-r) / ((m-1)! pi)
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const auto gens = oracle::random_tuple(rng, 7, 30);
        const auto t = tuple(gens);
        const auto sigma = power_sums_of(gens, 6);
        const auto w1 = wave1_polynomial(t);
        const std::size_t m = gens.size();
        ASSERT_EQ(w1.size(), m);
        mpz_class scale = t.product();
        for (unsigned i = 2; i < m; ++i) scale *= i;
        for (unsigned r = 0; r < m; ++r) {
            mpz_class c;
            mpz_bin_uiui(c.get_mpz_t(), m - 1, r);
            EXPECT_EQ(w1[r], mpq_class(c) * oracle::f_closed(r, sigma) / mpq_class(scale)) << t.to_string();
        }
    }
}

TEST(Waves, SecondWave) {
    expect_error(ErrorCode::NoEvenGenerator, [] { wave2_polynomial(tuple({3, 5, 7})); });
    const auto w = wave2_polynomial(tuple({8, 9, 10, 12}));
    EXPECT_EQ(w.omega, 3U);
    ASSERT_EQ(w.L.size(), 3U);
    EXPECT_EQ(*is_rational(w.L[0]), 1);
    // (omega - 1) sigma_1 / 2 with sigma_1 = 39
    EXPECT_EQ(*is_rational(w.L[1]), 39);
}

TEST(Waves, SumEqualsDenumerant) {
    for (const auto& gens : testutil::corpus()) {
        const auto t = tuple(gens);
        const SylvesterWaves waves(t);
        const auto table = denumerant_table(t, 60);
        for (std::int64_t s = 0; s <= 60; ++s)
            ASSERT_EQ(waves.total(s), BigRational(table[s])) << t.to_string() << " s=" << s;
    }
}

TEST(Waves, SumEqualsDenumerantRandom) {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 25; ++trial) {
        const auto gens = oracle::random_tuple(rng, 4, 25);
        const auto t = tuple(gens);
        const SylvesterWaves waves(t);
        for (std::int64_t s = 0; s <= 40; ++s)
            ASSERT_EQ(waves.total(s), BigRational(oracle::count_representations(gens, s))) << t.to_string() << " " << s;
    }
}

TEST(Waves, DirectPairSumsMatchTables) {
    for (const auto& gens : std::vector<std::vector<std::uint64_t>>{{3, 5, 7}, {10, 14, 15, 21}, {8, 9, 10, 12}}) {
        const auto t = tuple(gens);
        const SylvesterWaves waves(t);
        for (std::uint64_t q : wave_moduli(t))
            for (std::int64_t s : {-7, 0, 5, 13, 29})
                EXPECT_EQ(wave_eval_direct(t, q, s), waves.eval(q, s)) << t.to_string() << " q=" << q << " s=" << s;
    }
}

TEST(Waves, FloatingFormFor357) {
    const auto t = tuple({3, 5, 7});
    const SylvesterWaves waves(t);
    for (int s = 0; s <= 30; ++s) EXPECT_NEAR(waves.total(s).get_d(), oracle::wave_357_float(s), 1e-9) << s;
}

TEST(Waves, ZerosAndReciprocity) {
    const auto t = tuple({3, 5, 7});
    const SylvesterWaves waves(t);
    for (std::int64_t s = -14; s <= -1; ++s) EXPECT_EQ(waves.total(s), 0) << s;
    for (std::int64_t s = -40; s <= 40; ++s) EXPECT_EQ(waves.total(s), waves.total(-s - 15)) << s;
    const auto report = wave_sum_verify(t, -20, 40);
    EXPECT_EQ(testutil::count_failed(report), 0U) << testutil::describe_failures(report);
}

TEST(Waves, PeriodicForPairwiseCoprime) {
    for (const auto& gens : std::vector<std::vector<std::uint64_t>>{{3, 5, 7}, {19, 23, 29, 31, 37}, {2, 3}}) {
        const auto t = tuple(gens);
        const SylvesterWaves waves(t);
        for (std::uint64_t q : wave_moduli(t))
            for (std::int64_t s = -10; s <= 30; ++s)
                EXPECT_EQ(waves.eval(q, s), waves.eval(q, s + static_cast<std::int64_t>(q))) << q << " " << s;
    }
}

TEST(Waves, PartialPairsAreReal) {
    const auto t = tuple({3, 5, 7});
    const auto w = waveq_partial(t, 7, 1);
    ASSERT_EQ(w.L.size(), 1U);
    const auto [l1, m1] = leading_wave_coefficients(t, 7, 1);
    EXPECT_EQ(w.L[0], l1);
    EXPECT_EQ(w.iM[0], m1);
    expect_error(ErrorCode::BadResidue, [&] { waveq_partial(t, 7, 4); });
    expect_error(ErrorCode::BadResidue, [&] { waveq_partial(t, 2, 1); });
}

TEST(LeadingCoefficients, SelectionRules) {
    const auto t = tuple({3, 5, 7});
    for (std::uint64_t n : {1, 2}) {
        const auto o = lemma1_evaluate(t, 5, n);
        EXPECT_EQ(o.which, Lemma1Case::Integer);
        EXPECT_TRUE(o.m_vanishes);
        EXPECT_TRUE(o.pass);
    }
    const auto o3 = lemma1_evaluate(t, 3, 1);
    EXPECT_TRUE(o3.m_vanishes);
    EXPECT_TRUE(o3.pass);
    for (std::uint64_t n : {1, 2, 3}) {
        const auto o = lemma1_evaluate(t, 7, n);
        EXPECT_EQ(o.which, Lemma1Case::Neither);
        EXPECT_FALSE(o.l_vanishes);
        EXPECT_FALSE(o.m_vanishes);
        EXPECT_TRUE(o.pass);
    }
    const auto o2 = lemma1_evaluate(tuple({8, 9, 10, 12}), 2, 1);
    EXPECT_EQ(o2.which, Lemma1Case::HalfInteger);
    EXPECT_TRUE(o2.m_vanishes);
    EXPECT_TRUE(o2.pass);
}

TEST(LeadingCoefficients, RulesHoldOnRandomTuples) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const auto t = tuple(oracle::random_tuple(rng, 5, 30));
        const auto report = lemma1_report(t);
        EXPECT_EQ(testutil::count_failed(report), 0U) << t.to_string() << "\n" << testutil::describe_failures(report);
    }
}
