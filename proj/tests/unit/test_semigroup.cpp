#include <gtest/gtest.h>

#include <random>

#include "nsg/error.hpp"
#include "nsg/hilbert.hpp"
#include "nsg/semigroup.hpp"
#include "test_util.hpp"

using namespace nsg;
using testutil::tuple;

namespace {

ErrorCode validation_error(std::vector<std::int64_t> raw) {
    try {
        GeneratorTuple::validate(raw);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InternalInconsistency;
}

} // namespace

TEST(Validate, Examples) {
    const auto t = validate_generators({7, 3, 5, 5});
    EXPECT_EQ(t.generators(), (std::vector<std::uint64_t>{3, 5, 7}));
    EXPECT_EQ(t.size(), 3U);
    EXPECT_EQ(t.sigma(1), 15);
    EXPECT_EQ(t.sigma(2), 83);
    EXPECT_EQ(t.product(), 105);
    EXPECT_EQ(t.to_string(), "{3,5,7}");
}

TEST(Validate, Rejections) {
    EXPECT_EQ(validation_error({2, 4}), ErrorCode::NonCoprime);
    EXPECT_EQ(validation_error({}), ErrorCode::Empty);
    EXPECT_EQ(validation_error({0, 3}), ErrorCode::NonPositive);
    EXPECT_EQ(validation_error({-2, 3}), ErrorCode::NonPositive);
    EXPECT_EQ(validation_error({1}), ErrorCode::TrivialSemigroup);
    EXPECT_EQ(validation_error({3, 5, 8}), ErrorCode::NonMinimal);
    EXPECT_EQ(validation_error({1, 5}), ErrorCode::NonMinimal);
    try {
        validate_generators({3, 5, 8});
    } catch (const Error& e) {
        EXPECT_NE(e.detail().find("8 = 3+5"), std::string::npos) << e.detail();
    }
}

TEST(Membership, Examples) {
    const auto t = tuple({3, 5, 7});
    EXPECT_TRUE(membership(t, 0));
    EXPECT_FALSE(membership(t, 4));
    EXPECT_TRUE(membership(t, 10));
    EXPECT_FALSE(membership(t, -3));
}

TEST(Membership, AgreesWithSieveOnRandomTuples) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const auto gens = oracle::random_tuple(rng, 5, 50);
        const auto t = tuple(gens);
        const std::uint64_t limit = 2 * gens.front() * gens.back();
        const auto hit = oracle::reachable(gens, limit);
        for (std::uint64_t s = 0; s <= limit; ++s)
            ASSERT_EQ(membership(t, static_cast<std::int64_t>(s)), hit[s]) << t.to_string() << " s=" << s;
    }
}

TEST(Profile, Examples) {
    const auto p = profile(tuple({3, 5, 7}));
    EXPECT_EQ(p.gaps, (std::vector<std::uint64_t>{1, 2, 4}));
    EXPECT_EQ(p.frobenius, 4);
    EXPECT_EQ(p.genus, 3U);
    EXPECT_EQ(p.conductor, 5);

    const auto q = profile(tuple({2, 3}));
    EXPECT_EQ(q.gaps, (std::vector<std::uint64_t>{1}));
    EXPECT_EQ(q.frobenius, 1);

    EXPECT_EQ(profile(tuple({5, 6, 7, 8})).frobenius, 9);
}

TEST(Profile, AgreesWithSieveOnRandomTuples) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const auto gens = oracle::random_tuple(rng, 5, 60);
        const auto p = profile(tuple(gens));
        const auto g = oracle::gaps_by_sieve(gens);
        EXPECT_EQ(p.gaps, g.gaps);
        EXPECT_EQ(p.frobenius, g.frobenius);
        EXPECT_EQ(p.genus, g.gaps.size());
        EXPECT_EQ(p.conductor, g.frobenius + 1);
    }
}

TEST(Apery, Examples) {
    EXPECT_EQ(apery_set(tuple({3, 5, 7}), 3), (std::vector<std::uint64_t>{0, 7, 5}));
    EXPECT_EQ(apery_set(tuple({2, 3}), 2), (std::vector<std::uint64_t>{0, 3}));
    try {
        apery_set(tuple({3, 5, 7}), 4);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotAGenerator);
    }
}

TEST(Apery, LeastInResidueClass) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto gens = oracle::random_tuple(rng, 4, 40);
        const auto t = tuple(gens);
        const auto hit = oracle::reachable(gens, 2 * gens.front() * gens.back());
        for (auto d : gens) {
            const auto ap = apery_set(t, d);
            ASSERT_EQ(ap.size(), d);
            for (std::uint64_t r = 0; r < d; ++r) {
                EXPECT_EQ(ap[r] % d, r);
                EXPECT_TRUE(hit[ap[r]]);
                if (ap[r] >= d) EXPECT_FALSE(hit[ap[r] - d]);
            }
        }
    }
}

TEST(Classify, Examples) {
    auto flags_of = [](std::vector<std::uint64_t> g) {
        const auto t = tuple(g);
        return classify_semigroup(t, profile(t));
    };
    const auto f357 = flags_of({3, 5, 7});
    EXPECT_TRUE(f357.med);
    EXPECT_FALSE(f357.symmetric);

    const auto f8 = flags_of({8, 9, 10, 12});
    EXPECT_TRUE(f8.telescopic);
    EXPECT_TRUE(f8.complete_intersection);
    EXPECT_TRUE(f8.symmetric);
    ASSERT_TRUE(f8.telescopic_ordering.has_value());
    EXPECT_EQ(*f8.telescopic_ordering, (std::vector<std::uint64_t>{8, 12, 10, 9}));

    const auto f345 = flags_of({3, 4, 5});
    EXPECT_TRUE(f345.pseudosymmetric);
    EXPECT_FALSE(f345.symmetric);

    const auto f4 = flags_of({4, 10, 19, 25});
    EXPECT_TRUE(f4.almost_symmetric_med);
    EXPECT_EQ(f4.med_pair_sum, 29U);

    const auto f10 = flags_of({10, 14, 15, 21});
    EXPECT_TRUE(f10.complete_intersection);
    EXPECT_FALSE(f10.telescopic);
}

TEST(Classify, SymmetryMatchesGapCount) {
    std::mt19937_64 rng(314);
    for (int trial = 0; trial < 100; ++trial) {
        const auto gens = oracle::random_tuple(rng, 4, 40);
        const auto t = tuple(gens);
        const auto g = oracle::gaps_by_sieve(gens);
        const auto flags = classify(t, profile(t));
        const std::int64_t f = g.frobenius;
        EXPECT_EQ(flags.symmetric, static_cast<std::int64_t>(2 * g.gaps.size()) == f + 1) << t.to_string();
        EXPECT_EQ(flags.pseudosymmetric, static_cast<std::int64_t>(2 * g.gaps.size()) == f + 2 && f % 2 == 0)
            << t.to_string();
        EXPECT_EQ(flags.med, gens.front() == gens.size());
        if (flags.telescopic) EXPECT_TRUE(flags.symmetric);
    }
}

TEST(Telescopic, Orderings) {
    const std::vector<std::uint64_t> good = {8, 12, 10, 9}, bad = {8, 9, 10, 12};
    EXPECT_TRUE(is_telescopic_ordering(good));
    EXPECT_FALSE(is_telescopic_ordering(bad));
    EXPECT_FALSE(find_telescopic_ordering(tuple({10, 14, 15, 21})).has_value());
    EXPECT_FALSE(find_telescopic_ordering(tuple({3, 5, 7})).has_value());
    try {
        find_telescopic_ordering(tuple({9, 10, 11, 12, 13, 14, 15, 16, 17}));
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::TooManyGenerators);
    }
}

TEST(GeneratedBy, Sieve) {
    const std::vector<std::uint64_t> g = {4, 6};
    EXPECT_TRUE(generated_by(g, 10));
    EXPECT_FALSE(generated_by(g, 9));
    EXPECT_TRUE(generated_by(g, 0));
}
