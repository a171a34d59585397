#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "nsg/error.hpp"
#include "nsg/hilbert.hpp"
#include "test_util.hpp"

using namespace nsg;
using testutil::to_terms;
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

std::string read_fixture(const std::string& name) {
    std::ifstream in(std::string(NSG_TEST_DATA_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST(Numerator, PrintedReferences) {
    EXPECT_EQ(to_terms(hilbert_numerator(tuple({3, 5, 7}))), oracle::printed_numerator_357());
    EXPECT_EQ(to_terms(hilbert_numerator(tuple({5, 6, 7, 8}))), oracle::printed_numerator_5678());
    EXPECT_EQ(to_terms(hilbert_numerator(tuple({8, 13, 15, 17}))), oracle::printed_numerator_8_13_15_17());
    EXPECT_EQ(to_terms(hilbert_numerator(tuple({19, 23, 29, 31, 37}))), oracle::printed_numerator_bresinsky());
    EXPECT_EQ(to_terms(hilbert_numerator(tuple({4, 10, 19, 25}))), oracle::printed_numerator_4_10_19_25());
    EXPECT_EQ(to_terms(hilbert_numerator(tuple({2, 3}))), (oracle::Terms{{0, 1}, {6, -1}}));
}

TEST(Numerator, PrintedReferencesAgreeWithSeries) {
    // guards the transcription of the printed numerators
    EXPECT_EQ(oracle::numerator_by_series({3, 5, 7}), oracle::printed_numerator_357());
    EXPECT_EQ(oracle::numerator_by_series({5, 6, 7, 8}), oracle::printed_numerator_5678());
    EXPECT_EQ(oracle::numerator_by_series({8, 13, 15, 17}), oracle::printed_numerator_8_13_15_17());
    EXPECT_EQ(oracle::numerator_by_series({19, 23, 29, 31, 37}), oracle::printed_numerator_bresinsky());
    EXPECT_EQ(oracle::numerator_by_series({4, 10, 19, 25}), oracle::printed_numerator_4_10_19_25());
}

TEST(Numerator, RandomTuplesAgreeWithSeries) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 150; ++trial) {
        const auto gens = oracle::random_tuple(rng, 5, 45);
        const auto t = tuple(gens);
        const auto q = hilbert_numerator(t);
        ASSERT_EQ(to_terms(q), oracle::numerator_by_series(gens)) << t.to_string();
        EXPECT_EQ(q.degree(), profile(t).frobenius + static_cast<std::int64_t>(t.sigma(1).get_si()));
    }
}

TEST(Duality, Examples) {
    EXPECT_TRUE(duality_check(hilbert_numerator(tuple({5, 6, 7, 8})), 4));
    EXPECT_FALSE(duality_check(hilbert_numerator(tuple({3, 5, 7})), 3));
    EXPECT_TRUE(duality_check(hilbert_numerator(tuple({8, 9, 10, 12})), 4));
}

TEST(CompleteIntersection, Products) {
    const std::vector<std::uint64_t> a = {18, 20, 24}, b = {30, 35, 42}, c = {6};
    EXPECT_EQ(ci_numerator(a), hilbert_numerator(tuple({8, 9, 10, 12})));
    EXPECT_EQ(ci_numerator(b), hilbert_numerator(tuple({10, 14, 15, 21})));
    EXPECT_EQ(ci_numerator(c), hilbert_numerator(tuple({2, 3})));

    EXPECT_EQ(factor_complete_intersection(hilbert_numerator(tuple({10, 14, 15, 21})), 4), b);
    EXPECT_FALSE(factor_complete_intersection(hilbert_numerator(tuple({5, 6, 7, 8})), 4).has_value());
}

TEST(CompleteIntersection, TelescopicDegrees) {
    const std::vector<std::uint64_t> ord = {8, 12, 10, 9}, two = {2, 3};
    EXPECT_EQ(telescopic_degrees(ord), (std::vector<std::uint64_t>{24, 20, 18}));
    EXPECT_EQ(telescopic_degrees(two), (std::vector<std::uint64_t>{6}));
}

TEST(Pseudosymmetric, FrobeniusFromGenerators) {
    const auto t = tuple({3, 4, 5});
    EXPECT_EQ(pseudosymmetric_frobenius(t), 2);
    EXPECT_EQ(to_terms(pseudosymmetric_numerator(t, profile(t))), oracle::numerator_by_series({3, 4, 5}));
    expect_error(ErrorCode::NotPseudosymmetric, [] {
        const auto bad = tuple({5, 6, 7});
        pseudosymmetric_numerator(bad, profile(bad));
    });
}

TEST(Pseudosymmetric, RandomThreeGenerated) {
    std::mt19937_64 rng(8);
    int seen = 0;
    for (int trial = 0; trial < 2000 && seen < 20; ++trial) {
        auto gens = oracle::random_tuple(rng, 3, 60);
        if (gens.size() != 3) continue;
        const auto t = tuple(gens);
        const auto p = profile(t);
        if (!classify(t, p).pseudosymmetric) continue;
        ++seen;
        EXPECT_EQ(pseudosymmetric_frobenius(t), p.frobenius) << t.to_string();
        EXPECT_EQ(to_terms(pseudosymmetric_numerator(t, p)), oracle::numerator_by_series(gens));
    }
    EXPECT_GT(seen, 0);
}

TEST(MaximalEmbedding, Numerators) {
    for (auto gens : std::vector<std::vector<std::uint64_t>>{{3, 5, 7}, {4, 10, 19, 25}, {5, 6, 7, 8, 9}, {4, 5, 6, 7}}) {
        const auto t = tuple(gens);
        EXPECT_EQ(to_terms(med_numerator(t, profile(t))), oracle::numerator_by_series(gens)) << t.to_string();
    }
    const auto fam = med_syzygy_table(tuple({3, 5, 7}));
    EXPECT_EQ(fam.kinds.at(0), (std::vector<std::uint64_t>{10, 12, 14}));
    EXPECT_EQ(fam.kinds.at(1), (std::vector<std::uint64_t>{17, 19}));
    expect_error(ErrorCode::NotMED, [] {
        const auto t = tuple({5, 6, 7, 8});
        med_numerator(t, profile(t));
    });
}

TEST(Syzygy, ExtractionExamples) {
    auto extract = [](std::vector<std::uint64_t> g) {
        const auto t = tuple(g);
        const auto q = hilbert_numerator(t);
        return extract_syzygy_table(q, t, classify_semigroup(t, profile(t)));
    };
    const auto a = extract({3, 5, 7});
    ASSERT_FALSE(a.ambiguous()) << a.ambiguity;
    EXPECT_EQ(a.table->kinds, (std::vector<std::vector<std::uint64_t>>{{10, 12, 14}, {17, 19}}));

    const auto b = extract({5, 6, 7, 8});
    ASSERT_FALSE(b.ambiguous()) << b.ambiguity;
    EXPECT_EQ(b.table->kinds,
              (std::vector<std::vector<std::uint64_t>>{{12, 13, 14, 15, 16}, {19, 20, 21, 22, 23}, {35}}));

    const auto c = extract({19, 23, 29, 31, 37});
    ASSERT_FALSE(c.ambiguous()) << c.ambiguity;
    EXPECT_EQ(c.table->betti(), (std::vector<std::uint64_t>{13, 24, 13, 1}));
    EXPECT_EQ(c.table->kinds, testutil::bresinsky_table().kinds);

    const auto d = extract({4, 10, 19, 25});
    ASSERT_FALSE(d.ambiguous()) << d.ambiguity;
    EXPECT_EQ(d.table->betti(), (std::vector<std::uint64_t>{6, 8, 3}));

    // complete intersections: first kind is the relation degrees
    const auto e = extract({8, 9, 10, 12});
    ASSERT_FALSE(e.ambiguous());
    EXPECT_EQ(e.table->kinds.at(0), (std::vector<std::uint64_t>{18, 20, 24}));
}

TEST(Syzygy, ExtractedTablesReassemble) {
    std::mt19937_64 rng(77);
    int resolved = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto gens = oracle::random_tuple(rng, 4, 40);
        const auto t = tuple(gens);
        const auto q = hilbert_numerator(t);
        const auto flags = classify_semigroup(t, profile(t));
        const auto ex = extract_syzygy_table(q, t, flags);
        if (ex.ambiguous()) continue;
        ++resolved;
        EXPECT_EQ(ex.table->reassemble(), q) << t.to_string();
        EXPECT_NO_THROW(validate_syzygy_table(*ex.table, q, t, flags.symmetric)) << t.to_string();
        if (gens.size() == 3) EXPECT_EQ(ex.table->kinds.at(0).size(), flags.symmetric ? 2U : 3U) << t.to_string();
    }
    EXPECT_GT(resolved, 50);
}

TEST(Syzygy, FirstKindMultiplicityOnBresinsky) {
    const auto t = tuple({19, 23, 29, 31, 37});
    std::uint64_t total = 0;
    for (std::uint64_t s = 1; s <= 240; ++s) total += first_syzygy_multiplicity(t, s);
    EXPECT_EQ(total, 13U);
    EXPECT_EQ(first_syzygy_multiplicity(t, 60), 1U);
    EXPECT_EQ(first_syzygy_multiplicity(t, 129), 0U);
}

TEST(Syzygy, ValidationRejectsCorruptTables) {
    const auto t = tuple({19, 23, 29, 31, 37});
    const auto q = hilbert_numerator(t);
    auto table = testutil::bresinsky_table();
    EXPECT_NO_THROW(validate_syzygy_table(table, q, t, true));

    auto swapped = table;
    std::swap(swapped.kinds[0][0], swapped.kinds[2][12]); // 60 <-> 180: reassembles, breaks ordering
    expect_error(ErrorCode::InconsistentBetti, [&] { validate_syzygy_table(swapped, q, t, true); });

    auto dropped = table;
    dropped.kinds[1].pop_back();
    expect_error(ErrorCode::InconsistentBetti, [&] { validate_syzygy_table(dropped, q, t, true); });
}

TEST(Syzygy, JsonRoundTrip) {
    const auto t = tuple({19, 23, 29, 31, 37});
    const auto parsed = parse_syzygy_table(read_fixture("bresinsky.json"), t);
    EXPECT_EQ(parsed.kinds, testutil::bresinsky_table().kinds);
    EXPECT_EQ(parsed.provenance, TableProvenance::Supplied);
    const auto again = parse_syzygy_table(syzygy_table_json(parsed, t), t);
    EXPECT_EQ(again.kinds, parsed.kinds);

    expect_error(ErrorCode::InvalidTable, [&] { parse_syzygy_table("{not json", t); });
    expect_error(ErrorCode::InvalidTable, [&] { parse_syzygy_table(R"({"generators":[3,5,7],"kinds":[]})", t); });
    expect_error(ErrorCode::InvalidTable, [&] { parse_syzygy_table(R"({"generators":[19,23,29,31,37]})", t); });
}

TEST(Divisibility, RootOrders) {
    const auto q = hilbert_numerator(tuple({8, 9, 10, 12}));
    EXPECT_TRUE(poly_exact_divide(q, cyclotomic_polynomial(2).pow(3)).remainder.is_zero());
    EXPECT_FALSE(poly_exact_divide(q, cyclotomic_polynomial(2).pow(4)).remainder.is_zero());
}
