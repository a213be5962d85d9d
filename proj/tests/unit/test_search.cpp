#include <algorithm>

#include "../golden_arrays.hpp"
#include "oafrac/errors.hpp"
#include "oafrac/io.hpp"
#include "oafrac/search.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace oafrac;

TEST_CASE("search agrees with the unpruned reference on a tiny space") {
    FactorSpec spec({2, 2, 2});
    SearchOptions options;
    options.limit = 0;  // everything
    SearchOutcome outcome = search_arrays(spec, 4, 2, options);
    CHECK(outcome.exhausted);

    auto reference = oracle::search_reference(spec, 4, 2, false);
    REQUIRE(outcome.arrays.size() == reference.size());
    for (size_t i = 0; i < reference.size(); ++i) CHECK(outcome.arrays[i] == reference[i]);

    // the two half fractions: even parity {000,011,101,110} and its mirror
    CHECK(outcome.arrays.size() == 2);
    std::vector<int> even_codes{0, 3, 5, 6};
    CHECK(outcome.arrays[0] == oracle::array_from_codes(spec, even_codes));
}

TEST_CASE("search handles repeated columns like the reference does") {
    // strength 1 at twice the minimum size: solutions are multisets with
    // genuinely repeated runs
    FactorSpec spec({3, 2});
    SearchOptions options;
    options.limit = 0;
    SearchOutcome outcome = search_arrays(spec, 6, 1, options);
    CHECK(outcome.exhausted);
    auto reference = oracle::search_reference(spec, 6, 1, false);
    REQUIRE(outcome.arrays.size() == reference.size());
    for (size_t i = 0; i < reference.size(); ++i) CHECK(outcome.arrays[i] == reference[i]);
    CHECK(outcome.arrays.size() > 2);

    // size equals L_k here, so anything that is not the complete design
    // must contain a repeated run
    bool some_with_repeats = false;
    for (const auto& found : outcome.arrays)
        if (!is_complete_multiple(found)) some_with_repeats = true;
    CHECK(some_with_repeats);
}

TEST_CASE("lambda = 1 leaves no room beside the complete design") {
    SearchOptions options;
    options.exclude_complete = true;
    SearchOutcome outcome = search_arrays(FactorSpec({2, 2}), 4, 2, options);
    CHECK(outcome.arrays.empty());
    CHECK(outcome.exhausted);
    CHECK(outcome.explored > 0);
}

TEST_CASE("a strength-2 size-12 array beside the complete 3x2x2 design") {
    FactorSpec spec({3, 2, 2});
    SearchOptions options;
    options.exclude_complete = true;
    SearchOutcome outcome = search_arrays(spec, 12, 2, options);
    REQUIRE(outcome.arrays.size() == 1);
    const OrthogonalArray& found = outcome.arrays.front();
    CHECK(verify_strength(found, 2).holds);
    CHECK_FALSE(is_complete_multiple(found));

    // the classic printed array is itself a member of the solution set
    OrthogonalArray printed = parse_array(golden::k3x12_strength2);
    CHECK(printed.size() == 12);
    CHECK(verify_strength(printed, 2).holds);
    CHECK_FALSE(is_complete_multiple(printed));
}

TEST_CASE("divisibility gate stops the search before any node") {
    SearchOutcome outcome = search_arrays(FactorSpec({3, 2, 2}), 10, 2, {});
    CHECK(outcome.arrays.empty());
    CHECK(outcome.explored == 0);
    CHECK(outcome.exhausted);
    CHECK(outcome.note.find("multiple of L_2") != std::string::npos);
}

TEST_CASE("every array a search returns passes the verifier") {
    std::mt19937_64 rng(111);
    for (int iter = 0; iter < 20; ++iter) {
        FactorSpec spec = testutil::random_spec(rng, 3, 3);
        int k = spec.factor_count();
        int t = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(k));
        std::uint64_t l = to_u64(compute_L(spec, t));
        std::uint64_t n = l * (1 + rng() % 2);
        if (n > 40) continue;
        SearchOptions options;
        options.limit = 3;
        options.budget = 200000;
        SearchOutcome outcome = search_arrays(spec, n, t, options);
        for (const auto& found : outcome.arrays) {
            CHECK(verify_strength(found, t).holds);
            CHECK(found.size() == n);
        }
    }
}

TEST_CASE("budget stop is reported, deterministic and resumable by raising it") {
    FactorSpec spec({6, 6, 6, 6});
    SearchOptions options;
    options.budget = 50000;
    SearchOutcome outcome = search_arrays(spec, 36, 2, options);
    CHECK(outcome.budget_hit);
    CHECK_FALSE(outcome.exhausted);
    CHECK(outcome.arrays.empty());
    CHECK(outcome.explored == 50000);

    SearchOutcome again = search_arrays(spec, 36, 2, options);
    CHECK(again.explored == outcome.explored);
    CHECK(again.arrays.size() == outcome.arrays.size());
}

TEST_CASE("limit cuts enumeration deterministically") {
    FactorSpec spec({2, 2, 2});
    SearchOptions one;
    one.limit = 1;
    SearchOptions all;
    all.limit = 0;
    auto first = search_arrays(spec, 4, 2, one);
    auto every = search_arrays(spec, 4, 2, all);
    REQUIRE(first.arrays.size() == 1);
    CHECK(first.arrays.front() == every.arrays.front());
    CHECK_FALSE(first.exhausted);  // stopped at the limit, not the end
}

TEST_CASE("uniqueness probe") {
    UniquenessReport not_unique = uniqueness_probe(FactorSpec({3, 2, 2}), 2);
    CHECK(not_unique.status == Uniqueness::NotUnique);
    REQUIRE(not_unique.witness.has_value());
    CHECK(not_unique.witness->size() == 12);
    CHECK(verify_strength(*not_unique.witness, 2).holds);
    CHECK_FALSE(is_complete_multiple(*not_unique.witness));

    CHECK(uniqueness_probe(FactorSpec({2, 2}), 2).status == Uniqueness::Unique);
    CHECK(uniqueness_probe(FactorSpec({2, 3}), 2).status == Uniqueness::Unique);

    // below the threshold d the question is not even well posed
    CHECK_THROWS_AS(uniqueness_probe(FactorSpec({2, 2, 3}), 1), UsageError);
}

TEST_CASE("search argument validation") {
    CHECK_THROWS_AS(search_arrays(FactorSpec({2, 2}), 4, 3, {}), UsageError);
    CHECK_THROWS_AS(search_arrays(FactorSpec({2, 2}), 0, 2, {}), UsageError);
    std::vector<int> big(10, 6);
    CHECK_THROWS_AS(search_arrays(FactorSpec(big), 36, 2, {}), CapacityError);
}
