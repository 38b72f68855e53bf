#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pgcodes/classify.hpp"
#include "pgcodes/error.hpp"
#include "pgcodes/evensets.hpp"
#include "pgcodes/oracles.hpp"

#include <set>

using namespace pgcodes;

namespace {

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("hyperovals of small planes match exhaustive search") {
    for (std::uint32_t q : {2u, 4u}) {
        const auto r = classify::enumerate_hyperovals(q, 1, true);
        const auto brute = oracle::brute_hyperovals(q);
        CHECK(r.count == brute.size());
        REQUIRE(r.certificates.has_value());
        CHECK(std::set<PointSet>(r.certificates->begin(), r.certificates->end()) ==
              std::set<PointSet>(brute.begin(), brute.end()));
        CHECK(r.ok());
    }
    CHECK(classify::enumerate_hyperovals(2).count == 7);
    CHECK(classify::enumerate_hyperovals(4).count == 168);
}

TEST_CASE("hyperovals of PG(2,8)") {
    const auto one = classify::enumerate_hyperovals(8, 1);
    const auto four = classify::enumerate_hyperovals(8, 4);
    CHECK(one.count == 32704);
    CHECK(four.count == 32704);
    CHECK(one.nodes == four.nodes);
    CHECK(one.ok());
}

TEST_CASE("hyperoval field errors") {
    CHECK(kind_of([] { classify::enumerate_hyperovals(16); }) == ErrorKind::UnsupportedField);
    CHECK(kind_of([] { classify::enumerate_hyperovals(3); }) == ErrorKind::UnsupportedField);
}

TEST_CASE("conic counts") {
    CHECK(classify::count_conics(2) == 28);
    CHECK(classify::count_conics(4) == 1008);
    CHECK(classify::count_conics(8) == 32704);
    CHECK(classify::count_conics(3) == 234);
    CHECK(classify::delta(4) == 168);
    CHECK(classify::delta(8) == 32704);
    CHECK(kind_of([] { classify::delta(2); }) == ErrorKind::UnsupportedField);
    const auto c4 = oracle::conic_census(4);
    CHECK(c4.distinct_conics == classify::count_conics(4));
    CHECK(oracle::conic_census(2).distinct_conics == classify::count_conics(2));
    CHECK(oracle::five_point_conic_dedup(4) == 1008);
    CHECK(oracle::five_point_conic_dedup(2) == 0);
}

TEST_CASE("minimum even sets") {
    const auto r22 = classify::enumerate_min_even_sets(2, 2, 1, true);
    CHECK(r22.count == 7);
    CHECK(r22.tallies.at("size") == 4);
    CHECK(r22.ok());
    const auto r24 = classify::enumerate_min_even_sets(2, 4);
    CHECK(r24.count == 168);
    CHECK(r24.tallies.at("size") == 6);
    const auto r32 = classify::enumerate_min_even_sets(3, 2, 2, true);
    CHECK(r32.count == 15);
    CHECK(r32.tallies.at("size") == 8);
    CHECK(r32.ok());
    CHECK(oracle::brute_min_even_size(*geom::AmbientSpace::create(3, 2), 8) == 8);
    CHECK(oracle::brute_even_sets(*geom::AmbientSpace::create(3, 2), 8).size() == 15);
}

TEST_CASE("minimum even sets of PG(3,4)") {
    const auto r = classify::enumerate_min_even_sets(3, 4, 4, true);
    CHECK(r.count == 14280);
    CHECK(r.tallies.at("size") == 24);
    CHECK(r.ok());
    REQUIRE(r.certificates.has_value());
    CHECK(std::set<PointSet>(r.certificates->begin(), r.certificates->end()) == oracle::construction_hypercylinders(4));
}

TEST_CASE("minimum even set errors") {
    CHECK(kind_of([] { classify::enumerate_min_even_sets(3, 8); }) == ErrorKind::ClassificationOutOfBudget);
    CHECK(kind_of([] { classify::enumerate_min_even_sets(2, 3); }) == ErrorKind::OddCharacteristic);
}

TEST_CASE("counting formula") {
    CHECK(classify::count_min_weight_codewords(2, 1, 4) == 168);
    CHECK(classify::count_min_weight_codewords(3, 1, 4) == 14280);
    CHECK(classify::count_min_weight_codewords(4, 2, 4) == std::uint64_t{341} * 85 * 168);
    CHECK(kind_of([] { classify::count_min_weight_codewords(3, 3, 4); }) == ErrorKind::DimensionOutOfRange);
}

TEST_CASE("small weight words") {
    const auto r23 = classify::verify_small_weight_theorem(2, 3);
    CHECK(r23.count == 182);
    CHECK(r23.ok());
    const auto r22 = classify::verify_small_weight_theorem(2, 2, 2);
    CHECK(r22.count == 14);
    CHECK(r22.ok());
    const auto r32 = classify::verify_small_weight_theorem(3, 2);
    CHECK(r32.count == 30);
    CHECK(r32.ok());
}

TEST_CASE("bound attainment") {
    for (auto [n, q, w, words] : {std::tuple{2, 2u, 4u, 7u}, {2, 4u, 6u, 168u}, {3, 2u, 8u, 15u}}) {
        const auto b = classify::verify_bound_attainment(n, q);
        CHECK(b.min_weight == w);
        CHECK(b.min_words == words);
        CHECK(b.ok());
        CHECK(b.bound == b.closed_form);
        REQUIRE(b.expected.has_value());
        CHECK(b.min_weight == *b.expected);
    }
}
