#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pgcodes/codes.hpp"
#include "pgcodes/error.hpp"
#include "pgcodes/evensets.hpp"
#include "pgcodes/oracles.hpp"

#include <set>

using namespace pgcodes;
using codes::CodeVector;
using codes::IncidenceCode;
using codes::Rational;
using geom::AmbientSpace;

namespace {

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

TEST_CASE("dimensions") {
    struct Case {
        int n, k;
        std::uint32_t q;
        std::size_t dim;
    };
    // prime q: hyperplane codes have dimension C(n+p-1,n)+1
    for (const auto& c : {Case{2, 1, 2, 4}, Case{2, 1, 3, 7}, Case{2, 1, 4, 10}, Case{3, 2, 2, 5}, Case{3, 1, 2, 11},
                          Case{3, 1, 4, 61}, Case{3, 2, 3, 11}}) {
        CAPTURE(c.n);
        CAPTURE(c.q);
        const auto space = AmbientSpace::create(c.n, c.q);
        const auto code = IncidenceCode::build(space, c.k);
        CHECK(code.dimension() == c.dim);
        CHECK(code.dimension() + code.dual_dimension() == space->num_points());
    }
}

TEST_CASE("dimension agrees with the number of generator combinations") {
    for (auto [n, k, q] : {std::tuple{2, 1, 2u}, {2, 1, 3u}, {3, 2, 2u}, {2, 1, 4u}}) {
        const auto space = AmbientSpace::create(n, q);
        const auto code = IncidenceCode::build(space, k);
        std::uint64_t words = 0;
        for (const auto& [w, c] : oracle::brute_weight_distribution(*space, k)) words += c;
        CHECK(words == ipow(space->p(), code.dimension()));
    }
}

TEST_CASE("dual basis is orthogonal to every generator") {
    for (auto [n, k, q] : {std::tuple{2, 1, 3u}, {2, 1, 4u}, {3, 1, 2u}, {3, 2, 3u}}) {
        const auto space = AmbientSpace::create(n, q);
        const auto code = IncidenceCode::build(space, k);
        for (const auto& v : code.dual_basis()) {
            const CodeVector c(space, v);
            REQUIRE(code.dual_contains(c));
            for (const auto& b : code.blocks()) REQUIRE(codes::dot(c, b) == 0);
        }
    }
}

TEST_CASE("membership") {
    const auto pg22 = AmbientSpace::create(2, 2);
    const auto c22 = IncidenceCode::build(pg22, 1);
    for (const auto& l : c22.blocks()) CHECK(c22.contains(CodeVector::characteristic(pg22, l)));
    CHECK(c22.contains(CodeVector::all_one(pg22)));
    CHECK_FALSE(c22.dual_contains(CodeVector::characteristic(pg22, c22.blocks()[0])));
    CHECK(c22.dual_contains(CodeVector::zero(pg22)));

    const auto pg24 = AmbientSpace::create(2, 4);
    const auto c24 = IncidenceCode::build(pg24, 1);
    for (std::uint32_t i = 0; i < pg24->num_points(); ++i)
        CHECK_FALSE(c24.contains(CodeVector::characteristic(pg24, PointSet(pg24->num_points(), {i}))));
    const auto oval = evensets::regular_hyperoval(*pg24, pg24->full_space());
    CHECK(c24.dual_contains(CodeVector::characteristic(pg24, oval)));

    const auto pg23 = AmbientSpace::create(2, 3);
    const auto c23 = IncidenceCode::build(pg23, 1);
    const auto w = CodeVector::characteristic(pg23, c23.blocks()[0], 2) - CodeVector::characteristic(pg23, c23.blocks()[5]);
    CHECK(c23.contains(w));
    CHECK_THROWS_AS(c23.contains(CodeVector::zero(pg22)), Error);
}

TEST_CASE("build errors") {
    CHECK_THROWS_AS(IncidenceCode::build(AmbientSpace::create(2, 2), 2), Error);
    CHECK_THROWS_AS(IncidenceCode::build(AmbientSpace::create(2, 2), 0), Error);
    CHECK_THROWS_AS(IncidenceCode::build(AmbientSpace::create(4, 8), 1), Error);
}

TEST_CASE("lower bound") {
    CHECK(codes::line_code_dual_bound(2, 4) == Rational::of(6));
    CHECK(codes::line_code_dual_bound(2, 8) == Rational::of(10));
    CHECK(codes::line_code_dual_bound(3, 4) == Rational::of(22));
    CHECK(codes::line_code_dual_bound(3, 2) == Rational::of(8));
    CHECK(codes::line_code_dual_bound(2, 3) == Rational::of(6));
    for (auto [n, q] : {std::pair{2, 2u}, {2, 3u}, {2, 4u}, {3, 2u}, {3, 3u}}) {
        const auto code = IncidenceCode::build(AmbientSpace::create(n, q), 1);
        CHECK(codes::design_dual_bound(code.bound_params()) == codes::line_code_dual_bound(n, q));
    }
    CHECK(Rational::of(4, -6).str() == "-2/3");
}

TEST_CASE("multiset size") {
    const auto s = AmbientSpace::create(2, 3);
    const auto code = IncidenceCode::build(s, 1);
    CHECK(codes::multiset_size(CodeVector::zero(s)) == 0);
    CHECK(codes::multiset_size(CodeVector::characteristic(s, code.blocks()[0])) == 4);
    CHECK(codes::multiset_size(CodeVector::characteristic(s, code.blocks()[0], 2)) == 8);
    for (const auto& c : codes::enumerate_codewords_up_to_weight(code, s->num_points()))
        REQUIRE(codes::multiset_size(c) + codes::multiset_size(-c) == 3 * c.weight());
}

TEST_CASE("two-valued shape") {
    const auto s = AmbientSpace::create(2, 3);
    std::vector<std::uint8_t> v(s->num_points(), 0);
    v[0] = 1, v[1] = 2;
    CHECK(codes::has_two_valued_shape(CodeVector(s, v)));
    v[2] = 1;
    CHECK_FALSE(codes::has_two_valued_shape(CodeVector(s, v)));
}

TEST_CASE("constant inner product with subspaces") {
    const auto s = AmbientSpace::create(2, 3);
    const auto code = IncidenceCode::build(s, 1);
    const auto pi = CodeVector::characteristic(s, code.blocks()[0]);
    const auto rho = CodeVector::characteristic(s, code.blocks()[3]);
    CHECK(codes::beta_of(code, pi) == 1);
    CHECK(codes::beta_of(code, pi - rho) == 0);
    CHECK(codes::beta_of(code, pi.scaled(2) + rho) == 0);
    CHECK(codes::beta_of(code, pi + rho) == 2);
    CHECK_THROWS_AS(codes::beta_of(code, CodeVector::characteristic(s, PointSet(s->num_points(), {0}))), Error);

    const auto s3 = AmbientSpace::create(3, 3);
    const auto code3 = IncidenceCode::build(s3, 2);
    const auto c = CodeVector::characteristic(s3, code3.blocks()[1], 2) + CodeVector::characteristic(s3, code3.blocks()[9]);
    CHECK(codes::beta_of(code3, c) == 0);
}

TEST_CASE("feet") {
    const auto s = AmbientSpace::create(2, 4);
    const auto& lines = s->lines();
    const auto& line = lines.sets[0];
    std::uint32_t off = 0;
    while (line.contains(off)) ++off;
    CHECK(codes::feet(*s, line, off) == line);

    const auto oval = evensets::regular_hyperoval(*s, s->full_space());
    for (std::uint32_t p = 0; p < s->num_points(); ++p)
        if (!oval.contains(p)) REQUIRE(codes::feet(*s, oval, p).empty());

    // direct oracle: walk every other point of S
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        PointSet set(s->num_points());
        for (std::uint32_t i = 0; i < s->num_points(); ++i)
            if (rng() % 3 == 0) set.insert(i);
        const std::uint32_t p = static_cast<std::uint32_t>(rng() % s->num_points());
        set.insert(p);
        PointSet expected(s->num_points());
        for (auto r : set.members()) {
            if (r == p) continue;
            PointSet on(s->num_points(), s->line_points(p, r));
            on &= set;
            on.erase(p);
            if (on.size() == 1) expected.insert(r);
        }
        REQUIRE(codes::feet(*s, set, p) == expected);
    }
}

TEST_CASE("feet without a line table") {
    const auto s = AmbientSpace::create(4, 8);
    PointSet set(s->num_points(), s->line_points(0, 1));
    std::uint32_t off = 2;
    while (set.contains(off)) ++off;
    CHECK(codes::feet(*s, set, off) == set);
}

TEST_CASE("light codewords") {
    const auto s23 = AmbientSpace::create(2, 3);
    const auto c23 = IncidenceCode::build(s23, 1);
    const auto words = codes::enumerate_codewords_up_to_weight(c23, 6);
    CHECK(words.size() == 182);
    std::size_t w4 = 0, w6 = 0;
    for (const auto& w : words) (w.weight() == 4 ? w4 : w6) += 1;
    CHECK(w4 == 26);
    CHECK(w6 == 156);
    CHECK(codes::enumerate_codewords_up_to_weight(c23, 6, 3) == words);
    CHECK(codes::enumerate_codewords_up_to_weight(c23, 0).empty());

    const auto s22 = AmbientSpace::create(2, 2);
    const auto c22 = IncidenceCode::build(s22, 1);
    const auto lines = codes::enumerate_codewords_up_to_weight(c22, 3);
    REQUIRE(lines.size() == 7);
    std::set<PointSet> supports;
    for (const auto& w : lines) supports.insert(w.support());
    CHECK(supports == std::set<PointSet>(c22.blocks().begin(), c22.blocks().end()));
}

TEST_CASE("traversal budget") {
    const auto code = IncidenceCode::build(AmbientSpace::create(2, 8), 1);
    CHECK(code.dual_dimension() == 45);
    try {
        codes::enumerate_span_min_weight(code.ambient_ptr(), code.dual_basis());
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BudgetExceeded);
    }
}

TEST_CASE("minimum weight words of a dual") {
    const auto s = AmbientSpace::create(2, 4);
    const auto code = IncidenceCode::build(s, 1);
    CHECK(code.dual_dimension() == 11);
    const auto one = codes::enumerate_span_min_weight(s, code.dual_basis(), 1);
    const auto three = codes::enumerate_span_min_weight(s, code.dual_basis(), 3);
    CHECK(one.weight == 6);
    CHECK(one.words.size() == 168);
    CHECK(one.visited == 2048);
    CHECK(one.words == three.words);
    CHECK(IncidenceCode::build(AmbientSpace::create(3, 4), 1).dual_dimension() == 24);
}

TEST_CASE("support spans") {
    const auto s = AmbientSpace::create(3, 2);
    const auto line = s->points_of(s->subspaces(1)[4]);
    const auto plane = s->points_of(s->subspaces(2)[2]);
    CHECK(codes::support_subspace_check(CodeVector::characteristic(s, line), 1));
    CHECK_FALSE(codes::support_subspace_check(CodeVector::characteristic(s, line), 2));
    CHECK(codes::support_subspace_check(CodeVector::characteristic(s, plane), 2));
    CHECK(codes::support_subspace_check(CodeVector::all_one(s), 3));

    const auto s24 = AmbientSpace::create(3, 4);
    const auto h = s24->subspaces(2)[0];
    const auto oval = evensets::regular_hyperoval(*s24, h);
    CHECK(codes::support_subspace_check(CodeVector::characteristic(s24, oval), 2));
}
