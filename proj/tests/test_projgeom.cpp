#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pgcodes/error.hpp"
#include "pgcodes/evensets.hpp"
#include "pgcodes/oracles.hpp"
#include "pgcodes/projgeom.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace pgcodes;
using geom::AmbientSpace;

TEST_CASE("theta and gaussian coefficients") {
    CHECK(geom::theta(1, 4) == 5);
    CHECK(geom::theta(2, 2) == 7);
    CHECK(geom::theta(3, 8) == 585);
    CHECK(geom::theta(-1, 3) == 0);
    CHECK(geom::gaussian_coefficient(4, 2, 2) == 35);
    CHECK(geom::gaussian_coefficient(3, 1, 4) == 21);
    CHECK(geom::gaussian_coefficient(5, 0, 7) == 1);
    CHECK(geom::gaussian_coefficient(4, 3, 4) == 85);
    CHECK(geom::gaussian_coefficient(5, 2, 8) == geom::gaussian_coefficient(5, 3, 8));
}

TEST_CASE("subspace counts against spans of point tuples") {
    CHECK(oracle::brute_subspace_count(*AmbientSpace::create(3, 2), 1) == 35);
    CHECK(oracle::brute_subspace_count(*AmbientSpace::create(3, 2), 2) == 15);
    CHECK(oracle::brute_subspace_count(*AmbientSpace::create(2, 3), 1) == 13);
    CHECK(oracle::brute_subspace_count(*AmbientSpace::create(3, 3), 2) == 40);
    CHECK(oracle::brute_subspace_count(*AmbientSpace::create(2, 4), 1) == 21);
}

TEST_CASE("points are normalized and indexed in lexicographic order") {
    for (auto [n, q] : {std::pair{2, 2u}, {2, 4u}, {3, 4u}, {3, 3u}, {4, 2u}}) {
        const auto s = AmbientSpace::create(n, q);
        REQUIRE(s->num_points() == geom::theta(n, q));
        const auto pts = s->points();
        for (std::uint32_t i = 0; i < pts.size(); ++i) {
            REQUIRE(pts[i].index == i);
            std::size_t lead = 0;
            while (pts[i].coords[lead] == 0) ++lead;
            REQUIRE(pts[i].coords[lead] == 1);
            REQUIRE(s->index_of(pts[i].coords) == i);
            if (i) REQUIRE(pts[i - 1].coords < pts[i].coords);
        }
    }
    const auto s = AmbientSpace::create(2, 2);
    CHECK(s->point(0).coords == geom::Coords{0, 0, 1});
    CHECK(s->point(6).coords == geom::Coords{1, 1, 1});
}

TEST_CASE("multiples of a vector give the same point") {
    const auto s = AmbientSpace::create(3, 8);
    const auto& f = s->field();
    for (std::uint32_t i = 0; i < s->num_points(); i += 37) {
        const auto c = s->coords(i);
        for (gf::Elem a = 1; a < 8; ++a) {
            geom::Coords v;
            for (auto x : c) v.push_back(f.mul(a, x));
            REQUIRE(s->index_of(v) == i);
        }
    }
}

TEST_CASE("subspace enumeration") {
    for (int n = 1; n <= 3; ++n)
        for (std::uint32_t q : {2u, 3u, 4u, 8u}) {
            const auto s = AmbientSpace::create(n, q);
            for (int k = 0; k <= n; ++k) {
                const auto subs = s->subspaces(k);
                REQUIRE(subs.size() == geom::gaussian_coefficient(n + 1, k + 1, q));
                std::set<PointSet> distinct;
                for (const auto& u : subs) {
                    REQUIRE(u.dim() == k);
                    const auto pts = s->points_of(u);
                    REQUIRE(pts.size() == geom::theta(k, q));
                    distinct.insert(pts);
                }
                REQUIRE(distinct.size() == subs.size());
            }
        }
    CHECK(AmbientSpace::create(3, 2)->subspaces(1).size() == 35);
    CHECK(AmbientSpace::create(2, 4)->subspaces(1).size() == 21);
    CHECK(AmbientSpace::create(3, 4)->subspaces(2).size() == 85);
    CHECK_THROWS_AS(AmbientSpace::create(2, 2)->subspaces(3), Error);
}

TEST_CASE("line table matches lines found by closure") {
    for (auto [n, q] : {std::pair{2, 3u}, {3, 2u}, {2, 8u}}) {
        const auto s = AmbientSpace::create(n, q);
        const auto brute = oracle::brute_lines(*s);
        std::set<PointSet> table(s->lines().sets.begin(), s->lines().sets.end());
        CHECK(table == std::set<PointSet>(brute.begin(), brute.end()));
    }
}

TEST_CASE("two points lie on exactly one line") {
    for (auto [n, q] : {std::pair{2, 4u}, {3, 4u}, {3, 8u}}) {
        const auto s = AmbientSpace::create(n, q);
        const auto& lines = s->lines();
        for (const auto& l : lines.points_on) REQUIRE(l.size() == q + 1);
        for (std::uint32_t a = 0; a < s->num_points(); ++a) {
            std::vector<int> seen(s->num_points(), 0);
            for (auto id : lines.through[a])
                for (auto b : lines.points_on[id]) ++seen[b];
            for (std::uint32_t b = 0; b < s->num_points(); ++b)
                if (b != a) REQUIRE(seen[b] == 1);
        }
    }
}

TEST_CASE("hyperplanes and points are equinumerous") {
    for (auto [n, q] : {std::pair{2, 3u}, {3, 2u}, {3, 4u}, {4, 2u}})
        CHECK(AmbientSpace::create(n, q)->subspaces(n - 1).size() == geom::theta(n, q));
}

TEST_CASE("span and incidence") {
    const auto s = AmbientSpace::create(3, 4);
    const std::vector<std::uint32_t> p{0}, pq{0, 10};
    CHECK(s->span(p).dim() == 0);
    CHECK(s->points_of(s->span(p)).size() == 1);
    const auto line = s->span(pq);
    CHECK(line.dim() == 1);
    CHECK(s->point_list(line).size() == 5);
    CHECK(s->incident(0, line));
    std::uint32_t off = 0;
    while (s->incident(off, line)) ++off;
    CHECK_FALSE(s->incident(off, line));
    // a frame spans everything
    std::vector<std::uint32_t> frame;
    for (geom::Coords v : {geom::Coords{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 1, 1}})
        frame.push_back(s->index_of(v));
    CHECK(s->span(frame) == s->full_space());
    for (std::uint32_t i = 0; i < s->num_points(); ++i) REQUIRE(s->incident(i, s->full_space()));
    CHECK_FALSE(s->incident(0, s->empty_space()));
}

TEST_CASE("join and meet") {
    const auto s = AmbientSpace::create(3, 3);
    const auto planes = s->subspaces(2);
    const auto m = s->meet(planes[0], planes[1]);
    CHECK(m.dim() == 1);
    CHECK(s->points_of(m) == (s->points_of(planes[0]) & s->points_of(planes[1])));
    CHECK(s->join(planes[0], planes[1]) == s->full_space());
    const auto lines = s->subspaces(1);
    for (const auto& l : lines) {
        const auto j = s->join(l, planes[5]);
        REQUIRE((j.dim() == 2 || j.dim() == 3));
        REQUIRE((j.dim() == 2) == s->points_of(l).is_subset_of(s->points_of(planes[5])));
    }
}

TEST_CASE("hyperplanes missing a set") {
    const auto s = AmbientSpace::create(3, 4);
    CHECK(s->hyperplanes_disjoint_from(PointSet::full(s->num_points())).empty());
    PointSet one(s->num_points(), {17});
    CHECK(s->hyperplanes_disjoint_from(one).size() == geom::theta(3, 4) - geom::theta(2, 4));

    std::mt19937_64 rng(5);
    const auto h = evensets::random_hypercylinder(*s, rng);
    std::vector<geom::Subspace> expected;
    for (const auto& pi : s->subspaces(2)) {
        const bool through_vertex = s->join(pi, h.vertex) == pi;
        const auto trace = s->meet(pi, h.base_plane);
        const bool external = !s->points_of(trace).intersects(h.base_hyperoval);
        if (through_vertex && external) expected.push_back(pi);
    }
    auto got = s->hyperplanes_disjoint_from(h.points);
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    CHECK(expected.size() == 6);  // external lines of a hyperoval in PG(2,4)
    CHECK(got == expected);
}

TEST_CASE("subspaces within a subspace") {
    const auto s = AmbientSpace::create(3, 4);
    const auto plane = s->subspaces(2)[7];
    const auto lines = s->subspaces_within(plane, 1);
    CHECK(lines.size() == 21);
    for (const auto& l : lines) REQUIRE(s->points_of(l).is_subset_of(s->points_of(plane)));
    CHECK(s->subspaces_within(plane, 0).size() == 21);
}

TEST_CASE("large spaces go without a line table") {
    const auto s = AmbientSpace::create(4, 8);
    CHECK(s->num_points() == 4681);
    CHECK_FALSE(s->has_line_table());
    CHECK_THROWS_AS(s->lines(), Error);
    CHECK(s->line_points(0, 1).size() == 9);
}
