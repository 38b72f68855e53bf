#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pgcodes/error.hpp"
#include "pgcodes/io.hpp"

#include <random>
#include <sstream>

using namespace pgcodes;
using geom::AmbientSpace;

namespace {

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::BadModulus;
}

}  // namespace

TEST_CASE("ambient round trip") {
    const auto s = AmbientSpace::create(3, 8);
    const auto j = io::ambient_to_json(*s);
    CHECK(j.at("n") == 3);
    CHECK(j.at("p") == 2);
    CHECK(j.at("h") == 3);
    CHECK_FALSE(j.contains("canonical"));
    const auto back = io::ambient_from_json(j);
    CHECK(back->n() == 3);
    CHECK(back->q() == 8);
    CHECK(back->field().modulus() == s->field().modulus());

    const auto custom = AmbientSpace::create(2, gf::field_create(2, 3, std::vector<std::uint32_t>{1, 0, 1, 1}));
    const auto jc = io::ambient_to_json(*custom);
    CHECK(jc.at("canonical") == false);
    CHECK(io::ambient_from_json(jc)->field().modulus() == custom->field().modulus());
}

TEST_CASE("point sets and subspaces round trip") {
    std::mt19937_64 rng(3);
    const auto s = AmbientSpace::create(3, 4);
    const auto h = evensets::random_hypercylinder(*s, rng);
    const auto j = io::point_set_to_json(*s, h.points);
    CHECK(j.at("points").size() == 24);
    const auto loaded = io::point_set_from_json(io::parse(j.dump()));
    CHECK(loaded.points == h.points);
    CHECK(loaded.space->q() == 4);
    CHECK(io::point_set_from_json(j, *s) == h.points);

    CHECK(io::subspace_from_json(io::subspace_to_json(h.base_plane), *s) == h.base_plane);
    const auto hj = io::hypercylinder_to_json(*s, h);
    CHECK(io::point_set_from_json(hj, *s) == h.points);
    CHECK(io::subspace_from_json(hj.at("witness").at("vertex"), *s) == h.vertex);
    CHECK(hj.at("witness").at("hyperoval").size() == 6);
}

TEST_CASE("subspaces load from any spanning rows") {
    const auto s = AmbientSpace::create(2, 3);
    const auto j = io::parse("[[1,1,0],[2,2,0],[0,1,0]]");
    const auto u = io::subspace_from_json(j, *s);
    CHECK(u.dim() == 1);
    CHECK(u.basis() == std::vector<geom::Coords>{{1, 0, 0}, {0, 1, 0}});
}

TEST_CASE("code vectors round trip") {
    const auto s = AmbientSpace::create(2, 3);
    std::vector<std::uint8_t> v(13, 0);
    v[0] = 2, v[5] = 1;
    const codes::CodeVector c(s, v);
    const auto back = io::code_vector_from_json(io::code_vector_to_json(c));
    CHECK(back == c);
    auto j = io::code_vector_to_json(c);
    j["values"][1] = 3;
    CHECK(kind_of([&] { io::code_vector_from_json(j); }) == ErrorKind::ParseError);
    j["values"] = std::vector<int>{0, 1};
    CHECK(kind_of([&] { io::code_vector_from_json(j); }) == ErrorKind::ParseError);

    std::ostringstream out;
    io::write_codewords_jsonl(out, {c, c});
    CHECK(out.str() == "{\"values\":[2,0,0,0,0,1,0,0,0,0,0,0,0]}\n{\"values\":[2,0,0,0,0,1,0,0,0,0,0,0,0]}\n");
}

TEST_CASE("malformed input") {
    CHECK(kind_of([] { io::parse("{\"n\": 2,"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { io::ambient_from_json(io::parse("{\"n\": 2}")); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { io::point_set_from_json(io::parse("{\"n\":2,\"p\":2,\"h\":1,\"points\":[[0,0,0]]}")); }) ==
          ErrorKind::ParseError);
    CHECK(kind_of([] { io::point_set_from_json(io::parse("{\"n\":2,\"p\":2,\"h\":1,\"points\":[[1,1]]}")); }) ==
          ErrorKind::ParseError);
    CHECK(kind_of([] { io::read_file("/nonexistent/file.json"); }) == ErrorKind::ParseError);
    const auto s = AmbientSpace::create(2, 4);
    CHECK(kind_of([&] {
              io::point_set_from_json(io::parse("{\"n\":2,\"p\":2,\"h\":1,\"points\":[]}"), *s);
          }) == ErrorKind::ParseError);
}

TEST_CASE("spectrum output") {
    const auto s = AmbientSpace::create(2, 4);
    const auto oval = evensets::regular_hyperoval(*s, s->full_space());
    const auto sp = evensets::secant_spectrum(*s, oval, 1);
    CHECK(io::spectrum_to_csv(sp) == "dimension,i,count\n1,0,6\n1,2,15\n");
    const auto j = io::spectrum_to_json(sp);
    CHECK(j.at("counts").at("2") == 15);
    CHECK(j.at("total") == 21);
}

TEST_CASE("reports") {
    const auto r = classify::enumerate_hyperovals(4, 1, true);
    const auto s = AmbientSpace::create(2, 4);
    const auto rep = io::report_to_json(s.get(), r, true);
    CHECK_FALSE(rep.contains("wall_time"));
    CHECK(rep.at("count") == 168);
    CHECK(rep.at("certificates").size() == 168);
    CHECK(rep.at("certificates")[0].size() == 6);
    CHECK(io::report_to_json(s.get(), r, false).contains("wall_time"));
    CHECK(rep.dump() == io::report_to_json(s.get(), classify::enumerate_hyperovals(4, 3, true), true).dump());

    const auto b = io::bound_report_to_json(classify::verify_bound_attainment(2, 4), true);
    CHECK(b.at("min_weight") == 6);
    CHECK_FALSE(b.contains("wall_time"));
}
