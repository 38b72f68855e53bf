#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pgcodes/error.hpp"
#include "pgcodes/gf.hpp"

#include <vector>

using namespace pgcodes;
using gf::Elem;

namespace {

const std::vector<std::uint32_t> kOrders = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32};

// schoolbook product of coefficient vectors reduced by the monic modulus
Elem poly_oracle(const gf::Field& f, Elem a, Elem b) {
    const auto p = f.p();
    const auto h = f.h();
    const auto ca = f.coefficients(a), cb = f.coefficients(b);
    std::vector<std::uint32_t> prod(2 * h, 0);
    for (std::uint32_t i = 0; i < h; ++i)
        for (std::uint32_t j = 0; j < h; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
    const auto& m = f.modulus();
    for (std::size_t d = prod.size(); d-- > h;) {
        const auto c = prod[d];
        if (!c) continue;
        for (std::uint32_t i = 0; i <= h; ++i) prod[d - h + i] = (prod[d - h + i] + (p - c) * m[i]) % p;
    }
    Elem idx = 0;
    for (std::uint32_t i = h; i-- > 0;) idx = idx * p + prod[i];
    return idx;
}

int error_kind(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return static_cast<int>(e.kind());
    }
    return -1;
}

}  // namespace

TEST_CASE("default moduli") {
    CHECK(gf::field_create(2, 1)->modulus() == std::vector<std::uint32_t>{1, 1});
    CHECK(gf::field_create(2, 2)->modulus() == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(gf::field_create(2, 3)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
    CHECK(gf::field_create(3, 2)->modulus() == std::vector<std::uint32_t>{2, 2, 1});
    for (auto q : kOrders) CHECK(gf::field_for_order(q)->canonical());
}

TEST_CASE("construction errors") {
    CHECK(error_kind([] { gf::field_create(2, 2, std::vector<std::uint32_t>{0, 0, 1}); }) ==
          int(ErrorKind::ReduciblePolynomial));
    CHECK(error_kind([] { gf::field_create(4, 1); }) == int(ErrorKind::NonPrime));
    CHECK(error_kind([] { gf::field_create(37, 1); }) == int(ErrorKind::NoDefaultModulus));
    CHECK(error_kind([] { gf::field_create(2, 6); }) == int(ErrorKind::NoDefaultModulus));
    CHECK(error_kind([] { gf::field_for_order(6); }) == int(ErrorKind::UnsupportedField));
    CHECK(error_kind([] { gf::field_create(2, 2, std::vector<std::uint32_t>{1, 1, 2}); }) == int(ErrorKind::BadModulus));
}

TEST_CASE("products in GF(4) and GF(8)") {
    const auto f4 = gf::field_for_order(4);
    CHECK(f4->mul(2, 2) == 3);
    const auto f8 = gf::field_for_order(8);
    CHECK(f8->mul(2, 4) == 3);
    CHECK(f8->mul(4, 4) == 6);  // x^4 = x^2 + x
}

TEST_CASE("multiplication agrees with polynomial arithmetic") {
    for (auto q : kOrders) {
        const auto f = gf::field_for_order(q);
        for (Elem a = 0; a < q; ++a)
            for (Elem b = 0; b < q; ++b) REQUIRE(f->mul(a, b) == poly_oracle(*f, a, b));
    }
}

TEST_CASE("field axioms, exhaustive") {
    for (auto q : kOrders) {
        CAPTURE(q);
        const auto f = gf::field_for_order(q);
        for (Elem a = 0; a < q; ++a) {
            REQUIRE(f->add(a, f->neg(a)) == 0);
            REQUIRE(f->mul(a, 1) == a);
            if (a) {
                REQUIRE(f->mul(a, f->inv(a)) == 1);
                REQUIRE(f->pow(a, q - 1) == 1);
            }
            for (Elem b = 0; b < q; ++b) {
                REQUIRE(f->add(a, b) == f->add(b, a));
                REQUIRE(f->mul(a, b) == f->mul(b, a));
                for (Elem c = 0; c < q; ++c) {
                    REQUIRE(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
                    REQUIRE(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
                    REQUIRE(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                }
            }
        }
        Elem s = 0;
        for (std::uint32_t i = 0; i < f->p(); ++i) s = f->add(s, 1);
        CHECK(s == 0);
    }
}

TEST_CASE("x generates the multiplicative group under the default modulus") {
    for (auto q : kOrders) {
        const auto f = gf::field_for_order(q);
        if (f->h() == 1) continue;
        const Elem x = f->p();
        std::uint32_t order = 1;
        for (Elem y = x; y != 1; y = f->mul(y, x)) ++order;
        CHECK(order == q - 1);
    }
}

TEST_CASE("index encoding round trip") {
    for (auto q : kOrders) {
        const auto f = gf::field_for_order(q);
        for (Elem a = 0; a < q; ++a) REQUIRE(f->from_coefficients(f->coefficients(a)) == a);
    }
}

TEST_CASE("element objects") {
    const auto f4 = gf::field_for_order(4);
    const auto f8 = gf::field_for_order(8);
    const auto two = f4->element(2);
    CHECK((two * two).index() == 3);
    CHECK((two - two).index() == 0);
    CHECK((-two + two).index() == 0);
    CHECK((two / two).index() == 1);
    CHECK(two.inverse().index() == 3);
    CHECK(two.pow(3) == f4->one());
    CHECK(error_kind([&] { f4->zero().inverse(); }) == int(ErrorKind::ZeroInverse));
    CHECK(error_kind([&] { (void)(two + f8->element(2)); }) == int(ErrorKind::FieldMismatch));
    CHECK(gf::enumerate_elements(*gf::field_for_order(2)).size() == 2);
    const auto e4 = gf::enumerate_elements(*f4);
    REQUIRE(e4.size() == 4);
    for (Elem i = 0; i < 4; ++i) CHECK(e4[i].index() == i);
    CHECK(gf::enumerate_elements(*f8).size() == 8);
}

TEST_CASE("custom modulus is flagged") {
    const auto f = gf::field_create(2, 3, std::vector<std::uint32_t>{1, 0, 1, 1});
    CHECK_FALSE(f->canonical());
    CHECK(f->mul(2, 4) == 5);  // x^3 = x^2 + 1
    CHECK(gf::field_create(2, 3, std::vector<std::uint32_t>{1, 1, 0, 1})->canonical());
}

TEST_CASE("subfield orders") {
    CHECK(gf::field_for_order(8)->subfield_orders() == std::vector<std::uint32_t>{2, 8});
    CHECK(gf::field_for_order(16)->subfield_orders() == std::vector<std::uint32_t>{2, 4, 16});
    CHECK(gf::field_for_order(9)->subfield_orders() == std::vector<std::uint32_t>{3, 9});
}
