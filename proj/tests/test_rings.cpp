#include <doctest.h>

#include "test_util.hpp"

using namespace bezlab;
using testutil::E;

TEST_SUITE("rings") {

TEST_CASE("ring spec grammar round-trips") {
    for (const char* spec : {"Z", "Z/12", "GF(5)[x]", "Z_(5)", "Z/2", "GF(101)[x]"}) {
        auto r = parse_ring(spec);
        CHECK(r.to_string() == spec);
        CHECK(parse_ring(r.to_string()) == r);
    }
    CHECK(parse_ring("Z/12").kind() == ring_kind::modular);
    CHECK(parse_ring("Z/12").param() == 12);
    CHECK(parse_ring("Z_(5)").kind() == ring_kind::localized_integers);
}

TEST_CASE("composite parameters are rejected") {
    CHECK_THROWS_AS(parse_ring("GF(4)[x]"), ring_error);
    try {
        parse_ring("GF(4)[x]");
    } catch (const ring_error& e) {
        CHECK(e.code() == errc::not_prime);
    }
    CHECK_THROWS_AS(parse_ring("Z_(9)"), ring_error);
    CHECK_THROWS_AS(parse_ring("Z/1"), ring_error);
    CHECK_THROWS_AS(parse_ring("Q"), ring_error);
    CHECK_THROWS_AS(parse_ring("Z/"), ring_error);
    CHECK_THROWS_AS(parse_ring("GF(5)[y]"), ring_error);
}

TEST_CASE("element literals reduce to canonical form") {
    CHECK(render_element(E(parse_ring("Z/6"), "13")) == "1");
    CHECK(render_element(E(parse_ring("GF(5)[x]"), "6*x+7")) == "x+2");
    CHECK(render_element(E(parse_ring("Z_(5)"), "10/4")) == "5/2");
    CHECK(render_element(E(parse_ring("Z"), "-0")) == "0");
    CHECK(render_element(E(parse_ring("Z/6"), "-1")) == "5");
    CHECK(render_element(E(parse_ring("GF(5)[x]"), "x^3-x^3")) == "0");
    CHECK(render_element(E(parse_ring("GF(5)[x]"), "-x^2+2*x-3")) == "4*x^2+2*x+2");
    CHECK(render_element(E(parse_ring("Z_(5)"), "-10/4")) == "-5/2");
    CHECK(render_element(E(parse_ring("Z_(5)"), "0/7")) == "0");
}

TEST_CASE("literal errors") {
    auto z = parse_ring("Z");
    CHECK_THROWS_AS(parse_element(z, "1/2"), ring_error);
    try {
        parse_element(z, "1/2");
    } catch (const ring_error& e) {
        CHECK(e.code() == errc::ring_mismatch);
    }
    CHECK_THROWS_AS(parse_element(z, "x"), ring_error);
    CHECK_THROWS_AS(parse_element(z, ""), ring_error);
    auto l5 = parse_ring("Z_(5)");
    CHECK_THROWS_AS(parse_element(l5, "1/5"), ring_error);  // not in the ring
    CHECK_THROWS_AS(parse_element(l5, "3/0"), ring_error);
    auto gf = parse_ring("GF(5)[x]");
    CHECK_THROWS_AS(parse_element(gf, "x^"), ring_error);
    CHECK_THROWS_AS(parse_element(gf, "1/x"), ring_error);
    CHECK_THROWS_AS(parse_element(gf, "++1"), ring_error);
}

TEST_CASE("parse is a left inverse of render") {
    for (const auto& ring : testutil::all_rings()) {
        testutil::ElementGen gen(5);
        for (int i = 0; i < 80; ++i) {
            Element a = gen.sample(ring);
            CHECK(parse_element(ring, render_element(a)) == a);
        }
    }
}

TEST_CASE("element enumeration") {
    auto z4 = parse_ring("Z/4");
    auto all = enumerate_elements(z4);
    REQUIRE(all.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(all[i] == Element::from_int(z4, i));

    CHECK(enumerate_elements(parse_ring("Z/2")).size() == 2);

    CHECK_THROWS_AS(enumerate_elements(parse_ring("Z")), ring_error);
    try {
        enumerate_elements(parse_ring("GF(5)[x]"));
    } catch (const ring_error& e) {
        CHECK(e.code() == errc::infinite_ring);
    }

    SUBCASE("enumeration is duplicate-free and reproducible") {
        auto again = enumerate_elements(z4);
        CHECK(all == again);
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j) CHECK(all[i] != all[j]);
    }
}

TEST_CASE("ring axioms on sampled triples") {
    for (const auto& ring : testutil::all_rings()) {
        testutil::ElementGen gen(2024);
        Element one = Element::one(ring), zero = Element::zero(ring);
        for (int i = 0; i < 40; ++i) {
            Element a = gen.sample(ring), b = gen.sample(ring), c = gen.sample(ring);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + zero == a);
            CHECK(a * one == a);
            CHECK((a - a).is_zero());
        }
    }
}

TEST_CASE("Z/n arithmetic agrees with Z followed by reduction") {
    auto z = parse_ring("Z");
    auto zn = parse_ring("Z/9");
    testutil::ElementGen gen(31);
    for (int i = 0; i < 60; ++i) {
        Int x = gen.small(), y = gen.small();
        auto xe = Element::from_int(z, x), ye = Element::from_int(z, y);
        CHECK(Element::from_int(zn, (xe + ye).as_int()) ==
              Element::from_int(zn, x) + Element::from_int(zn, y));
        CHECK(Element::from_int(zn, (xe * ye).as_int()) ==
              Element::from_int(zn, x) * Element::from_int(zn, y));
    }
}

TEST_CASE("Z_(p) arithmetic agrees with rational arithmetic") {
    auto l5 = parse_ring("Z_(5)");
    testutil::ElementGen gen(77);
    for (int i = 0; i < 60; ++i) {
        Element a = gen.sample(l5), b = gen.sample(l5);
        Rat ra = a.as_rat(), rb = b.as_rat();
        CHECK((a + b).as_rat() == ra + rb);
        CHECK((a * b).as_rat() == ra * rb);
        CHECK((a - b).as_rat() == ra - rb);
    }
}

TEST_CASE("polynomial degree bookkeeping: zero is its own case") {
    auto gf = parse_ring("GF(5)[x]");
    CHECK(E(gf, "0").poly_degree() == -1);
    CHECK(E(gf, "3").poly_degree() == 0);
    CHECK(E(gf, "x^4").poly_degree() == 4);
    CHECK((E(gf, "x") * E(gf, "0")).poly_degree() == -1);
    CHECK((E(gf, "4*x^2") + E(gf, "x^2")).poly_degree() == -1); // 5*x^2 = 0
}

} // TEST_SUITE
