#include <doctest.h>

#include "test_util.hpp"

using namespace bezlab;
using testutil::E;

TEST_SUITE("ring-core") {

TEST_CASE("bezout certificate over Z matches the extended Euclid oracle") {
    auto z = RingDescriptor::integers();
    auto c = bezout_certificate(E(z, "12"), E(z, "18"));
    CHECK(render_element(c.d) == "6");
    CHECK(render_element(c.p) == "-1");
    CHECK(render_element(c.q) == "1");
    CHECK(render_element(c.a0) == "2");
    CHECK(render_element(c.b0) == "3");
    CHECK(c.verify());
}

TEST_CASE("bezout certificate of (a, 0) is the associate normalization") {
    for (const auto& ring : testutil::all_rings()) {
        testutil::ElementGen gen(11);
        for (int i = 0; i < 20; ++i) {
            Element a = gen.sample(ring);
            auto c = bezout_certificate(a, Element::zero(ring));
            CHECK(c.d == canonical_associate(a));
            CHECK(c.p * a == c.d);
            CHECK(c.q.is_zero());
            CHECK(c.verify());
        }
    }
}

TEST_CASE("bezout certificate over GF(5)[x]") {
    auto gf = RingDescriptor::poly_over_gf(5);
    auto c = bezout_certificate(E(gf, "x^2-1"), E(gf, "x-1"));
    CHECK(render_element(c.d) == "x+4"); // monic form of x-1
    CHECK(c.p.is_zero());
    CHECK(c.q.is_one());
    CHECK(render_element(c.a0) == "x+1");
    CHECK(c.b0.is_one());
    CHECK(c.verify());
}

TEST_CASE("gcd(0,0) = 0 with zero cofactors by convention") {
    auto z6 = RingDescriptor::modular(6);
    auto c = bezout_certificate(Element::zero(z6), Element::zero(z6));
    CHECK(c.d.is_zero());
    CHECK(c.p.is_zero());
    CHECK(c.a0.is_zero());
    CHECK(c.verify());
}

TEST_CASE("bezout identities hold on random pairs in every ring") {
    for (const auto& ring : testutil::all_rings()) {
        testutil::ElementGen gen(42);
        for (int i = 0; i < 60; ++i) {
            Element a = gen.sample(ring), b = gen.sample(ring);
            auto c = bezout_certificate(a, b);
            CHECK(c.verify());
            CHECK(c.d == canonical_associate(c.d)); // d canonical
            if (!(a.is_zero() && b.is_zero()))
                CHECK(is_unit(bezout_certificate(c.a0, c.b0).d)); // (a0, b0) unimodular
        }
    }
}

TEST_CASE("any common divisor divides the certificate gcd (exhaustive Z/9, Z/12)") {
    for (int n : {9, 12}) {
        auto ring = RingDescriptor::modular(n);
        auto all = enumerate_elements(ring);
        for (const auto& a : all)
            for (const auto& b : all) {
                auto cert = bezout_certificate(a, b);
                CHECK(cert.verify());
                CHECK(exact_divide(a, cert.d));
                CHECK(exact_divide(b, cert.d));
                for (const auto& e : all) {
                    if (exact_divide(a, e) && exact_divide(b, e))
                        CHECK(exact_divide(cert.d, e));
                }
            }
    }
}

TEST_CASE("ring mismatch is rejected") {
    auto z = RingDescriptor::integers();
    auto z6 = RingDescriptor::modular(6);
    CHECK_THROWS_WITH_AS(bezout_certificate(E(z, "1"), E(z6, "1")),
                         doctest::Contains("ring mismatch"), ring_error);
}

TEST_CASE("units and inverses") {
    auto z6 = RingDescriptor::modular(6);
    CHECK(is_unit(E(z6, "5")));
    CHECK(render_element(unit_inverse(E(z6, "5"))) == "5");
    CHECK_FALSE(is_unit(E(z6, "2")));

    auto z = RingDescriptor::integers();
    CHECK(is_unit(E(z, "1")));
    CHECK(unit_inverse(E(z, "1")).is_one());
    CHECK(is_unit(E(z, "-1")));
    CHECK_FALSE(is_unit(E(z, "2")));

    auto l5 = RingDescriptor::localized_at(5);
    CHECK(is_unit(E(l5, "7")));
    CHECK(render_element(unit_inverse(E(l5, "7"))) == "1/7");
    CHECK((E(l5, "7") * unit_inverse(E(l5, "7"))).is_one());
    CHECK_FALSE(is_unit(E(l5, "5")));
    CHECK_FALSE(is_unit(E(l5, "0")));
    CHECK(is_unit(E(l5, "3/7")));

    auto gf = RingDescriptor::poly_over_gf(5);
    CHECK(is_unit(E(gf, "3")));
    CHECK(render_element(unit_inverse(E(gf, "3"))) == "2");
    CHECK_FALSE(is_unit(E(gf, "x")));

    CHECK_THROWS_AS(unit_inverse(E(z6, "2")), ring_error);
    try {
        unit_inverse(E(z6, "2"));
    } catch (const ring_error& e) {
        CHECK(e.code() == errc::not_a_unit);
    }
}

TEST_CASE("unit group facts: Z/n and Z_(p)") {
    // In Z/n, units are exactly the residues coprime to n.
    for (int n : {6, 8, 12}) {
        auto ring = RingDescriptor::modular(n);
        for (const auto& a : enumerate_elements(ring)) {
            bool coprime = detail::int_gcd(a.as_int(), n) == 1;
            CHECK(is_unit(a) == coprime);
            if (coprime) CHECK((a * unit_inverse(a)).is_one());
        }
    }
    // In Z_(p), units are the fractions whose numerator p does not divide.
    auto l5 = RingDescriptor::localized_at(5);
    testutil::ElementGen gen(7);
    for (int i = 0; i < 50; ++i) {
        Element a = gen.sample(l5);
        bool expected =
            !a.is_zero() && boost::multiprecision::numerator(a.as_rat()) % 5 != 0;
        CHECK(is_unit(a) == expected);
    }
}

TEST_CASE("solve_linear and exact_divide") {
    auto z6 = RingDescriptor::modular(6);
    auto lam = solve_linear(E(z6, "5"), E(z6, "4"));
    REQUIRE(lam);
    CHECK(render_element(*lam) == "2"); // 5*2 = 10 = 4 (mod 6)

    auto z = RingDescriptor::integers();
    CHECK_FALSE(solve_linear(E(z, "3"), E(z, "5")));
    for (const auto& ring : testutil::all_rings()) {
        testutil::ElementGen gen(3);
        Element d = gen.sample(ring);
        auto q = exact_divide(Element::zero(ring), d);
        REQUIRE(q);
        CHECK(q->is_zero());
    }

    SUBCASE("least solution in Z/n, all solutions ascending") {
        auto z12 = RingDescriptor::modular(12);
        auto sols = divide_solutions(E(z12, "8"), E(z12, "4"));
        REQUIRE(sols.size() == 4); // 4x = 8 (mod 12): x in {2, 5, 8, 11}
        CHECK(render_element(sols[0]) == "2");
        CHECK(render_element(sols[3]) == "11");
        for (const auto& s : sols) CHECK(E(z12, "4") * s == E(z12, "8"));
    }

    SUBCASE("solutions verified against brute force (exhaustive Z/8)") {
        auto z8 = RingDescriptor::modular(8);
        auto all = enumerate_elements(z8);
        for (const auto& c : all)
            for (const auto& r : all) {
                auto got = divide_solutions(r, c);
                std::vector<Element> expect;
                for (const auto& x : all)
                    if (c * x == r) expect.push_back(x);
                CHECK(got == expect);
            }
    }
}

TEST_CASE("associate normalization") {
    auto z = RingDescriptor::integers();
    auto n1 = normalize_associate(E(z, "-6"));
    CHECK(render_element(n1.canonical) == "6");
    CHECK(render_element(n1.unit) == "-1");

    auto gf = RingDescriptor::poly_over_gf(5);
    auto n2 = normalize_associate(E(gf, "3*x+1"));
    CHECK(render_element(n2.canonical) == "x+2");
    CHECK(render_element(n2.unit) == "2");
    CHECK(n2.unit * E(gf, "3*x+1") == n2.canonical);

    for (const auto& ring : testutil::all_rings()) {
        auto n0 = normalize_associate(Element::zero(ring));
        CHECK(n0.canonical.is_zero());
        CHECK(n0.unit.is_one());
    }

    auto l5 = RingDescriptor::localized_at(5);
    auto n3 = normalize_associate(E(l5, "50/3"));
    CHECK(render_element(n3.canonical) == "25");
    CHECK(n3.unit * E(l5, "50/3") == n3.canonical);

    SUBCASE("idempotent, and associates share a canonical form") {
        for (const auto& ring : testutil::all_rings()) {
            testutil::ElementGen gen(17);
            for (int i = 0; i < 40; ++i) {
                Element a = gen.sample(ring);
                auto n = normalize_associate(a);
                CHECK(n.unit * a == n.canonical);
                CHECK(is_unit(n.unit));
                auto again = normalize_associate(n.canonical);
                CHECK(again.canonical == n.canonical);
                CHECK(again.unit.is_one());
            }
        }
        // Z/9 matters here: its unit group is not self-inverse.
        for (int n : {9, 12}) {
            auto zn = RingDescriptor::modular(n);
            for (const auto& a : enumerate_elements(zn))
                for (const auto& u : enumerate_elements(zn)) {
                    if (!is_unit(u)) continue;
                    CHECK(normalize_associate(u * a).canonical ==
                          normalize_associate(a).canonical);
                }
        }
    }
}

} // TEST_SUITE
