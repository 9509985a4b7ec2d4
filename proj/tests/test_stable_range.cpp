#include <doctest.h>

#include "test_util.hpp"

using namespace bezlab;
using testutil::E;

TEST_SUITE("stable-range") {

TEST_CASE("sr1 witnesses") {
    auto z6 = parse_ring("Z/6");
    auto rep = sr1_witness(E(z6, "4"), E(z6, "3"));
    REQUIRE(rep.found);
    CHECK(render_element(*rep.witness) == "1"); // 4 + 3 = 7 = 1, a unit
    CHECK(is_unit(E(z6, "4") + E(z6, "3") * *rep.witness));

    for (const auto& ring : testutil::all_rings()) {
        auto r = sr1_witness(Element::one(ring), Element::from_int(ring, 7));
        REQUIRE(r.found);
        CHECK(r.witness->is_zero()); // 1 is already a unit
    }

    auto l5 = parse_ring("Z_(5)");
    auto rl = sr1_witness(E(l5, "5"), E(l5, "2"));
    REQUIRE(rl.found);
    CHECK(rl.witness->is_one()); // 5 + 2 = 7, a unit since 5 does not divide 7
}

TEST_CASE("ssr1 witnesses") {
    auto z6 = parse_ring("Z/6");
    auto rep = ssr1_witness(E(z6, "2"), E(z6, "3"));
    REQUIRE(rep.found);
    CHECK(render_element(*rep.witness) == "1"); // 4 + 3 = 7 = 1

    auto z = parse_ring("Z");
    auto r2 = ssr1_witness(E(z, "2"), E(z, "5"));
    REQUIRE(r2.found);
    CHECK(render_element(*r2.witness) == "-1"); // 4 - 5 = -1
    CHECK(is_unit(E(z, "4") + E(z, "5") * *r2.witness));
}

TEST_CASE("Z is not square stable range 1: the (3, 7) negative control") {
    auto z = parse_ring("Z");
    auto rep = ssr1_witness(E(z, "3"), E(z, "7"));
    CHECK_FALSE(rep.found);
    CHECK(rep.decisive); // 9 + 7x = +/-1 has no integer solution
    CHECK_FALSE(solve_linear(E(z, "7"), E(z, "1") - E(z, "9")));
    CHECK_FALSE(solve_linear(E(z, "7"), E(z, "-1") - E(z, "9")));
    // (3, 7) fails plain sr1 over Z as well; (3, 2) does not.
    CHECK_FALSE(sr1_witness(E(z, "3"), E(z, "7")).found);
    auto ok = sr1_witness(E(z, "3"), E(z, "2"));
    REQUIRE(ok.found);
    CHECK(render_element(*ok.witness) == "-1");
}

TEST_CASE("GF(p)[x] is not square stable range 1 either") {
    auto gf = parse_ring("GF(5)[x]");
    auto rep = ssr1_witness(E(gf, "x"), E(gf, "x^3-1"));
    CHECK_FALSE(rep.found);
    CHECK(rep.decisive); // x^2 mod (x^3 - 1) = x^2 is not a nonzero constant
    auto hit = ssr1_witness(E(gf, "x"), E(gf, "x^2-1"));
    REQUIRE(hit.found); // x^2 + (x^2-1)*q = 1 at q = -1
    CHECK(is_unit(E(gf, "x") * E(gf, "x") + E(gf, "x^2-1") * *hit.witness));
}

TEST_CASE("NotCoprime on non-unimodular input") {
    auto z = parse_ring("Z");
    CHECK_THROWS_AS(sr1_witness(E(z, "2"), E(z, "4")), ring_error);
    try {
        ssr1_witness(E(z, "2"), E(z, "4"));
    } catch (const ring_error& e) {
        CHECK(e.code() == errc::not_coprime);
    }
}

TEST_CASE("sr1 implies ssr1 transfer over Z/n (n <= 12 here, full range in acceptance)") {
    for (int n = 2; n <= 12; ++n) {
        auto ring = RingDescriptor::modular(n);
        auto all = enumerate_elements(ring);
        for (const auto& a : all)
            for (const auto& b : all) {
                if (!is_unit(bezout_certificate(a, b).d)) continue;
                auto s1 = sr1_witness(a, b);
                auto s2 = ssr1_witness(a, b);
                CHECK(s1.found);
                CHECK(s2.found);
                CHECK(is_unit(a + b * *s1.witness));
                CHECK(is_unit(a * a + b * *s2.witness));
            }
    }
}

TEST_CASE("witness replay on random coprime pairs in every ring") {
    for (const auto& ring : testutil::all_rings()) {
        testutil::ElementGen gen(99);
        int done = 0;
        while (done < 25) {
            Element a = gen.sample(ring), b = gen.sample(ring);
            if (!is_unit(bezout_certificate(a, b).d)) continue;
            ++done;
            auto s1 = sr1_witness(a, b);
            if (s1.found) CHECK(is_unit(a + b * *s1.witness));
            auto s2 = ssr1_witness(a, b);
            if (s2.found) CHECK(is_unit(a * a + b * *s2.witness));
            if (ring.is_finite() || ring.kind() == ring_kind::localized_integers) {
                CHECK(s1.found); // semilocal and local rings always succeed
                CHECK(s2.found);
            }
        }
    }
}

TEST_CASE("sr2 reduction") {
    auto z = parse_ring("Z");
    auto b = sr2_reduce({E(z, "6"), E(z, "10"), E(z, "15")});
    REQUIRE(b.size() == 2);
    CHECK(render_element(b[0]) == "1"); // gcd(6 + 15, 10) = 1
    CHECK(render_element(b[1]) == "0");
    CHECK(is_unimodular({E(z, "6") + E(z, "15") * b[0], E(z, "10") + E(z, "15") * b[1]}));

    SUBCASE("leading unit means zero shifts") {
        for (const auto& ring : testutil::all_rings()) {
            auto shifts = sr2_reduce({Element::one(ring), Element::from_int(ring, 4),
                                      Element::from_int(ring, 9)});
            for (const auto& s : shifts) CHECK(s.is_zero());
        }
    }

    SUBCASE("middle zeros force a shift on the second slot") {
        auto shifts = sr2_reduce({E(z, "3"), E(z, "0"), E(z, "7")});
        REQUIRE(shifts.size() == 2);
        CHECK(is_unimodular({E(z, "3") + E(z, "7") * shifts[0],
                             E(z, "0") + E(z, "7") * shifts[1]}));
    }

    SUBCASE("exhaustive over Z/6 triples") {
        auto z6 = parse_ring("Z/6");
        auto all = enumerate_elements(z6);
        for (const auto& a1 : all)
            for (const auto& a2 : all)
                for (const auto& a3 : all) {
                    if (!is_unimodular({a1, a2, a3})) {
                        CHECK_THROWS_AS(sr2_reduce({a1, a2, a3}), ring_error);
                        continue;
                    }
                    auto s = sr2_reduce({a1, a2, a3});
                    CHECK(is_unimodular({a1 + a3 * s[0], a2 + a3 * s[1]}));
                }
    }

    SUBCASE("length-4 rows and errors") {
        auto s = sr2_reduce({E(z, "30"), E(z, "42"), E(z, "70"), E(z, "105")});
        REQUIRE(s.size() == 3);
        CHECK(is_unimodular({E(z, "30") + E(z, "105") * s[0],
                             E(z, "42") + E(z, "105") * s[1],
                             E(z, "70") + E(z, "105") * s[2]}));
        CHECK_THROWS_AS(sr2_reduce({E(z, "1"), E(z, "2")}), ring_error);
        CHECK_THROWS_AS(sr2_reduce({E(z, "2"), E(z, "4"), E(z, "6")}), ring_error);
    }
}

TEST_CASE("witness reports are decisive across the four rings") {
    auto z6 = parse_ring("Z/6");
    CHECK(ssr1_witness(E(z6, "2"), E(z6, "3")).decisive);
    auto z = parse_ring("Z");
    CHECK(ssr1_witness(E(z, "3"), E(z, "7")).decisive);
    auto gf = parse_ring("GF(5)[x]");
    CHECK(ssr1_witness(E(gf, "x"), E(gf, "x^2-1")).decisive);
    auto l5 = parse_ring("Z_(5)");
    CHECK(ssr1_witness(E(l5, "5"), E(l5, "3")).decisive);
}

} // TEST_SUITE
