#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bezlab/scan.hpp"

namespace bezlab {

// Outcome of a witness search. When `found`, replaying the defining
// identity with `witness` succeeds exactly. `decisive` means not-found is a
// proof of nonexistence (exhaustive sweep or exact equation solving), not
// just an exhausted bound.
struct WitnessReport {
    bool found = false;
    std::optional<Element> witness;
    std::string searched_bound;
    bool decisive = false;
};

namespace detail {

// Least x in scan order with base + shift*x a unit, plus decisiveness.
// This one search underlies sr1 (base = a), ssr1 (base = a*a) and Toeplitz
// completion (shift = -b); in all four rings the unit equations can be
// solved exactly, so the result is always decisive.
inline WitnessReport unit_shift_search(const Element& base, const Element& shift) {
    const auto& r = base.ring();
    WitnessReport rep;
    rep.decisive = true;

    auto accept = [&](Element x, std::string how) {
        rep.found = true;
        rep.witness = std::move(x);
        rep.searched_bound = std::move(how);
    };

    switch (r.kind()) {
        case ring_kind::modular: {
            ElementScan scan(r);
            while (auto x = scan.next()) {
                if (is_unit(base + shift * *x)) {
                    accept(std::move(*x), "exhaustive over " + r.to_string());
                    return rep;
                }
            }
            rep.searched_bound = "exhaustive over " + r.to_string();
            return rep;
        }
        case ring_kind::integers: {
            if (shift.is_zero()) {
                if (is_unit(base)) accept(Element::zero(r), "base already a unit");
                else rep.searched_bound = "decisive: zero shift and base not a unit";
                return rep;
            }
            // base + shift*x = u for u in {1, -1}; keep the scan-least x.
            std::optional<Element> best;
            Int best_index = 0;
            for (int s : {1, -1}) {
                auto x = exact_divide(Element(r, Int(s)) - base, shift);
                if (!x) continue;
                Int idx = ElementScan::int_scan_index(x->as_int());
                if (!best || idx < best_index) {
                    best = x;
                    best_index = idx;
                }
            }
            if (best) accept(std::move(*best), "decisive: unit equations solved exactly over Z");
            else rep.searched_bound = "decisive: base+shift*x=+/-1 has no integer solution";
            return rep;
        }
        case ring_kind::poly_over_gf: {
            const Int& p = r.param();
            if (shift.is_zero()) {
                if (is_unit(base)) accept(Element::zero(r), "base already a unit");
                else rep.searched_bound = "decisive: zero shift and base not a unit";
                return rep;
            }
            if (is_unit(shift)) {
                // x = shift^-1 (u - base); u = 1 gives the scan-least x only
                // after comparing all p-1 unit choices.
                Element inv = unit_inverse(shift);
                std::optional<Element> best;
                for (Int u = 1; u < p; ++u) {
                    Element x = inv * (Element::from_int(r, u) - base);
                    if (!best || x < *best) best = std::move(x);
                }
                accept(std::move(*best), "decisive: unit shift over " + r.to_string());
                return rep;
            }
            // deg(shift) >= 1: base + shift*x is a unit iff base mod shift is
            // a nonzero constant u, and then x = (u - base)/shift.
            auto [q, rem] =
                poly_divmod(base.as_poly(), shift.as_poly(), p);
            if (rem.size() == 1) {
                Element x(r, std::move(q));
                accept(-x, "decisive: remainder test over " + r.to_string());
            } else {
                rep.searched_bound =
                    "decisive: base mod shift is not a nonzero constant in " + r.to_string();
            }
            return rep;
        }
        case ring_kind::localized_integers: {
            if (is_unit(base)) {
                accept(Element::zero(r), "base already a unit");
                return rep;
            }
            if (is_unit(shift)) {
                // v_p(base) >= 1 and v_p(shift) = 0, so base + shift is a unit.
                accept(Element::one(r), "decisive: valuation argument over " + r.to_string());
                return rep;
            }
            rep.searched_bound =
                "decisive: base and shift both in the maximal ideal of " + r.to_string();
            return rep;
        }
    }
    fail(errc::internal_error, "bad ring kind");
}

inline void require_unimodular_pair(const Element& a, const Element& b, const char* op) {
    if (!is_unit(bezout_certificate(a, b).d))
        fail(errc::not_coprime, std::string(op) + " requires aR+bR=R; gcd(" +
                                    render_element(a) + ", " + render_element(b) +
                                    ") is not a unit");
}

} // namespace detail

// Witness y with a + b*y a unit. Requires (a, b) unimodular.
inline WitnessReport sr1_witness(const Element& a, const Element& b) {
    a.require_same_ring(b, "sr1_witness");
    detail::require_unimodular_pair(a, b, "sr1_witness");
    return detail::unit_shift_search(a, b);
}

// Witness x with a^2 + b*x a unit. Requires (a, b) unimodular.
inline WitnessReport ssr1_witness(const Element& a, const Element& b) {
    a.require_same_ring(b, "ssr1_witness");
    detail::require_unimodular_pair(a, b, "ssr1_witness");
    return detail::unit_shift_search(a * a, b);
}

// Shortens a unimodular row (a_1, ..., a_r), r >= 3: returns b_1..b_{r-1}
// such that (a_1 + a_r b_1, ..., a_{r-1} + a_r b_{r-1}) is unimodular.
inline std::vector<Element> sr2_reduce(const std::vector<Element>& items,
                                       const SearchLimits& limits = {}) {
    if (items.size() < 3)
        fail(errc::precondition_violated, "sr2_reduce requires r >= 3 elements");
    const auto& ring = items.front().ring();
    for (const auto& e : items) e.require_same_ring(items.front(), "sr2_reduce");
    if (!is_unimodular(items))
        fail(errc::not_coprime, "sr2_reduce requires a unimodular row");

    const std::size_t r = items.size();
    const Element& last = items.back();
    std::vector<Element> head(items.begin(), items.end() - 1);
    std::vector<Element> zeros(r - 1, Element::zero(ring));

    // Already unimodular without the last entry.
    if (is_unimodular(head)) return zeros;

    // Unit tail: one shift makes the first entry 1.
    if (is_unit(last)) {
        auto b = zeros;
        b[0] = unit_inverse(last) * (Element::one(ring) - items[0]);
        return b;
    }

    // Single-index scan: shift one entry until the head row is unimodular.
    SearchLimits scan_limits = limits;
    for (const auto& e : head) {
        if (e.ring().kind() == ring_kind::poly_over_gf && !e.is_zero())
            scan_limits.poly_degree_bound =
                std::max(scan_limits.poly_degree_bound, e.poly_degree() + 1);
    }
    for (std::size_t i = 0; i + 1 < r; ++i) {
        ElementScan scan(ring, scan_limits);
        while (auto t = scan.next()) {
            std::vector<Element> shifted = head;
            shifted[i] = head[i] + last * *t;
            if (is_unimodular(shifted)) {
                auto b = zeros;
                b[i] = std::move(*t);
                return b;
            }
        }
    }
    fail(errc::witness_not_found,
         "sr2_reduce: internal-bound-too-small (no single-entry shift found)");
}

} // namespace bezlab
