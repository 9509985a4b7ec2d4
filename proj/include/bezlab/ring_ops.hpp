#pragma once

#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "bezlab/element.hpp"

namespace bezlab {

namespace detail {

// Extended Euclid on integers: returns (g, x, y) with x*a + y*b = g, g >= 0.
inline std::tuple<Int, Int, Int> int_xgcd(const Int& a, const Int& b) {
    Int r0 = a, r1 = b;
    Int x0 = 1, x1 = 0;
    Int y0 = 0, y1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1; // truncated division keeps |r| strictly decreasing
        Int r2 = r0 - q * r1;
        Int x2 = x0 - q * x1;
        Int y2 = y0 - q * y1;
        r0 = r1; r1 = r2;
        x0 = x1; x1 = x2;
        y0 = y1; y1 = y2;
    }
    if (r0 < 0) { r0 = -r0; x0 = -x0; y0 = -y0; }
    return {r0, x0, y0};
}

inline Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) { Int t = a % b; a = b; b = t; }
    return a;
}

// Inverse of a modulo m (m >= 1); requires gcd(a, m) = 1.
inline Int mod_inverse(const Int& a, const Int& m) {
    auto [g, x, y] = int_xgcd(mod_reduce(a, m), m);
    if (g != 1) fail(errc::not_a_unit, "no inverse of " + a.str() + " mod " + m.str());
    return mod_reduce(x, m);
}

inline Int int_pow(Int base, unsigned long e) {
    Int r = 1;
    while (e--) r *= base;
    return r;
}

// p-adic valuation of a nonzero integer.
inline unsigned long int_valuation(Int v, const Int& p) {
    unsigned long k = 0;
    while (v % p == 0) { v /= p; ++k; }
    return k;
}

// Polynomial division over GF(p): a = q*b + r, deg r < deg b. b must be nonzero.
inline std::pair<PolyCoeffs, PolyCoeffs> poly_divmod(PolyCoeffs a, const PolyCoeffs& b,
                                                     const Int& p) {
    PolyCoeffs q(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Int(0));
    Int lead_inv = mod_inverse(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
        std::size_t shift = a.size() - b.size();
        Int factor = mod_reduce(a.back() * lead_inv, p);
        if (factor != 0) {
            q[shift] = factor;
            for (std::size_t i = 0; i < b.size(); ++i)
                a[i + shift] = mod_reduce(a[i + shift] - factor * b[i], p);
        }
        // leading coefficient is now zero by construction
        a.pop_back();
        poly_trim(a);
        if (a.size() < b.size()) break;
    }
    poly_trim(q);
    return {std::move(q), std::move(a)};
}

} // namespace detail

// ---------------------------------------------------------------------------
// Units

inline bool is_unit(const Element& a) {
    switch (a.ring().kind()) {
        case ring_kind::integers: return a.as_int() == 1 || a.as_int() == -1;
        case ring_kind::modular:
            return detail::int_gcd(a.as_int(), a.ring().param()) == 1;
        case ring_kind::poly_over_gf: return a.as_poly().size() == 1;
        case ring_kind::localized_integers:
            return !a.is_zero() &&
                   boost::multiprecision::numerator(a.as_rat()) % a.ring().param() != 0;
    }
    return false;
}

inline Element unit_inverse(const Element& a) {
    if (!is_unit(a)) fail(errc::not_a_unit, render_element(a) + " is not a unit in " +
                                                a.ring().to_string());
    const auto& r = a.ring();
    switch (r.kind()) {
        case ring_kind::integers: return a;
        case ring_kind::modular:
            return Element(r, detail::mod_inverse(a.as_int(), r.param()));
        case ring_kind::poly_over_gf:
            return Element(r, PolyCoeffs{detail::mod_inverse(a.as_poly()[0], r.param())});
        case ring_kind::localized_integers:
            return Element(r, Rat(1) / a.as_rat());
    }
    fail(errc::internal_error, "bad ring kind");
}

// ---------------------------------------------------------------------------
// Exact division and linear congruences

// All q with d*q = a, in ascending canonical order. Finite outside
// MODULAR rings except for the 0*q = 0 case, which in a domain is "all of
// R" and is reported as the single representative 0.
inline std::vector<Element> divide_solutions(const Element& a, const Element& d) {
    a.require_same_ring(d, "divide");
    const auto& r = a.ring();
    std::vector<Element> out;
    switch (r.kind()) {
        case ring_kind::integers: {
            if (d.as_int() == 0) {
                if (a.as_int() == 0) out.push_back(Element::zero(r));
                return out;
            }
            if (a.as_int() % d.as_int() == 0)
                out.push_back(Element(r, Int(a.as_int() / d.as_int())));
            return out;
        }
        case ring_kind::poly_over_gf: {
            if (d.is_zero()) {
                if (a.is_zero()) out.push_back(Element::zero(r));
                return out;
            }
            if (a.is_zero()) { out.push_back(Element::zero(r)); return out; }
            auto [q, rem] = detail::poly_divmod(a.as_poly(), d.as_poly(), r.param());
            if (rem.empty()) out.push_back(Element(r, std::move(q)));
            return out;
        }
        case ring_kind::localized_integers: {
            if (d.is_zero()) {
                if (a.is_zero()) out.push_back(Element::zero(r));
                return out;
            }
            Rat q = a.as_rat() / d.as_rat();
            if (boost::multiprecision::denominator(q) % r.param() != 0)
                out.push_back(Element(r, std::move(q)));
            return out;
        }
        case ring_kind::modular: {
            const Int& n = r.param();
            Int g = detail::int_gcd(d.as_int(), n);
            if (g == 0) g = n; // d = 0
            if (a.as_int() % g != 0) return out;
            Int step = n / g;
            Int q0;
            if (step == 1) {
                q0 = 0;
            } else {
                Int dg = detail::mod_reduce(d.as_int() / g, step);
                q0 = detail::mod_reduce((a.as_int() / g) * detail::mod_inverse(dg, step), step);
            }
            for (Int k = 0; k < g; ++k)
                out.push_back(Element(r, Int(q0 + k * step)));
            return out;
        }
    }
    return out;
}

// q with d*q = a, or nullopt; the least such q in canonical order.
inline std::optional<Element> exact_divide(const Element& a, const Element& d) {
    auto sols = divide_solutions(a, d);
    if (sols.empty()) return std::nullopt;
    return sols.front();
}

// lambda with c*lambda = rhs, or nullopt; least solution.
inline std::optional<Element> solve_linear(const Element& c, const Element& rhs) {
    return exact_divide(rhs, c);
}

// ---------------------------------------------------------------------------
// Associate normalization

struct NormalizedAssociate {
    Element canonical; // = unit * input
    Element unit;
};

inline NormalizedAssociate normalize_associate(const Element& a) {
    const auto& r = a.ring();
    if (a.is_zero()) return {Element::zero(r), Element::one(r)};
    switch (r.kind()) {
        case ring_kind::integers: {
            if (a.as_int() < 0) return {-a, Element(r, Int(-1))};
            return {a, Element::one(r)};
        }
        case ring_kind::poly_over_gf: {
            Element li(r, PolyCoeffs{detail::mod_inverse(a.as_poly().back(), r.param())});
            return {li * a, li};
        }
        case ring_kind::localized_integers: {
            unsigned long k =
                detail::int_valuation(boost::multiprecision::numerator(a.as_rat()), r.param());
            Element canonical(r, Rat(detail::int_pow(r.param(), k)));
            Element unit(r, Rat(canonical.as_rat() / a.as_rat()));
            return {canonical, unit};
        }
        case ring_kind::modular: {
            const Int& n = r.param();
            Int g = detail::int_gcd(a.as_int(), n);
            // a = u*g with u = a/g (mod n/g); lift a/g to a unit mod n by
            // scanning the g candidates a/g + t*(n/g).
            Int step = n / g;
            Int u0 = detail::mod_reduce(a.as_int() / g, step);
            for (Int t = 0; t < g; ++t) {
                Int u = u0 + t * step;
                if (detail::int_gcd(u, n) == 1) {
                    Int w = detail::mod_inverse(u, n); // w*a = g
                    return {Element(r, g), Element(r, w)};
                }
            }
            fail(errc::internal_error, "unit lift must exist in Z/n");
        }
    }
    fail(errc::internal_error, "bad ring kind");
}

inline Element canonical_associate(const Element& a) { return normalize_associate(a).canonical; }

// ---------------------------------------------------------------------------
// Bezout certificates

// gcd d of (a, b) with cofactors and quotients: p*a + q*b = d, a = d*a0,
// b = d*b0, and (a0, b0) unimodular. d is the canonical associate.
struct BezoutCertificate {
    Element a, b;
    Element d;
    Element p, q;
    Element a0, b0;

    bool verify() const {
        if (p * a + q * b != d) return false;
        if (d * a0 != a || d * b0 != b) return false;
        return true;
    }
};

inline BezoutCertificate bezout_certificate(const Element& a, const Element& b);

// Canonical gcd of a list (canonical associate of the generated ideal).
inline Element canonical_gcd(const std::vector<Element>& items) {
    if (items.empty()) fail(errc::internal_error, "canonical_gcd of empty list");
    Element g = canonical_associate(items[0]);
    for (std::size_t i = 1; i < items.size(); ++i)
        g = bezout_certificate(g, items[i]).d;
    return g;
}

inline bool is_unimodular(const std::vector<Element>& items) {
    return is_unit(canonical_gcd(items));
}

namespace detail {

inline BezoutCertificate bezout_domain(const Element& a, const Element& b) {
    const auto& r = a.ring();
    switch (r.kind()) {
        case ring_kind::integers: {
            auto [g, x, y] = int_xgcd(a.as_int(), b.as_int());
            Element d(r, g);
            return {a, b, d, Element(r, std::move(x)), Element(r, std::move(y)),
                    Element(r, Int(a.as_int() / g)), Element(r, Int(b.as_int() / g))};
        }
        case ring_kind::poly_over_gf: {
            const Int& p = r.param();
            Element r0 = a, r1 = b;
            Element x0 = Element::one(r), x1 = Element::zero(r);
            Element y0 = Element::zero(r), y1 = Element::one(r);
            while (!r1.is_zero()) {
                auto [q, rem] = poly_divmod(r0.as_poly(), r1.as_poly(), p);
                Element qe(r, std::move(q));
                Element r2(r, std::move(rem));
                Element x2 = x0 - qe * x1;
                Element y2 = y0 - qe * y1;
                r0 = r1; r1 = std::move(r2);
                x0 = x1; x1 = std::move(x2);
                y0 = y1; y1 = std::move(y2);
            }
            Element li = unit_inverse(Element(r, PolyCoeffs{r0.as_poly().back()}));
            Element d = li * r0;
            return {a, b, d, li * x0, li * y0,
                    *exact_divide(a, d), *exact_divide(b, d)};
        }
        case ring_kind::localized_integers: {
            const Int& p = r.param();
            auto val = [&](const Element& e) {
                return int_valuation(boost::multiprecision::numerator(e.as_rat()), p);
            };
            Element zero = Element::zero(r);
            if (b.is_zero() || (!a.is_zero() && val(a) <= val(b))) {
                Element d = canonical_associate(a); // p^va
                Element pc = *exact_divide(d, a);   // unit
                return {a, b, d, pc, zero, *exact_divide(a, d), *exact_divide(b, d)};
            }
            Element d = canonical_associate(b);
            Element qc = *exact_divide(d, b);
            return {a, b, d, zero, qc, *exact_divide(a, d), *exact_divide(b, d)};
        }
        default:
            fail(errc::internal_error, "bezout_domain on modular ring");
    }
}

inline BezoutCertificate bezout_modular(const Element& a, const Element& b) {
    const auto& r = a.ring();
    const Int& n = r.param();
    auto [g0, x0, y0] = int_xgcd(a.as_int(), b.as_int());
    // Canonical gcd of the ideal (a, b) in Z/n is gcd(g0, n); scale cofactors
    // by the unit carrying g0 onto it.
    auto norm = normalize_associate(Element(r, Int(g0 % n)));
    const Element& d = norm.canonical;
    Element p = norm.unit * Element(r, std::move(x0));
    Element q = norm.unit * Element(r, std::move(y0));
    // Quotients: least a0, then least b0 keeping (a0, b0) unimodular.
    auto a0s = divide_solutions(a, d);
    auto b0s = divide_solutions(b, d);
    if (a0s.empty() || b0s.empty()) fail(errc::internal_error, "gcd must divide in Z/n");
    for (const auto& a0 : a0s) {
        for (const auto& b0 : b0s) {
            Int gg = int_gcd(int_gcd(a0.as_int(), b0.as_int()), n);
            if (gg == 1)
                return {a, b, d, std::move(p), std::move(q), a0, b0};
        }
    }
    fail(errc::internal_error, "no unimodular quotient pair in Z/n");
}

} // namespace detail

inline BezoutCertificate bezout_certificate(const Element& a, const Element& b) {
    a.require_same_ring(b, "bezout_certificate");
    const auto& r = a.ring();
    if (a.is_zero() && b.is_zero()) {
        Element z = Element::zero(r);
        return {a, b, z, z, z, z, z}; // gcd(0,0) = 0 by convention
    }
    if (r.kind() == ring_kind::modular) return detail::bezout_modular(a, b);
    return detail::bezout_domain(a, b);
}

} // namespace bezlab
