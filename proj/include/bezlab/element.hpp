#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "bezlab/ring.hpp"

namespace bezlab {

// Coefficients least-degree-first; zero polynomial is the empty vector and
// a nonzero polynomial has a nonzero leading (back) coefficient.
using PolyCoeffs = std::vector<Int>;

namespace detail {

inline Int mod_reduce(const Int& a, const Int& n) {
    Int r = a % n;
    if (r < 0) r += n;
    return r;
}

inline void poly_trim(PolyCoeffs& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

} // namespace detail

// A canonical-form ring element with value semantics. Equality is payload
// equality; arithmetic requires both operands to live in the same ring.
class Element {
  public:
    using Payload = std::variant<Int, Rat, PolyCoeffs>;

    Element(RingDescriptor ring, Payload payload)
        : ring_(std::move(ring)), payload_(std::move(payload)) {}

    static Element zero(const RingDescriptor& r) { return from_int(r, 0); }
    static Element one(const RingDescriptor& r) { return from_int(r, 1); }

    // The canonical image of an integer in the ring.
    static Element from_int(const RingDescriptor& r, Int v) {
        switch (r.kind()) {
            case ring_kind::integers:
                return Element(r, Payload(std::move(v)));
            case ring_kind::modular:
                return Element(r, Payload(detail::mod_reduce(v, r.param())));
            case ring_kind::poly_over_gf: {
                Int c = detail::mod_reduce(v, r.param());
                PolyCoeffs coeffs;
                if (c != 0) coeffs.push_back(std::move(c));
                return Element(r, Payload(std::move(coeffs)));
            }
            case ring_kind::localized_integers:
                return Element(r, Payload(Rat(std::move(v))));
        }
        fail(errc::internal_error, "bad ring kind");
    }

    static Element from_poly(const RingDescriptor& r, PolyCoeffs coeffs) {
        if (r.kind() != ring_kind::poly_over_gf)
            fail(errc::ring_mismatch, "polynomial payload requires GF(p)[x]");
        const Int& p = r.param();
        for (auto& c : coeffs) c = detail::mod_reduce(c, p);
        detail::poly_trim(coeffs);
        return Element(r, Payload(std::move(coeffs)));
    }

    static Element from_fraction(const RingDescriptor& r, const Int& num, const Int& den) {
        if (r.kind() != ring_kind::localized_integers)
            fail(errc::ring_mismatch, "fraction payload requires Z_(p)");
        if (den == 0) fail(errc::parse_error, "zero denominator");
        Rat q(num, den);
        if (boost::multiprecision::denominator(q) % r.param() == 0)
            fail(errc::ring_mismatch,
                 "denominator not coprime to " + r.param().str() + " in Z_(p)");
        return Element(r, Payload(std::move(q)));
    }

    const RingDescriptor& ring() const { return ring_; }

    const Int& as_int() const { return std::get<Int>(payload_); }
    const Rat& as_rat() const { return std::get<Rat>(payload_); }
    const PolyCoeffs& as_poly() const { return std::get<PolyCoeffs>(payload_); }

    bool is_zero() const {
        switch (ring_.kind()) {
            case ring_kind::integers:
            case ring_kind::modular: return as_int() == 0;
            case ring_kind::poly_over_gf: return as_poly().empty();
            case ring_kind::localized_integers: return as_rat() == 0;
        }
        return false;
    }

    bool is_one() const {
        switch (ring_.kind()) {
            case ring_kind::integers:
            case ring_kind::modular: return as_int() == 1;
            case ring_kind::poly_over_gf: {
                const auto& c = as_poly();
                return c.size() == 1 && c[0] == 1;
            }
            case ring_kind::localized_integers: return as_rat() == 1;
        }
        return false;
    }

    // Degree of a polynomial; -1 stands in for deg(0) = -infinity.
    long poly_degree() const {
        return static_cast<long>(as_poly().size()) - 1;
    }

    bool operator==(const Element& o) const {
        return ring_ == o.ring_ && payload_ == o.payload_;
    }
    bool operator!=(const Element& o) const { return !(*this == o); }

    // Canonical total order: numeric payload order; degree then
    // leading-coefficient-first lexicographic order for polynomials.
    bool operator<(const Element& o) const {
        require_same_ring(o, "order");
        switch (ring_.kind()) {
            case ring_kind::integers:
            case ring_kind::modular: return as_int() < o.as_int();
            case ring_kind::localized_integers: return as_rat() < o.as_rat();
            case ring_kind::poly_over_gf: {
                const auto& a = as_poly();
                const auto& b = o.as_poly();
                if (a.size() != b.size()) return a.size() < b.size();
                for (std::size_t i = a.size(); i-- > 0;) {
                    if (a[i] != b[i]) return a[i] < b[i];
                }
                return false;
            }
        }
        return false;
    }

    Element operator-() const {
        switch (ring_.kind()) {
            case ring_kind::integers: return Element(ring_, Payload(Int(-as_int())));
            case ring_kind::modular:
                return Element(ring_, Payload(detail::mod_reduce(-as_int(), ring_.param())));
            case ring_kind::localized_integers: return Element(ring_, Payload(Rat(-as_rat())));
            case ring_kind::poly_over_gf: {
                PolyCoeffs c = as_poly();
                for (auto& x : c) x = detail::mod_reduce(-x, ring_.param());
                return Element(ring_, Payload(std::move(c)));
            }
        }
        fail(errc::internal_error, "bad ring kind");
    }

    Element operator+(const Element& o) const {
        require_same_ring(o, "+");
        switch (ring_.kind()) {
            case ring_kind::integers: return Element(ring_, Payload(Int(as_int() + o.as_int())));
            case ring_kind::modular:
                return Element(ring_,
                               Payload(detail::mod_reduce(as_int() + o.as_int(), ring_.param())));
            case ring_kind::localized_integers:
                return Element(ring_, Payload(Rat(as_rat() + o.as_rat())));
            case ring_kind::poly_over_gf: {
                const auto& a = as_poly();
                const auto& b = o.as_poly();
                PolyCoeffs c(std::max(a.size(), b.size()), Int(0));
                for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
                for (std::size_t i = 0; i < b.size(); ++i)
                    c[i] = detail::mod_reduce(c[i] + b[i], ring_.param());
                detail::poly_trim(c);
                return Element(ring_, Payload(std::move(c)));
            }
        }
        fail(errc::internal_error, "bad ring kind");
    }

    Element operator-(const Element& o) const { return *this + (-o); }

    Element operator*(const Element& o) const {
        require_same_ring(o, "*");
        switch (ring_.kind()) {
            case ring_kind::integers: return Element(ring_, Payload(Int(as_int() * o.as_int())));
            case ring_kind::modular:
                return Element(ring_,
                               Payload(detail::mod_reduce(as_int() * o.as_int(), ring_.param())));
            case ring_kind::localized_integers:
                return Element(ring_, Payload(Rat(as_rat() * o.as_rat())));
            case ring_kind::poly_over_gf: {
                const auto& a = as_poly();
                const auto& b = o.as_poly();
                if (a.empty() || b.empty()) return Element(ring_, Payload(PolyCoeffs{}));
                PolyCoeffs c(a.size() + b.size() - 1, Int(0));
                for (std::size_t i = 0; i < a.size(); ++i)
                    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
                for (auto& x : c) x = detail::mod_reduce(x, ring_.param());
                detail::poly_trim(c);
                return Element(ring_, Payload(std::move(c)));
            }
        }
        fail(errc::internal_error, "bad ring kind");
    }

    void require_same_ring(const Element& o, const char* op) const {
        if (ring_ != o.ring_)
            fail(errc::ring_mismatch, std::string("ring mismatch in '") + op + "': " +
                                          ring_.to_string() + " vs " + o.ring_.to_string());
    }

  private:
    RingDescriptor ring_;
    Payload payload_;
};

// ---------------------------------------------------------------------------
// Rendering

inline std::string render_element(const Element& e) {
    switch (e.ring().kind()) {
        case ring_kind::integers:
        case ring_kind::modular:
            return e.as_int().str();
        case ring_kind::localized_integers: {
            const Rat& q = e.as_rat();
            Int num = boost::multiprecision::numerator(q);
            Int den = boost::multiprecision::denominator(q);
            if (den == 1) return num.str();
            return num.str() + "/" + den.str();
        }
        case ring_kind::poly_over_gf: {
            const auto& c = e.as_poly();
            if (c.empty()) return "0";
            std::string out;
            for (std::size_t i = c.size(); i-- > 0;) {
                if (c[i] == 0) continue;
                if (!out.empty()) out += "+";
                if (i == 0) {
                    out += c[i].str();
                } else {
                    if (c[i] != 1) out += c[i].str() + "*";
                    out += "x";
                    if (i > 1) out += "^" + std::to_string(i);
                }
            }
            return out;
        }
    }
    fail(errc::internal_error, "bad ring kind");
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

inline bool parse_int_literal(const std::string& s, Int& out) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    out = Int(s);
    return true;
}

// One term of a polynomial literal: "c", "x", "c*x", "x^k", "c*x^k".
inline void parse_poly_term(const std::string& term, bool negate, const Int& p, PolyCoeffs& acc) {
    std::string t = term;
    Int coeff = 1;
    std::size_t deg = 0;

    auto star = t.find('*');
    if (star != std::string::npos) {
        if (!parse_int_literal(t.substr(0, star), coeff))
            fail(errc::parse_error, "bad coefficient in term '" + term + "'");
        t = t.substr(star + 1);
    }
    if (t.empty()) fail(errc::parse_error, "empty term");
    if (t[0] == 'x') {
        if (t == "x") {
            deg = 1;
        } else if (t.size() > 2 && t[1] == '^') {
            Int d;
            if (!parse_int_literal(t.substr(2), d) || d < 0 || d > 4096)
                fail(errc::parse_error, "bad exponent in term '" + term + "'");
            deg = static_cast<std::size_t>(d);
        } else {
            fail(errc::parse_error, "bad term '" + term + "'");
        }
    } else {
        if (star != std::string::npos || !parse_int_literal(t, coeff))
            fail(errc::parse_error, "bad term '" + term + "'");
        deg = 0;
    }
    if (negate) coeff = -coeff;
    if (acc.size() < deg + 1) acc.resize(deg + 1, Int(0));
    acc[deg] = mod_reduce(acc[deg] + coeff, p);
}

inline Element parse_poly(const RingDescriptor& ring, const std::string& text) {
    PolyCoeffs acc;
    std::string term;
    bool neg = false;
    bool sign_pending = false;
    bool any = false;
    auto flush = [&]() {
        if (term.empty()) fail(errc::parse_error, "dangling sign in '" + text + "'");
        parse_poly_term(term, neg, ring.param(), acc);
        term.clear();
        sign_pending = false;
        any = true;
    };
    for (char c : text) {
        if (c == ' ') continue;
        if (c == '+' || c == '-') {
            if (!term.empty()) flush();
            else if (any || sign_pending)
                fail(errc::parse_error, "dangling sign in '" + text + "'");
            neg = (c == '-');
            sign_pending = true;
        } else {
            term += c;
        }
    }
    flush();
    poly_trim(acc);
    return Element::from_poly(ring, std::move(acc));
}

} // namespace detail

// Element literals: decimal integers; polynomials like "3*x^2+x+4";
// fractions "a/b" for localized rings. Results are canonical.
inline Element parse_element(const RingDescriptor& ring, const std::string& text) {
    switch (ring.kind()) {
        case ring_kind::integers:
        case ring_kind::modular: {
            Int v;
            if (!detail::parse_int_literal(text, v)) {
                if (text.find('/') != std::string::npos)
                    fail(errc::ring_mismatch,
                         "fraction literal '" + text + "' for " + ring.to_string());
                fail(errc::parse_error, "bad element literal '" + text + "'");
            }
            return Element::from_int(ring, v);
        }
        case ring_kind::localized_integers: {
            auto slash = text.find('/');
            Int num, den = 1;
            if (slash == std::string::npos) {
                if (!detail::parse_int_literal(text, num))
                    fail(errc::parse_error, "bad element literal '" + text + "'");
            } else {
                if (!detail::parse_int_literal(text.substr(0, slash), num) ||
                    !detail::parse_int_literal(text.substr(slash + 1), den))
                    fail(errc::parse_error, "bad fraction literal '" + text + "'");
            }
            return Element::from_fraction(ring, num, den);
        }
        case ring_kind::poly_over_gf: {
            if (text.find('/') != std::string::npos)
                fail(errc::ring_mismatch, "fraction literal '" + text + "' for GF(p)[x]");
            return detail::parse_poly(ring, text);
        }
    }
    fail(errc::internal_error, "bad ring kind");
}

} // namespace bezlab
