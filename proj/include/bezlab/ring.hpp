#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "bezlab/error.hpp"

namespace bezlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class ring_kind {
    integers,             // Z
    modular,              // Z/n, n >= 2
    poly_over_gf,         // GF(p)[x], p prime
    localized_integers,   // Z_(p), p prime
};

// Deterministic trial division; parameters are desk-scale.
inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Int d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

// Identifies one of the four concrete commutative Bezout rings.
// `param` is n for modular rings and p for GF(p)[x] and Z_(p); it is
// ignored (zero) for Z.
class RingDescriptor {
  public:
    static RingDescriptor integers() { return RingDescriptor(ring_kind::integers, 0); }

    static RingDescriptor modular(Int n) {
        if (n < 2) fail(errc::parse_error, "Z/n requires n >= 2");
        return RingDescriptor(ring_kind::modular, std::move(n));
    }

    static RingDescriptor poly_over_gf(Int p) {
        if (!is_prime(p)) fail(errc::not_prime, "GF(p)[x] requires prime p");
        return RingDescriptor(ring_kind::poly_over_gf, std::move(p));
    }

    static RingDescriptor localized_at(Int p) {
        if (!is_prime(p)) fail(errc::not_prime, "Z_(p) requires prime p");
        return RingDescriptor(ring_kind::localized_integers, std::move(p));
    }

    ring_kind kind() const { return kind_; }
    const Int& param() const { return param_; }

    bool is_finite() const { return kind_ == ring_kind::modular; }
    bool is_domain() const { return kind_ != ring_kind::modular; }

    bool operator==(const RingDescriptor& o) const {
        return kind_ == o.kind_ && param_ == o.param_;
    }
    bool operator!=(const RingDescriptor& o) const { return !(*this == o); }

    std::string to_string() const {
        switch (kind_) {
            case ring_kind::integers: return "Z";
            case ring_kind::modular: return "Z/" + param_.str();
            case ring_kind::poly_over_gf: return "GF(" + param_.str() + ")[x]";
            case ring_kind::localized_integers: return "Z_(" + param_.str() + ")";
        }
        fail(errc::internal_error, "bad ring kind");
    }

  private:
    RingDescriptor(ring_kind k, Int param) : kind_(k), param_(std::move(param)) {}

    ring_kind kind_;
    Int param_;
};

// Ring spec grammar: "Z", "Z/<n>", "GF(<p>)[x]", "Z_(<p>)".
inline RingDescriptor parse_ring(const std::string& spec) {
    auto parse_uint = [&](const std::string& s) -> Int {
        if (s.empty()) fail(errc::parse_error, "empty number in ring spec '" + spec + "'");
        for (char c : s) {
            if (c < '0' || c > '9')
                fail(errc::parse_error, "bad number '" + s + "' in ring spec '" + spec + "'");
        }
        return Int(s);
    };

    if (spec == "Z") return RingDescriptor::integers();
    if (spec.rfind("Z/", 0) == 0) {
        Int n = parse_uint(spec.substr(2));
        if (n < 2) fail(errc::parse_error, "Z/n requires n >= 2, got '" + spec + "'");
        return RingDescriptor::modular(n);
    }
    if (spec.rfind("GF(", 0) == 0) {
        auto close = spec.find(')');
        if (close == std::string::npos || spec.substr(close) != ")[x]")
            fail(errc::parse_error, "bad ring spec '" + spec + "'");
        return RingDescriptor::poly_over_gf(parse_uint(spec.substr(3, close - 3)));
    }
    if (spec.rfind("Z_(", 0) == 0 && spec.size() > 4 && spec.back() == ')') {
        return RingDescriptor::localized_at(parse_uint(spec.substr(3, spec.size() - 4)));
    }
    fail(errc::parse_error, "unrecognized ring spec '" + spec + "'");
}

} // namespace bezlab
