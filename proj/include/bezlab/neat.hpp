#pragma once

#include <optional>
#include <string>
#include <utility>

#include "bezlab/edr.hpp"

namespace bezlab {

// Factorization a = r*s with r coprime to b, s coprime to c, r coprime to s.
struct NeatWitness {
    Element a, b, c;
    Element r, s;

    bool verify() const {
        return r * s == a && is_unit(bezout_certificate(r, b).d) &&
               is_unit(bezout_certificate(s, c).d) && is_unit(bezout_certificate(r, s).d);
    }
};

namespace detail {

// Exhaustive factorization search in a finite ring, in canonical order.
inline std::optional<std::pair<Element, Element>> neat_split_finite(const Element& a,
                                                                    const Element& b,
                                                                    const Element& c) {
    ElementScan rs(a.ring());
    while (auto r = rs.next()) {
        if (!is_unit(bezout_certificate(*r, b).d)) continue;
        for (const auto& s : divide_solutions(a, *r)) {
            if (!is_unit(bezout_certificate(s, c).d)) continue;
            if (!is_unit(bezout_certificate(*r, s).d)) continue;
            return std::make_pair(*r, s);
        }
    }
    return std::nullopt;
}

// In a domain, peel the part of `a` sharing factors with `b` into s: at the
// end gcd(r, b) = 1, every factor of s divides b (so s is coprime to both c
// and r). No factorization of a is needed.
inline std::pair<Element, Element> neat_split_domain(const Element& a, const Element& b) {
    Element r = a;
    Element s = Element::one(a.ring());
    while (true) {
        Element g = bezout_certificate(r, b).d;
        if (is_unit(g)) break;
        r = *exact_divide(r, g);
        s = s * g;
    }
    return {std::move(r), std::move(s)};
}

} // namespace detail

// Neat factorization of a nonzero `a` against a unimodular pair (b, c).
inline NeatWitness neat_witness(const Element& a, const Element& b, const Element& c) {
    a.require_same_ring(b, "neat_witness");
    a.require_same_ring(c, "neat_witness");
    if (a.is_zero()) fail(errc::precondition_violated, "neat elements are nonzero");
    if (!is_unit(bezout_certificate(b, c).d))
        fail(errc::not_coprime, "neat_witness requires bR+cR=R");

    if (a.ring().is_finite()) {
        auto split = detail::neat_split_finite(a, b, c);
        if (!split)
            fail(errc::not_neat, render_element(a) + " admits no neat factorization for (" +
                                     render_element(b) + ", " + render_element(c) + ")");
        NeatWitness w{a, b, c, split->first, split->second};
        if (!w.verify()) fail(errc::construction_failed, "neat witness replay failed");
        return w;
    }
    auto [r, s] = detail::neat_split_domain(a, b);
    NeatWitness w{a, b, c, std::move(r), std::move(s)};
    if (!w.verify()) fail(errc::construction_failed, "neat witness replay failed");
    return w;
}

// Whether `a` is neat: factorizable against every unimodular pair (b, c).
// Finite rings are decided by exhaustion; in the three domains unique
// factorization assigns every prime of `a` away from at least one of b, c,
// so every nonzero element is neat (cross-checked by sampling in the test
// suite).
inline bool is_neat(const Element& a) {
    if (a.is_zero()) fail(errc::precondition_violated, "neat elements are nonzero");
    const auto& ring = a.ring();
    if (!ring.is_finite()) return true;
    ElementScan bs(ring);
    while (auto b = bs.next()) {
        ElementScan cs(ring);
        while (auto c = cs.next()) {
            if (!is_unit(bezout_certificate(*b, *c).d)) continue;
            if (!detail::neat_split_finite(a, *b, *c)) return false;
        }
    }
    return true;
}

// Least t with a + b*t neat, for a unimodular pair (a, b).
inline Element neat_range1_shift(const Element& a, const Element& b) {
    a.require_same_ring(b, "neat_range1_shift");
    detail::require_unimodular_pair(a, b, "neat_range1_shift");
    ElementScan ts(a.ring());
    while (auto t = ts.next()) {
        Element shifted = a + b * *t;
        if (shifted.is_zero()) continue;
        if (is_neat(shifted)) return *t;
    }
    fail(errc::witness_not_found, "no neat shift found for (" + render_element(a) + ", " +
                                      render_element(b) + ")");
}

// ---------------------------------------------------------------------------
// Clean decomposition in R/cR (Thm-8 style idempotent construction)

struct CleanDecomposition {
    RingDescriptor quotient; // Z/m for the modulus m below
    Element c;               // element of the base ring, c = r*s
    Element proof_idempotent; // image of s*v where r*u + s*v = 1
    Element x;                // the decomposed residue
    Element idempotent;       // x = idempotent + unit in Z/m
    Element unit;

    bool verify() const {
        return proof_idempotent * proof_idempotent == proof_idempotent &&
               idempotent * idempotent == idempotent && is_unit(unit) &&
               idempotent + unit == x;
    }
};

// Idempotents of a modular ring, ascending.
inline std::vector<Element> idempotents(const RingDescriptor& ring) {
    if (!ring.is_finite()) fail(errc::infinite_ring, "idempotent enumeration needs Z/m");
    std::vector<Element> out;
    ElementScan es(ring);
    while (auto e = es.next())
        if (*e * *e == *e) out.push_back(std::move(*e));
    return out;
}

// Builds the idempotent e = s*v of R/cR from a factorization c = r*s with
// rR + aR = R, sR + (1-a)R = R, rR + sR = R, checks e in a*(R/cR) and
// 1-e in (1-a)*(R/cR), and splits the residue x as idempotent + unit.
inline CleanDecomposition clean_decompose(const Element& r, const Element& s,
                                          const Element& a, const Element& x) {
    r.require_same_ring(s, "clean_decompose");
    r.require_same_ring(a, "clean_decompose");
    r.require_same_ring(x, "clean_decompose");
    const auto& ring = r.ring();
    if (ring.kind() != ring_kind::integers && ring.kind() != ring_kind::modular)
        fail(errc::unsupported_ring, "clean_decompose works over Z or Z/n");

    Element one = Element::one(ring);
    if (!is_unit(bezout_certificate(r, a).d) || !is_unit(bezout_certificate(s, one - a).d) ||
        !is_unit(bezout_certificate(r, s).d))
        fail(errc::precondition_violated,
             "clean_decompose requires rR+aR=R, sR+(1-a)R=R, rR+sR=R");

    Element c = r * s;
    Int m = ring.kind() == ring_kind::integers
                ? boost::multiprecision::abs(c.as_int())
                : detail::int_gcd(c.as_int(), ring.param());
    if (ring.kind() == ring_kind::modular && c.is_zero()) m = ring.param();
    if (m < 2)
        fail(errc::precondition_violated, "quotient by cR is trivial (|c| < 2)");
    RingDescriptor quotient = RingDescriptor::modular(m);
    auto image = [&](const Element& e) { return Element::from_int(quotient, e.as_int()); };

    auto cert = bezout_certificate(r, s);
    Element di = unit_inverse(cert.d);
    Element u = cert.p * di;
    Element v = cert.q * di; // r*u + s*v = 1

    Element e_proof = image(s * v);
    Element qa = image(a);
    Element q_one = Element::one(quotient);
    if (e_proof * e_proof != e_proof)
        fail(errc::construction_failed, "s*v is not idempotent mod c");
    if (image(r * u) != q_one - e_proof)
        fail(errc::construction_failed, "r*u is not the complementary idempotent");
    if (!solve_linear(qa, e_proof) || !solve_linear(q_one - qa, q_one - e_proof))
        fail(errc::construction_failed, "idempotent misses a(R/cR) or (1-a)(R/cR)");

    Element qx = image(x);
    for (const auto& e : idempotents(quotient)) {
        Element candidate = qx - e;
        if (is_unit(candidate)) {
            CleanDecomposition out{quotient, c, e_proof, qx, e, candidate};
            if (!out.verify()) fail(errc::construction_failed, "clean decomposition replay failed");
            return out;
        }
    }
    fail(errc::construction_failed,
         "no idempotent+unit split of " + render_element(qx) + " mod " + m.str());
}

// ---------------------------------------------------------------------------
// The two constructive directions of the (p,q) <-> factorization bridge

struct Prop5Forward {
    Element lambda, u, v;
    bool remark_holds;  // whether uR + vR = R came out of the construction
    std::string remark_note;
};

// From (p, q) with (pa)R + (pb+qc)R = R produces (lambda, u, v) with
// b + lambda*c = v*u, uR + aR = R, vR + cR = R. The cofactor identities are
// rebuilt from certificates; lambda is the least solution of
// c*lambda = v*u - b whose full postcondition set holds.
inline Prop5Forward prop5_forward(const Element& a, const Element& b, const Element& c,
                                  const Element& p, const Element& q) {
    a.require_same_ring(b, "prop5_forward");
    a.require_same_ring(c, "prop5_forward");
    a.require_same_ring(p, "prop5_forward");
    a.require_same_ring(q, "prop5_forward");
    if (!is_unimodular({a, b, c}))
        fail(errc::precondition_violated, "prop5_forward requires aR+bR+cR=R");
    if (!is_unit(bezout_certificate(p * a, p * b + q * c).d))
        fail(errc::precondition_violated, "prop5_forward requires (pa)R+(pb+qc)R=R");

    // gcd(p, c) is a unit: any common divisor divides pa and pb + qc.
    auto pc = bezout_certificate(p, c);
    if (!is_unit(pc.d)) fail(errc::construction_failed, "pR + cR = R must hold");
    Element di = unit_inverse(pc.d);
    Element v = pc.p * di;
    Element j = pc.q * di; // v*p + j*c = 1
    Element u = p * b + q * c;

    // v*u - b = c*(v*q - b*j) exactly; take the least lambda solving it.
    auto lambdas = divide_solutions(v * u - b, c);
    if (lambdas.empty()) fail(errc::construction_failed, "no lambda with c*lambda = v*u - b");
    Element lambda = lambdas.front();

    if (b + lambda * c != v * u || !is_unit(bezout_certificate(u, a).d) ||
        !is_unit(bezout_certificate(v, c).d))
        fail(errc::construction_failed, "prop5_forward postcondition failed");

    Prop5Forward out{std::move(lambda), std::move(u), std::move(v), true, ""};
    if (!is_unit(bezout_certificate(out.u, out.v).d)) {
        out.remark_holds = false;
        out.remark_note = "RemarkViolation: uR + vR != R for this construction";
    }
    return out;
}

// From (lambda, u, v) with b + lambda*c = v*u, uR + aR = R, vR + cR = R
// produces (p, q) with (pa)R + (pb+qc)R = R.
inline PQWitness prop5_backward(const Element& a, const Element& b, const Element& c,
                                const Element& lambda, const Element& u, const Element& v) {
    a.require_same_ring(b, "prop5_backward");
    a.require_same_ring(c, "prop5_backward");
    if (b + lambda * c != v * u || !is_unit(bezout_certificate(u, a).d) ||
        !is_unit(bezout_certificate(v, c).d))
        fail(errc::precondition_violated,
             "prop5_backward requires b + lambda*c = v*u with uR+aR=R, vR+cR=R");

    // Degenerate witness u = 0: then aR = R, and p = a^-1, q = 0 works.
    if (u.is_zero()) {
        PQWitness out{unit_inverse(a), Element::zero(a.ring())};
        if (!is_unit(bezout_certificate(out.p * a, out.p * b + out.q * c).d))
            fail(errc::construction_failed, "prop5_backward postcondition failed");
        return out;
    }

    auto vc = bezout_certificate(v, c);
    Element di = unit_inverse(vc.d);
    Element p0 = vc.p * di;
    Element j = vc.q * di; // p0*v + j*c = 1
    // p0*b = u - (j*u + p0*lambda)*c, so q0 = j*u + p0*lambda gives
    // p0*b + q0*c = u.
    Element q0 = j * u + p0 * lambda;
    if (p0 * b + q0 * c != u)
        fail(errc::construction_failed, "prop5_backward identity failed");

    // Strip the common divisor of (p0, q0); the reduced pair works.
    auto cert = bezout_certificate(p0, q0);
    PQWitness out{cert.a0, cert.b0};
    if (!is_unit(bezout_certificate(out.p * a, out.p * b + out.q * c).d))
        fail(errc::construction_failed, "prop5_backward postcondition failed");
    return out;
}

} // namespace bezlab
