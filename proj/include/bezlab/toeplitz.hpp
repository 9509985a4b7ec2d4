#pragma once

#include <utility>

#include "bezlab/edr.hpp"

namespace bezlab {

// Inverse of an invertible Toeplitz matrix; again Toeplitz.
inline ToeplitzMatrix toeplitz_invert(const ToeplitzMatrix& t) {
    Element u = t.det();
    if (!is_unit(u))
        fail(errc::not_invertible, "Toeplitz determinant " + render_element(u) +
                                       " is not a unit in " + t.ring().to_string());
    Element ui = unit_inverse(u);
    return {t.a * ui, -(t.b * ui), -(t.c * ui)};
}

// Invertible Toeplitz T with (a, b) * T = (d, 0), d the canonical gcd.
// T = S K with S = [[a0, -b0], [x, a0]] built from a square-stable-range
// witness a0^2 + b0*x = u and K = diag(u^-1, u^-1).
inline std::pair<ToeplitzMatrix, Element> toeplitz_row_reduce(const Element& a,
                                                              const Element& b) {
    a.require_same_ring(b, "toeplitz_row_reduce");
    const auto& ring = a.ring();
    if (a.is_zero() && b.is_zero())
        return {ToeplitzMatrix::identity(ring), Element::zero(ring)};

    auto cert = bezout_certificate(a, b);
    auto rep = detail::unit_shift_search(cert.a0 * cert.a0, cert.b0);
    if (!rep.found)
        fail(errc::witness_not_found,
             "no square-stable-range witness for the reduced pair (" +
                 render_element(cert.a0) + ", " + render_element(cert.b0) + ")");
    const Element& x = *rep.witness;
    Element u = cert.a0 * cert.a0 + cert.b0 * x;
    Element ui = unit_inverse(u);

    ToeplitzMatrix t{cert.a0 * ui, -(cert.b0 * ui), x * ui};
    if (a * t.a + b * t.c != cert.d || !(a * t.b + b * t.a).is_zero())
        fail(errc::construction_failed, "toeplitz_row_reduce identity failed");
    return {std::move(t), cert.d};
}

// Completes a unimodular row (a, b) to an invertible Toeplitz matrix
// [[a, b], [x, a]]: x is the least witness with a^2 - b*x a unit.
inline ToeplitzMatrix toeplitz_complete(const Element& a, const Element& b) {
    a.require_same_ring(b, "toeplitz_complete");
    detail::require_unimodular_pair(a, b, "toeplitz_complete");
    auto rep = detail::unit_shift_search(a * a, -b);
    if (!rep.found)
        fail(errc::witness_not_found, "no Toeplitz completion of (" + render_element(a) +
                                          ", " + render_element(b) + ")");
    return {a, b, *rep.witness};
}

// Diagonal reduction of a 2x2 matrix by invertible Toeplitz transforms:
// result diag(e1, e2) with e1 | e2 and e1 canonical; every recorded factor
// (the triangularizing reduction, the two completions and the two clearing
// shears) is individually Toeplitz. Whether the multiplied-out totals stay
// Toeplitz is recorded in the certificate, not asserted.
inline ReductionCertificate toeplitz_diag_2x2(const Matrix& input,
                                              const SearchLimits& limits = {}) {
    detail::Diag2Hooks hooks;
    hooks.column_reducer = [](const Element& x, const Element& y) {
        return toeplitz_row_reduce(x, y).first.to_matrix();
    };
    hooks.complete_row = [](const Element& p, const Element& q) {
        return toeplitz_complete(p, q).to_matrix();
    };
    hooks.complete_col = [](const Element& r, const Element& s) {
        // First column (r, s)^T: transpose of the completion of the row (r, s).
        return toeplitz_complete(r, s).to_matrix().transpose();
    };
    auto cert = detail::diag_2x2(input, hooks, limits);
    for (bool f : cert.toeplitz_flags)
        if (!f) fail(errc::construction_failed, "non-Toeplitz factor in Toeplitz reduction");
    return cert;
}

} // namespace bezlab
