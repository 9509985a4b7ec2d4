#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "bezlab/matrix.hpp"
#include "bezlab/stable_range.hpp"

namespace bezlab {

// Witness for the two-generator condition p*a*R + (p*b + q*c)*R = R.
struct PQWitness {
    Element p, q;
};

// Invertible Q with (a, b) * Q = (d, 0), d the canonical gcd. Total: works
// for every pair including zeros.
inline std::pair<Matrix, Element> hermite_row(const Element& a, const Element& b) {
    a.require_same_ring(b, "hermite_row");
    const auto& ring = a.ring();
    if (a.is_zero() && b.is_zero())
        return {Matrix::identity(ring, 2), Element::zero(ring)};

    auto cert = bezout_certificate(a, b);
    if (ring.is_domain()) {
        // det = p*a0 + q*b0 and d*(p*a0 + q*b0) = d, so det = 1 in a domain.
        Matrix q(ring, 2, 2);
        q.at(0, 0) = cert.p;
        q.at(0, 1) = -cert.b0;
        q.at(1, 0) = cert.q;
        q.at(1, 1) = cert.a0;
        return {std::move(q), cert.d};
    }
    // Z/n has stable range 1: a0 + y*b0 is a unit for some y, and the
    // composite of the three elementary steps below has unit determinant.
    auto rep = detail::unit_shift_search(cert.a0, cert.b0);
    if (!rep.found) fail(errc::internal_error, "Z/n must have stable range 1");
    Element u = cert.a0 + cert.b0 * *rep.witness;
    Element ui = unit_inverse(u);
    Matrix q(ring, 2, 2);
    // [[1,0],[y,1]] * [[1,-ui*b0],[0,1]] * [[ui,0],[0,1]], multiplied out.
    q.at(0, 0) = ui;
    q.at(0, 1) = -(ui * cert.b0);
    q.at(1, 0) = *rep.witness * ui;
    q.at(1, 1) = Element::one(ring) - *rep.witness * ui * cert.b0;
    return {std::move(q), cert.d};
}

// Finds (p, q) with (p*a)R + (p*b + q*c)R = R, given aR + bR + cR = R.
// Deterministic scan in canonical order over (q, p): exhaustive double loop
// in finite rings, square shells over the scan prefix in infinite ones,
// then two decisive fallbacks.
inline PQWitness find_pq(const Element& a, const Element& b, const Element& c,
                         const SearchLimits& limits = {}) {
    a.require_same_ring(b, "find_pq");
    a.require_same_ring(c, "find_pq");
    const auto& ring = a.ring();
    if (!is_unimodular({a, b, c}))
        fail(errc::not_coprime, "find_pq requires aR+bR+cR=R");

    auto valid = [&](const Element& p, const Element& q) {
        return is_unit(bezout_certificate(p * a, p * b + q * c).d);
    };

    if (ring.is_finite()) {
        ElementScan qs(ring);
        while (auto q = qs.next()) {
            ElementScan ps(ring);
            while (auto p = ps.next()) {
                if (valid(*p, *q)) return {std::move(*p), std::move(*q)};
            }
        }
        fail(errc::witness_not_found, "find_pq: exhausted " + ring.to_string());
    }

    auto prefix = scan_prefix(ring, 40, limits);
    for (std::size_t shell = 0; shell < prefix.size(); ++shell) {
        for (std::size_t qi = 0; qi <= shell; ++qi) {
            for (std::size_t pi = 0; pi <= shell; ++pi) {
                if (std::max(qi, pi) != shell) continue;
                if (valid(prefix[pi], prefix[qi])) return {prefix[pi], prefix[qi]};
            }
        }
    }

    // (b, c) unimodular: the Bezout cofactors make p*b + q*c = 1 outright.
    auto bc = bezout_certificate(b, c);
    if (is_unit(bc.d)) {
        Element p = bc.p * unit_inverse(bc.d);
        Element q = bc.q * unit_inverse(bc.d);
        if (valid(p, q)) return {std::move(p), std::move(q)};
    }

    // p = 1: some q with gcd(a, b + q*c) a unit exists within |a|-many (or
    // deg(a)-degree-many) candidates in Z and GF(p)[x].
    if (!a.is_zero()) {
        SearchLimits wide = limits;
        if (ring.kind() == ring_kind::integers) {
            Int bound = boost::multiprecision::abs(a.as_int()) + 1;
            wide.int_bound = std::max(wide.int_bound, bound);
            wide.max_candidates = std::max<long>(wide.max_candidates, 4000000);
        } else if (ring.kind() == ring_kind::poly_over_gf) {
            wide.poly_degree_bound = std::max(wide.poly_degree_bound, a.poly_degree() + 1);
        }
        Element one = Element::one(ring);
        ElementScan qs(ring, wide);
        while (auto q = qs.next()) {
            if (valid(one, *q)) return {one, std::move(*q)};
        }
    }
    fail(errc::witness_not_found, "find_pq: bounded search exhausted");
}

namespace detail {

// All ways to write e = g * x with x canonical-least first.
// Returns the lexicographically first tuple of quotients of `entries` by g
// whose joint gcd (with the ring) is a unit.
inline std::vector<Element> unimodular_quotients(const std::vector<Element>& entries,
                                                 const Element& g) {
    std::vector<std::vector<Element>> options;
    for (const auto& e : entries) {
        auto sols = divide_solutions(e, g);
        if (sols.empty()) fail(errc::internal_error, "content must divide every entry");
        options.push_back(std::move(sols));
    }
    std::vector<std::size_t> pick(options.size(), 0);
    while (true) {
        std::vector<Element> chosen;
        for (std::size_t i = 0; i < options.size(); ++i) chosen.push_back(options[i][pick[i]]);
        if (is_unimodular(chosen)) return chosen;
        std::size_t i = options.size();
        while (i-- > 0) {
            if (++pick[i] < options[i].size()) break;
            pick[i] = 0;
            if (i == 0) fail(errc::internal_error, "no unimodular quotient tuple");
        }
    }
}

// Shared 2x2 pipeline: triangularize with `column_reducer`, pull out the
// content, lift the (p,q) condition to invertible completions from
// `complete_row` / `complete_col`, then clear the off-diagonal entries.
// Produces diag(g, g*z) with g the canonical gcd of the entries.
struct Diag2Hooks {
    // (alpha, gamma) -> invertible 2x2 T with (alpha, gamma) * T = (d, 0)
    std::function<Matrix(const Element&, const Element&)> column_reducer;
    // unimodular row (p, q) -> invertible 2x2 with first row (p, q)
    std::function<Matrix(const Element&, const Element&)> complete_row;
    // unimodular column (r, s) -> invertible 2x2 with first column (r, s)^T
    std::function<Matrix(const Element&, const Element&)> complete_col;
    // scale e2 to its canonical associate (the extra diag(1, u) factor is
    // not Toeplitz, so the Toeplitz pipeline leaves e2 as constructed)
    bool canonicalize_e2 = false;
};

inline ReductionCertificate diag_2x2(const Matrix& input, const Diag2Hooks& hooks,
                                     const SearchLimits& limits = {}) {
    if (input.rows() != 2 || input.cols() != 2)
        fail(errc::precondition_violated, "diagonalization expects a 2x2 matrix");
    const auto& ring = input.ring();
    ReductionCertificate cert{input, {}, {}, input, {}, 0};

    bool all_zero = true;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            if (!input.at(i, j).is_zero()) all_zero = false;
    if (all_zero) return cert; // diag(0, 0), identity transforms

    // Left column -> (d, 0)^T by a transposed row reduction.
    Matrix l = hooks.column_reducer(input.at(0, 0), input.at(1, 0)).transpose();
    Matrix tri = l * input;
    if (!tri.at(1, 0).is_zero()) fail(errc::internal_error, "triangularization failed");

    const Element& ta = tri.at(0, 0);
    const Element& tb = tri.at(0, 1);
    const Element& tc = tri.at(1, 1);
    Element g = canonical_gcd({ta, tb, tc});
    auto reduced = unimodular_quotients({ta, tb, tc}, g);
    Matrix tri1(ring, 2, 2);
    tri1.at(0, 0) = reduced[0];
    tri1.at(0, 1) = reduced[1];
    tri1.at(1, 1) = reduced[2];

    auto pq = find_pq(tri1.at(0, 0), tri1.at(0, 1), tri1.at(1, 1), limits);
    Element w = pq.p * tri1.at(0, 1) + pq.q * tri1.at(1, 1);
    auto rs = bezout_certificate(pq.p * tri1.at(0, 0), w);
    if (!is_unit(rs.d)) fail(errc::internal_error, "find_pq postcondition failed");
    Element di = unit_inverse(rs.d);
    Element r = rs.p * di;
    Element s = rs.q * di;

    Matrix p_mat = hooks.complete_row(pq.p, pq.q);
    Matrix q_mat = hooks.complete_col(r, s);

    // On the content-free matrix the (0,0) entry is exactly 1.
    Matrix core = p_mat * tri1 * q_mat;
    if (!core.at(0, 0).is_one()) fail(errc::internal_error, "pivot must be 1 after completion");

    Matrix s_mat = Matrix::identity(ring, 2);
    s_mat.at(1, 0) = -core.at(1, 0);
    Matrix t_mat = Matrix::identity(ring, 2);
    t_mat.at(0, 1) = -core.at(0, 1);

    Element z = core.at(1, 1) - core.at(1, 0) * core.at(0, 1);
    Matrix result(ring, 2, 2);
    result.at(0, 0) = g;
    result.at(1, 1) = g * z;

    cert.left.push_back(std::move(l));
    cert.left.push_back(std::move(p_mat));
    cert.left.push_back(std::move(s_mat));
    cert.right.push_back(std::move(q_mat));
    cert.right.push_back(std::move(t_mat));

    if (hooks.canonicalize_e2) {
        auto norm = normalize_associate(result.at(1, 1));
        if (!norm.unit.is_one()) {
            Matrix scale = Matrix::identity(ring, 2);
            scale.at(1, 1) = norm.unit;
            cert.right.push_back(std::move(scale));
            result.at(1, 1) = norm.canonical;
        }
    }
    cert.result = std::move(result);
    for (const auto* list : {&cert.left, &cert.right})
        for (const auto& t : *list) cert.toeplitz_flags.push_back(is_toeplitz_shaped(t));

    std::string why;
    if (!verify_reduction_certificate(cert, &why))
        fail(errc::construction_failed, "2x2 reduction certificate invalid: " + why);
    return cert;
}

} // namespace detail

// General 2x2 Smith reduction: diag(e1, e2) with e1 | e2 and e1 the
// canonical gcd of the entries; transforms invertible but not required to
// be Toeplitz. Total on the four shipped rings.
inline ReductionCertificate smith_2x2(const Matrix& input, const SearchLimits& limits = {}) {
    detail::Diag2Hooks hooks;
    hooks.canonicalize_e2 = true;
    hooks.column_reducer = [](const Element& x, const Element& y) {
        return hermite_row(x, y).first;
    };
    hooks.complete_row = [](const Element& p, const Element& q) {
        auto c = bezout_certificate(p, q); // gcd is a unit here
        Element di = unit_inverse(c.d);
        Matrix m(p.ring(), 2, 2);
        m.at(0, 0) = p;
        m.at(0, 1) = q;
        m.at(1, 0) = -(c.q * di);
        m.at(1, 1) = c.p * di;
        return m;
    };
    hooks.complete_col = [](const Element& r, const Element& s) {
        auto c = bezout_certificate(r, s);
        Element di = unit_inverse(c.d);
        Matrix m(r.ring(), 2, 2);
        m.at(0, 0) = r;
        m.at(0, 1) = -(c.q * di);
        m.at(1, 0) = s;
        m.at(1, 1) = c.p * di;
        return m;
    };
    return detail::diag_2x2(input, hooks, limits);
}

namespace detail {

// One Euclidean-type reduction coefficient: q such that entry - q*pivot is
// "smaller" (exactly zero, smaller |.|/degree/lift, or unchanged when the
// caller should swap first).
inline Element reduction_quotient(const Element& pivot, const Element& entry) {
    const auto& r = pivot.ring();
    switch (r.kind()) {
        case ring_kind::integers:
            return Element(r, Int(entry.as_int() / pivot.as_int()));
        case ring_kind::modular:
            return Element(r, Int(entry.as_int() / pivot.as_int()));
        case ring_kind::poly_over_gf:
            return Element(r,
                           poly_divmod(entry.as_poly(), pivot.as_poly(), r.param()).first);
        case ring_kind::localized_integers: {
            auto q = exact_divide(entry, pivot);
            return q ? *q : Element::zero(r);
        }
    }
    fail(errc::internal_error, "bad ring kind");
}

} // namespace detail

// Full Smith normal form with every recorded transform an elementary
// matrix: row/column addition, swap in the unit-determinant [[0,1],[-1,0]]
// form, or unit scaling. Diagonal entries are canonical associates with
// e_i | e_{i+1}; thm11_cut marks how many 1x1 blocks split off before a
// 2xk (or kx2) tail remains.
inline ReductionCertificate smith_nxm(const Matrix& input, const SearchLimits& = {}) {
    const auto& ring = input.ring();
    const std::size_t n = input.rows(), m = input.cols();
    Matrix w = input;
    ReductionCertificate cert{input, {}, {}, input, {}, 0};

    auto row_op = [&](Matrix e) {
        w = e * w;
        cert.left.push_back(std::move(e));
    };
    auto col_op = [&](Matrix e) {
        w = w * e;
        cert.right.push_back(std::move(e));
    };
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        Matrix e = Matrix::identity(ring, n);
        e.at(i, i) = Element::zero(ring);
        e.at(j, j) = Element::zero(ring);
        e.at(i, j) = Element::one(ring);
        e.at(j, i) = -Element::one(ring);
        row_op(std::move(e));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        Matrix e = Matrix::identity(ring, m);
        e.at(i, i) = Element::zero(ring);
        e.at(j, j) = Element::zero(ring);
        e.at(j, i) = Element::one(ring);
        e.at(i, j) = -Element::one(ring);
        col_op(std::move(e));
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Element& coef) {
        if (coef.is_zero()) return;
        Matrix e = Matrix::identity(ring, n);
        e.at(dst, src) = coef;
        row_op(std::move(e));
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Element& coef) {
        if (coef.is_zero()) return;
        Matrix e = Matrix::identity(ring, m);
        e.at(src, dst) = coef;
        col_op(std::move(e));
    };

    const std::size_t rank_bound = std::min(n, m);
    long guard = 0;
    auto tick = [&]() {
        if (++guard > 100000) fail(errc::internal_error, "smith_nxm failed to converge");
    };

    for (std::size_t k = 0; k < rank_bound; ++k) {
        // Move a nonzero entry onto the pivot, if any remains.
        if (w.at(k, k).is_zero()) {
            bool found = false;
            for (std::size_t i = k; i < n && !found; ++i)
                for (std::size_t j = k; j < m && !found; ++j)
                    if (!w.at(i, j).is_zero()) {
                        if (i != k) swap_rows(k, i);
                        if (j != k) swap_cols(k, j);
                        found = true;
                    }
            if (!found) break; // all-zero tail
        }

        bool stable = false;
        while (!stable) {
            tick();
            stable = true;
            // Clear column k below the pivot.
            for (std::size_t i = k + 1; i < n; ++i) {
                while (!w.at(i, k).is_zero()) {
                    tick();
                    if (w.at(k, k).is_zero()) { swap_rows(k, i); continue; }
                    Element q = detail::reduction_quotient(w.at(k, k), w.at(i, k));
                    add_row(i, k, -q);
                    if (!w.at(i, k).is_zero()) swap_rows(k, i);
                    stable = false;
                }
            }
            // Clear row k right of the pivot.
            for (std::size_t j = k + 1; j < m; ++j) {
                while (!w.at(k, j).is_zero()) {
                    tick();
                    if (w.at(k, k).is_zero()) { swap_cols(k, j); continue; }
                    Element q = detail::reduction_quotient(w.at(k, k), w.at(k, j));
                    add_col(j, k, -q);
                    if (!w.at(k, j).is_zero()) swap_cols(k, j);
                    stable = false;
                }
            }
            if (!stable) continue;
            // Pivot must divide the remaining block; absorb one offender.
            for (std::size_t i = k + 1; i < n && stable; ++i)
                for (std::size_t j = k + 1; j < m && stable; ++j)
                    if (!exact_divide(w.at(i, j), w.at(k, k))) {
                        add_row(k, i, Element::one(ring));
                        stable = false;
                    }
        }

        auto norm = normalize_associate(w.at(k, k));
        if (!norm.unit.is_one()) {
            Matrix e = Matrix::identity(ring, n);
            e.at(k, k) = norm.unit;
            row_op(std::move(e));
        }
    }

    cert.result = w;
    cert.thm11_cut = rank_bound > 2 ? static_cast<long>(rank_bound - 2) : 0;
    for (const auto* list : {&cert.left, &cert.right})
        for (const auto& t : *list) cert.toeplitz_flags.push_back(is_toeplitz_shaped(t));

    std::string why;
    if (!verify_reduction_certificate(cert, &why))
        fail(errc::construction_failed, "smith_nxm certificate invalid: " + why);
    return cert;
}

} // namespace bezlab
