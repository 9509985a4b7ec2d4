#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bezlab/toeplitz.hpp"

namespace bezlab {

// The finite-ring oracle works on raw int64 residues, independently of the
// Element machinery, so its sweeps can serve as ground truth for the
// constructive modules.
namespace lab {

using i64 = std::int64_t;

namespace detail {

inline i64 gcd_i64(i64 a, i64 b) {
    while (b != 0) { i64 t = a % b; a = b; b = t; }
    return a < 0 ? -a : a;
}

inline i64 require_small_modulus(const RingDescriptor& ring, i64 bound) {
    if (!ring.is_finite()) fail(errc::infinite_ring, "the lab sweeps need a finite ring Z/n");
    if (ring.param() > bound)
        fail(errc::bound_exceeded, "lab bound exceeded: n = " + ring.param().str() +
                                       " > " + std::to_string(bound));
    return static_cast<i64>(ring.param());
}

struct ModCtx {
    i64 n;
    std::vector<bool> unit; // unit[a] <=> gcd(a, n) = 1

    explicit ModCtx(i64 n_) : n(n_), unit(static_cast<std::size_t>(n_)) {
        for (i64 a = 0; a < n; ++a) unit[static_cast<std::size_t>(a)] = gcd_i64(a, n) == 1;
    }

    bool coprime_pair(i64 a, i64 b) const { return gcd_i64(gcd_i64(a, b), n) == 1; }

    bool has_sr1_witness(i64 a, i64 b) const {
        for (i64 y = 0; y < n; ++y)
            if (unit[static_cast<std::size_t>((a + b * y) % n)]) return true;
        return false;
    }

    bool has_ssr1_witness(i64 a, i64 b) const {
        for (i64 x = 0; x < n; ++x)
            if (unit[static_cast<std::size_t>((a * a + b * x) % n)]) return true;
        return false;
    }

    // Invertible Toeplitz T = [[x,y],[z,x]] with (a,b)T = (d,0) for some d.
    bool has_toeplitz_reduction(i64 a, i64 b) const {
        for (i64 x = 0; x < n; ++x)
            for (i64 y = 0; y < n; ++y) {
                if ((a * y + b * x) % n != 0) continue;
                for (i64 z = 0; z < n; ++z) {
                    i64 det = ((x * x - y * z) % n + n) % n;
                    if (unit[static_cast<std::size_t>(det)]) return true;
                }
            }
        return false;
    }

    bool has_neat_split(i64 a, i64 b, i64 c) const {
        for (i64 r = 0; r < n; ++r)
            for (i64 s = 0; s < n; ++s) {
                if ((r * s) % n != a) continue;
                if (gcd_i64(gcd_i64(r, b), n) != 1) continue;
                if (gcd_i64(gcd_i64(s, c), n) != 1) continue;
                if (gcd_i64(gcd_i64(r, s), n) != 1) continue;
                return true;
            }
        return false;
    }

    // neat[a] for every residue; neat[0] = false by definition.
    std::vector<bool> neat_table() const {
        std::vector<bool> neat(static_cast<std::size_t>(n), false);
        for (i64 a = 1; a < n; ++a) {
            bool ok = true;
            for (i64 b = 0; b < n && ok; ++b)
                for (i64 c = 0; c < n && ok; ++c) {
                    if (!coprime_pair(b, c)) continue;
                    if (!has_neat_split(a, b, c)) ok = false;
                }
            neat[static_cast<std::size_t>(a)] = ok;
        }
        return neat;
    }
};

} // namespace detail

// Exhaustively established ring-level flags, with the lexicographically
// first counterexample per failed flag.
struct RingClassification {
    RingDescriptor ring;
    bool sr1 = false;
    bool ssr1 = false;
    bool toeplitz_ring = false;
    bool neat_range_1 = false;
    std::vector<std::string> counterexamples;
};

inline RingClassification classify(const RingDescriptor& ring, i64 bound = 30) {
    i64 n = detail::require_small_modulus(ring, bound);
    detail::ModCtx ctx(n);
    RingClassification out{ring, true, true, true, true, {}};

    for (i64 a = 0; a < n && out.sr1; ++a)
        for (i64 b = 0; b < n && out.sr1; ++b) {
            if (!ctx.coprime_pair(a, b)) continue;
            if (!ctx.has_sr1_witness(a, b)) {
                out.sr1 = false;
                out.counterexamples.push_back("sr1: (" + std::to_string(a) + ", " +
                                              std::to_string(b) + ") has no witness");
            }
        }
    for (i64 a = 0; a < n && out.ssr1; ++a)
        for (i64 b = 0; b < n && out.ssr1; ++b) {
            if (!ctx.coprime_pair(a, b)) continue;
            if (!ctx.has_ssr1_witness(a, b)) {
                out.ssr1 = false;
                out.counterexamples.push_back("ssr1: (" + std::to_string(a) + ", " +
                                              std::to_string(b) + ") has no witness");
            }
        }
    for (i64 a = 0; a < n && out.toeplitz_ring; ++a)
        for (i64 b = 0; b < n && out.toeplitz_ring; ++b) {
            if (!ctx.has_toeplitz_reduction(a, b)) {
                out.toeplitz_ring = false;
                out.counterexamples.push_back("toeplitz: (" + std::to_string(a) + ", " +
                                              std::to_string(b) + ") has no reduction");
            }
        }
    auto neat = ctx.neat_table();
    for (i64 a = 0; a < n && out.neat_range_1; ++a)
        for (i64 b = 0; b < n && out.neat_range_1; ++b) {
            if (!ctx.coprime_pair(a, b)) continue;
            bool found = false;
            for (i64 t = 0; t < n && !found; ++t)
                if (neat[static_cast<std::size_t>((a + b * t) % n)]) found = true;
            if (!found) {
                out.neat_range_1 = false;
                out.counterexamples.push_back("neat_range_1: (" + std::to_string(a) + ", " +
                                              std::to_string(b) + ") has no neat shift");
            }
        }
    return out;
}

enum class theorem_id { thm9_2, prop5, prop6, thm8, thm13, thm10 };

inline theorem_id parse_theorem(const std::string& s) {
    if (s == "THM9_2") return theorem_id::thm9_2;
    if (s == "PROP5") return theorem_id::prop5;
    if (s == "PROP6") return theorem_id::prop6;
    if (s == "THM8") return theorem_id::thm8;
    if (s == "THM13") return theorem_id::thm13;
    if (s == "THM10") return theorem_id::thm10;
    fail(errc::parse_error, "unknown theorem id '" + s +
                                "' (expected THM9_2, PROP5, PROP6, THM8, THM13 or THM10)");
}

inline std::string theorem_name(theorem_id t) {
    switch (t) {
        case theorem_id::thm9_2: return "THM9_2";
        case theorem_id::prop5: return "PROP5";
        case theorem_id::prop6: return "PROP6";
        case theorem_id::thm8: return "THM8";
        case theorem_id::thm13: return "THM13";
        case theorem_id::thm10: return "THM10";
    }
    fail(errc::internal_error, "bad theorem id");
}

struct TheoremReport {
    RingDescriptor ring;
    std::string theorem;
    long instances_checked = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

namespace detail {

inline TheoremReport verify_thm9_2(const RingDescriptor& ring, const ModCtx& ctx) {
    TheoremReport rep{ring, "THM9_2", 0, {}};
    bool ssr1_all = true, toeplitz_all = true;
    std::string ssr1_bad, toeplitz_bad;
    for (i64 a = 0; a < ctx.n; ++a)
        for (i64 b = 0; b < ctx.n; ++b) {
            if (ctx.coprime_pair(a, b)) {
                ++rep.instances_checked;
                if (!ctx.has_ssr1_witness(a, b) && ssr1_all) {
                    ssr1_all = false;
                    ssr1_bad = "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
                }
            }
            ++rep.instances_checked;
            if (!ctx.has_toeplitz_reduction(a, b) && toeplitz_all) {
                toeplitz_all = false;
                toeplitz_bad = "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
            }
        }
    if (ssr1_all != toeplitz_all)
        rep.failures.push_back("ssr1 = " + std::string(ssr1_all ? "true" : "false") +
                               " but toeplitz_ring = " +
                               std::string(toeplitz_all ? "true" : "false") +
                               (ssr1_all ? " at " + toeplitz_bad : " at " + ssr1_bad));
    return rep;
}

inline TheoremReport verify_prop5(const RingDescriptor& ring, const ModCtx& ctx) {
    TheoremReport rep{ring, "PROP5", 0, {}};
    const i64 n = ctx.n;
    for (i64 a = 0; a < n; ++a)
        for (i64 b = 0; b < n; ++b)
            for (i64 c = 0; c < n; ++c) {
                if (gcd_i64(gcd_i64(gcd_i64(a, b), c), n) != 1) continue;
                ++rep.instances_checked;
                bool cond1 = false;
                for (i64 p = 0; p < n && !cond1; ++p)
                    for (i64 q = 0; q < n && !cond1; ++q)
                        if (ctx.coprime_pair((p * a) % n, (p * b + q * c) % n)) cond1 = true;
                bool cond2 = false;
                for (i64 l = 0; l < n && !cond2; ++l)
                    for (i64 u = 0; u < n && !cond2; ++u)
                        for (i64 v = 0; v < n && !cond2; ++v)
                            if ((b + l * c) % n == (v * u) % n && ctx.coprime_pair(u, a) &&
                                ctx.coprime_pair(v, c))
                                cond2 = true;
                if (cond1 != cond2)
                    rep.failures.push_back(
                        "(" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                        std::to_string(c) + "): condition1=" + (cond1 ? "true" : "false") +
                        " condition2=" + (cond2 ? "true" : "false"));
            }
    return rep;
}

inline TheoremReport verify_prop6(const RingDescriptor& ring, const ModCtx& ctx) {
    TheoremReport rep{ring, "PROP6", 0, {}};
    const i64 n = ctx.n;
    for (i64 x = 0; x < n; ++x)
        for (i64 y = 0; y < n; ++y) {
            if (!ctx.coprime_pair(x, y)) continue;
            for (i64 z = 0; z < n; ++z)
                for (i64 t = 0; t < n; ++t) {
                    if (!ctx.coprime_pair(z, t)) continue;
                    ++rep.instances_checked;
                    bool found = false;
                    for (i64 l = 0; l < n && !found; ++l)
                        for (i64 u = 0; u < n && !found; ++u)
                            for (i64 v = 0; v < n && !found; ++v)
                                if ((x + l * y) % n == (v * u) % n && ctx.coprime_pair(v, z) &&
                                    ctx.coprime_pair(u, t))
                                    found = true;
                    if (!found)
                        rep.failures.push_back("(" + std::to_string(x) + ", " + std::to_string(y) +
                                               ", " + std::to_string(z) + ", " + std::to_string(t) +
                                               "): no (lambda, u, v)");
                }
        }
    return rep;
}

inline TheoremReport verify_thm8(const RingDescriptor& ring, const ModCtx& ctx) {
    TheoremReport rep{ring, "THM8", 0, {}};
    auto neat = ctx.neat_table();
    for (i64 c = 1; c < ctx.n; ++c) {
        if (!neat[static_cast<std::size_t>(c)]) continue;
        ++rep.instances_checked;
        i64 m = gcd_i64(c, ctx.n); // (Z/n)/(c) = Z/m
        if (m == 1) continue;      // zero quotient, trivially clean
        for (i64 x = 0; x < m; ++x) {
            bool split = false;
            for (i64 e = 0; e < m && !split; ++e)
                if ((e * e) % m == e && gcd_i64(x - e, m) == 1) split = true;
            if (!split)
                rep.failures.push_back("c=" + std::to_string(c) + ": residue " +
                                       std::to_string(x) + " mod " + std::to_string(m) +
                                       " is not idempotent + unit");
        }
    }
    return rep;
}

inline TheoremReport verify_thm10(const RingDescriptor& ring, const ModCtx& ctx) {
    TheoremReport rep{ring, "THM10", 0, {}};
    for (i64 a = 0; a < ctx.n; ++a)
        for (i64 b = 0; b < ctx.n; ++b) {
            if (!ctx.coprime_pair(a, b)) continue;
            ++rep.instances_checked;
            bool found = false;
            for (i64 x = 0; x < ctx.n && !found; ++x) {
                i64 det = ((a * a - b * x) % ctx.n + ctx.n) % ctx.n;
                if (ctx.unit[static_cast<std::size_t>(det)]) found = true;
            }
            if (!found)
                rep.failures.push_back("(" + std::to_string(a) + ", " + std::to_string(b) +
                                       "): no completion [[a,b],[x,a]]");
        }
    return rep;
}

inline TheoremReport verify_thm13(const RingDescriptor& ring, const ModCtx& ctx) {
    TheoremReport rep{ring, "THM13", 0, {}};
    for (i64 a = 0; a < ctx.n; ++a)
        for (i64 b = 0; b < ctx.n; ++b)
            for (i64 c = 0; c < ctx.n; ++c)
                for (i64 d = 0; d < ctx.n; ++d) {
                    ++rep.instances_checked;
                    Matrix m(ring, 2, 2);
                    m.at(0, 0) = Element::from_int(ring, a);
                    m.at(0, 1) = Element::from_int(ring, b);
                    m.at(1, 0) = Element::from_int(ring, c);
                    m.at(1, 1) = Element::from_int(ring, d);
                    std::string why;
                    try {
                        auto cert = toeplitz_diag_2x2(m);
                        if (!verify_reduction_certificate(cert, &why))
                            rep.failures.push_back("[[" + std::to_string(a) + "," +
                                                   std::to_string(b) + "],[" + std::to_string(c) +
                                                   "," + std::to_string(d) + "]]: " + why);
                    } catch (const ring_error& e) {
                        rep.failures.push_back("[[" + std::to_string(a) + "," + std::to_string(b) +
                                               "],[" + std::to_string(c) + "," + std::to_string(d) +
                                               "]]: " + std::string(e.what()));
                    }
                }
    return rep;
}

} // namespace detail

inline TheoremReport verify_theorem(const RingDescriptor& ring, theorem_id theorem,
                                    i64 bound = 30) {
    i64 n = detail::require_small_modulus(ring, bound);
    detail::ModCtx ctx(n);
    switch (theorem) {
        case theorem_id::thm9_2: return detail::verify_thm9_2(ring, ctx);
        case theorem_id::prop5: return detail::verify_prop5(ring, ctx);
        case theorem_id::prop6: return detail::verify_prop6(ring, ctx);
        case theorem_id::thm8: return detail::verify_thm8(ring, ctx);
        case theorem_id::thm10: return detail::verify_thm10(ring, ctx);
        case theorem_id::thm13: return detail::verify_thm13(ring, ctx);
    }
    fail(errc::internal_error, "bad theorem id");
}

} // namespace lab
} // namespace bezlab
