#pragma once

#include <optional>
#include <vector>

#include "bezlab/ring_ops.hpp"

namespace bezlab {

// Bounds for witness searches in infinite rings. Finite rings are always
// scanned exhaustively and ignore these.
struct SearchLimits {
    Int int_bound = 10000;       // |value| cap for Z and Z_(p) numerator scans
    long poly_degree_bound = 6;  // degree cap for GF(p)[x] scans
    long max_candidates = 200000;
};

// Enumerates ring elements in the canonical scan order:
//   Z/n:      0, 1, ..., n-1                     (exhaustive)
//   Z, Z_(p): 0, 1, -1, 2, -2, ...               (up to int_bound)
//   GF(p)[x]: 0, then by degree, then lexicographically by coefficients
//             from the leading one down           (up to poly_degree_bound)
class ElementScan {
  public:
    ElementScan(RingDescriptor ring, SearchLimits limits = {})
        : ring_(std::move(ring)), limits_(std::move(limits)) {}

    bool exhaustive() const { return ring_.is_finite(); }

    std::optional<Element> next() {
        if (++count_ > limits_.max_candidates && !exhaustive()) return std::nullopt;
        switch (ring_.kind()) {
            case ring_kind::modular: {
                if (int_state_ >= ring_.param()) return std::nullopt;
                return Element(ring_, Int(int_state_++));
            }
            case ring_kind::integers:
            case ring_kind::localized_integers: {
                if (int_state_ > 2 * limits_.int_bound) return std::nullopt;
                Int v = signed_value(int_state_++);
                if (ring_.kind() == ring_kind::integers) return Element(ring_, std::move(v));
                return Element(ring_, Rat(std::move(v)));
            }
            case ring_kind::poly_over_gf:
                return next_poly();
        }
        return std::nullopt;
    }

    // Index of an element in this scan order (integers-like rings only).
    static Int int_scan_index(const Int& v) {
        if (v == 0) return 0;
        if (v > 0) return 2 * v - 1;
        return -2 * v;
    }

  private:
    static Int signed_value(const Int& index) {
        if (index == 0) return 0;
        if (index % 2 == 1) return (index + 1) / 2;
        return -index / 2;
    }

    std::optional<Element> next_poly() {
        const Int& p = ring_.param();
        if (poly_degree_ == -1) {
            poly_degree_ = 0;
            return Element::zero(ring_);
        }
        while (true) {
            if (poly_state_.empty()) {
                if (poly_degree_ > limits_.poly_degree_bound) return std::nullopt;
                poly_state_.assign(static_cast<std::size_t>(poly_degree_) + 1, Int(0));
                poly_state_.back() = 1;
                return Element(ring_, PolyCoeffs(poly_state_));
            }
            // Odometer: low coefficients tick fastest, leading stays nonzero.
            bool rolled_over = false;
            for (std::size_t i = 0; i < poly_state_.size(); ++i) {
                if (++poly_state_[i] < p) break;
                if (i + 1 == poly_state_.size()) { rolled_over = true; break; }
                poly_state_[i] = 0;
            }
            if (rolled_over) {
                poly_state_.clear();
                ++poly_degree_;
                continue;
            }
            return Element(ring_, PolyCoeffs(poly_state_));
        }
    }

    RingDescriptor ring_;
    SearchLimits limits_;
    long count_ = 0;
    Int int_state_ = 0;
    long poly_degree_ = -1;
    PolyCoeffs poly_state_;
};

// All elements of a finite ring, in canonical ascending order.
inline std::vector<Element> enumerate_elements(const RingDescriptor& ring) {
    if (!ring.is_finite())
        fail(errc::infinite_ring, ring.to_string() + " is not enumerable");
    ElementScan scan(ring);
    std::vector<Element> out;
    while (auto e = scan.next()) out.push_back(std::move(*e));
    return out;
}

// First `cap` elements of the scan, as a vector.
inline std::vector<Element> scan_prefix(const RingDescriptor& ring, long cap,
                                        const SearchLimits& limits = {}) {
    ElementScan scan(ring, limits);
    std::vector<Element> out;
    for (long i = 0; i < cap; ++i) {
        auto e = scan.next();
        if (!e) break;
        out.push_back(std::move(*e));
    }
    return out;
}

} // namespace bezlab
