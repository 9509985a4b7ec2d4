#pragma once

#include <random>
#include <vector>

#include "bezlab/bezlab.hpp"

namespace testutil {

using namespace bezlab;

// Deterministic random elements for property tests.
class ElementGen {
  public:
    explicit ElementGen(unsigned seed) : rng_(seed) {}

    Element sample(const RingDescriptor& ring) {
        switch (ring.kind()) {
            case ring_kind::integers:
                return Element::from_int(ring, small());
            case ring_kind::modular:
                return Element::from_int(ring, Int(rng_() % 1000));
            case ring_kind::poly_over_gf: {
                std::uniform_int_distribution<int> deg(0, 4);
                PolyCoeffs c(static_cast<std::size_t>(deg(rng_)) + 1, Int(0));
                for (auto& x : c) x = Int(rng_() % 97);
                return Element::from_poly(ring, std::move(c));
            }
            case ring_kind::localized_integers: {
                Int num = small();
                Int den = 1;
                do {
                    den = 1 + Int(rng_() % 40);
                } while (den % ring.param() == 0);
                return Element::from_fraction(ring, num, den);
            }
        }
        throw std::logic_error("bad ring kind");
    }

    Int small() {
        std::uniform_int_distribution<int> d(-50, 50);
        return Int(d(rng_));
    }

    std::mt19937& rng() { return rng_; }

  private:
    std::mt19937 rng_;
};

inline std::vector<RingDescriptor> all_rings() {
    return {RingDescriptor::integers(), RingDescriptor::modular(12),
            RingDescriptor::poly_over_gf(5), RingDescriptor::localized_at(5)};
}

inline Element E(const RingDescriptor& r, const std::string& lit) {
    return parse_element(r, lit);
}

inline Matrix mat2(const RingDescriptor& r, const std::string& a, const std::string& b,
                   const std::string& c, const std::string& d) {
    Matrix m(r, 2, 2);
    m.at(0, 0) = E(r, a);
    m.at(0, 1) = E(r, b);
    m.at(1, 0) = E(r, c);
    m.at(1, 1) = E(r, d);
    return m;
}

} // namespace testutil
