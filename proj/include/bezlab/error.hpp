#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bezlab {

// Stable error identifiers. The CLI maps these 1:1 onto its "error_code"
// field, so renaming one is a wire-format change.
enum class errc {
    parse_error,
    not_prime,
    ring_mismatch,
    not_a_unit,
    no_solution,
    infinite_ring,
    not_coprime,
    witness_not_found,
    not_invertible,
    not_neat,
    unsupported_ring,
    precondition_violated,
    construction_failed,
    bound_exceeded,
    not_supported,
    internal_error,
};

inline std::string_view to_string(errc c) {
    switch (c) {
        case errc::parse_error: return "ParseError";
        case errc::not_prime: return "NotPrime";
        case errc::ring_mismatch: return "RingMismatch";
        case errc::not_a_unit: return "NotAUnit";
        case errc::no_solution: return "NoSolution";
        case errc::infinite_ring: return "InfiniteRing";
        case errc::not_coprime: return "NotCoprime";
        case errc::witness_not_found: return "WitnessNotFound";
        case errc::not_invertible: return "NotInvertible";
        case errc::not_neat: return "NotNeat";
        case errc::unsupported_ring: return "UnsupportedRing";
        case errc::precondition_violated: return "PreconditionViolated";
        case errc::construction_failed: return "ConstructionFailed";
        case errc::bound_exceeded: return "BoundExceeded";
        case errc::not_supported: return "NotSupported";
        case errc::internal_error: return "InternalError";
    }
    return "InternalError";
}

class ring_error : public std::runtime_error {
  public:
    ring_error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }
    std::string_view code_name() const noexcept { return to_string(code_); }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw ring_error(code, what);
}

} // namespace bezlab
