#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pruferlab {

// Everything that can go wrong on a well-formed call, keyed for exit-code
// mapping and for tests that pin down *which* failure occurred.
enum class errc {
    axiom_violation,          // candidate tables fail a ring axiom
    order_limit_exceeded,     // construction would exceed the order cap
    not_an_ideal,             // subset is not closed as required
    empty_multiplicative_set,
    iso_cap_exceeded,         // ring too large for isomorphism search
    lattice_cap_exceeded,     // ideal lattice enumeration over budget
    pair_cap_exceeded,        // Groebner pair queue over budget
    infinite_quotient,        // presented quotient has an infinite basis
    syntax_error,             // polynomial text, with byte position
    unknown_variable,         // identifier not among declared variables
    ring_mismatch,            // operands live in different rings
    zero_ring,                // operation rejects the one-element ring
    budget_exceeded,          // decider sweep over its work budget
    hypothesis_violated,      // harness instance fails a check's precondition
    bad_spec,                 // malformed ring-spec document or argument
    io_error,                 // file could not be read or parsed as JSON
};

inline const char* errc_name(errc k) {
    switch (k) {
        case errc::axiom_violation: return "axiom_violation";
        case errc::order_limit_exceeded: return "order_limit_exceeded";
        case errc::not_an_ideal: return "not_an_ideal";
        case errc::empty_multiplicative_set: return "empty_multiplicative_set";
        case errc::iso_cap_exceeded: return "iso_cap_exceeded";
        case errc::lattice_cap_exceeded: return "lattice_cap_exceeded";
        case errc::pair_cap_exceeded: return "pair_cap_exceeded";
        case errc::infinite_quotient: return "infinite_quotient";
        case errc::syntax_error: return "syntax_error";
        case errc::unknown_variable: return "unknown_variable";
        case errc::ring_mismatch: return "ring_mismatch";
        case errc::zero_ring: return "zero_ring";
        case errc::budget_exceeded: return "budget_exceeded";
        case errc::hypothesis_violated: return "hypothesis_violated";
        case errc::bad_spec: return "bad_spec";
        case errc::io_error: return "io_error";
    }
    return "unknown";
}

class error : public std::runtime_error {
public:
    static constexpr std::size_t no_position = static_cast<std::size_t>(-1);

    error(errc kind, std::string message, std::size_t position = no_position)
        : std::runtime_error(std::string(errc_name(kind)) + ": " + message),
          kind_(kind),
          position_(position) {}

    errc kind() const noexcept { return kind_; }

    // Byte offset into the offending text; only syntax/unknown-variable
    // errors carry one.
    std::size_t position() const noexcept { return position_; }

    // CLI contract: 2 = input could not be parsed, 3 = parsed but could not
    // be built or decided. Verification *failures* are not errors; they exit 1.
    int exit_code() const noexcept {
        switch (kind_) {
            case errc::syntax_error:
            case errc::unknown_variable:
            case errc::bad_spec:
            case errc::io_error:
                return 2;
            default:
                return 3;
        }
    }

private:
    errc kind_;
    std::size_t position_;
};

[[noreturn]] inline void fail(errc kind, const std::string& message,
                              std::size_t position = error::no_position) {
    throw error(kind, message, position);
}

// Internal consistency assertions: these guard redundant computations that
// must agree (cross-checked kernels, certificate replays, lattice closure).
// A failure is a bug in this library, never bad user input.
inline void self_check(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("internal check failed: ") + what);
}

}  // namespace pruferlab
