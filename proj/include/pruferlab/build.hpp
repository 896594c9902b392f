#pragma once

// Turns a RingSpec tree into a concrete table ring by dispatching to the
// constructors, including the interpretation of element literals that name
// ideal or multiplicative-set generators inside a spec.

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "groebner.hpp"
#include "ideal.hpp"
#include "localize.hpp"
#include "multipoly.hpp"
#include "quotient.hpp"
#include "ring_spec.hpp"
#include "table_ring.hpp"
#include "trivial_extension.hpp"

namespace pruferlab {

namespace detail {

struct BuiltRing {
    RingPtr ring;
    std::optional<PresentedRing> presented;  // set for poly_quotient nodes
};

inline bool is_integer_literal(const std::string& text) {
    if (text.empty()) return false;
    std::size_t i = (text[0] == '-') ? 1 : 0;
    if (i == text.size()) return false;
    for (; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    return true;
}

// Element literals are read against the ring they live in. An integer
// names a residue when the ring is zmod(n) and a raw element index
// otherwise; any other text is a polynomial expression, which only a
// presented quotient can interpret.
inline elem parse_element(const BuiltRing& base, const RingSpec& base_spec,
                          const std::string& text) {
    const RingPtr& R = base.ring;
    if (is_integer_literal(text)) {
        long v = 0;
        try {
            v = std::stol(text);
        } catch (const std::exception&) {
            fail(errc::bad_spec, "element literal out of range: " + text);
        }
        if (base_spec.kind == RingSpec::Kind::zmod) {
            long n = R->order;
            return static_cast<elem>(((v % n) + n) % n);
        }
        if (v < 0 || v >= static_cast<long>(R->order))
            fail(errc::bad_spec, "element index " + text + " out of range for " +
                                     base_spec.name() + " of order " +
                                     std::to_string(R->order));
        return static_cast<elem>(v);
    }
    if (!base.presented)
        fail(errc::bad_spec,
             "element literal \"" + text + "\" needs a presented polynomial ring");
    MultiPoly f = parse_poly(text, base.presented->ring->characteristic,
                             base_spec.vars);
    return element_of_poly(*base.presented, f);
}

inline std::vector<elem> parse_elements(const BuiltRing& base, const RingSpec& base_spec,
                                        const std::vector<std::string>& texts) {
    std::vector<elem> out;
    out.reserve(texts.size());
    for (const std::string& t : texts) out.push_back(parse_element(base, base_spec, t));
    return out;
}

inline BuiltRing build_impl(const RingSpec& spec, const RunConfig& cfg) {
    switch (spec.kind) {
        case RingSpec::Kind::zmod:
            return {zmod(spec.n, cfg), std::nullopt};

        case RingSpec::Kind::poly_quotient: {
            PresentedRing P = presented_poly_quotient(spec.p, spec.vars, spec.relations, cfg);
            RingPtr R = P.ring;
            return {std::move(R), std::move(P)};
        }

        case RingSpec::Kind::product: {
            if (spec.children.empty())
                fail(errc::bad_spec, "a product spec needs at least one factor");
            std::vector<RingPtr> factors;
            factors.reserve(spec.children.size());
            for (const RingSpec& child : spec.children)
                factors.push_back(build_impl(child, cfg).ring);
            return {direct_product(factors, cfg), std::nullopt};
        }

        case RingSpec::Kind::quotient: {
            BuiltRing base = build_impl(spec.base(), cfg);
            if (spec.generators.empty())
                fail(errc::bad_spec, "a quotient spec needs ideal generators");
            Ideal I = ideal_generated(base.ring,
                                      parse_elements(base, spec.base(), spec.generators));
            return {quotient(base.ring, I, cfg).ring, std::nullopt};
        }

        case RingSpec::Kind::localize: {
            BuiltRing base = build_impl(spec.base(), cfg);
            Localization L = localize(base.ring,
                                      parse_elements(base, spec.base(), spec.generators), cfg);
            return {std::move(L.ring), std::nullopt};
        }

        case RingSpec::Kind::trivial_extension: {
            BuiltRing base = build_impl(spec.base(), cfg);
            Ideal I = ideal_generated(base.ring,
                                      parse_elements(base, spec.base(), spec.generators));
            return {trivial_extension(base.ring, I, spec.rank, cfg), std::nullopt};
        }
    }
    fail(errc::bad_spec, "unknown spec kind");
}

}  // namespace detail

inline RingPtr build(const RingSpec& spec, const RunConfig& cfg = {}) {
    return detail::build_impl(spec, cfg).ring;
}

}  // namespace pruferlab
