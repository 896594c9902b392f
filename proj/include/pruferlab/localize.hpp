#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "ideal.hpp"
#include "quotient.hpp"
#include "table_ring.hpp"

namespace pruferlab {

// The subring eR for an idempotent e, with identity e. This is where every
// localization of a finite ring lands: inverting S turns into cutting down
// to the factor where the elements of S act invertibly.
struct IdempotentFactor {
    RingPtr ring;
    std::vector<elem> carrier;     // elements of eR as elements of the base, sorted
    std::vector<elem> projection;  // x in base -> index of e*x in the factor
};

inline IdempotentFactor subring_at_idempotent(const RingPtr& R, elem e, RingSpec provenance) {
    const TableRing& T = *R;
    self_check(T.m(e, e) == e, "subring base point must be idempotent");
    std::vector<char> in(T.order, 0);
    std::vector<elem> carrier;
    for (elem x = 0; x < T.order; ++x) {
        elem v = T.m(e, x);
        if (!in[v]) {
            in[v] = 1;
            carrier.push_back(v);
        }
    }
    std::sort(carrier.begin(), carrier.end());
    std::vector<elem> pos(T.order, no_elem);
    for (std::size_t i = 0; i < carrier.size(); ++i) pos[carrier[i]] = static_cast<elem>(i);

    const int q = static_cast<int>(carrier.size());
    TableRing F;
    F.order = q;
    F.add.resize(std::size_t(q) * q);
    F.mul.resize(std::size_t(q) * q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            F.add[std::size_t(i) * q + j] = pos[T.a(carrier[i], carrier[j])];
            F.mul[std::size_t(i) * q + j] = pos[T.m(carrier[i], carrier[j])];
        }
    F.zero = pos[T.zero];
    F.one = pos[e];
    F.names.resize(q);
    for (int i = 0; i < q; ++i) F.names[i] = T.names[carrier[i]];
    F.provenance = std::move(provenance);

    IdempotentFactor out;
    out.ring = finalize_ring(std::move(F));
    out.carrier = std::move(carrier);
    out.projection.resize(T.order);
    for (elem x = 0; x < T.order; ++x) out.projection[x] = pos[T.m(e, x)];
    return out;
}

struct Localization {
    RingPtr ring;
    std::vector<elem> map;     // r -> index of r*e in the localization
    elem idempotent = 0;       // e = s^j in the base ring
    int exponent = 0;          // the j with e = s^j
    std::vector<elem> kernel;  // sorted
    bool degenerate = false;   // e == 0: everything collapsed
};

// S^-1 R for the multiplicative set generated by the given elements.
//
// Finiteness makes this a table computation: with s the product of the
// generators, the powers of s are eventually periodic and the cycle contains
// a unique idempotent e = s^j. Inverting s is exactly passing to eR, where e
// is the identity and e*s is a unit. The kernel {r : r*s^k = 0 for some k}
// equals {r : r*e = 0}; both descriptions are computed and compared.
inline Localization localize(const RingPtr& R, const std::vector<elem>& set_generators,
                             const RunConfig& cfg = {}) {
    (void)cfg;
    if (set_generators.empty())
        fail(errc::empty_multiplicative_set, "localization needs at least one generator");
    const TableRing& T = *R;
    elem s = T.one;
    for (elem g : set_generators) {
        if (g >= T.order) fail(errc::bad_spec, "set generator out of range");
        s = T.m(s, g);
    }

    // tail length mu and period lambda of the power sequence s, s^2, ...
    std::vector<elem> power_at{T.one};  // power_at[k] = s^k
    std::vector<int> first_seen(T.order, -1);
    first_seen[T.one] = 0;
    int mu = 0, lambda = 0;
    for (int k = 1;; ++k) {
        elem v = T.m(power_at.back(), s);
        if (first_seen[v] >= 0) {
            mu = first_seen[v];
            lambda = k - first_seen[v];
            break;
        }
        first_seen[v] = k;
        power_at.push_back(v);
    }
    // least j >= max(mu,1) divisible by lambda; then s^j is idempotent
    int j = std::max(mu, 1);
    j = ((j + lambda - 1) / lambda) * lambda;
    while (static_cast<int>(power_at.size()) <= j) power_at.push_back(T.m(power_at.back(), s));
    elem e = power_at[j];
    self_check(T.m(e, e) == e, "power cycle must yield an idempotent");

    RingSpec prov;
    prov.kind = RingSpec::Kind::localize;
    prov.children.push_back(T.provenance);
    for (elem g : set_generators) {
        bool plain = T.provenance.kind == RingSpec::Kind::zmod ||
                     T.provenance.kind == RingSpec::Kind::poly_quotient;
        prov.generators.push_back(plain ? T.names[g] : std::to_string(g));
    }
    IdempotentFactor factor = subring_at_idempotent(R, e, std::move(prov));

    Localization out;
    out.ring = factor.ring;
    out.map = std::move(factor.projection);
    out.idempotent = e;
    out.exponent = j;
    out.degenerate = (e == T.zero);

    // kernel two ways: annihilator of e, and s-power torsion
    while (static_cast<int>(power_at.size()) <= mu + lambda)
        power_at.push_back(T.m(power_at.back(), s));
    for (elem r = 0; r < T.order; ++r)
        if (T.m(r, e) == T.zero) out.kernel.push_back(r);
    std::vector<elem> torsion;
    for (elem r = 0; r < T.order; ++r) {
        bool killed = false;
        for (int k = 1; k <= mu + lambda && !killed; ++k)
            killed = (T.m(r, power_at[k]) == T.zero);
        if (killed) torsion.push_back(r);
    }
    self_check(out.kernel == torsion, "localization kernel must match s-power torsion");

    RingMap h{R, out.ring, out.map};
    validate_ring_map(h);
    self_check(map_surjective(h), "localization map must be onto");
    self_check(map_kernel(h) == out.kernel, "localization kernel mismatch");
    if (!out.degenerate)
        for (elem g : set_generators)
            self_check(out.ring->is_unit(out.map[g]),
                       "set generators must become units in the localization");
    return out;
}

struct LocalFactor {
    elem idempotent;               // primitive idempotent in the base ring
    RingPtr ring;                  // the factor eR
    std::vector<elem> projection;  // base -> factor
    std::vector<elem> carrier;     // factor -> base
};

struct LocalDecomposition {
    RingPtr source;
    std::vector<LocalFactor> factors;
};

// R as a product of local rings, via its primitive idempotents. Verified:
// the idempotents are orthogonal and sum to 1, each factor has exactly one
// maximal ideal, and the tuple of projections is a bijection.
inline LocalDecomposition local_decomposition(const RingPtr& R, const RunConfig& cfg = {}) {
    if (R->order == 1) fail(errc::zero_ring, "the zero ring has no local decomposition");
    const TableRing& T = *R;
    std::vector<elem> idem = idempotents(T);

    // e is primitive when the only idempotents below it (f = fe) are 0 and e
    std::vector<elem> primitive;
    for (elem e : idem) {
        if (e == T.zero) continue;
        bool prim = true;
        for (elem f : idem)
            if (f != T.zero && f != e && T.m(f, e) == f) {
                prim = false;
                break;
            }
        if (prim) primitive.push_back(e);
    }

    elem total = T.zero;
    for (elem e : primitive) total = T.a(total, e);
    self_check(total == T.one, "primitive idempotents must sum to 1");
    for (std::size_t i = 0; i < primitive.size(); ++i)
        for (std::size_t j = i + 1; j < primitive.size(); ++j)
            self_check(T.m(primitive[i], primitive[j]) == T.zero,
                       "primitive idempotents must be orthogonal");

    LocalDecomposition out;
    out.source = R;
    if (primitive.size() == 1) {
        // already local: the sole factor is the ring itself
        self_check(primitive[0] == T.one, "single primitive idempotent must be 1");
        LocalFactor f;
        f.idempotent = T.one;
        f.ring = R;
        f.projection.resize(T.order);
        f.carrier.resize(T.order);
        for (elem x = 0; x < T.order; ++x) f.projection[x] = f.carrier[x] = x;
        out.factors.push_back(std::move(f));
    } else {
        long product_order = 1;
        for (elem e : primitive) {
            bool plain = T.provenance.kind == RingSpec::Kind::zmod ||
                         T.provenance.kind == RingSpec::Kind::poly_quotient;
            RingSpec prov;
            prov.kind = RingSpec::Kind::localize;
            prov.children.push_back(T.provenance);
            prov.generators.push_back(plain ? T.names[e] : std::to_string(e));
            IdempotentFactor sub = subring_at_idempotent(R, e, std::move(prov));
            product_order *= sub.ring->order;
            LocalFactor f;
            f.idempotent = e;
            f.ring = sub.ring;
            f.projection = std::move(sub.projection);
            f.carrier = std::move(sub.carrier);
            out.factors.push_back(std::move(f));
        }
        self_check(product_order == T.order, "factor orders must multiply to the ring order");
        // tuple of projections is injective, hence bijective by cardinality
        std::vector<std::vector<elem>> tuples(T.order);
        for (elem x = 0; x < T.order; ++x)
            for (const auto& f : out.factors) tuples[x].push_back(f.projection[x]);
        std::sort(tuples.begin(), tuples.end());
        self_check(std::adjacent_find(tuples.begin(), tuples.end()) == tuples.end(),
                   "projection tuple must separate elements");
    }

    for (const auto& f : out.factors) {
        auto maximal = detail::maximal_ideals_impl(f.ring, all_ideals(f.ring, cfg));
        self_check(maximal.size() == 1, "decomposition factor must be local");
    }
    // one maximal ideal of R per local factor
    auto maximal_in_base = detail::maximal_ideals_impl(R, all_ideals(R, cfg));
    self_check(maximal_in_base.size() == out.factors.size(),
               "maximal ideal count must match the number of local factors");
    return out;
}

}  // namespace pruferlab
