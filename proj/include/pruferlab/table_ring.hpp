#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "config.hpp"
#include "errors.hpp"
#include "ring_spec.hpp"

namespace pruferlab {

// Elements are indices into the tables. 12 bits suffice for the order cap.
using elem = std::uint16_t;
inline constexpr elem no_elem = 0xffff;

// A finite commutative unital ring given by explicit Cayley tables.
// Immutable once finalize_ring has validated it; all consumers hold it
// through RingPtr, and ring identity is handle identity.
struct TableRing {
    int order = 0;
    std::vector<elem> add;  // row-major order*order
    std::vector<elem> mul;
    elem zero = 0;
    elem one = 0;
    int characteristic = 1;  // additive order of one
    RingSpec provenance;
    std::vector<std::string> names;

    // Filled by finalize_ring.
    std::vector<elem> neg;        // additive inverse
    std::vector<elem> inv;        // multiplicative inverse, or no_elem
    std::vector<char> unit_mask;  // inv[x] != no_elem
    std::vector<char> zdiv_mask;  // x*y == 0 for some y != 0, plus 0 itself

    elem a(elem x, elem y) const { return add[std::size_t(x) * order + y]; }
    elem m(elem x, elem y) const { return mul[std::size_t(x) * order + y]; }
    elem sub(elem x, elem y) const { return a(x, neg[y]); }
    bool is_unit(elem x) const { return unit_mask[x] != 0; }
    bool is_zero_divisor(elem x) const { return zdiv_mask[x] != 0; }
    bool is_regular(elem x) const { return zdiv_mask[x] == 0; }

    elem pow(elem x, long k) const {
        elem r = one;
        for (long i = 0; i < k; ++i) r = m(r, x);
        return r;
    }

    const std::string& name(elem x) const { return names[x]; }
};

using RingPtr = std::shared_ptr<const TableRing>;

namespace detail {

// Greedy additive generating set: close over sums starting from {0}, adding
// the least element not yet reached. Closure is plain magma closure, so it is
// meaningful even before associativity has been verified. Also returns, for
// every element, a derivation as a sum of two earlier elements (or no_elem
// markers for 0 and the generators themselves); the validator's induction
// arguments ride on that derivation order.
struct AdditiveSpan {
    std::vector<elem> generators;
    std::vector<elem> discovery;  // all elements in discovery order
};

inline AdditiveSpan additive_span(const TableRing& R) {
    const int n = R.order;
    AdditiveSpan out;
    std::vector<char> seen(n, 0);
    std::vector<elem> closed;
    auto close_over = [&](elem g) {
        // pairwise sums to fixpoint; every new element joins the work list
        std::vector<elem> work{g};
        if (!seen[g]) {
            seen[g] = 1;
            closed.push_back(g);
            out.discovery.push_back(g);
        }
        while (!work.empty()) {
            elem x = work.back();
            work.pop_back();
            for (std::size_t i = 0; i < closed.size(); ++i) {
                elem s = R.a(x, closed[i]);
                if (!seen[s]) {
                    seen[s] = 1;
                    closed.push_back(s);
                    out.discovery.push_back(s);
                    work.push_back(s);
                }
            }
        }
    };
    close_over(R.zero);
    for (int g = 0; g < n; ++g) {
        if (seen[g]) continue;
        out.generators.push_back(static_cast<elem>(g));
        close_over(static_cast<elem>(g));
    }
    return out;
}

inline std::string el(const TableRing& R, elem x) {
    if (x < R.names.size() && !R.names[x].empty()) return R.names[x];
    return "#" + std::to_string(x);
}

[[noreturn]] inline void axiom_fail(const TableRing& R, const std::string& what) {
    fail(errc::axiom_violation, R.provenance.name() + ": " + what);
}

}  // namespace detail

// Structural validation of candidate tables.
//
// The full O(n^3) axiom sweep is hopeless at the order cap, so associativity
// and distributivity are checked against an additive generating set only:
//   - Light's test: x+(g+y) == (x+g)+y for generators g proves additive
//     associativity once the generators span the ring.
//   - a*(g+c) == a*g+a*c for generators g extends to all b by induction on
//     the closure derivation of b (with a*0 == 0 as the base case), and
//     right distributivity follows from commutativity of *.
//   - once * is bilinear, g*(h*k) == (g*h)*k on generator triples extends to
//     arbitrary triples by additivity in each slot.
// validate_ring_naive below is the literal sweep; tests pin the two against
// each other on small rings and on mutated tables.
inline void validate_ring(const TableRing& R) {
    const int n = R.order;
    if (n < 1) detail::axiom_fail(R, "order must be positive");
    const std::size_t nn = std::size_t(n) * n;
    if (R.add.size() != nn || R.mul.size() != nn)
        detail::axiom_fail(R, "table size does not match order");
    if (R.zero >= n || R.one >= n) detail::axiom_fail(R, "zero/one out of range");
    for (std::size_t i = 0; i < nn; ++i)
        if (R.add[i] >= n || R.mul[i] >= n)
            detail::axiom_fail(R, "table entry out of range");
    if (n > 1 && R.zero == R.one) detail::axiom_fail(R, "zero equals one in a nonzero ring");

    for (elem x = 0; x < n; ++x) {
        if (R.a(x, R.zero) != x)
            detail::axiom_fail(R, detail::el(R, x) + " + 0 != " + detail::el(R, x));
        if (R.m(x, R.one) != x)
            detail::axiom_fail(R, detail::el(R, x) + " * 1 != " + detail::el(R, x));
        if (R.m(x, R.zero) != R.zero)
            detail::axiom_fail(R, detail::el(R, x) + " * 0 != 0");
        bool has_neg = false;
        for (elem y = 0; y < n && !has_neg; ++y) has_neg = (R.a(x, y) == R.zero);
        if (!has_neg)
            detail::axiom_fail(R, "no additive inverse for " + detail::el(R, x));
        for (elem y = x; y < n; ++y) {
            if (R.a(x, y) != R.a(y, x))
                detail::axiom_fail(R, "addition not commutative at (" + detail::el(R, x) +
                                          ", " + detail::el(R, y) + ")");
            if (R.m(x, y) != R.m(y, x))
                detail::axiom_fail(R, "multiplication not commutative at (" +
                                          detail::el(R, x) + ", " + detail::el(R, y) + ")");
        }
    }

    const auto span = detail::additive_span(R);
    if (span.discovery.size() != std::size_t(n))
        detail::axiom_fail(R, "additive closure did not reach every element");

    for (elem g : span.generators) {
        for (elem x = 0; x < n; ++x) {
            const elem xg = R.a(x, g);
            for (elem y = 0; y < n; ++y)
                if (R.a(x, R.a(g, y)) != R.a(xg, y))
                    detail::axiom_fail(R, "addition not associative at (" + detail::el(R, x) +
                                              ", " + detail::el(R, g) + ", " + detail::el(R, y) +
                                              ")");
        }
        for (elem a = 0; a < n; ++a) {
            const elem ag = R.m(a, g);
            for (elem c = 0; c < n; ++c)
                if (R.m(a, R.a(g, c)) != R.a(ag, R.m(a, c)))
                    detail::axiom_fail(R, "distributivity fails at " + detail::el(R, a) + " * (" +
                                              detail::el(R, g) + " + " + detail::el(R, c) + ")");
        }
    }

    for (elem g : span.generators)
        for (elem h : span.generators)
            for (elem k : span.generators)
                if (R.m(g, R.m(h, k)) != R.m(R.m(g, h), k))
                    detail::axiom_fail(R, "multiplication not associative at (" +
                                              detail::el(R, g) + ", " + detail::el(R, h) + ", " +
                                              detail::el(R, k) + ")");
}

// Literal quantifier sweep over all triples. Only sensible for small orders;
// exists to cross-check validate_ring.
inline void validate_ring_naive(const TableRing& R) {
    const int n = R.order;
    if (n < 1) detail::axiom_fail(R, "order must be positive");
    const std::size_t nn = std::size_t(n) * n;
    if (R.add.size() != nn || R.mul.size() != nn)
        detail::axiom_fail(R, "table size does not match order");
    for (std::size_t i = 0; i < nn; ++i)
        if (R.add[i] >= n || R.mul[i] >= n)
            detail::axiom_fail(R, "table entry out of range");
    if (n > 1 && R.zero == R.one) detail::axiom_fail(R, "zero equals one in a nonzero ring");
    for (elem x = 0; x < n; ++x) {
        if (R.a(x, R.zero) != x) detail::axiom_fail(R, "additive identity fails");
        if (R.m(x, R.one) != x) detail::axiom_fail(R, "multiplicative identity fails");
        bool has_neg = false;
        for (elem y = 0; y < n; ++y) has_neg = has_neg || R.a(x, y) == R.zero;
        if (!has_neg) detail::axiom_fail(R, "missing additive inverse");
    }
    for (elem x = 0; x < n; ++x)
        for (elem y = 0; y < n; ++y) {
            if (R.a(x, y) != R.a(y, x)) detail::axiom_fail(R, "addition not commutative");
            if (R.m(x, y) != R.m(y, x)) detail::axiom_fail(R, "multiplication not commutative");
        }
    for (elem x = 0; x < n; ++x)
        for (elem y = 0; y < n; ++y)
            for (elem z = 0; z < n; ++z) {
                if (R.a(x, R.a(y, z)) != R.a(R.a(x, y), z))
                    detail::axiom_fail(R, "addition not associative");
                if (R.m(x, R.m(y, z)) != R.m(R.m(x, y), z))
                    detail::axiom_fail(R, "multiplication not associative");
                if (R.m(x, R.a(y, z)) != R.a(R.m(x, y), R.m(x, z)))
                    detail::axiom_fail(R, "distributivity fails");
            }
}

// Validate candidate tables and freeze them into an immutable ring handle,
// computing the derived element data every consumer needs.
inline RingPtr finalize_ring(TableRing R, bool naive_check = false) {
    if (naive_check)
        validate_ring_naive(R);
    else
        validate_ring(R);
    const int n = R.order;
    if (R.names.empty()) {
        R.names.resize(n);
        for (int i = 0; i < n; ++i) R.names[i] = std::to_string(i);
    }

    R.neg.assign(n, no_elem);
    R.inv.assign(n, no_elem);
    R.unit_mask.assign(n, 0);
    R.zdiv_mask.assign(n, 0);
    for (elem x = 0; x < n; ++x)
        for (elem y = 0; y < n; ++y) {
            if (R.a(x, y) == R.zero) R.neg[x] = y;
            if (R.m(x, y) == R.one) {
                R.inv[x] = y;
                R.unit_mask[x] = 1;
            }
            if (y != R.zero && x != R.zero && R.m(x, y) == R.zero) R.zdiv_mask[x] = 1;
        }
    // convention: 0 counts as a zero divisor in a nonzero ring
    if (n > 1) R.zdiv_mask[R.zero] = 1;

    R.characteristic = 1;
    elem acc = R.one;
    while (acc != R.zero) {
        acc = R.a(acc, R.one);
        ++R.characteristic;
        self_check(R.characteristic <= n, "characteristic exceeds ring order");
    }
    if (n == 1) R.characteristic = 1;

    return std::make_shared<const TableRing>(std::move(R));
}

// --- constructors ----------------------------------------------------------

inline void check_order_cap(long order, const RunConfig& cfg) {
    if (order > cfg.order_cap)
        fail(errc::order_limit_exceeded, "requested order " + std::to_string(order) +
                                             " exceeds cap " + std::to_string(cfg.order_cap));
}

inline RingPtr zmod(long n, const RunConfig& cfg = {}) {
    if (n < 1) fail(errc::bad_spec, "zmod modulus must be >= 1");
    check_order_cap(n, cfg);
    TableRing R;
    R.order = static_cast<int>(n);
    R.add.resize(std::size_t(n) * n);
    R.mul.resize(std::size_t(n) * n);
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y) {
            R.add[std::size_t(x) * n + y] = static_cast<elem>((x + y) % n);
            R.mul[std::size_t(x) * n + y] = static_cast<elem>((x * y) % n);
        }
    R.zero = 0;
    R.one = (n == 1) ? 0 : 1;
    R.provenance.kind = RingSpec::Kind::zmod;
    R.provenance.n = n;
    return finalize_ring(std::move(R));
}

// A homomorphism given by its full value table. Handles keep source and
// target alive for as long as the map is.
struct RingMap {
    RingPtr source;
    RingPtr target;
    std::vector<elem> image;  // image[x] in the target, for x in the source

    elem operator()(elem x) const { return image[x]; }
};

inline void validate_ring_map(const RingMap& h) {
    const TableRing& S = *h.source;
    const TableRing& T = *h.target;
    if (h.image.size() != std::size_t(S.order))
        fail(errc::ring_mismatch, "map table size does not match source order");
    for (elem v : h.image)
        if (v >= T.order) fail(errc::ring_mismatch, "map value out of target range");
    if (h.image[S.zero] != T.zero) fail(errc::axiom_violation, "map does not send 0 to 0");
    if (h.image[S.one] != T.one) fail(errc::axiom_violation, "map does not send 1 to 1");
    for (elem x = 0; x < S.order; ++x)
        for (elem y = x; y < S.order; ++y) {
            if (h.image[S.a(x, y)] != T.a(h.image[x], h.image[y]))
                fail(errc::axiom_violation, "map is not additive at (" + detail::el(S, x) +
                                                ", " + detail::el(S, y) + ")");
            if (h.image[S.m(x, y)] != T.m(h.image[x], h.image[y]))
                fail(errc::axiom_violation, "map is not multiplicative at (" + detail::el(S, x) +
                                                ", " + detail::el(S, y) + ")");
        }
}

inline std::vector<elem> map_kernel(const RingMap& h) {
    std::vector<elem> ker;
    for (elem x = 0; x < h.source->order; ++x)
        if (h.image[x] == h.target->zero) ker.push_back(x);
    return ker;
}

inline bool map_surjective(const RingMap& h) {
    std::vector<char> hit(h.target->order, 0);
    for (elem v : h.image) hit[v] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

inline bool map_injective(const RingMap& h) {
    std::vector<char> hit(h.target->order, 0);
    for (elem v : h.image) {
        if (hit[v]) return false;
        hit[v] = 1;
    }
    return true;
}

inline bool map_bijective(const RingMap& h) {
    return h.source->order == h.target->order && map_injective(h);
}

namespace detail {

// Mixed-radix index helpers shared by direct_product and its projections.
inline std::vector<long> product_strides(const std::vector<RingPtr>& factors) {
    std::vector<long> stride(factors.size(), 1);
    for (int i = static_cast<int>(factors.size()) - 2; i >= 0; --i)
        stride[i] = stride[i + 1] * factors[i + 1]->order;
    return stride;
}

}  // namespace detail

inline std::vector<elem> product_projection_table(const TableRing& product,
                                                  const std::vector<RingPtr>& factors,
                                                  std::size_t which) {
    const auto stride = detail::product_strides(factors);
    std::vector<elem> image(product.order);
    for (long x = 0; x < product.order; ++x)
        image[x] = static_cast<elem>((x / stride[which]) % factors[which]->order);
    return image;
}

// Componentwise product ring. Element x encodes the tuple with factor 0 as
// the most significant digit. Factor orders must exceed 1 so that tuple
// coordinates are honest ring components.
inline RingPtr direct_product(const std::vector<RingPtr>& factors, const RunConfig& cfg = {}) {
    if (factors.empty()) fail(errc::bad_spec, "product needs at least one factor");
    long order = 1;
    for (const auto& f : factors) {
        if (f->order < 2) fail(errc::bad_spec, "product factors must have order > 1");
        order *= f->order;
        check_order_cap(order, cfg);
    }
    const auto stride = detail::product_strides(factors);
    const std::size_t k = factors.size();

    TableRing R;
    R.order = static_cast<int>(order);
    R.add.resize(std::size_t(order) * order);
    R.mul.resize(std::size_t(order) * order);
    std::vector<long> xs(k), ys(k);
    for (long x = 0; x < order; ++x) {
        for (std::size_t i = 0; i < k; ++i) xs[i] = (x / stride[i]) % factors[i]->order;
        for (long y = 0; y < order; ++y) {
            for (std::size_t i = 0; i < k; ++i) ys[i] = (y / stride[i]) % factors[i]->order;
            long s = 0, p = 0;
            for (std::size_t i = 0; i < k; ++i) {
                s += stride[i] * factors[i]->a(static_cast<elem>(xs[i]), static_cast<elem>(ys[i]));
                p += stride[i] * factors[i]->m(static_cast<elem>(xs[i]), static_cast<elem>(ys[i]));
            }
            R.add[std::size_t(x) * order + y] = static_cast<elem>(s);
            R.mul[std::size_t(x) * order + y] = static_cast<elem>(p);
        }
    }
    long one = 0;
    for (std::size_t i = 0; i < k; ++i) one += stride[i] * factors[i]->one;
    R.zero = 0;
    R.one = static_cast<elem>(one);
    R.names.resize(order);
    for (long x = 0; x < order; ++x) {
        std::string nm = "(";
        for (std::size_t i = 0; i < k; ++i) {
            if (i) nm += ",";
            nm += factors[i]->names[(x / stride[i]) % factors[i]->order];
        }
        R.names[x] = nm + ")";
    }
    R.provenance.kind = RingSpec::Kind::product;
    for (const auto& f : factors) R.provenance.children.push_back(f->provenance);

    RingPtr out = finalize_ring(std::move(R));
    for (std::size_t i = 0; i < k; ++i) {
        RingMap pr{out, factors[i], product_projection_table(*out, factors, i)};
        validate_ring_map(pr);
        self_check(map_surjective(pr), "product projection must be onto");
    }
    return out;
}

inline RingMap product_projection(const RingPtr& product, const std::vector<RingPtr>& factors,
                                  std::size_t which) {
    RingMap pr{product, factors[which], product_projection_table(*product, factors, which)};
    validate_ring_map(pr);
    return pr;
}

// --- element sets -----------------------------------------------------------

inline std::vector<elem> units(const TableRing& R) {
    std::vector<elem> out;
    for (elem x = 0; x < R.order; ++x)
        if (R.is_unit(x)) out.push_back(x);
    return out;
}

inline std::vector<elem> zero_divisors(const TableRing& R) {
    std::vector<elem> out;
    for (elem x = 0; x < R.order; ++x)
        if (R.is_zero_divisor(x)) out.push_back(x);
    return out;
}

inline std::vector<elem> regular_elements(const TableRing& R) {
    std::vector<elem> out;
    for (elem x = 0; x < R.order; ++x)
        if (R.is_regular(x)) out.push_back(x);
    return out;
}

inline std::vector<elem> idempotents(const TableRing& R) {
    std::vector<elem> out;
    for (elem x = 0; x < R.order; ++x)
        if (R.m(x, x) == x) out.push_back(x);
    return out;
}

// Every element a unit or a zero divisor. True for every finite commutative
// ring; computed by quantifier sweep, not assumed.
inline bool is_total(const TableRing& R) {
    for (elem x = 0; x < R.order; ++x)
        if (!R.is_unit(x) && !R.is_zero_divisor(x)) return false;
    return true;
}

struct TotalQuotient {
    RingPtr ring;
    RingMap embedding;
};

// Tot(R) = S^-1 R at the regular elements. Finiteness forces every regular
// element to be a unit already, so the embedding is the identity; the sweep
// above is what justifies it, and we re-verify rather than assume.
inline TotalQuotient total_quotient_ring(const RingPtr& R) {
    if (R->order == 1) fail(errc::zero_ring, "total quotient ring of the zero ring");
    for (elem x = 0; x < R->order; ++x)
        self_check(R->is_unit(x) || R->is_zero_divisor(x),
                   "regular non-unit in a finite ring");
    RingMap id{R, R, {}};
    id.image.resize(R->order);
    std::iota(id.image.begin(), id.image.end(), 0);
    validate_ring_map(id);
    return {R, std::move(id)};
}

}  // namespace pruferlab
