#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "table_ring.hpp"

namespace pruferlab {

// An ideal as an explicit subset: sorted element list plus the generators it
// was built from. elements is always the closure of generators.
struct Ideal {
    RingPtr ring;
    std::vector<elem> elements;    // sorted ascending
    std::vector<elem> generators;  // sorted ascending

    bool contains(elem x) const {
        return std::binary_search(elements.begin(), elements.end(), x);
    }
    std::size_t size() const { return elements.size(); }
    bool is_zero() const { return elements.size() == 1; }
    bool is_unit_ideal() const { return elements.size() == std::size_t(ring->order); }

    bool operator==(const Ideal& other) const {
        return ring == other.ring && elements == other.elements;
    }
};

namespace detail {

inline void require_same_ring(const Ideal& I, const Ideal& J) {
    if (I.ring != J.ring) fail(errc::ring_mismatch, "ideals live in different rings");
}

// Smallest generating subsequence of a sorted element set, greedy by index.
inline std::vector<elem> greedy_generators(const TableRing& R, const std::vector<elem>& set);

}  // namespace detail

inline bool is_ideal_set(const TableRing& R, const std::vector<elem>& set) {
    if (set.empty() || !std::binary_search(set.begin(), set.end(), R.zero)) return false;
    for (elem x : set) {
        if (x >= R.order) return false;
        for (elem y : set)
            if (!std::binary_search(set.begin(), set.end(), R.a(x, y))) return false;
        for (elem r = 0; r < R.order; ++r)
            if (!std::binary_search(set.begin(), set.end(), R.m(r, x))) return false;
    }
    return true;
}

// Closure of a generator list under addition and ambient multiplication.
inline Ideal ideal_generated(const RingPtr& R, std::vector<elem> gens) {
    const TableRing& T = *R;
    for (elem g : gens)
        if (g >= T.order) fail(errc::bad_spec, "ideal generator out of range");
    std::vector<char> in(T.order, 0);
    std::vector<elem> members{T.zero};
    in[T.zero] = 1;
    std::vector<elem> work;
    for (elem g : gens)
        if (!in[g]) {
            in[g] = 1;
            members.push_back(g);
            work.push_back(g);
        }
    while (!work.empty()) {
        elem x = work.back();
        work.pop_back();
        // R*x keeps the set multiplicatively absorbing ...
        for (elem r = 0; r < T.order; ++r) {
            elem v = T.m(r, x);
            if (!in[v]) {
                in[v] = 1;
                members.push_back(v);
                work.push_back(v);
            }
        }
        // ... and pairwise sums keep it an additive subgroup.
        for (std::size_t i = 0; i < members.size(); ++i) {
            elem v = T.a(x, members[i]);
            if (!in[v]) {
                in[v] = 1;
                members.push_back(v);
                work.push_back(v);
            }
        }
    }
    std::sort(members.begin(), members.end());
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return Ideal{R, std::move(members), std::move(gens)};
}

inline Ideal principal_ideal(const RingPtr& R, elem a) {
    if (a >= R->order) fail(errc::bad_spec, "element out of range");
    // (a) = Ra, no fixpoint needed: ra + sa = (r+s)a and r(sa) = (rs)a, so
    // the image of r -> ra is already closed under + and ambient *. The
    // closure self-check must stay out of this loop: principal ideals are
    // taken per element, and a quadratic check here turns lattice and
    // content computations cubic in the ring order.
    std::vector<char> in(R->order, 0);
    std::vector<elem> members;
    for (elem r = 0; r < R->order; ++r) {
        elem v = R->m(r, a);
        if (!in[v]) {
            in[v] = 1;
            members.push_back(v);
        }
    }
    std::sort(members.begin(), members.end());
    self_check(std::binary_search(members.begin(), members.end(), R->zero) &&
                   std::binary_search(members.begin(), members.end(), a),
               "Ra must contain 0 and a");
    return Ideal{R, std::move(members), {a}};
}

namespace detail {

inline std::vector<elem> greedy_generators(const TableRing& R, const std::vector<elem>& set) {
    std::vector<elem> gens;
    std::vector<char> covered(R.order, 0);
    covered[R.zero] = 1;
    std::size_t covered_count = 1;
    for (elem x : set) {
        if (covered[x]) continue;
        gens.push_back(x);
        // fold (x) plus sums with what is covered so far
        std::vector<elem> work{x};
        covered[x] = 1;
        ++covered_count;
        while (!work.empty()) {
            elem y = work.back();
            work.pop_back();
            for (elem r = 0; r < R.order; ++r) {
                elem v = R.m(r, y);
                if (!covered[v]) {
                    covered[v] = 1;
                    ++covered_count;
                    work.push_back(v);
                }
            }
            for (elem z : set) {
                if (!covered[z]) continue;
                elem v = R.a(y, z);
                if (!covered[v]) {
                    covered[v] = 1;
                    ++covered_count;
                    work.push_back(v);
                }
            }
        }
    }
    (void)covered_count;
    return gens;
}

}  // namespace detail

// Wrap an element set that is already an ideal, deriving generators for it.
inline Ideal ideal_from_set(const RingPtr& R, std::vector<elem> set) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (!is_ideal_set(*R, set))
        fail(errc::not_an_ideal, "subset is not an ideal of " + R->provenance.name());
    auto gens = detail::greedy_generators(*R, set);
    Ideal out{R, std::move(set), std::move(gens)};
    self_check(ideal_generated(R, out.generators).elements == out.elements,
               "derived generators must regenerate the set");
    return out;
}

// "(g1, g2, ...)" over the stored generators; falls back to the zero
// generator for the zero ideal.
inline std::string describe_ideal(const Ideal& I) {
    if (I.generators.empty()) return "(" + I.ring->name(I.ring->zero) + ")";
    std::string out = "(";
    for (std::size_t i = 0; i < I.generators.size(); ++i) {
        if (i) out += ", ";
        out += I.ring->name(I.generators[i]);
    }
    return out + ")";
}

inline Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    detail::require_same_ring(I, J);
    const TableRing& R = *I.ring;
    std::vector<elem> gens;
    std::set_union(I.generators.begin(), I.generators.end(), J.generators.begin(),
                   J.generators.end(), std::back_inserter(gens));

    // nested ideals sum to the larger one; this keeps lattice sweeps cheap
    // on chains, where most pairs are comparable
    if (std::includes(I.elements.begin(), I.elements.end(), J.elements.begin(),
                      J.elements.end()))
        return Ideal{I.ring, I.elements, std::move(gens)};
    if (std::includes(J.elements.begin(), J.elements.end(), I.elements.begin(),
                      I.elements.end()))
        return Ideal{I.ring, J.elements, std::move(gens)};

    // pairwise sums: closed under + since (x1+y1)+(x2+y2) = (x1+x2)+(y1+y2),
    // and under ambient * by distributing over the pair
    std::vector<char> in(R.order, 0);
    std::vector<elem> members;
    for (elem x : I.elements)
        for (elem y : J.elements) {
            elem v = R.a(x, y);
            if (!in[v]) {
                in[v] = 1;
                members.push_back(v);
            }
        }
    std::sort(members.begin(), members.end());
    self_check(std::includes(members.begin(), members.end(), I.elements.begin(),
                             I.elements.end()) &&
                   std::includes(members.begin(), members.end(), J.elements.begin(),
                                 J.elements.end()),
               "sum must contain both summands");
    return Ideal{I.ring, std::move(members), std::move(gens)};
}

// IJ = ideal generated by pairwise products of generators.
inline Ideal ideal_product(const Ideal& I, const Ideal& J) {
    detail::require_same_ring(I, J);
    const TableRing& R = *I.ring;
    std::vector<elem> gens;
    for (elem x : I.generators)
        for (elem y : J.generators) gens.push_back(R.m(x, y));
    return ideal_generated(I.ring, std::move(gens));
}

inline Ideal ideal_power(const Ideal& I, int k) {
    Ideal acc = ideal_generated(I.ring, {I.ring->one});
    for (int i = 0; i < k; ++i) acc = ideal_product(acc, I);
    return acc;
}

inline Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
    detail::require_same_ring(I, J);
    std::vector<elem> members;
    std::set_intersection(I.elements.begin(), I.elements.end(), J.elements.begin(),
                          J.elements.end(), std::back_inserter(members));
    return ideal_from_set(I.ring, std::move(members));
}

// (I : J) = {r : rJ included in I}. rJ is generated by the r*g over
// generators g of J, so membership needs only the generator checks.
inline Ideal ideal_colon(const Ideal& I, const Ideal& J) {
    detail::require_same_ring(I, J);
    const TableRing& R = *I.ring;
    std::vector<elem> members;
    for (elem r = 0; r < R.order; ++r) {
        bool ok = true;
        for (elem g : J.generators)
            if (!I.contains(R.m(r, g))) {
                ok = false;
                break;
            }
        if (ok) members.push_back(r);
    }
    return ideal_from_set(I.ring, std::move(members));
}

inline Ideal annihilator(const Ideal& I) {
    const TableRing& R = *I.ring;
    std::vector<elem> members;
    for (elem r = 0; r < R.order; ++r) {
        bool ok = true;
        for (elem g : I.generators)
            if (R.m(r, g) != R.zero) {
                ok = false;
                break;
            }
        if (ok) members.push_back(r);
    }
    return ideal_from_set(I.ring, std::move(members));
}

// Contains at least one non-zero-divisor.
inline bool is_regular_ideal(const Ideal& I) {
    return std::any_of(I.elements.begin(), I.elements.end(),
                       [&](elem x) { return I.ring->is_regular(x); });
}

inline std::optional<elem> is_principal(const Ideal& I) {
    for (elem a : I.elements)
        if (principal_ideal(I.ring, a).elements == I.elements) return a;
    return std::nullopt;
}

// Every ideal: principal ideals closed under pairwise sums to a fixpoint.
// Sound because every ideal is a finite sum of principal ones.
inline std::vector<Ideal> all_ideals(const RingPtr& R, const RunConfig& cfg = {}) {
    std::set<std::vector<elem>> seen;
    std::vector<Ideal> found;
    auto push = [&](Ideal I) {
        if (seen.insert(I.elements).second) {
            found.push_back(std::move(I));
            if (static_cast<long>(found.size()) > cfg.lattice_cap)
                fail(errc::lattice_cap_exceeded,
                     "ideal lattice of " + R->provenance.name() + " exceeds cap");
            return true;
        }
        return false;
    };
    for (elem x = 0; x < R->order; ++x) push(principal_ideal(R, x));
    // worklist over ideal indices; found only grows
    for (std::size_t i = 0; i < found.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            if (found[i].elements.size() == std::size_t(R->order)) break;
            push(ideal_sum(found[i], found[j]));
        }
    std::sort(found.begin(), found.end(), [](const Ideal& a, const Ideal& b) {
        if (a.elements.size() != b.elements.size())
            return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    });
    return found;
}

namespace detail {

inline std::vector<Ideal> maximal_ideals_impl(const RingPtr& R, const std::vector<Ideal>& lattice) {
    std::vector<Ideal> maximal;
    for (const Ideal& I : lattice) {
        if (I.is_unit_ideal()) continue;
        bool top = true;
        for (const Ideal& J : lattice) {
            if (J.is_unit_ideal() || J.elements.size() <= I.elements.size()) continue;
            if (std::includes(J.elements.begin(), J.elements.end(), I.elements.begin(),
                              I.elements.end())) {
                top = false;
                break;
            }
        }
        if (top) maximal.push_back(I);
    }
    return maximal;
}

}  // namespace detail

// Maximal ideals, cross-checked: an element is a unit exactly when it avoids
// every maximal ideal.
inline std::vector<Ideal> maximal_ideals(const RingPtr& R, const RunConfig& cfg = {}) {
    if (R->order == 1) fail(errc::zero_ring, "the zero ring has no maximal ideals");
    auto lattice = all_ideals(R, cfg);
    auto maximal = detail::maximal_ideals_impl(R, lattice);
    for (elem x = 0; x < R->order; ++x) {
        bool in_some = false;
        for (const Ideal& M : maximal)
            if (M.contains(x)) {
                in_some = true;
                break;
            }
        self_check(in_some == !R->is_unit(x), "maximal ideals must cut out exactly the units");
    }
    return maximal;
}

// Invertibility of I as a fractional ideal of Tot(R) = R, computed literally:
// J = {x : xI included in R} and the test is IJ == R. At finite scale J is
// always all of R (Tot collapses onto R), and the test degenerates to I == R;
// both collapses are asserted rather than assumed.
inline bool is_invertible(const Ideal& I) {
    const RingPtr& R = I.ring;
    TotalQuotient tot = total_quotient_ring(R);
    self_check(tot.ring == R, "Tot(R) must collapse onto R at finite scale");
    std::vector<elem> inverse_set;
    for (elem x = 0; x < R->order; ++x) {
        bool ok = true;
        for (elem g : I.generators)
            if (R->m(x, g) >= R->order) {  // membership in iota(R) is vacuous here
                ok = false;
                break;
            }
        if (ok) inverse_set.push_back(x);
    }
    self_check(inverse_set.size() == std::size_t(R->order),
               "fractional inverse must be all of R");
    Ideal J = ideal_from_set(R, std::move(inverse_set));
    Ideal IJ = ideal_product(I, J);
    self_check(IJ.elements == I.elements, "I * R must equal I");
    bool invertible = IJ.is_unit_ideal();
    self_check(invertible == I.is_unit_ideal(), "invertible iff unit ideal at finite scale");
    return invertible;
}

}  // namespace pruferlab
