#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ideal.hpp"
#include "table_ring.hpp"

namespace pruferlab {

struct QuotientRing {
    RingPtr ring;
    std::vector<elem> surjection;  // x in base -> coset index
    bool zero_ring = false;        // I was the whole ring

    RingMap map(const RingPtr& base) const { return RingMap{base, ring, surjection}; }
};

// R/I with cosets labeled by their least representative. The canonical
// surjection is validated as a ring map and its kernel is re-checked
// against I element by element.
inline QuotientRing quotient(const RingPtr& R, const Ideal& I, const RunConfig& cfg = {}) {
    if (I.ring != R) fail(errc::ring_mismatch, "ideal does not belong to the ring");
    if (!is_ideal_set(*R, I.elements))
        fail(errc::not_an_ideal, "quotient requires an ideal");
    const TableRing& T = *R;
    const int n = T.order;

    std::vector<elem> rep_of(n, no_elem);  // element -> least coset representative
    std::vector<elem> reps;
    for (elem x = 0; x < n; ++x) {
        if (rep_of[x] != no_elem) continue;
        elem least = x;  // scanning ascending, x is the least of its coset
        reps.push_back(least);
        for (elem i : I.elements) rep_of[T.a(x, i)] = least;
    }
    std::sort(reps.begin(), reps.end());
    self_check(reps.size() * I.elements.size() == std::size_t(n),
               "cosets must partition the ring");

    std::vector<elem> index_of(n, no_elem);
    for (std::size_t i = 0; i < reps.size(); ++i) index_of[reps[i]] = static_cast<elem>(i);

    const int q = static_cast<int>(reps.size());
    TableRing Q;
    Q.order = q;
    Q.add.resize(std::size_t(q) * q);
    Q.mul.resize(std::size_t(q) * q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            Q.add[std::size_t(i) * q + j] = index_of[rep_of[T.a(reps[i], reps[j])]];
            Q.mul[std::size_t(i) * q + j] = index_of[rep_of[T.m(reps[i], reps[j])]];
        }
    Q.zero = index_of[rep_of[T.zero]];
    Q.one = index_of[rep_of[T.one]];
    Q.names.resize(q);
    for (int i = 0; i < q; ++i) Q.names[i] = "[" + T.names[reps[i]] + "]";
    Q.provenance.kind = RingSpec::Kind::quotient;
    Q.provenance.children.push_back(T.provenance);
    for (elem g : I.generators) {
        bool plain = T.provenance.kind == RingSpec::Kind::zmod ||
                     T.provenance.kind == RingSpec::Kind::poly_quotient;
        Q.provenance.generators.push_back(plain ? T.names[g] : std::to_string(g));
    }

    QuotientRing out;
    out.zero_ring = (q == 1);
    out.ring = finalize_ring(std::move(Q));
    out.surjection.resize(n);
    for (elem x = 0; x < n; ++x) out.surjection[x] = index_of[rep_of[x]];

    RingMap pi = out.map(R);
    validate_ring_map(pi);
    self_check(map_surjective(pi), "canonical map must be onto");
    self_check(map_kernel(pi) == I.elements, "kernel of canonical map must be I");
    return out;
}

}  // namespace pruferlab
