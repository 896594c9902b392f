#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "table_ring.hpp"

namespace pruferlab {

namespace detail {

// Cheap structural invariants; an isomorphism must preserve each of them.
struct Fingerprint {
    int add_order;
    int nilpotency;  // least k with x^k = 0, or 0 if x is not nilpotent
    int unit_order;  // multiplicative order, or 0 for non-units
    bool idempotent;

    auto key() const { return std::tuple(add_order, nilpotency, unit_order, idempotent); }
    bool operator==(const Fingerprint&) const = default;
};

inline Fingerprint fingerprint(const TableRing& R, elem x) {
    Fingerprint f{1, 0, 0, R.m(x, x) == x};
    elem acc = x;
    while (acc != R.zero) {
        acc = R.a(acc, x);
        ++f.add_order;
    }
    if (x == R.zero) f.add_order = 1;
    acc = x;
    for (int k = 1; k <= R.order; ++k) {
        if (acc == R.zero) {
            f.nilpotency = k;
            break;
        }
        acc = R.m(acc, x);
    }
    if (R.is_unit(x)) {
        f.unit_order = 1;
        acc = x;
        while (acc != R.one) {
            acc = R.m(acc, x);
            ++f.unit_order;
        }
    }
    return f;
}

// Greedy ring generators: least elements whose closure under + and * grows
// the subring generated by {0, 1} to everything.
inline std::vector<elem> ring_generators(const TableRing& R) {
    std::vector<char> in(R.order, 0);
    std::vector<elem> closed;
    auto close = [&](elem seed) {
        std::vector<elem> work;
        if (!in[seed]) {
            in[seed] = 1;
            closed.push_back(seed);
            work.push_back(seed);
        }
        while (!work.empty()) {
            elem x = work.back();
            work.pop_back();
            for (std::size_t i = 0; i < closed.size(); ++i) {
                for (elem v : {R.a(x, closed[i]), R.m(x, closed[i])}) {
                    if (!in[v]) {
                        in[v] = 1;
                        closed.push_back(v);
                        work.push_back(v);
                    }
                }
            }
        }
    };
    close(R.zero);
    close(R.one);
    std::vector<elem> gens;
    for (elem g = 0; g < R.order; ++g) {
        if (in[g]) continue;
        gens.push_back(g);
        close(g);
    }
    return gens;
}

// Extend a partial element map by closing under both operations, enforcing
// hom consistency and injectivity. Returns false on contradiction.
inline bool close_partial_map(const TableRing& S, const TableRing& T, std::vector<elem>& map,
                              std::vector<elem>& preimage) {
    std::vector<elem> defined;
    for (elem x = 0; x < S.order; ++x)
        if (map[x] != no_elem) defined.push_back(x);
    bool grew = true;
    auto place = [&](elem z, elem mz) {
        if (map[z] != no_elem) return map[z] == mz;
        if (preimage[mz] != no_elem) return false;  // injectivity
        map[z] = mz;
        preimage[mz] = z;
        defined.push_back(z);
        grew = true;
        return true;
    };
    while (grew) {
        grew = false;
        for (std::size_t i = 0; i < defined.size(); ++i)
            for (std::size_t j = i; j < defined.size(); ++j) {
                elem x = defined[i], y = defined[j];
                if (!place(S.a(x, y), T.a(map[x], map[y]))) return false;
                if (!place(S.m(x, y), T.m(map[x], map[y]))) return false;
            }
    }
    return true;
}

inline bool iso_search(const TableRing& S, const TableRing& T, const std::vector<elem>& gens,
                       const std::vector<std::vector<elem>>& candidates, std::size_t k,
                       std::vector<elem>& map, std::vector<elem>& preimage) {
    if (k == gens.size()) {
        for (elem x = 0; x < S.order; ++x)
            if (map[x] == no_elem) return false;
        return true;  // closure already verified the hom equations on all pairs
    }
    for (elem c : candidates[k]) {
        auto saved_map = map;
        auto saved_pre = preimage;
        bool ok = true;
        if (map[gens[k]] != no_elem)
            ok = (map[gens[k]] == c);
        else if (preimage[c] != no_elem)
            ok = false;
        if (ok) {
            map[gens[k]] = c;
            preimage[c] = gens[k];
            if (close_partial_map(S, T, map, preimage) &&
                iso_search(S, T, gens, candidates, k + 1, map, preimage))
                return true;
        }
        map = std::move(saved_map);
        preimage = std::move(saved_pre);
    }
    return false;
}

}  // namespace detail

// Search for a ring isomorphism. Generator images are backtracked over
// fingerprint-compatible candidates; each partial assignment is closed under
// both operations with consistency checking, so the final map is verified on
// every pair along the way. The returned map is validated once more.
inline std::optional<RingMap> are_isomorphic(const RingPtr& R1, const RingPtr& R2,
                                             const RunConfig& cfg = {}) {
    if (R1->order > cfg.iso_cap || R2->order > cfg.iso_cap)
        fail(errc::iso_cap_exceeded,
             "isomorphism search is capped at order " + std::to_string(cfg.iso_cap));
    const TableRing& S = *R1;
    const TableRing& T = *R2;
    if (S.order != T.order || S.characteristic != T.characteristic) return std::nullopt;

    std::vector<detail::Fingerprint> fs(S.order), ft(T.order);
    for (elem x = 0; x < S.order; ++x) fs[x] = detail::fingerprint(S, x);
    for (elem x = 0; x < T.order; ++x) ft[x] = detail::fingerprint(T, x);
    {
        auto ks = fs, kt = ft;
        auto by_key = [](const detail::Fingerprint& a, const detail::Fingerprint& b) {
            return a.key() < b.key();
        };
        std::sort(ks.begin(), ks.end(), by_key);
        std::sort(kt.begin(), kt.end(), by_key);
        if (ks != kt) return std::nullopt;  // invariant multisets differ
    }

    auto gens = detail::ring_generators(S);
    std::vector<std::vector<elem>> candidates(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k)
        for (elem c = 0; c < T.order; ++c)
            if (ft[c] == fs[gens[k]]) candidates[k].push_back(c);

    std::vector<elem> map(S.order, no_elem), preimage(T.order, no_elem);
    map[S.zero] = T.zero;
    preimage[T.zero] = S.zero;
    if (map[S.one] == no_elem) {
        if (preimage[T.one] != no_elem) return std::nullopt;
        map[S.one] = T.one;
        preimage[T.one] = S.one;
    } else if (map[S.one] != T.one) {
        return std::nullopt;
    }
    if (!detail::close_partial_map(S, T, map, preimage)) return std::nullopt;
    if (!detail::iso_search(S, T, gens, candidates, 0, map, preimage)) return std::nullopt;

    RingMap h{R1, R2, std::move(map)};
    validate_ring_map(h);
    self_check(map_bijective(h), "isomorphism search returned a non-bijection");
    return h;
}

}  // namespace pruferlab
