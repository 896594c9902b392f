#pragma once

// Univariate polynomials with coefficients in a finite ring, their content
// ideals, and a memoized view of the ideal lattice that turns content
// arithmetic (joins and products of ideals) into table lookups.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "ideal.hpp"
#include "table_ring.hpp"

namespace pruferlab {

// Dense coefficient vector in one indeterminate T: coeffs[i] multiplies T^i.
// Trailing zero coefficients are trimmed, so the zero polynomial has an
// empty coefficient vector and degree -1.
struct Polynomial {
    RingPtr ring;
    std::vector<elem> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
};

inline Polynomial make_polynomial(const RingPtr& R, std::vector<elem> coeffs) {
    for (elem c : coeffs)
        self_check(c < R->order, "polynomial coefficient out of range");
    while (!coeffs.empty() && coeffs.back() == R->zero) coeffs.pop_back();
    return Polynomial{R, std::move(coeffs)};
}

inline Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
    self_check(f.ring == g.ring, "polynomial product needs a common ring");
    const TableRing& T = *f.ring;
    if (f.is_zero() || g.is_zero()) return Polynomial{f.ring, {}};
    std::vector<elem> out(f.coeffs.size() + g.coeffs.size() - 1, T.zero);
    for (std::size_t i = 0; i < f.coeffs.size(); ++i)
        for (std::size_t j = 0; j < g.coeffs.size(); ++j)
            out[i + j] = T.a(out[i + j], T.m(f.coeffs[i], g.coeffs[j]));
    return make_polynomial(f.ring, std::move(out));
}

// Content: the ideal generated by all coefficients.
inline Ideal content(const Polynomial& f) {
    return ideal_generated(f.ring, f.coeffs);
}

// Renders a polynomial in ascending powers of T.  Coefficient names that
// themselves contain arithmetic are parenthesized so the result is readable.
inline std::string print_polynomial(const Polynomial& f) {
    if (f.is_zero()) return "0";
    const TableRing& T = *f.ring;
    std::string out;
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        if (f.coeffs[i] == T.zero) continue;
        if (!out.empty()) out += " + ";
        std::string name = T.name(f.coeffs[i]);
        bool wrap = name.find('+') != std::string::npos || name.find('-') != std::string::npos;
        if (wrap) name = "(" + name + ")";
        if (i == 0) {
            out += name;
        } else {
            std::string power = (i == 1) ? "T" : "T^" + std::to_string(i);
            if (f.coeffs[i] == T.one) out += power;
            else out += name + "*" + power;
        }
    }
    return out;
}

// The full ideal lattice of a ring indexed 0..k-1 in the canonical
// (size, lexicographic) order, with join and product realized as k*k id
// tables and principal ideals resolved per element.  Content computations
// against the same ring then cost one table lookup per step.
struct ContentLattice {
    RingPtr ring;
    std::vector<Ideal> ideals;
    std::vector<int> principal_id;  // element -> id of the principal ideal it generates
    std::vector<int> join_id;       // row-major k*k: id of I + J
    std::vector<int> product_id;    // row-major k*k: id of I * J
    int zero_id = -1;
    int unit_id = -1;

    int count() const { return static_cast<int>(ideals.size()); }
    int join(int i, int j) const { return join_id[i * count() + j]; }
    int product(int i, int j) const { return product_id[i * count() + j]; }

    // Content id of the polynomial with the given coefficients.
    int content_id(const std::vector<elem>& coeffs) const {
        int id = zero_id;
        for (elem c : coeffs) id = join(id, principal_id[c]);
        return id;
    }
};

inline ContentLattice content_lattice(const RingPtr& R, const std::vector<Ideal>& lattice) {
    ContentLattice L;
    L.ring = R;
    L.ideals = lattice;
    const int k = L.count();
    self_check(k >= 1, "ideal lattice cannot be empty");

    std::map<std::vector<elem>, int> id_of;
    for (int i = 0; i < k; ++i) id_of[lattice[i].elements] = i;
    self_check(static_cast<int>(id_of.size()) == k, "ideal lattice has duplicates");

    auto lookup = [&](const Ideal& I) {
        auto it = id_of.find(I.elements);
        self_check(it != id_of.end(), "ideal lattice must be closed under sum and product");
        return it->second;
    };

    L.zero_id = lookup(principal_ideal(R, R->zero));
    L.unit_id = lookup(principal_ideal(R, R->one));

    L.principal_id.resize(R->order);
    for (elem a = 0; a < R->order; ++a)
        L.principal_id[a] = lookup(principal_ideal(R, a));

    L.join_id.assign(static_cast<std::size_t>(k) * k, -1);
    L.product_id.assign(static_cast<std::size_t>(k) * k, -1);
    for (int i = 0; i < k; ++i) {
        for (int j = i; j < k; ++j) {
            int s = lookup(ideal_sum(lattice[i], lattice[j]));
            int p = lookup(ideal_product(lattice[i], lattice[j]));
            L.join_id[i * k + j] = L.join_id[j * k + i] = s;
            L.product_id[i * k + j] = L.product_id[j * k + i] = p;
        }
    }
    return L;
}

}  // namespace pruferlab
