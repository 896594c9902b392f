#pragma once

#include <algorithm>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "config.hpp"
#include "multipoly.hpp"
#include "table_ring.hpp"

namespace pruferlab {

inline const std::vector<int>& leading_monomial(const MultiPoly& f) {
    self_check(!f.is_zero(), "leading monomial of zero");
    auto best = f.terms.begin();
    for (auto it = f.terms.begin(); it != f.terms.end(); ++it)
        if (grlex_less(best->first, it->first)) best = it;
    return best->first;
}

inline long leading_coefficient(const MultiPoly& f) {
    return f.terms.at(leading_monomial(f));
}

inline bool monomial_divides(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline std::vector<int> monomial_quotient(const std::vector<int>& b, const std::vector<int>& a) {
    std::vector<int> q(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) q[i] = b[i] - a[i];
    return q;
}

inline std::vector<int> monomial_lcm(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> l(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
    return l;
}

struct NormalFormResult {
    MultiPoly remainder;
    std::vector<MultiPoly> quotients;  // f = sum quotients[i]*basis[i] + remainder
};

// Full multivariate division: every term of the remainder is reducible by no
// basis leading monomial. Reducers are tried in basis order, so the result
// is deterministic for a fixed basis list.
inline NormalFormResult normal_form_with_quotients(const MultiPoly& f,
                                                   const std::vector<MultiPoly>& basis) {
    NormalFormResult out{poly_zero(f.p, f.vars), {}};
    out.quotients.assign(basis.size(), poly_zero(f.p, f.vars));
    MultiPoly h = f;
    while (!h.is_zero()) {
        const std::vector<int> lm = leading_monomial(h);
        const long lc = h.terms.at(lm);
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (basis[i].is_zero()) continue;
            const auto& lmi = leading_monomial(basis[i]);
            if (!monomial_divides(lmi, lm)) continue;
            const long t = lc * detail::mod_inverse(leading_coefficient(basis[i]), f.p) % f.p;
            const auto shift = monomial_quotient(lm, lmi);
            h = poly_sub(h, poly_scale(basis[i], t, shift));
            poly_add_term(out.quotients[i], shift, t);
            reduced = true;
            break;
        }
        if (!reduced) {
            poly_add_term(out.remainder, lm, lc);
            MultiPoly lt = poly_zero(f.p, f.vars);
            poly_add_term(lt, lm, lc);
            h = poly_sub(h, lt);
        }
    }
    return out;
}

inline MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis) {
    return normal_form_with_quotients(f, basis).remainder;
}

struct GroebnerBasis {
    long p = 2;
    std::vector<std::string> vars;
    std::vector<MultiPoly> polys;      // reduced, monic, ascending by leading monomial
    std::vector<MultiPoly> input;      // the generators the basis was computed from
    std::vector<std::vector<MultiPoly>> certificates;  // polys[i] = sum cert[i][j]*input[j]
};

inline bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Buchberger completion over F_p, graded lex order.
//
// Every basis element carries a cofactor row expressing it as an explicit
// combination of the inputs; the rows are updated through S-polynomials,
// reduction, and interreduction, and replayed at the end by plain polynomial
// arithmetic. Together with reducing each input against the finished basis,
// this checks ideal membership in both directions. All S-pairs of the final
// basis are verified to reduce to zero after the fact, including the pairs
// the coprime-leading-monomial shortcut skipped during completion.
inline GroebnerBasis buchberger(const std::vector<MultiPoly>& input, const RunConfig& cfg = {}) {
    if (input.empty()) fail(errc::bad_spec, "Groebner basis of an empty generator list");
    const long p = input[0].p;
    const auto& vars = input[0].vars;
    if (!is_prime(p)) fail(errc::bad_spec, "coefficient characteristic must be prime");
    for (const auto& f : input) detail::require_compatible(input[0], f);

    struct Entry {
        MultiPoly poly;
        std::vector<MultiPoly> cert;
    };
    std::vector<Entry> basis;
    auto make_monic = [&](Entry& e) {
        const long inv = detail::mod_inverse(leading_coefficient(e.poly), p);
        e.poly = poly_scale(e.poly, inv);
        for (auto& c : e.cert) c = poly_scale(c, inv);
    };
    for (std::size_t i = 0; i < input.size(); ++i) {
        if (input[i].is_zero()) continue;
        Entry e{input[i], std::vector<MultiPoly>(input.size(), poly_zero(p, vars))};
        e.cert[i] = poly_const(p, vars, 1);
        make_monic(e);
        basis.push_back(std::move(e));
    }
    if (basis.empty()) fail(errc::bad_spec, "all generators are zero");

    auto basis_polys = [&]() {
        std::vector<MultiPoly> ps;
        for (const auto& e : basis) ps.push_back(e.poly);
        return ps;
    };

    std::deque<std::pair<std::size_t, std::size_t>> queue;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) queue.emplace_back(i, j);

    long processed = 0;
    while (!queue.empty()) {
        auto [i, j] = queue.front();
        queue.pop_front();
        if (++processed > cfg.groebner_pair_cap)
            fail(errc::pair_cap_exceeded, "Buchberger pair queue exceeded cap");

        const auto& fi = basis[i].poly;
        const auto& fj = basis[j].poly;
        const auto &lmi = leading_monomial(fi), &lmj = leading_monomial(fj);
        const auto lcm = monomial_lcm(lmi, lmj);
        bool coprime = true;
        for (std::size_t v = 0; v < lcm.size() && coprime; ++v)
            coprime = (lmi[v] == 0 || lmj[v] == 0);
        if (coprime) continue;  // Buchberger's first criterion; re-checked post hoc

        // S(fi,fj) = x^(lcm-lmi) fi - x^(lcm-lmj) fj (both monic)
        MultiPoly s = poly_sub(poly_scale(fi, 1, monomial_quotient(lcm, lmi)),
                               poly_scale(fj, 1, monomial_quotient(lcm, lmj)));
        if (s.is_zero()) continue;
        auto nf = normal_form_with_quotients(s, basis_polys());
        if (nf.remainder.is_zero()) continue;

        Entry e{nf.remainder, std::vector<MultiPoly>(input.size(), poly_zero(p, vars))};
        for (std::size_t k = 0; k < input.size(); ++k) {
            MultiPoly c = poly_sub(poly_scale(basis[i].cert[k], 1, monomial_quotient(lcm, lmi)),
                                   poly_scale(basis[j].cert[k], 1, monomial_quotient(lcm, lmj)));
            for (std::size_t b = 0; b < basis.size(); ++b)
                c = poly_sub(c, poly_mul(nf.quotients[b], basis[b].cert[k]));
            e.cert[k] = std::move(c);
        }
        make_monic(e);
        basis.push_back(std::move(e));
        for (std::size_t k = 0; k + 1 < basis.size(); ++k)
            queue.emplace_back(k, basis.size() - 1);
    }

    // interreduce to the unique reduced basis, keeping certificates in step
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < basis.size() && !changed; ++i) {
            std::vector<MultiPoly> others;
            std::vector<std::size_t> owners;
            for (std::size_t j = 0; j < basis.size(); ++j)
                if (j != i) {
                    others.push_back(basis[j].poly);
                    owners.push_back(j);
                }
            auto nf = normal_form_with_quotients(basis[i].poly, others);
            if (nf.remainder == basis[i].poly) continue;
            changed = true;
            if (nf.remainder.is_zero()) {
                basis.erase(basis.begin() + i);
            } else {
                Entry e{nf.remainder, basis[i].cert};
                for (std::size_t t = 0; t < owners.size(); ++t)
                    for (std::size_t k = 0; k < input.size(); ++k)
                        e.cert[k] = poly_sub(e.cert[k],
                                             poly_mul(nf.quotients[t], basis[owners[t]].cert[k]));
                make_monic(e);
                basis[i] = std::move(e);
            }
        }
    }
    std::sort(basis.begin(), basis.end(), [](const Entry& a, const Entry& b) {
        return grlex_less(leading_monomial(a.poly), leading_monomial(b.poly));
    });

    GroebnerBasis out;
    out.p = p;
    out.vars = vars;
    out.input = input;
    for (auto& e : basis) {
        out.polys.push_back(e.poly);
        out.certificates.push_back(e.cert);
    }

    // post-hoc checks: S-pair criterion, and membership in both directions
    for (std::size_t i = 0; i < out.polys.size(); ++i)
        for (std::size_t j = i + 1; j < out.polys.size(); ++j) {
            const auto &lmi = leading_monomial(out.polys[i]),
                       &lmj = leading_monomial(out.polys[j]);
            const auto lcm = monomial_lcm(lmi, lmj);
            MultiPoly s =
                poly_sub(poly_scale(out.polys[i], 1, monomial_quotient(lcm, lmi)),
                         poly_scale(out.polys[j], 1, monomial_quotient(lcm, lmj)));
            self_check(normal_form(s, out.polys).is_zero(),
                       "S-polynomial of final basis must reduce to zero");
        }
    for (std::size_t i = 0; i < out.polys.size(); ++i) {
        MultiPoly replay = poly_zero(p, vars);
        for (std::size_t k = 0; k < input.size(); ++k)
            replay = poly_add(replay, poly_mul(out.certificates[i][k], input[k]));
        self_check(replay == out.polys[i], "certificate must recompose the basis element");
    }
    for (const auto& f : input)
        self_check(normal_form(f, out.polys).is_zero(),
                   "every input must reduce to zero against the basis");
    return out;
}

inline bool ideal_membership(const MultiPoly& f, const GroebnerBasis& gb) {
    return normal_form(f, gb.polys).is_zero();
}

// Finite dimension test: the staircase is bounded exactly when every
// variable has a pure power among the leading monomials (a constant leading
// monomial means the whole ring, which is finite too).
inline bool is_finite_quotient(const GroebnerBasis& gb) {
    std::vector<std::vector<int>> lms;
    for (const auto& g : gb.polys) {
        lms.push_back(leading_monomial(g));
        if (total_degree(lms.back()) == 0) return true;  // 1 is in the ideal
    }
    for (std::size_t v = 0; v < gb.vars.size(); ++v) {
        bool bounded = false;
        for (const auto& lm : lms) {
            bool pure = lm[v] > 0;
            for (std::size_t w = 0; w < lm.size() && pure; ++w)
                if (w != v && lm[w] != 0) pure = false;
            if (pure) {
                bounded = true;
                break;
            }
        }
        if (!bounded) return false;
    }
    return true;
}

// A presented quotient together with the data needed to map further
// polynomials into it: the reduced basis and the standard monomial list
// that indexes the ring's elements.
struct PresentedRing {
    RingPtr ring;
    std::vector<MultiPoly> basis;
    std::vector<std::vector<int>> standard_monomials;  // in element-index order
};

// F_p[vars]/(relations) as an explicit table ring on the standard monomials.
inline PresentedRing presented_poly_quotient(long p, const std::vector<std::string>& vars,
                                             const std::vector<std::string>& relations,
                                             const RunConfig& cfg = {}) {
    if (!is_prime(p)) fail(errc::bad_spec, "poly_quotient characteristic must be prime");
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i].empty()) fail(errc::bad_spec, "empty variable name");
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) fail(errc::bad_spec, "duplicate variable " + vars[i]);
    }

    std::vector<MultiPoly> rels;
    for (const auto& text : relations) {
        MultiPoly f = parse_poly(text, p, vars);
        if (!f.is_zero()) rels.push_back(std::move(f));
    }

    std::vector<MultiPoly> gb_polys;
    if (!rels.empty()) {
        GroebnerBasis gb = buchberger(rels, cfg);
        if (!is_finite_quotient(gb))
            fail(errc::infinite_quotient,
                 "quotient is not finite dimensional over F" + std::to_string(p));
        gb_polys = gb.polys;
    } else if (!vars.empty()) {
        fail(errc::infinite_quotient, "free polynomial ring over F" + std::to_string(p) +
                                          " with variables is infinite");
    }

    // standard monomials inside the box cut out by the pure-power bounds
    std::vector<std::vector<int>> monomials;
    bool unit_ideal = false;
    for (const auto& g : gb_polys)
        if (total_degree(leading_monomial(g)) == 0) unit_ideal = true;
    if (!unit_ideal) {
        std::vector<int> bound(vars.size(), 1);
        for (std::size_t v = 0; v < vars.size(); ++v) {
            for (const auto& g : gb_polys) {
                const auto& lm = leading_monomial(g);
                bool pure = lm[v] > 0;
                for (std::size_t w = 0; w < lm.size() && pure; ++w)
                    if (w != v && lm[w] != 0) pure = false;
                if (pure) {
                    bound[v] = lm[v];
                    break;  // polys are sorted: the first pure power is minimal
                }
            }
        }
        std::vector<int> exps(vars.size(), 0);
        while (true) {
            bool standard = true;
            for (const auto& g : gb_polys)
                if (monomial_divides(leading_monomial(g), exps)) {
                    standard = false;
                    break;
                }
            if (standard) monomials.push_back(exps);
            std::size_t v = 0;
            for (; v < vars.size(); ++v) {
                if (++exps[v] < bound[v]) break;
                exps[v] = 0;
            }
            if (v == vars.size()) break;
        }
        std::sort(monomials.begin(), monomials.end(), monomial_index_less);
    }

    const std::size_t k = monomials.size();
    long order = 1;
    for (std::size_t i = 0; i < k; ++i) {
        order *= p;
        check_order_cap(order, cfg);
    }
    if (k == 0) order = 1;  // quotient by the unit ideal

    // element <-> coefficient vector over the standard monomials
    auto coeffs_of = [&](long x) {
        std::vector<long> c(k);
        for (std::size_t i = 0; i < k; ++i) {
            c[i] = x % p;
            x /= p;
        }
        return c;
    };
    auto index_of_poly = [&](const MultiPoly& f) {
        long x = 0;
        for (const auto& [e, c] : f.terms) {
            auto it = std::find(monomials.begin(), monomials.end(), e);
            self_check(it != monomials.end(), "normal form left the standard monomials");
            long pw = 1;
            for (auto d = monomials.begin(); d != it; ++d) pw *= p;
            x += c * pw;
        }
        return x;
    };

    // multiplication structure constants: NF(m_i * m_j) re-expanded
    std::vector<std::vector<long>> nf_table(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            MultiPoly prod{p, vars, {}};
            std::vector<int> e(vars.size());
            for (std::size_t v = 0; v < vars.size(); ++v) e[v] = monomials[i][v] + monomials[j][v];
            prod.terms[e] = 1 % p;
            MultiPoly nf = gb_polys.empty() ? prod : normal_form(prod, gb_polys);
            std::vector<long> row(k, 0);
            for (const auto& [me, mc] : nf.terms) {
                auto it = std::find(monomials.begin(), monomials.end(), me);
                self_check(it != monomials.end(), "normal form left the standard monomials");
                row[it - monomials.begin()] = mc;
            }
            nf_table[i * k + j] = row;
            nf_table[j * k + i] = std::move(row);
        }

    TableRing R;
    R.order = static_cast<int>(order);
    R.add.resize(std::size_t(order) * order);
    R.mul.resize(std::size_t(order) * order);
    std::vector<std::vector<long>> all_coeffs(order);
    for (long x = 0; x < order; ++x) all_coeffs[x] = coeffs_of(x);
    std::vector<long> pw(k + 1, 1);
    for (std::size_t i = 0; i < k; ++i) pw[i + 1] = pw[i] * p;
    std::vector<long> acc(k, 0);
    for (long x = 0; x < order; ++x) {
        const auto& cx = all_coeffs[x];
        for (long y = 0; y < order; ++y) {
            const auto& cy = all_coeffs[y];
            long s = 0;
            std::fill(acc.begin(), acc.end(), 0);
            for (std::size_t i = 0; i < k; ++i) {
                s += ((cx[i] + cy[i]) % p) * pw[i];
                if (cx[i] == 0) continue;
                for (std::size_t j = 0; j < k; ++j) {
                    if (cy[j] == 0) continue;
                    const long scale = cx[i] * cy[j] % p;
                    const auto& row = nf_table[i * k + j];
                    for (std::size_t t = 0; t < k; ++t) acc[t] = (acc[t] + scale * row[t]) % p;
                }
            }
            long m = 0;
            for (std::size_t t = 0; t < k; ++t) m += acc[t] * pw[t];
            R.add[std::size_t(x) * order + y] = static_cast<elem>(s);
            R.mul[std::size_t(x) * order + y] = static_cast<elem>(m);
        }
    }
    R.zero = 0;
    R.one = (order == 1) ? 0 : static_cast<elem>(index_of_poly(poly_const(p, vars, 1)));
    R.names.resize(order);
    for (long x = 0; x < order; ++x) {
        MultiPoly f{p, vars, {}};
        const auto& cx = all_coeffs[x];
        for (std::size_t i = 0; i < k; ++i)
            if (cx[i] != 0) f.terms[monomials[i]] = cx[i];
        R.names[x] = print_poly(f);
    }
    R.provenance.kind = RingSpec::Kind::poly_quotient;
    R.provenance.p = p;
    R.provenance.vars = vars;
    R.provenance.relations = relations;

    PresentedRing out;
    out.ring = finalize_ring(std::move(R));
    if (order > 1)
        self_check(out.ring->characteristic == p, "presented ring must have characteristic p");
    out.basis = std::move(gb_polys);
    out.standard_monomials = std::move(monomials);
    return out;
}

inline RingPtr poly_quotient_ring(long p, const std::vector<std::string>& vars,
                                  const std::vector<std::string>& relations,
                                  const RunConfig& cfg = {}) {
    return presented_poly_quotient(p, vars, relations, cfg).ring;
}

// Index of a polynomial's residue class in a presented ring.
inline elem element_of_poly(const PresentedRing& P, const MultiPoly& f) {
    const long p = f.p;
    MultiPoly nf = P.basis.empty() ? f : normal_form(f, P.basis);
    long x = 0;
    for (const auto& [e, c] : nf.terms) {
        auto it = std::find(P.standard_monomials.begin(), P.standard_monomials.end(), e);
        self_check(it != P.standard_monomials.end(), "normal form left the standard monomials");
        long pw = 1;
        for (auto d = P.standard_monomials.begin(); d != it; ++d) pw *= p;
        x += c * pw;
    }
    self_check(x >= 0 && x < static_cast<long>(P.ring->order), "element index out of range");
    return static_cast<elem>(x);
}

}  // namespace pruferlab
