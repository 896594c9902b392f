#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace pruferlab {

// Multivariate polynomial over F_p, sparse exponent-vector representation.
// Canonical form: no zero coefficients, every coefficient in [1, p).
struct MultiPoly {
    long p = 2;
    std::vector<std::string> vars;
    std::map<std::vector<int>, long> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const MultiPoly&) const = default;
};

inline int total_degree(const std::vector<int>& exps) {
    return std::accumulate(exps.begin(), exps.end(), 0);
}

// Graded lexicographic order: higher total degree wins, ties break by the
// leftmost differing exponent (earlier variables are heavier, so x > y).
inline bool grlex_less(const std::vector<int>& a, const std::vector<int>& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

// Index order for quotient-ring element enumeration: ascending degree, and
// within a degree the grlex-larger monomial first, so [1, x, y, xy].
inline bool monomial_index_less(const std::vector<int>& a, const std::vector<int>& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return b < a;
}

namespace detail {

inline void require_compatible(const MultiPoly& f, const MultiPoly& g) {
    if (f.p != g.p || f.vars != g.vars)
        fail(errc::ring_mismatch, "polynomials disagree on characteristic or variables");
}

inline long mod_inverse(long a, long p) {
    // Fermat; p is prime and a is nonzero mod p.
    long result = 1, base = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

}  // namespace detail

inline MultiPoly poly_zero(long p, std::vector<std::string> vars) {
    return MultiPoly{p, std::move(vars), {}};
}

inline MultiPoly poly_const(long p, std::vector<std::string> vars, long c) {
    MultiPoly f{p, std::move(vars), {}};
    c = ((c % p) + p) % p;
    if (c != 0) f.terms[std::vector<int>(f.vars.size(), 0)] = c;
    return f;
}

inline void poly_add_term(MultiPoly& f, std::vector<int> exps, long c) {
    c = ((c % f.p) + f.p) % f.p;
    if (c == 0) return;
    auto it = f.terms.find(exps);
    if (it == f.terms.end()) {
        f.terms.emplace(std::move(exps), c);
    } else {
        it->second = (it->second + c) % f.p;
        if (it->second == 0) f.terms.erase(it);
    }
}

inline MultiPoly poly_add(const MultiPoly& f, const MultiPoly& g) {
    detail::require_compatible(f, g);
    MultiPoly out = f;
    for (const auto& [e, c] : g.terms) poly_add_term(out, e, c);
    return out;
}

inline MultiPoly poly_neg(const MultiPoly& f) {
    MultiPoly out{f.p, f.vars, {}};
    for (const auto& [e, c] : f.terms) out.terms[e] = f.p - c;
    return out;
}

inline MultiPoly poly_sub(const MultiPoly& f, const MultiPoly& g) {
    return poly_add(f, poly_neg(g));
}

inline MultiPoly poly_scale(const MultiPoly& f, long c, std::vector<int> shift = {}) {
    // c * x^shift * f
    MultiPoly out{f.p, f.vars, {}};
    if (shift.empty()) shift.assign(f.vars.size(), 0);
    c = ((c % f.p) + f.p) % f.p;
    if (c == 0) return out;
    for (const auto& [e, k] : f.terms) {
        std::vector<int> exps(e);
        for (std::size_t i = 0; i < exps.size(); ++i) exps[i] += shift[i];
        out.terms[std::move(exps)] = k * c % f.p;
    }
    return out;
}

inline MultiPoly poly_mul(const MultiPoly& f, const MultiPoly& g) {
    detail::require_compatible(f, g);
    MultiPoly out{f.p, f.vars, {}};
    for (const auto& [ef, cf] : f.terms)
        for (const auto& [eg, cg] : g.terms) {
            std::vector<int> exps(ef);
            for (std::size_t i = 0; i < exps.size(); ++i) exps[i] += eg[i];
            poly_add_term(out, std::move(exps), cf * cg);
        }
    return out;
}

inline MultiPoly poly_pow(const MultiPoly& f, long e) {
    MultiPoly acc = poly_const(f.p, f.vars, 1);
    MultiPoly base = f;
    while (e > 0) {
        if (e & 1) acc = poly_mul(acc, base);
        base = poly_mul(base, base);
        e >>= 1;
    }
    return acc;
}

inline int poly_degree(const MultiPoly& f) {
    int d = -1;  // convention: deg 0 = -1 is never consulted; callers guard
    for (const auto& [e, c] : f.terms) d = std::max(d, total_degree(e));
    return d;
}

namespace detail {

// Recursive-descent parser for the polynomial grammar
//
//   poly    := term (("+" | "-") term)*
//   term    := factor ("*" factor)*
//   factor  := "-" factor | primary ("^" INT)?
//   primary := INT | VAR | "(" poly ")"
//
// No implicit multiplication: "2x" is a syntax error, "2*x" is not.
// Exponentiation after a parenthesized group is accepted ("(x+y)^2").
class PolyParser {
public:
    PolyParser(const std::string& src, long p, const std::vector<std::string>& vars)
        : src_(src), p_(p), vars_(vars) {}

    MultiPoly run() {
        MultiPoly f = poly();
        skip_ws();
        if (pos_ != src_.size()) fail(errc::syntax_error, trailing(), pos_);
        return f;
    }

private:
    const std::string& src_;
    long p_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;

    std::string trailing() const {
        return "unexpected character '" + std::string(1, src_[pos_]) + "' in polynomial";
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    MultiPoly poly() {
        MultiPoly acc = term();
        while (true) {
            if (eat('+'))
                acc = poly_add(acc, term());
            else if (eat('-'))
                acc = poly_sub(acc, term());
            else
                return acc;
        }
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        while (eat('*')) acc = poly_mul(acc, factor());
        return acc;
    }

    MultiPoly factor() {
        if (eat('-')) return poly_neg(factor());
        MultiPoly base = primary();
        if (eat('^')) {
            skip_ws();
            std::size_t at = pos_;
            long e = integer("exponent");
            if (e < 0) fail(errc::syntax_error, "negative exponent", at);
            return poly_pow(base, e);
        }
        return base;
    }

    MultiPoly primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            MultiPoly inner = poly();
            if (!eat(')')) fail(errc::syntax_error, "expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return poly_const(p_, vars_, integer("integer"));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t at = pos_;
            std::string name;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                name += src_[pos_++];
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (vars_[i] == name) {
                    MultiPoly f{p_, vars_, {}};
                    std::vector<int> exps(vars_.size(), 0);
                    exps[i] = 1;
                    f.terms[std::move(exps)] = 1 % p_;
                    return f;
                }
            fail(errc::unknown_variable, "unknown variable '" + name + "'", at);
        }
        if (pos_ >= src_.size())
            fail(errc::syntax_error, "unexpected end of polynomial", pos_);
        fail(errc::syntax_error, trailing(), pos_);
    }

    long integer(const char* what) {
        skip_ws();
        std::size_t at = pos_;
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            fail(errc::syntax_error, std::string("expected ") + what, pos_);
        long v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = v * 10 + (src_[pos_] - '0');
            if (v > 1000000) fail(errc::syntax_error, "integer literal too large", at);
            ++pos_;
        }
        return v;
    }
};

}  // namespace detail

inline MultiPoly parse_poly(const std::string& text, long p,
                            const std::vector<std::string>& vars) {
    return detail::PolyParser(text, p, vars).run();
}

// Canonical text form: terms in descending grlex order, explicit "*", "^"
// only for exponents > 1. parse_poly(print_poly(f)) == f.
inline std::string print_poly(const MultiPoly& f) {
    if (f.terms.empty()) return "0";
    std::vector<const std::pair<const std::vector<int>, long>*> ts;
    for (const auto& t : f.terms) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(),
              [](auto* a, auto* b) { return grlex_less(b->first, a->first); });
    std::string out;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const auto& [exps, coeff] = *ts[i];
        if (i) out += "+";
        bool constant = total_degree(exps) == 0;
        bool wrote = false;
        if (coeff != 1 || constant) {
            out += std::to_string(coeff);
            wrote = true;
        }
        for (std::size_t v = 0; v < exps.size(); ++v) {
            if (exps[v] == 0) continue;
            if (wrote) out += "*";
            out += f.vars[v];
            if (exps[v] > 1) out += "^" + std::to_string(exps[v]);
            wrote = true;
        }
    }
    return out;
}

}  // namespace pruferlab
