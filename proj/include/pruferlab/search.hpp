#pragma once

// Search: enumerate a standard family of small rings and keep the ones
// whose classification satisfies a boolean query over the condition names,
// e.g. "pruefer and not gaussian".

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "deciders.hpp"
#include "errors.hpp"
#include "groebner.hpp"
#include "harness.hpp"
#include "table_ring.hpp"

namespace pruferlab {

using ConditionFlags = std::map<std::string, bool>;
using ConditionQuery = std::function<bool(const ConditionFlags&)>;

namespace detail {

struct QueryToken {
    enum Kind { word, lparen, rparen, end } kind = end;
    std::string text;
    std::size_t pos = 0;
};

inline std::vector<QueryToken> tokenize_query(const std::string& s) {
    std::vector<QueryToken> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (c == ' ' || c == '\t') {
            ++i;
        } else if (c == '(') {
            out.push_back({QueryToken::lparen, "(", i++});
        } else if (c == ')') {
            out.push_back({QueryToken::rparen, ")", i++});
        } else if ((c >= 'a' && c <= 'z') || c == '_' || (c >= '0' && c <= '9')) {
            std::size_t start = i;
            while (i < s.size() && ((s[i] >= 'a' && s[i] <= 'z') || s[i] == '_' ||
                                    (s[i] >= '0' && s[i] <= '9')))
                ++i;
            out.push_back({QueryToken::word, s.substr(start, i - start), start});
        } else {
            fail(errc::syntax_error, "unexpected character '" + std::string(1, c) +
                                         "' at position " + std::to_string(i));
        }
    }
    out.push_back({QueryToken::end, "", s.size()});
    return out;
}

// expr := term ('or' term)*; term := factor ('and' factor)*;
// factor := 'not' factor | '(' expr ')' | condition-name
struct QueryParser {
    const std::vector<QueryToken>& toks;
    std::size_t at = 0;

    const QueryToken& peek() const { return toks[at]; }
    QueryToken take() { return toks[at++]; }

    ConditionQuery parse_expr() {
        ConditionQuery lhs = parse_term();
        while (peek().kind == QueryToken::word && peek().text == "or") {
            take();
            ConditionQuery rhs = parse_term();
            lhs = [lhs, rhs](const ConditionFlags& f) { return lhs(f) || rhs(f); };
        }
        return lhs;
    }

    ConditionQuery parse_term() {
        ConditionQuery lhs = parse_factor();
        while (peek().kind == QueryToken::word && peek().text == "and") {
            take();
            ConditionQuery rhs = parse_factor();
            lhs = [lhs, rhs](const ConditionFlags& f) { return lhs(f) && rhs(f); };
        }
        return lhs;
    }

    ConditionQuery parse_factor() {
        const QueryToken& t = peek();
        if (t.kind == QueryToken::word && t.text == "not") {
            take();
            ConditionQuery inner = parse_factor();
            return [inner](const ConditionFlags& f) { return !inner(f); };
        }
        if (t.kind == QueryToken::lparen) {
            std::size_t open = take().pos;
            ConditionQuery inner = parse_expr();
            if (peek().kind != QueryToken::rparen)
                fail(errc::syntax_error,
                     "unbalanced '(' at position " + std::to_string(open));
            take();
            return inner;
        }
        if (t.kind == QueryToken::word) {
            if (t.text == "and" || t.text == "or")
                fail(errc::syntax_error, "misplaced '" + t.text + "' at position " +
                                             std::to_string(t.pos));
            const auto& names = condition_names();
            if (std::find(names.begin(), names.end(), t.text) == names.end())
                fail(errc::unknown_variable, "unknown condition '" + t.text +
                                                 "' at position " + std::to_string(t.pos));
            std::string key = take().text;
            return [key](const ConditionFlags& f) { return f.at(key); };
        }
        fail(errc::syntax_error, t.kind == QueryToken::end
                                     ? "query ended where a condition was expected"
                                     : "unexpected ')' at position " + std::to_string(t.pos));
    }
};

}  // namespace detail

inline ConditionQuery parse_condition_query(const std::string& text) {
    auto toks = detail::tokenize_query(text);
    detail::QueryParser p{toks};
    ConditionQuery q = p.parse_expr();
    if (p.peek().kind != detail::QueryToken::end)
        fail(errc::syntax_error, "trailing input at position " + std::to_string(p.peek().pos));
    return q;
}

struct SearchHit {
    std::string name;
    int order = 0;
    ConditionFlags flags;
};

struct SearchResult {
    std::string query;
    long max_order = 0;
    int candidates = 0;
    std::vector<SearchHit> hits;
};

// The candidate family: residue rings, truncated polynomial rings over F2
// and F3, the two standard two-variable local rings, and all pairwise
// products that stay within the order bound. Everything is classified at
// the configured degree bound; the bound on max_order keeps the largest
// chain factors inside the content-sweep budget.
inline SearchResult search_rings(const std::string& query, long max_order,
                                 const RunConfig& cfg = {}) {
    if (max_order < 2 || max_order > 100)
        fail(errc::bad_spec, "search max order must be between 2 and 100");
    ConditionQuery q = parse_condition_query(query);

    std::vector<RingPtr> family;
    for (long n = 2; n <= max_order; ++n) family.push_back(zmod(n, cfg));
    for (long p : {2L, 3L})
        for (long k = 2, order = p * p; order <= max_order; ++k, order *= p)
            family.push_back(
                poly_quotient_ring(p, {"x"}, {"x^" + std::to_string(k)}, cfg));
    if (max_order >= 16)
        family.push_back(poly_quotient_ring(2, {"x", "y"}, {"x^2", "y^2"}, cfg));
    if (max_order >= 8)
        family.push_back(poly_quotient_ring(2, {"x", "y"}, {"x^2", "x*y", "y^2"}, cfg));

    std::size_t base_count = family.size();
    for (std::size_t i = 0; i < base_count; ++i)
        for (std::size_t j = i; j < base_count; ++j) {
            long order = static_cast<long>(family[i]->order) * family[j]->order;
            if (order <= max_order)
                family.push_back(direct_product({family[i], family[j]}, cfg));
        }

    std::vector<std::pair<std::string, RingPtr>> candidates;
    for (const RingPtr& R : family) candidates.emplace_back(R->provenance.name(), R);
    std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
        return std::tie(a.second->order, a.first) < std::tie(b.second->order, b.first);
    });
    candidates.erase(std::unique(candidates.begin(), candidates.end(),
                                 [](const auto& a, const auto& b) { return a.first == b.first; }),
                     candidates.end());

    SearchResult out;
    out.query = query;
    out.max_order = max_order;
    out.candidates = static_cast<int>(candidates.size());
    for (const auto& [name, R] : candidates) {
        ConditionFlags flags = condition_flags(classify(R, cfg));
        if (q(flags)) out.hits.push_back({name, R->order, std::move(flags)});
    }
    return out;
}

}  // namespace pruferlab
