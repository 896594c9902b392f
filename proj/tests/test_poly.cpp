#include <catch2/catch_amalgamated.hpp>

#include "pruferlab/groebner.hpp"
#include "pruferlab/isomorphism.hpp"
#include "pruferlab/multipoly.hpp"

using namespace pruferlab;

namespace {
const std::vector<std::string> XY{"x", "y"};

MultiPoly P(const std::string& s, long p = 2, const std::vector<std::string>& vars = XY) {
    return parse_poly(s, p, vars);
}
}  // namespace

TEST_CASE("parser handles the declared grammar") {
    MultiPoly f = P("x^2 + 2*x*y + 1", 3);
    REQUIRE(f.terms.size() == 3);
    CHECK(f.terms.at({2, 0}) == 1);
    CHECK(f.terms.at({1, 1}) == 2);
    CHECK(f.terms.at({0, 0}) == 1);

    // freshman's dream: the cross term vanishes in characteristic 2
    CHECK(P("(x+y)^2") == P("x^2 + y^2"));
    CHECK(P("x - x").is_zero());
    CHECK(P("-x", 5, {"x"}) == P("4*x", 5, {"x"}));
    CHECK(P("7", 5, {"x"}) == P("2", 5, {"x"}));
    CHECK(P("x^0", 3) == P("1", 3));
    CHECK(P("-(x - y)", 3) == P("y - x", 3));
    CHECK(P("2^3", 5, {"x"}) == P("3", 5, {"x"}));
}

TEST_CASE("syntax errors carry positions") {
    auto kind_at = [](const std::string& text, errc kind, std::size_t pos) {
        try {
            parse_poly(text, 2, XY);
            return false;
        } catch (const error& e) {
            return e.kind() == kind && e.position() == pos;
        }
    };
    CHECK(kind_at("2x", errc::syntax_error, 1));  // no implicit multiplication
    CHECK(kind_at("x +", errc::syntax_error, 3));
    CHECK(kind_at("(x", errc::syntax_error, 2));
    CHECK(kind_at("x^", errc::syntax_error, 2));
    CHECK(kind_at("x*", errc::syntax_error, 2));
    CHECK(kind_at("z + x", errc::unknown_variable, 0));
    CHECK(kind_at("x + qq", errc::unknown_variable, 4));
    CHECK(kind_at("", errc::syntax_error, 0));
}

TEST_CASE("printing is canonical and round-trips") {
    CHECK(print_poly(P("1 + x^2 + 2*y*x", 3)) == "x^2+2*x*y+1");
    CHECK(print_poly(P("0")) == "0");
    CHECK(print_poly(P("y + x")) == "x+y");
    for (const std::string& s : {"x^2+x*y+y^2", "x^3+2*x+1", "2*x^2*y^2+y", "x+2"}) {
        MultiPoly f = P(s, 3);
        CHECK(parse_poly(print_poly(f), 3, XY) == f);
    }
}

TEST_CASE("graded lex order and leading data") {
    CHECK(grlex_less({1, 1}, {2, 0}));   // xy < x^2
    CHECK(grlex_less({0, 2}, {1, 1}));   // y^2 < xy
    CHECK(grlex_less({2, 0}, {0, 3}));   // degree dominates
    CHECK(leading_monomial(P("x^2+x*y+y^2")) == std::vector<int>{2, 0});
    CHECK(leading_coefficient(P("2*x^2+y", 3)) == 2);
}

TEST_CASE("normal form is full reduction") {
    // x^2 mod (x^2+x+1) leaves x+1 over F2
    auto b = std::vector<MultiPoly>{P("x^2+x+1", 2, {"x"})};
    CHECK(normal_form(P("x^2", 2, {"x"}), b) == P("x+1", 2, {"x"}));
    // every remainder term is irreducible, not only the leading one
    auto g = std::vector<MultiPoly>{P("y^2", 3)};
    CHECK(normal_form(P("x^3 + x*y^2 + y^2 + x", 3), g) == P("x^3 + x", 3));
    // division certificate: f = sum q_i g_i + r, replayed literally
    MultiPoly f = P("x^3*y + x*y^2 + y", 3);
    std::vector<MultiPoly> basis{P("x*y - 1", 3), P("y^2 - x", 3)};
    auto nf = normal_form_with_quotients(f, basis);
    MultiPoly replay = nf.remainder;
    for (std::size_t i = 0; i < basis.size(); ++i)
        replay = poly_add(replay, poly_mul(nf.quotients[i], basis[i]));
    CHECK(replay == f);
}

TEST_CASE("Buchberger completes and certifies") {
    // (xy-1, y^2-1) over F3: y becomes a unit with y^2 = 1, so x = y
    GroebnerBasis gb = buchberger({P("x*y - 1", 3), P("y^2 - 1", 3)});
    REQUIRE(gb.polys.size() == 2);
    CHECK(gb.polys[0] == P("x + 2*y", 3));
    CHECK(gb.polys[1] == P("y^2 + 2", 3));

    CHECK(ideal_membership(P("x^2 - 1", 3), gb));
    CHECK(ideal_membership(P("x - y", 3), gb));
    CHECK_FALSE(ideal_membership(P("x + 1", 3), gb));

    // already a basis: monic input comes straight back
    GroebnerBasis single = buchberger({P("x^2+x+1", 2, {"x"})});
    REQUIRE(single.polys.size() == 1);
    CHECK(single.polys[0] == P("x^2+x+1", 2, {"x"}));

    GroebnerBasis mixed = buchberger({P("2*x^2", 3), P("x*y + y", 3)});
    for (const auto& g : mixed.polys) CHECK(leading_coefficient(g) == 1);

    RunConfig tight;
    tight.groebner_pair_cap = 1;
    CHECK_THROWS_MATCHES(buchberger({P("x^2"), P("x*y"), P("y^2")}, tight), error,
                         Catch::Matchers::Predicate<error>(
                             [](const error& e) { return e.kind() == errc::pair_cap_exceeded; }));
}

TEST_CASE("finiteness of the staircase") {
    CHECK(is_finite_quotient(buchberger({P("x^2"), P("y^2")})));
    CHECK(is_finite_quotient(buchberger({P("x^2+x+1", 2, {"x"})})));
    CHECK_FALSE(is_finite_quotient(buchberger({P("x*y")})));
    CHECK_FALSE(is_finite_quotient(buchberger({P("x^2")})));  // y unbounded
    CHECK(is_finite_quotient(buchberger({P("1+x"), P("x")})));  // unit ideal
}

TEST_CASE("presented quotient rings as tables") {
    // F4: the field with four elements
    auto F4 = poly_quotient_ring(2, {"x"}, {"x^2+x+1"});
    REQUIRE(F4->order == 4);
    CHECK(F4->characteristic == 2);
    CHECK(units(*F4).size() == 3);

    // F2[x]/(x^2): names follow the coefficient encoding
    auto D = poly_quotient_ring(2, {"x"}, {"x^2"});
    REQUIRE(D->order == 4);
    CHECK(D->name(0) == "0");
    CHECK(D->name(1) == "1");
    CHECK(D->name(2) == "x");
    CHECK(D->name(3) == "x+1");
    CHECK(D->m(2, 2) == 0);  // x^2 = 0
    CHECK_FALSE(are_isomorphic(D, zmod(4)).has_value());
    CHECK_FALSE(are_isomorphic(D, F4).has_value());

    // standard monomials of F2[x,y]/(x^2,y^2) index as [1, x, y, xy]
    auto E = poly_quotient_ring(2, XY, {"x^2", "y^2"});
    REQUIRE(E->order == 16);
    CHECK(E->name(1) == "1");
    CHECK(E->name(2) == "x");
    CHECK(E->name(4) == "y");
    CHECK(E->name(8) == "x*y");
    CHECK(E->name(6) == "x+y");
    CHECK(E->m(2, 4) == 8);     // x*y
    CHECK(E->m(6, 6) == 0);     // (x+y)^2 = 0 in characteristic 2
    CHECK(E->m(2, 2) == 0);

    // F9 as F3[x]/(x^2+1)
    auto F9 = poly_quotient_ring(3, {"x"}, {"x^2+1"});
    CHECK(F9->order == 9);
    CHECK(units(*F9).size() == 8);

    // no variables: the prime field itself
    auto F3 = poly_quotient_ring(3, {}, {});
    CHECK(F3->order == 3);
    CHECK(are_isomorphic(F3, zmod(3)).has_value());

    // quotient by the unit ideal is the zero ring, flagged by its order
    auto Z = poly_quotient_ring(2, {"x"}, {"1+x", "x"});
    CHECK(Z->order == 1);
}

TEST_CASE("infinite quotients and bad presentations are rejected") {
    auto kind_of = [](auto&& thunk) {
        try {
            thunk();
            return errc::io_error;  // anything that is not the expected kind
        } catch (const error& e) {
            return e.kind();
        }
    };
    CHECK(kind_of([] { poly_quotient_ring(2, XY, {"x^2"}); }) == errc::infinite_quotient);
    CHECK(kind_of([] { poly_quotient_ring(2, {"x"}, {}); }) == errc::infinite_quotient);
    CHECK(kind_of([] { poly_quotient_ring(4, {"x"}, {"x^2"}); }) == errc::bad_spec);
    CHECK(kind_of([] { poly_quotient_ring(2, {"x", "x"}, {"x^2"}); }) == errc::bad_spec);
    CHECK(kind_of([] { poly_quotient_ring(3, {"x"}, {"y+x"}); }) == errc::unknown_variable);

    RunConfig tight;
    tight.order_cap = 8;
    CHECK(kind_of([&] { poly_quotient_ring(3, XY, {"x^2", "y^2"}, tight); }) ==
          errc::order_limit_exceeded);
}
