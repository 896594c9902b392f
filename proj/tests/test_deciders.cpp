#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "pruferlab/content.hpp"
#include "pruferlab/deciders.hpp"
#include "pruferlab/groebner.hpp"
#include "pruferlab/quotient.hpp"
#include "pruferlab/table_ring.hpp"

using namespace pruferlab;

namespace {

RingPtr dual_numbers_2d() {
    // F2[x,y] with x^2 = y^2 = 0; elements are indexed by subsets of
    // {1, x, y, xy}: 1 -> 1, x -> 2, y -> 4, xy -> 8.
    return poly_quotient_ring(2, {"x", "y"}, {"x^2", "y^2"});
}

RingPtr square_zero_plane() {
    // F2[x,y] with every product of variables zero: 1 -> 1, x -> 2, y -> 4.
    return poly_quotient_ring(2, {"x", "y"}, {"x^2", "x*y", "y^2"});
}

}  // namespace

TEST_CASE("polynomials over a ring multiply through the tables") {
    auto R = zmod(6);
    Polynomial f = make_polynomial(R, {2, 3});
    Polynomial g = make_polynomial(R, {0, 3});
    Polynomial fg = poly_mul(f, g);
    CHECK(fg.coeffs == std::vector<elem>{0, 0, 3});  // (2+3T)*3T = 6T + 9T^2 = 3T^2
    CHECK(fg.degree() == 2);
    CHECK(poly_mul(f, make_polynomial(R, {})).is_zero());
    CHECK(make_polynomial(R, {0, 0}).is_zero());

    CHECK(content(f).is_unit_ideal());  // (2,3) = (1) in zmod(6)
    CHECK(content(g).elements == std::vector<elem>{0, 3});

    CHECK(print_polynomial(make_polynomial(R, {})) == "0");
    CHECK(print_polynomial(make_polynomial(R, {2, 1, 5})) == "2 + T + 5*T^2");
}

TEST_CASE("the content lattice memoizes joins and products") {
    auto R = zmod(12);
    ContentLattice L = content_lattice(R, all_ideals(R));
    REQUIRE(L.count() == 6);
    CHECK(L.ideals[L.zero_id].is_zero());
    CHECK(L.ideals[L.unit_id].is_unit_ideal());

    int p4 = L.principal_id[4], p6 = L.principal_id[6];
    CHECK(L.ideals[p4].elements == std::vector<elem>{0, 4, 8});
    CHECK(L.ideals[L.join(p4, p6)].elements == std::vector<elem>{0, 2, 4, 6, 8, 10});
    CHECK(L.product(p4, p6) == L.zero_id);  // 4*6 = 24 = 0 mod 12

    // content through the lattice agrees with the direct ideal
    Polynomial f = make_polynomial(R, {4, 6});
    CHECK(L.ideals[L.content_id(f.coeffs)].elements == content(f).elements);
}

TEST_CASE("projectivity means generated by an idempotent") {
    auto R6 = zmod(6);
    CHECK(is_projective_ideal(principal_ideal(R6, 3)));  // 3 is idempotent mod 6
    CHECK(is_projective_ideal(principal_ideal(R6, 0)));
    CHECK(is_projective_ideal(principal_ideal(R6, 1)));

    auto R4 = zmod(4);
    CHECK_FALSE(is_projective_ideal(principal_ideal(R4, 2)));
}

TEST_CASE("products of fields are semihereditary, chain rings are not") {
    auto V6 = is_semihereditary(zmod(6));
    CHECK(V6.holds);
    CHECK_FALSE(V6.witness.has_value());
    CHECK(is_semihereditary(zmod(30)).holds);
    CHECK(is_semihereditary(zmod(7)).holds);

    auto V4 = is_semihereditary(zmod(4));
    CHECK_FALSE(V4.holds);
    REQUIRE(V4.witness.has_value());
    CHECK(V4.witness->elements == std::vector<elem>{0, 2});

    auto V16 = is_semihereditary(dual_numbers_2d());
    CHECK_FALSE(V16.holds);
    REQUIRE(V16.witness.has_value());
    CHECK(V16.witness->elements == std::vector<elem>{0, 8});  // the socle (x*y)
}

TEST_CASE("weak dimension is zero or infinite, with a periodic resolution") {
    CHECK(wdim_class(zmod(6)).cls == WdimClass::zero);
    CHECK(wdim_class(zmod(5)).cls == WdimClass::zero);

    auto W4 = wdim_class(zmod(4));
    CHECK(W4.cls == WdimClass::infinite);
    REQUIRE(W4.resolution.has_value());
    CHECK(W4.resolution->ring->order == 4);
    CHECK(W4.resolution->x == 2);
    CHECK(W4.resolution->nilpotency == 2);
    CHECK(W4.resolution->kernel_x == std::vector<elem>{0, 2});
    CHECK(W4.resolution->image_x == std::vector<elem>{0, 2});

    // non-chain local ring: no periodic resolution, but a concrete
    // non-summand ideal
    auto W8 = wdim_class(square_zero_plane());
    CHECK(W8.cls == WdimClass::infinite);
    CHECK_FALSE(W8.resolution.has_value());
    REQUIRE(W8.non_projective.has_value());
    CHECK(W8.non_projective->elements == std::vector<elem>{0, 2});

    // a mixed product still finds the chain factor
    auto R12 = zmod(12);
    auto W12 = wdim_class(R12);
    CHECK(W12.cls == WdimClass::infinite);
    REQUIRE(W12.resolution.has_value());
    CHECK(W12.resolution->ring->order == 4);
    CHECK(W12.resolution->nilpotency == 2);
}

TEST_CASE("the stock periodic resolution demo checks out") {
    PeriodicResolution P = periodic_resolution_witness(2, 3);
    CHECK(P.ring->order == 8);
    CHECK(P.witness.nilpotency == 3);
    CHECK(P.ring->name(P.witness.x) == "x");
    CHECK(P.witness.kernel_x == std::vector<elem>{0, 4});          // (x^2)
    CHECK(P.witness.image_x == std::vector<elem>{0, 2, 4, 6});     // (x)
    CHECK(P.witness.kernel_top == P.witness.image_x);
    CHECK(P.witness.image_top == P.witness.kernel_x);

    PeriodicResolution P9 = periodic_resolution_witness(3, 2);
    CHECK(P9.ring->order == 9);
    CHECK(P9.witness.nilpotency == 2);

    CHECK_THROWS_MATCHES(periodic_resolution_witness(2, 1), error,
                         Catch::Matchers::Predicate<error>(
                             [](const error& e) { return e.kind() == errc::bad_spec; }));
}

TEST_CASE("arithmetical rings are exactly those with chain factors") {
    CHECK(is_arithmetical(zmod(4)).holds);
    CHECK(is_arithmetical(zmod(6)).holds);
    CHECK(is_arithmetical(zmod(8)).holds);
    CHECK(is_arithmetical(zmod(12)).holds);
    CHECK(is_arithmetical(zmod(30)).holds);

    auto V16 = is_arithmetical(dual_numbers_2d());
    CHECK_FALSE(V16.holds);
    REQUIRE(V16.witness_ideal.has_value());
    // the first non-principal ideal is the maximal ideal (x, y)
    CHECK(V16.witness_ideal->elements == std::vector<elem>{0, 2, 4, 6, 8, 10, 12, 14});

    auto V8 = is_arithmetical(square_zero_plane());
    CHECK_FALSE(V8.holds);
    REQUIRE(V8.witness_ideal.has_value());
    CHECK(V8.witness_ideal->elements == std::vector<elem>{0, 2, 4, 6});
}

TEST_CASE("the content formula is refuted on the 2d dual numbers") {
    auto R = dual_numbers_2d();
    auto V = is_gaussian_bounded(R, 2);
    CHECK(V.refuted);
    CHECK(V.degree_bound == 2);
    REQUIRE(V.witness.has_value());
    const GaussianWitness& W = *V.witness;

    // minimal violating pair: f = g = x + y*T
    CHECK(W.f.coeffs == std::vector<elem>{2, 4});
    CHECK(W.g.coeffs == std::vector<elem>{2, 4});
    CHECK(print_polynomial(W.f) == "x + y*T");
    CHECK(poly_mul(W.f, W.g).is_zero());  // (x + yT)^2 = 0 in characteristic 2
    CHECK(W.content_of_product.is_zero());
    CHECK(W.content_product.elements == std::vector<elem>{0, 8});  // (x*y)
}

TEST_CASE("chain rings and zero-square planes satisfy the content formula") {
    CHECK_FALSE(is_gaussian_bounded(zmod(4), 2).refuted);
    CHECK_FALSE(is_gaussian_bounded(zmod(8), 2).refuted);
    CHECK_FALSE(is_gaussian_bounded(zmod(9), 2).refuted);
    CHECK_FALSE(is_gaussian_bounded(zmod(6), 2).refuted);
    CHECK_FALSE(is_gaussian_bounded(square_zero_plane(), 2).refuted);
    CHECK_FALSE(is_gaussian_bounded(zmod(12), 2).refuted);
}

TEST_CASE("the pruned sweep agrees with the unpruned sweep") {
    RunConfig full;
    full.gaussian_prune = false;

    for (long n : {4L, 6L, 9L}) {
        auto pruned = is_gaussian_bounded(zmod(n), 2);
        auto swept = is_gaussian_bounded(zmod(n), 2, full);
        CHECK(pruned.refuted == swept.refuted);
    }

    auto R8 = square_zero_plane();
    CHECK(is_gaussian_bounded(R8, 2).refuted == is_gaussian_bounded(R8, 2, full).refuted);

    // on the refuted ring both sweeps find the identical minimal witness
    auto R = dual_numbers_2d();
    auto pruned = is_gaussian_bounded(R, 1);
    auto swept = is_gaussian_bounded(R, 1, full);
    REQUIRE(pruned.refuted);
    REQUIRE(swept.refuted);
    CHECK(pruned.witness->f.coeffs == swept.witness->f.coeffs);
    CHECK(pruned.witness->g.coeffs == swept.witness->g.coeffs);
    CHECK(pruned.witness->content_product.elements == swept.witness->content_product.elements);
}

TEST_CASE("the bounded content identity holds on sampled pairs") {
    // c(f)^(m+1) c(g) = c(f)^m c(fg) with m = deg g, checked honestly with
    // ideal arithmetic on a deterministic sample of coefficient vectors.
    for (const RingPtr& R : {zmod(12), dual_numbers_2d()}) {
        const long n = R->order;
        long state = 1;
        auto next = [&]() {
            state = (state * 37 + 11) % 9973;
            return static_cast<elem>(state % n);
        };
        for (int trial = 0; trial < 60; ++trial) {
            Polynomial f = make_polynomial(R, {next(), next(), next()});
            Polynomial g = make_polynomial(R, {next(), next()});
            int m = std::max(g.degree(), 0);
            Ideal cf = content(f), cg = content(g), cfg = content(poly_mul(f, g));
            Ideal lhs = ideal_product(ideal_power(cf, m + 1), cg);
            Ideal rhs = ideal_product(ideal_power(cf, m), cfg);
            REQUIRE(lhs.elements == rhs.elements);
        }
    }
}

TEST_CASE("a tiny multiplication budget is reported as exhausted") {
    RunConfig cfg;
    cfg.gaussian_budget = 10;
    try {
        is_gaussian_bounded(dual_numbers_2d(), 2, cfg);
        FAIL("expected the budget to be exhausted");
    } catch (const error& e) {
        CHECK(e.kind() == errc::budget_exceeded);
        CHECK(std::string(e.what()).find("degree 0") != std::string::npos);
    }
}

TEST_CASE("regular ideals are invertible in fields and in zmod(12)") {
    auto V12 = is_pruefer(zmod(12));
    CHECK(V12.holds);
    CHECK(V12.total);
    CHECK(V12.regular_ideals_checked == 1);  // only the unit ideal is regular

    auto V7 = is_pruefer(zmod(7));
    CHECK(V7.holds);
    CHECK(V7.regular_ideals_checked == 1);

    CHECK(is_pruefer(dual_numbers_2d()).holds);
}

TEST_CASE("classification reports carry the whole verdict chain") {
    auto C6 = classify(zmod(6));
    CHECK(C6.total);
    CHECK(C6.noetherian);
    CHECK_FALSE(C6.local);
    CHECK(C6.ideal_count == 4);
    CHECK(C6.factor_orders == std::vector<int>{2, 3});
    CHECK(C6.semihereditary.holds);
    CHECK(C6.wdim.cls == WdimClass::zero);
    CHECK(C6.arithmetical.holds);
    CHECK_FALSE(C6.gaussian.refuted);
    CHECK(C6.pruefer.holds);

    auto C4 = classify(zmod(4));
    CHECK(C4.local);
    CHECK_FALSE(C4.semihereditary.holds);
    CHECK(C4.wdim.cls == WdimClass::infinite);
    CHECK(C4.arithmetical.holds);
    CHECK_FALSE(C4.gaussian.refuted);
    CHECK(C4.pruefer.holds);

    auto C16 = classify(dual_numbers_2d());
    CHECK(C16.local);
    CHECK_FALSE(C16.semihereditary.holds);
    CHECK(C16.wdim.cls == WdimClass::infinite);
    CHECK_FALSE(C16.arithmetical.holds);
    CHECK(C16.gaussian.refuted);
    CHECK(C16.pruefer.holds);

    auto C8 = classify(square_zero_plane());
    CHECK_FALSE(C8.arithmetical.holds);
    CHECK_FALSE(C8.gaussian.refuted);
    CHECK(C8.pruefer.holds);

    // the four corners: all five hold; chain breaks at semihereditary;
    // breaks at arithmetical; breaks at gaussian
    CHECK(classify(zmod(30)).semihereditary.holds);
    CHECK(classify(zmod(27)).arithmetical.holds);
}

TEST_CASE("deciders refuse the zero ring") {
    auto R4 = zmod(4);
    auto Z = quotient(R4, principal_ideal(R4, 1)).ring;
    REQUIRE(Z->order == 1);
    CHECK_THROWS_MATCHES(classify(Z), error,
                         Catch::Matchers::Predicate<error>(
                             [](const error& e) { return e.kind() == errc::zero_ring; }));
    CHECK_THROWS_MATCHES(is_semihereditary(Z), error,
                         Catch::Matchers::Predicate<error>(
                             [](const error& e) { return e.kind() == errc::zero_ring; }));
}
