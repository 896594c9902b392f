#include <catch2/catch_amalgamated.hpp>

#include "pruferlab/isomorphism.hpp"
#include "pruferlab/localize.hpp"
#include "pruferlab/quotient.hpp"
#include "pruferlab/trivial_extension.hpp"

using namespace pruferlab;

TEST_CASE("quotient rings with canonical surjection") {
    auto R = zmod(12);
    Ideal I = principal_ideal(R, 4);  // {0,4,8}
    QuotientRing q = quotient(R, I);
    REQUIRE(q.ring->order == 4);
    CHECK_FALSE(q.zero_ring);
    CHECK(q.ring->provenance.name() == "zmod(12)/(4)");

    RingMap pi = q.map(R);
    CHECK(map_kernel(pi) == I.elements);
    CHECK(map_surjective(pi));
    CHECK(are_isomorphic(q.ring, zmod(4)).has_value());

    // first-isomorphism check against reduction mod 3
    Ideal I3 = principal_ideal(R, 3);
    QuotientRing q3 = quotient(R, I3);
    CHECK(are_isomorphic(q3.ring, zmod(3)).has_value());

    QuotientRing all = quotient(R, principal_ideal(R, 1));
    CHECK(all.zero_ring);
    CHECK(all.ring->order == 1);

    Ideal foreign = principal_ideal(zmod(12), 4);
    CHECK_THROWS_MATCHES(quotient(R, foreign), error,
                         Catch::Matchers::Predicate<error>(
                             [](const error& e) { return e.kind() == errc::ring_mismatch; }));
}

TEST_CASE("localization picks out the idempotent factor") {
    auto R6 = zmod(6);
    Localization L = localize(R6, {3});
    REQUIRE(L.ring->order == 2);
    CHECK(L.idempotent == 3);  // 3*3 = 3 mod 6
    CHECK_FALSE(L.degenerate);
    CHECK(L.kernel == std::vector<elem>{0, 2, 4});
    CHECK(L.ring->is_unit(L.map[3]));

    // inverting a nilpotent collapses everything
    Localization zero = localize(zmod(4), {2});
    CHECK(zero.degenerate);
    CHECK(zero.ring->order == 1);
    CHECK(zero.idempotent == 0);
    CHECK(zero.kernel.size() == 4);

    // inverting a unit changes nothing: e = 1 and the map is bijective
    Localization at_unit = localize(R6, {5});
    CHECK(at_unit.idempotent == 1);
    CHECK(at_unit.ring->order == 6);
    RingMap h{R6, at_unit.ring, at_unit.map};
    CHECK(map_bijective(h));

    // zmod(12) at 3: powers 3, 9, 3, ... give e = 9 and the Z/4 factor
    Localization L12 = localize(zmod(12), {3});
    CHECK(L12.idempotent == 9);
    CHECK(L12.ring->order == 4);
    CHECK(are_isomorphic(L12.ring, zmod(4)).has_value());

    CHECK_THROWS_MATCHES(localize(R6, {}), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.kind() == errc::empty_multiplicative_set;
                         }));
}

TEST_CASE("local decomposition splits along primitive idempotents") {
    auto R = zmod(12);
    LocalDecomposition d = local_decomposition(R);
    REQUIRE(d.factors.size() == 2);
    std::vector<int> orders;
    for (const auto& f : d.factors) orders.push_back(f.ring->order);
    std::sort(orders.begin(), orders.end());
    CHECK(orders == std::vector<int>{3, 4});

    // a local ring is its own sole factor, literally the same handle
    auto R4 = zmod(4);
    LocalDecomposition local = local_decomposition(R4);
    REQUIRE(local.factors.size() == 1);
    CHECK(local.factors[0].ring == R4);
    CHECK(local.factors[0].idempotent == R4->one);

    LocalDecomposition d30 = local_decomposition(zmod(30));
    CHECK(d30.factors.size() == 3);

    CHECK_THROWS_AS(local_decomposition(zmod(1)), error);
}

TEST_CASE("trivial extension squares the ideal part to zero") {
    // A = Z/4, I = (2), rank 2: order 4 * 2^2 = 16
    auto A = zmod(4);
    auto R = trivial_extension(A, principal_ideal(A, 2), 2);
    REQUIRE(R->order == 16);
    CHECK(R->characteristic == 4);
    CHECK(R->name(R->zero) == "(0,([0],[0]))");

    // (0,e1)*(0,e2) = (0,0): the module part multiplies to nothing
    const long module = 4;  // |A/I|^2
    for (long e1 = 0; e1 < module; ++e1)
        for (long e2 = 0; e2 < module; ++e2)
            CHECK(R->m(static_cast<elem>(e1), static_cast<elem>(e2)) == R->zero);

    // F2 (+) F2 is the order-4 ring with a square-zero element
    auto B = zmod(2);
    auto E = trivial_extension(B, principal_ideal(B, 0), 1);
    REQUIRE(E->order == 4);
    CHECK(E->characteristic == 2);
    elem eps = no_elem;
    for (elem x = 0; x < E->order; ++x)
        if (x != E->zero && E->m(x, x) == E->zero) eps = x;
    REQUIRE(eps != no_elem);
    CHECK(E->m(eps, E->a(E->one, eps)) == eps);  // eps*(1+eps) = eps

    // Z/9 (+) Z/3: (3,0) squares to zero because 3*3 = 0 and 3 kills A/I
    auto A9 = zmod(9);
    auto R27 = trivial_extension(A9, principal_ideal(A9, 3), 1);
    REQUIRE(R27->order == 27);
    elem three = no_elem;
    for (elem x = 0; x < R27->order; ++x)
        if (R27->name(x) == "(3,[0])") three = x;
    REQUIRE(three != no_elem);
    CHECK(R27->m(three, three) == R27->zero);

    CHECK_THROWS_AS(trivial_extension(A, principal_ideal(A, 2), 0), error);
    RunConfig tight;
    tight.order_cap = 15;
    CHECK_THROWS_MATCHES(trivial_extension(A, principal_ideal(A, 2), 2, tight), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.kind() == errc::order_limit_exceeded;
                         }));
}

TEST_CASE("provenance names compose") {
    auto A = zmod(9);
    auto R = trivial_extension(A, principal_ideal(A, 3), 1);
    CHECK(R->provenance.name() == "triv_ext(zmod(9); (3); r=1)");
    auto L = localize(zmod(6), {3});
    CHECK(L.ring->provenance.name() == "loc(zmod(6); 3)");
}
