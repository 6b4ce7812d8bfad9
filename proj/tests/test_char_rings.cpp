#include <doctest.h>

#include <vector>

#include "mmmcalc/char_rings.hpp"
#include "mmmcalc/error.hpp"
#include "mmmcalc/symmetric.hpp"

using namespace mmm;

TEST_CASE("standard ring generators") {
    CHECK(so_ring(5)->gen_count() == 2);  // p4, p8
    CHECK(so_ring(4)->gen_count() == 3);  // p4, p8, chi
    CHECK(su_ring(3)->gen_count() == 2);  // c4, c6
    CHECK(pont_ring(9)->gen_count() == 4);
    CHECK(pont_ring(9)->table()->index_of("p16").has_value());
    CHECK_THROWS_AS(so_ring(1), Error);
}

TEST_CASE("pontrjagin bases and coordinates") {
    const auto b = pont_basis(4, 8);
    REQUIRE(b.size() == 2);  // descending: p8, p4^2
    RingPtr pont = pont_ring(4);
    CHECK(b[0] == pont->gen("p8"));
    CHECK(b[1] == pont->gen("p4", 2));
    const Poly l8 = Rational(7, 45) * pont->gen("p8") - Rational(1, 45) * pont->gen("p4", 2);
    CHECK(coordinates(l8, b) == Vec{Rational(7, 45), Rational(-1, 45)});
    CHECK_THROWS_AS(coordinates(pont->gen("p4"), b), Error);
}

TEST_CASE("rename between presentations by generator name") {
    RingPtr pont = pont_ring(4);
    RingPtr so4 = so_ring(4);
    const Poly p = pont->gen("p4", 2) - Rational(2) * pont->gen("p8");
    const Poly q = rename_into(p, *so4);
    CHECK(q == so4->gen("p4", 2) - Rational(2) * so4->gen("p8"));
    CHECK_THROWS_AS(rename_into(so4->gen("chi"), *pont), Error);
}

TEST_CASE("whitney map is a ring map with root-partition coefficients") {
    TensorRing t = whitney_target(4, 5);
    RingPtr dom = pont_ring(9);
    const Poly a = whitney_image(t, 4, 5, dom->gen("p8"));
    // p8 -> p8 (x) 1 + p4 (x) p4' + 1 (x) p8'.
    const Poly expected = embed_left(t, pont_ring(4)->gen("p8")) +
                          embed_left(t, pont_ring(4)->gen("p4")) *
                              embed_right(t, pont_ring(5)->gen("p4")) +
                          embed_right(t, pont_ring(5)->gen("p8"));
    CHECK(a == expected);
    // Multiplicativity on a product.
    const Poly prod = whitney_image(t, 4, 5, dom->reduce(dom->gen("p4") * dom->gen("p8")));
    CHECK(prod == whitney_image(t, 4, 5, dom->gen("p4")) * a);
    // Components beyond a factor's rank vanish: p16 has no p12/p16 term on
    // either side of the (4,5) split beyond what the factors support.
    const Poly top = whitney_image(t, 4, 5, dom->gen("p16"));
    CHECK(!top.is_zero());
    for (const auto& [mono, c] : top.terms()) {
        const auto [dl, dr] = t.bidegree(mono);
        CHECK(dl + dr == 16);
        CHECK(dl <= 8);  // Pont(4) stops at p8
    }
}

TEST_CASE("truncation keeps components at or above the fibre dimensions") {
    TensorRing t = whitney_target(2, 2);
    RingPtr dom = pont_ring(4);
    // r(p4) drops both pure components.
    CHECK(whitney_restriction(t, 2, 2, dom->gen("p4")).is_zero());
    // r(p8) = p4 (x) p4'.
    const Poly r8 = whitney_restriction(t, 2, 2, dom->gen("p8"));
    CHECK(r8 == embed_left(t, pont_ring(2)->gen("p4")) * embed_right(t, pont_ring(2)->gen("p4")));
    // r(p4^2) = 2 p4 (x) p4'.
    CHECK(whitney_restriction(t, 2, 2, dom->gen("p4", 2)) == Rational(2) * r8);
}

TEST_CASE("kernel in the first interesting degree is the power sum") {
    const SubspaceSpec k = kernel_intersection(4, 8);
    REQUIRE(k.basis.size() == 1);
    RingPtr pont = pont_ring(4);
    const Poly s2 = pont->gen("p4", 2) - Rational(2) * pont->gen("p8");
    CHECK(same_poly_span(k.basis, {s2}));
    CHECK(same_subspace(k, closed_form_kernel(4, 8)));
}

TEST_CASE("kernel grids agree with the closed form") {
    for (const auto& [n, deg] : std::vector<std::pair<int, int>>{
             {4, 12}, {6, 12}, {6, 16}, {7, 8}, {8, 16}}) {
        const SubspaceSpec a = kernel_intersection(n, deg);
        const SubspaceSpec b = closed_form_kernel(n, deg);
        CAPTURE(n);
        CAPTURE(deg);
        CHECK(same_subspace(a, b));
    }
    // Below the fibre dimension the kernel is zero.
    CHECK(kernel_intersection(8, 4).basis.empty());
    CHECK(closed_form_kernel(8, 4).basis.empty());
}

TEST_CASE("span comparisons handle non-monomial bases") {
    RingPtr so4 = so_ring(4);
    const Poly a = so4->gen("p4") - so4->gen("chi");
    CHECK(poly_in_span({a}, Rational(2) * a));
    CHECK(!poly_in_span({a}, so4->gen("p4")));
    CHECK(same_poly_span({a, so4->gen("p8")}, {so4->gen("p8"), a + so4->gen("p8")}));
    CHECK_THROWS_AS(make_subspace(4, 4, {a, Rational(3) * a}), Error);
}
