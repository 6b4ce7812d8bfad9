#include <doctest.h>

#include <vector>

#include "mmmcalc/char_rings.hpp"
#include "mmmcalc/gysin.hpp"
#include "mmmcalc/symmetric.hpp"

using namespace mmm;

TEST_CASE("vertical tangent classes of the plane bundle") {
    ProjectiveBundle P = cp2_over_bsu3();
    CHECK(P.m() == 2);
    CHECK(P.fibre_dim() == 4);
    const RingPtr& tot = P.total();
    const Poly z = P.z(), c4 = P.pullback(P.base()->gen("c4")),
               c6 = P.pullback(P.base()->gen("c6"));
    CHECK(P.vertical_chern()[0] == Rational(3) * z);
    CHECK(P.vertical_chern()[1] == tot->reduce(Rational(3) * z * z + c4));
    CHECK(P.vertical_pont()[0] == tot->reduce(Rational(3) * z * z - Rational(2) * c4));
    CHECK(P.vertical_pont()[1] == tot->reduce(pow(Rational(3) * z * z + c4, 2)));
    CHECK(P.vertical_euler() == P.vertical_chern()[1]);
    // Defining relation: z^3 = -(c4 z + c6).
    CHECK(tot->reduce(P.z(3)) == tot->reduce(-(c4 * z + c6)));
}

TEST_CASE("pushforward extracts the top fibre coordinate") {
    ProjectiveBundle P = cp2_over_bsu3();
    const Poly c4 = P.base()->gen("c4"), c6 = P.base()->gen("c6");
    CHECK(P.gysin(P.total()->one()).is_zero());
    CHECK(P.gysin(P.z()).is_zero());
    CHECK(P.gysin(P.z(2)) == P.base()->one());
    CHECK(P.gysin(P.z(3)).is_zero());
    CHECK(P.gysin(P.z(4)) == -c4);
    CHECK(P.gysin(P.z(5)) == -c6);
    // Module linearity over the base.
    CHECK(P.gysin(P.pullback(c6) * P.z(2)) == c6);
    // to_base inverts pullback.
    CHECK(P.to_base(P.pullback(c4 * c6)) == P.base()->reduce(c4 * c6));
}

TEST_CASE("frozen pushforward values over the rank-three base") {
    ProjectiveBundle P = cp2_over_bsu3();
    RingPtr so4 = so_ring(4);
    const Poly c4 = P.base()->gen("c4");
    CHECK(P.kappa(so4->gen("chi")) == Rational(3) * P.base()->one());
    CHECK(P.kappa(so4->gen("p4", 2)) == Rational(-21) * c4);
    CHECK(P.kappa(so4->gen("p8")) == Rational(-3) * c4);
    CHECK(P.kappa(so4->reduce(so4->gen("p4") * so4->gen("chi"))) == Rational(-12) * c4);
    // The degree-4 signature class pushes to 1.
    const Poly l4 = rename_into(l_class_component(1, 2), *so4);
    CHECK(P.kappa(l4) == P.base()->one());
}

TEST_CASE("pushforward tables and their kernels") {
    ProjectiveBundle P = cp2_over_bsu3();
    const KappaTable full = kappa_table(P, 8, KappaDomain::full);
    REQUIRE(full.domain_basis.size() == 3);
    REQUIRE(full.target_basis.size() == 1);
    // Columns follow the descending monomial order p4 chi, p8, p4^2.
    CHECK(full.matrix == Mat{{-12, -3, -21}});
    RingPtr so4 = so_ring(4);
    const auto ker = full.kernel();
    CHECK(ker.size() == 2);
    const Poly sq = so4->reduce(pow(so4->gen("p4") - so4->gen("chi"), 2));
    CHECK(poly_in_span(ker, sq));

    const KappaTable pont = kappa_table(P, 8, KappaDomain::pont);
    const auto pker = pont.kernel();
    REQUIRE(pker.size() == 1);
    RingPtr p4r = pont_ring(4);
    CHECK(same_poly_span(pker, {rename_into(l_class_component(2, 2), *p4r)}));
    // apply agrees with the direct pushforward.
    CHECK(pont.apply(p4r->gen("p8")) == P.kappa(rename_into(p4r->gen("p8"), *so4)));
}

TEST_CASE("trivial bundles push the euler class to the fibre characteristic") {
    for (int m = 1; m <= 3; ++m) {
        ProjectiveBundle P = trivial_cpm(m);
        const Poly chi = so_ring(2 * m)->gen("chi");
        CHECK(P.kappa(chi) == Rational(m + 1) * P.base()->one());
    }
    ProjectiveBundle P = trivial_cpm(2);
    // p4 integrates to three times the signature of the fibre.
    CHECK(P.kappa(so_ring(4)->gen("p4")) == Rational(3) * P.base()->one());
    const Poly l4 = rename_into(l_class_component(1, 2), *so_ring(4));
    CHECK(P.kappa(l4) == P.base()->one());
    // Transfer of 1 multiplies by the fibre characteristic.
    CHECK(P.transfer(P.total()->one()) == Rational(3) * P.base()->one());
}

TEST_CASE("sphere bundle pushforward doubles the euler coordinate") {
    CHECK(sphere_bundle_gysin(1, so_ring(2)->gen("chi")) ==
          Rational(2) * pont_ring(3)->one());
    RingPtr so4 = so_ring(4);
    CHECK(sphere_bundle_gysin(2, so4->gen("p4")).is_zero());
    CHECK(sphere_bundle_gysin(2, so4->reduce(so4->gen("chi") * so4->gen("p4"))) ==
          Rational(2) * pont_ring(5)->gen("p4"));
    // chi^2 reduces to p8, which has no euler coordinate.
    CHECK(sphere_bundle_gysin(2, so4->reduce(so4->gen("chi", 2))).is_zero());
}

TEST_CASE("chern character pushforward coefficients") {
    const ChPushforwardReport rep = ch_pushforward(2, 3);
    REQUIRE(rep.pipeline.size() == 4);
    CHECK(rep.pipeline[0] == Rational(3, 2));
    CHECK(rep.pipeline[1] == Rational(-5, 8));
    CHECK(rep.pipeline[2] == Rational(7, 80));
    CHECK(rep.matches_series);
    CHECK(rep.matches_single);
    CHECK(!rep.matches_double);
    CHECK(rep.all_nonzero);
    // Leading coefficient in general: (m+1)/m!.
    for (int m = 2; m <= 4; ++m)
        CHECK(ch_pushforward(m, 0).pipeline[0] == Rational(m + 1) / Rational(factorial(m)));
}

TEST_CASE("composite pushforward over the product base") {
    const HoloReport rep = composite_pushforward_holomorphic(10, 2, 3);
    CHECK(rep.proj_gysin_ok);
    CHECK(rep.pullback_killed);
    CHECK(rep.transitivity_ok);
    CHECK(rep.matches_expected);
    REQUIRE(rep.composite.size() == 3);
    CHECK(rep.composite[0] == Rational(-5, 8));
    CHECK(rep.composite[1] == Rational(7, 40));
    CHECK(rep.expected[1] == Rational(2) * Rational(7, 80));
}

TEST_CASE("product bundles push forward factorwise") {
    ProductBundle P(cp2_over_bsu3(), trivial_cpm(1));
    const Poly za = P.first().z(2);
    const Poly zb = P.second().z(1);
    CHECK(P.gysin(P.embed_total(za, zb)) == P.base().ring->one());
    CHECK(P.gysin(P.embed_total(P.first().z(1), zb)).is_zero());

    // The split pushforward through the truncated Whitney map agrees with
    // the direct one on the joint Pontrjagin ring.
    RingPtr dom = pont_ring(6);
    for (const auto& mono : dom->basis(8)) {
        const Poly cls = Poly::term(dom->table(), mono, Rational(1));
        CHECK(P.kappa_via_restriction(cls) == P.kappa(cls));
    }
    for (const auto& mono : dom->basis(12)) {
        const Poly cls = Poly::term(dom->table(), mono, Rational(1));
        CHECK(P.kappa_via_restriction(cls) == P.kappa(cls));
    }
}
