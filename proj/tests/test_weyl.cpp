#include <doctest.h>

#include "mmmcalc/char_rings.hpp"
#include "mmmcalc/gysin.hpp"
#include "mmmcalc/io.hpp"
#include "mmmcalc/symmetric.hpp"
#include "mmmcalc/weyl.hpp"

using namespace mmm;

TEST_CASE("torus model and the permutation action") {
    TorusModel T = torus_model();
    REQUIRE(T.action.size() == 6);
    const Poly x1 = T.x1(), x2 = T.x2();
    CHECK(T.x3() == -x1 - x2);
    // The identity comes first.
    CHECK(T.action[0][0] == x1);
    CHECK(T.action[0][1] == x2);
    // Summing over all six permutations symmetrizes: x1^2 hits each of the
    // three squares twice, and x1^2 + x2^2 + x3^2 = 2(x1^2 + x1 x2 + x2^2).
    const Poly avg = phi_average(T, x1 * x1);
    CHECK(avg == Rational(4) * (x1 * x1 + x1 * x2 + x2 * x2));
}

TEST_CASE("fixed point components of the fibrewise euler class") {
    TorusModel T = torus_model();
    const auto z = z_basis(T);
    REQUIRE(z.size() == 3);
    const Poly x1 = T.x1(), x2 = T.x2();
    CHECK(z[0] == Rational(2) * x1 * x1 - x1 * x2 - x2 * x2);
    CHECK(z[1] == -(x1 * x1) - x1 * x2 + Rational(2) * (x2 * x2));
    CHECK(z[2] == Rational(2) * x1 * x1 + Rational(5) * x1 * x2 + Rational(2) * x2 * x2);
    // Their power sums are invariant.
    CHECK(s_power(T, 1) == Rational(3) * (x1 * x1 + x1 * x2 + x2 * x2));
    CHECK(phi_average(T, z[0]) == Rational(2) * s_power(T, 1));
}

TEST_CASE("restrictions of the vertical classes") {
    TorusModel T = torus_model();
    const auto [chi, p4] = chi_p4_images(T);
    CHECK(chi == z_basis(T)[0]);
    CHECK(p4 == z_basis(T)[0] + s_power(T, 1));
    const auto cw = su3_cw_images(T);
    REQUIRE(cw.size() == 2);
    CHECK(cw[0] == Rational(-1, 3) * s_power(T, 1));
    const Poly x1 = T.x1(), x2 = T.x2();
    CHECK(cw[1] == T.ring->reduce(x1 * x2 * T.x3()));
}

TEST_CASE("binomial change of basis is unimodular") {
    for (int d = 1; d <= 8; ++d) {
        const Rational dt = binomial_matrix_det(d);
        CHECK((dt == 1 || dt == -1));
    }
    CHECK(binomial_matrix(2).size() == 3);
}

TEST_CASE("image dimension of the averaged restriction") {
    // With free z variables the averaged span has the generic dimension d.
    for (int d = 1; d <= 4; ++d) CHECK(formal_image_dimension(d) == d);
    for (int d = 2; d <= 6; ++d) CHECK(formal_power_sum_independent(d));

    // On the torus the relation s2 = s1^2 collapses the rank to the number
    // of invariant monomials s1^a s3^b with 2a + 3b = d.
    TorusModel T = torus_model();
    CHECK(s_power(T, 2) == pow(s_power(T, 1), 2));
    const int expect[] = {1, 1, 2, 2};
    for (int d = 1; d <= 4; ++d) CHECK(image_dimension(T, d) == expect[d - 1]);
}

TEST_CASE("decomposition into signature part and euler multiple") {
    RingPtr so4 = so_ring(4);
    const Poly l8 = rename_into(l_class_component(2, 2), *so4);
    const auto dec = decompose_so4(l8);
    CHECK(dec.a == Rational(1));
    CHECK(dec.F.is_zero());

    const Poly x = so4->reduce(so4->gen("p4") * so4->gen("chi"));
    const auto dx = decompose_so4(x);
    CHECK(dx.a == Rational(0));
    CHECK(dx.F.term_count() == 1);

    // A generic class splits and reassembles: the signature coefficient of
    // p4^2 + p8 is read off against -1/45 * p4^2 + ..., and the remainder
    // 8 p8 becomes 8 chi^2, so F = 8 chi.
    const Poly y = so4->reduce(pow(so4->gen("p4"), 2) + so4->gen("p8"));
    const auto dy = decompose_so4(y);
    CHECK(dy.a == Rational(-45));
    CHECK(print_poly(dy.F) == "8*chi");
}

TEST_CASE("averaged restriction matrix doubles the transported table") {
    for (int d = 1; d <= 2; ++d) {
        const Mat W = weyl_matrix(d);
        const KappaTable t =
            kappa_table(cp2_over_bsu3(), 4 * d + 4, KappaDomain::full);
        const Mat C = cw_transport(t);
        REQUIRE(W.size() == C.size());
        for (size_t r = 0; r < W.size(); ++r) {
            REQUIRE(W[r].size() == C[r].size());
            for (size_t c = 0; c < W[r].size(); ++c)
                CHECK(W[r][c] == Rational(2) * C[r][c]);
        }
    }
}

TEST_CASE("kernel computed through the averaged restriction") {
    const SubspaceSpec k = kernel_via_weyl(1);
    CHECK(k.basis.size() == 2);
    const KappaTable t = kappa_table(cp2_over_bsu3(), 8, KappaDomain::full);
    CHECK(same_poly_span(k.basis, t.kernel()));
    RingPtr so4 = so_ring(4);
    CHECK(poly_in_span(k.basis, so4->reduce(pow(so4->gen("p4") - so4->gen("chi"), 2))));
}
