#include <doctest.h>

#include <vector>

#include "mmmcalc/char_rings.hpp"
#include "mmmcalc/rational.hpp"
#include "mmmcalc/symmetric.hpp"

using namespace mmm;

TEST_CASE("elementary symmetric polynomials and the inverse change of basis") {
    RingPtr vars = var_ring(3, 2);
    RingPtr elem = elementary_ring(3, 2);
    CHECK(elementary_in_vars(vars, 2).term_count() == 3);
    CHECK(is_symmetric(elementary_in_vars(vars, 3)));

    const Poly p = elem->gen(0) * elem->gen(1) - Rational(3) * elem->gen(2);
    const Poly expanded = expand_in_vars(p, elem, vars);
    CHECK(is_symmetric(expanded));
    CHECK(express_in_elementary(expanded, vars, elem) == p);

    const Poly asym = vars->gen(0) - vars->gen(1);
    CHECK(!is_symmetric(asym));
}

TEST_CASE("power sums via newton identities") {
    // s_2 = e1^2 - 2 e2 in the degree-4 elementary names p4, p8.
    RingPtr elem = elementary_ring(2, 4);
    CHECK(power_sum(2, 2, 4) == elem->gen("p4", 2) - Rational(2) * elem->gen("p8"));
    // s_3 = e1^3 - 3 e1 e2 + 3 e3.
    RingPtr e3 = elementary_ring(3, 4);
    CHECK(power_sum(3, 3, 4) ==
          e3->gen("p4", 3) - Rational(3) * e3->gen("p4") * e3->gen("p8") +
              Rational(3) * e3->gen("p12"));
}

TEST_CASE("signature series coefficients") {
    const PowerSeries f = l_series(3);
    CHECK(f[0] == Rational(1));
    CHECK(f[1] == Rational(1, 3));
    CHECK(f[2] == Rational(-1, 45));
    CHECK(f[3] == Rational(2, 945));
}

TEST_CASE("signature sequence components") {
    const Poly l1 = l_class_component(1, 1);
    CHECK(l1 == Rational(1, 3) * elementary_ring(1, 4)->gen("p4"));

    const Poly l2 = l_class_component(2, 2);
    RingPtr e2 = elementary_ring(2, 4);
    CHECK(l2 == Rational(7, 45) * e2->gen("p8") - Rational(1, 45) * e2->gen("p4", 2));

    const Poly l3 = l_class_component(3, 3);
    RingPtr e3 = elementary_ring(3, 4);
    CHECK(l3 == (Rational(62) * e3->gen("p12") - Rational(13) * e3->gen("p4") * e3->gen("p8") +
                 Rational(2) * e3->gen("p4", 3)) *
                    Rational(1, 945));

    // Stability: the same component in more variables restricts back.
    const Poly l2wide = l_class_component(2, 4);
    RingPtr narrow = elementary_ring(2, 4);
    const std::vector<Poly> images{narrow->gen("p4"), narrow->gen("p8"), narrow->zero(),
                                   narrow->zero()};
    CHECK(substitute(l2wide, images, *narrow) == l2);
}

TEST_CASE("signature of complex projective spaces is one") {
    // On CP^{2d}, p_{4k} = C(2d+1, k) h^{2k}, and h^{2d} evaluates to 1.
    for (size_t d = 1; d <= 4; ++d) {
        const Poly ld = l_class_component(d, d);
        RingPtr elem = elementary_ring(d, 4);
        Rational sig(0);
        for (const auto& [mono, c] : ld.terms()) {
            Rational prod = c;
            for (size_t k = 0; k < mono.size(); ++k)
                for (int e = 0; e < mono[k]; ++e)
                    prod *= Rational(binomial(2 * static_cast<long long>(d) + 1,
                                              static_cast<long long>(k) + 1));
            sig += prod;
        }
        CHECK(sig == Rational(1));
    }
}

TEST_CASE("character components") {
    // ch_2 = s_1 = c2 on two Chern roots of degree 2.
    RingPtr ce = elementary_ring(2, 2);
    CHECK(character_component(CharKind::chern, 1, 2, true) == ce->gen("c2"));
    // ch_4 = s_2 / 2! = (c2^2 - 2 c4) / 2.
    CHECK(character_component(CharKind::chern, 2, 2, true) ==
          Rational(1, 2) * (ce->gen("c2", 2) - Rational(2) * ce->gen("c4")));
    // ph_4 = 2 s_1 / 2! = p4.
    RingPtr pe = elementary_ring(2, 4);
    CHECK(character_component(CharKind::pontrjagin, 1, 2, true) == pe->gen("p4"));
    // Bare power sum.
    CHECK(character_component(CharKind::pontrjagin, 2, 2, false) ==
          pe->gen("p4", 2) - Rational(2) * pe->gen("p8"));
}

TEST_CASE("one-dimensionality of the defining recursion") {
    MultiplicativeSequence seq(l_series(4), 4);
    CHECK(verify_powerseries_lemma(seq, 2, 3));
    CHECK(verify_powerseries_lemma(seq, 3, 3));
    CHECK(verify_powerseries_lemma(seq, 3, 4));
}

TEST_CASE("high signature components stay integral multiples of the leading term") {
    // The p4^d coefficient of the degree-4d component is nonzero through d = 10.
    for (size_t d = 1; d <= 10; ++d) {
        const Poly ld = l_class_component(d, 2);
        Monomial lead{static_cast<int>(d), 0};
        CHECK(ld.coeff(lead) != 0);
    }
}
