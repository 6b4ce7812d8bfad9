#include <doctest.h>

#include "mmmcalc/char_rings.hpp"
#include "mmmcalc/error.hpp"
#include "mmmcalc/gysin.hpp"
#include "mmmcalc/loop.hpp"
#include "mmmcalc/symmetric.hpp"

using namespace mmm;

TEST_CASE("transgression on one even generator") {
    RingPtr src = RingPresentation::free_ring({{"x", 2}});
    LoopAlgebra L = make_loop(src);
    REQUIRE(L.count == 1);
    const Poly y = L.target->gen("x"), t = L.target->gen("t_x");
    CHECK(trg(L, src->one()).is_zero());
    CHECK(trg(L, src->gen("x")) == t);
    CHECK(trg(L, src->gen("x", 2)) == Rational(2) * y * t);
    CHECK(trg(L, src->gen("x", 3)) == Rational(3) * y * y * t);
    CHECK(eta_pullback(L, src->gen("x", 2)) == y * y);
}

TEST_CASE("product rule matches the closed monomial expansion") {
    RingPtr src = su_ring(3);
    LoopAlgebra L = make_loop(src);
    for (int d = 4; d <= 20; d += 2) {
        for (const auto& mono : src->basis(d)) {
            const Poly direct = trg(L, Poly::term(src->table(), mono, Rational(1)));
            CHECK(direct == trg_monomial_closed(L, mono));
        }
    }
    // Explicit two-factor instance: trg(c4 c6) = c4 t_c6 + t_c4 c6.
    const Poly got = trg(L, src->reduce(src->gen("c4") * src->gen("c6")));
    const Poly want = L.target->reduce(
        L.target->gen("c4") * L.target->gen("t_c6") +
        L.target->gen("t_c4") * L.target->gen("c6"));
    CHECK(got == want);
}

TEST_CASE("transgression lowers degree by one and is injective on graded pieces") {
    RingPtr src = su_ring(3);
    LoopAlgebra L = make_loop(src);
    const Poly v = trg(L, src->gen("c4", 3));
    CHECK(v.is_homogeneous(11));
    CHECK(trg_injectivity_check(L, 20));
}

TEST_CASE("iterated transgression") {
    RingPtr src = RingPresentation::free_ring({{"c", 4}});
    IteratedLoop chain = make_iterated_loop(src, 2);
    REQUIRE(chain.stages.size() == 2);
    const RingPtr& mid = chain.stages[0].target;
    const Poly first = trg(chain.stages[0], src->gen("c", 2));
    CHECK(first == Rational(2) * mid->gen("c") * mid->gen("t_c"));
    const Poly out = iterate_trg(chain, src->gen("c", 2));
    CHECK(out == trg(chain.stages[1], first));
    CHECK(out.is_homogeneous(6));
    // c t_t_c plus one cross term in the two odd degree-3 images.
    const RingPtr& tgt = chain.final_target();
    CHECK(out.term_count() == 2);
    const Poly lead = Rational(2) * tgt->reduce(tgt->gen("c") * tgt->gen("t_t_c"));
    CHECK((out - lead).term_count() == 1);

    IteratedLoop three = make_iterated_loop(src, 3);
    const Poly third = iterate_trg(three, src->gen("c", 2));
    CHECK(!third.is_zero());
    CHECK(third.is_homogeneous(5));
    // Generators must stay above the iteration depth.
    CHECK_THROWS_AS(make_iterated_loop(RingPresentation::free_ring({{"x", 2}}), 3), Error);
}

TEST_CASE("looped pushforward table kills exactly the signature class") {
    ProjectiveBundle P = cp2_over_bsu3();
    const KappaTable base = kappa_table(P, 8, KappaDomain::pont);
    const KappaTable looped = loop_kappa(base);
    CHECK(looped.n == 5);
    REQUIRE(looped.domain_ring->table()->index_of("p8").has_value());
    const Poly l8 = rename_into(l_class_component(2, 2), *looped.domain_ring);
    CHECK(looped.apply(l8).is_zero());
    CHECK(!looped.apply(looped.domain_ring->gen("p8")).is_zero());
    CHECK(same_poly_span(looped.kernel(), {l8}));
}
