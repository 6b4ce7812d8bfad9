#include <doctest.h>

#include <string>

#include "mmmcalc/char_rings.hpp"
#include "mmmcalc/error.hpp"
#include "mmmcalc/gysin.hpp"
#include "mmmcalc/io.hpp"
#include "mmmcalc/symmetric.hpp"

using namespace mmm;

#ifndef MMM_SHARE_DIR
#define MMM_SHARE_DIR "share"
#endif

TEST_CASE("printing is deterministic and descending") {
    RingPtr pont = pont_ring(4);
    CHECK(print_poly(pont->zero()) == "0");
    CHECK(print_poly(pont->constant(Rational(-3, 7))) == "-3/7");
    CHECK(print_poly(pont->gen("p4")) == "p4");
    CHECK(print_poly(-pont->gen("p4")) == "-p4");
    const Poly l8 = rename_into(l_class_component(2, 2), *pont);
    CHECK(print_poly(l8) == "7/45*p8 - 1/45*p4^2");
    const Poly mixed = pont->gen("p4", 3) + pont->constant(Rational(2)) -
                       Rational(5) * pont->reduce(pont->gen("p4") * pont->gen("p8"));
    CHECK(print_poly(mixed) == "-5*p4*p8 + p4^3 + 2");
}

TEST_CASE("parsing round trips") {
    RingPtr so4 = so_ring(4);
    const Poly p = parse_poly("(p4 - chi)^2", *so4);
    CHECK(p == so4->reduce(pow(so4->gen("p4") - so4->gen("chi"), 2)));
    CHECK(parse_poly("7/45*p8 - 1/45*p4^2", *so4) ==
          Rational(7, 45) * so4->gen("p8") - Rational(1, 45) * so4->gen("p4", 2));
    CHECK(parse_poly(" - 2 * p4 * chi ", *so4) ==
          Rational(-2) * so4->reduce(so4->gen("p4") * so4->gen("chi")));
    CHECK(parse_poly("3", *so4) == so4->constant(Rational(3)));
    CHECK(parse_poly("1/2 * (p4 + p4)", *so4) == so4->gen("p4"));
    // Reduction happens on parse: chi^2 normalizes to p8.
    CHECK(parse_poly("chi^2", *so4) == so4->gen("p8"));
    for (const std::string& expr :
         {"p4^2 - 2*p8", "chi", "-p4 + 3*p8", "p4*chi - 1/3*p8"}) {
        const Poly q = parse_poly(expr, *so4);
        CHECK(parse_poly(print_poly(q), *so4) == q);
    }
}

TEST_CASE("parse errors are rejected") {
    RingPtr so4 = so_ring(4);
    CHECK_THROWS_AS(parse_poly("", *so4), Error);
    CHECK_THROWS_AS(parse_poly("p4 +", *so4), Error);
    CHECK_THROWS_AS(parse_poly("p4^^2", *so4), Error);
    CHECK_THROWS_AS(parse_poly("bogus", *so4), Error);
    CHECK_THROWS_AS(parse_poly("p4 p8", *so4), Error);
    CHECK_THROWS_AS(parse_poly("(p4", *so4), Error);
    CHECK_THROWS_AS(parse_poly("p4^(2)", *so4), Error);
}

TEST_CASE("ring and bundle files load") {
    const std::string dir = MMM_SHARE_DIR;
    const BundleSpec spec = parse_bundle_json(read_file(dir + "/bundles/bsu3.json"));
    CHECK(spec.rank == 3);
    REQUIRE(spec.chern.size() == 3);
    CHECK(spec.chern[0].is_zero());
    CHECK(spec.chern[1] == spec.base->gen("c4"));
    ProjectiveBundle P(spec);
    CHECK(P.kappa(so_ring(4)->gen("chi")) == Rational(3) * P.base()->one());

    const BundleSpec flag =
        parse_bundle_json(read_file(dir + "/bundles/cp1_x_cp20.json"));
    CHECK(flag.base->reduce(flag.base->gen("x", 21)).is_zero());
    CHECK(flag.base->reduce(flag.base->gen("z", 2)).is_zero());

    const BundleSpec tw =
        parse_bundle_json(read_file(dir + "/bundles/bsu2_plus_trivial.json"));
    CHECK(tw.rank == 3);
    CHECK(tw.chern[1] == tw.base->gen("u"));
}

TEST_CASE("json parse failures raise library errors") {
    CHECK_THROWS_AS(read_file("no/such/file.json"), Error);
    CHECK_THROWS_AS(parse_ring_json("{"), Error);
    CHECK_THROWS_AS(parse_ring_json("{\"generators\": 3}"), Error);
    CHECK_THROWS_AS(
        parse_bundle_json("{\"base\": {\"generators\": []}, \"rank\": 0}"), Error);
}
