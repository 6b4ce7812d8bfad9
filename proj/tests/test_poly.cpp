#include <doctest.h>

#include "mmmcalc/poly.hpp"

using namespace mmm;

TEST_CASE("even generators commute") {
    TablePtr t = make_table({{"a", 2}, {"b", 4}});
    const Poly a = Poly::generator(t, 0), b = Poly::generator(t, 1);
    CHECK(a * b == b * a);
    CHECK(pow(a + b, 2) == a * a + Rational(2) * (a * b) + b * b);
}

TEST_CASE("odd generators anticommute and square to zero") {
    TablePtr t = make_table({{"u", 3}, {"v", 3}});
    const Poly u = Poly::generator(t, 0), v = Poly::generator(t, 1);
    CHECK((u * u).is_zero());
    CHECK(u * v == -(v * u));
    CHECK(koszul_sign(*t, Monomial{1, 0}, Monomial{0, 1}) == 1);
    CHECK(koszul_sign(*t, Monomial{0, 1}, Monomial{1, 0}) == -1);
    CHECK(koszul_sign(*t, Monomial{1, 0}, Monomial{1, 0}) == 0);
}

TEST_CASE("mixed parity signs") {
    TablePtr t = make_table({{"x", 3}, {"y", 2}});
    const Poly x = Poly::generator(t, 0), y = Poly::generator(t, 1);
    CHECK(x * y == y * x);
    CHECK((x * y) * x == Poly(t));
}

TEST_CASE("grading helpers") {
    TablePtr t = make_table({{"a", 2}, {"b", 4}});
    const Poly a = Poly::generator(t, 0), b = Poly::generator(t, 1);
    const Poly p = a * a + b + Poly::constant(t, 5);
    CHECK(p.degree() == 4);
    CHECK(!p.homogeneous_degree().has_value());
    CHECK(p.graded_component(4) == a * a + b);
    CHECK(p.graded_component(0) == Poly::constant(t, 5));
    CHECK(p.truncate_above(0) == Poly::constant(t, 5));
    CHECK((a * a + b).is_homogeneous(4));
    CHECK(Poly(t).is_homogeneous(12));
    CHECK(Poly(t).degree() == -1);
}

TEST_CASE("monomial order weighs later table positions more") {
    TablePtr t = make_table({{"p4", 4}, {"p8", 8}});
    // Same degree: p8 = (0,1) beats p4^2 = (2,0).
    CHECK(monomial_less(*t, Monomial{2, 0}, Monomial{0, 1}));
    CHECK(!monomial_less(*t, Monomial{0, 1}, Monomial{2, 0}));
    // Degree dominates.
    CHECK(monomial_less(*t, Monomial{0, 1}, Monomial{3, 0}));
}

TEST_CASE("coefficient bookkeeping") {
    TablePtr t = make_table({{"a", 2}});
    Poly p(t);
    p.add_term(Monomial{1}, Rational(1, 2));
    p.add_term(Monomial{1}, Rational(-1, 2));
    CHECK(p.is_zero());
    p.add_term(Monomial{2}, Rational(3));
    CHECK(p.coeff(Monomial{2}) == Rational(3));
    CHECK(p.coeff(Monomial{1}) == Rational(0));
    CHECK(p.term_count() == 1);
    CHECK((p - p).is_zero());
    CHECK((-p + p).is_zero());
    CHECK(Poly::constant(t, 7).constant_coeff() == Rational(7));
}
