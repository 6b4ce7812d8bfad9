#include <doctest.h>

#include "mmmcalc/error.hpp"
#include "mmmcalc/rational.hpp"

using namespace mmm;

TEST_CASE("rational text round trip") {
    CHECK(to_string(Rational(7, 3)) == "7/3");
    CHECK(to_string(Rational(-4, 2)) == "-2");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(parse_rational("42") == Rational(42));
    CHECK(parse_rational("-5/10") == Rational(-1, 2));
    CHECK(parse_rational("+3/4") == Rational(3, 4));
    CHECK_THROWS_AS(parse_rational(""), Error);
    CHECK_THROWS_AS(parse_rational("1/"), Error);
    CHECK_THROWS_AS(parse_rational("a/b"), Error);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
}

TEST_CASE("factorials and binomials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(double_factorial(0) == 1);
    CHECK(double_factorial(1) == 1);
    CHECK(double_factorial(5) == 15);
    CHECK(double_factorial(6) == 48);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 7) == 0);
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == Rational(0));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    CHECK(bernoulli_upto(6).size() == 7);
    CHECK(bernoulli_upto(6)[6] == Rational(1, 42));
}
