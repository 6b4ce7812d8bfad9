#include <doctest.h>

#include "mmmcalc/linalg.hpp"

using namespace mmm;

namespace {
Rational dot(const Vec& a, const Vec& b) {
    Rational s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}
}  // namespace

TEST_CASE("nullspace of a rank-one matrix") {
    const Mat rows{{1, 2, 3}, {2, 4, 6}};
    const auto ns = nullspace(rows, 3);
    REQUIRE(ns.size() == 2);
    for (const auto& v : ns)
        for (const auto& row : rows) CHECK(dot(row, v) == 0);
    CHECK(rank(rows, 3) == 1);
}

TEST_CASE("nullspace of an empty matrix is the whole space") {
    const auto ns = nullspace({}, 2);
    REQUIRE(ns.size() == 2);
    CHECK(rank({}, 2) == 0);
}

TEST_CASE("full-rank matrices have trivial nullspace") {
    const Mat rows{{1, 0}, {1, 1}};
    CHECK(nullspace(rows, 2).empty());
    CHECK(rank(rows, 2) == 2);
}

TEST_CASE("determinants") {
    CHECK(det({{2, 1}, {1, 1}}) == 1);
    CHECK(det({{1, 2}, {3, 4}}) == -2);
    CHECK(det({{1, 2}, {2, 4}}) == 0);
    CHECK(det({{Rational(1, 2)}}) == Rational(1, 2));
}

TEST_CASE("span membership") {
    const Mat rows{{1, 2, 3}};
    CHECK(in_span(rows, {3, 6, 9}));
    CHECK(!in_span(rows, {1, 0, 0}));
    CHECK(in_span(rows, {0, 0, 0}));
    CHECK(same_span({{1, 0}, {0, 1}}, {{1, 1}, {1, -1}}, 2));
    CHECK(!same_span({{1, 0}}, {{0, 1}}, 2));
}

TEST_CASE("primitive normalization") {
    const Vec v{Rational(-2, 3), Rational(4, 3)};
    CHECK(primitive_normalize(v) == Vec{1, -2});
    CHECK(primitive_normalize({0, Rational(5, 7)}) == Vec{0, 1});
}
