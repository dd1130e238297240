#include <cstdint>
#include <limits>
#include <random>

#include "doctest.h"
#include "ribbonmod/errors.hpp"
#include "ribbonmod/fraction.hpp"

using namespace ribbonmod;

TEST_CASE("fraction normalizes to lowest terms with positive denominator") {
    Fraction f(4, -6);
    CHECK(f.numerator() == -2);
    CHECK(f.denominator() == 3);
    CHECK(Fraction(0, -5) == Fraction(0));
    CHECK(Fraction(6, 3).is_integer());
    CHECK(Fraction(3, 2).to_string() == "3/2");
    CHECK(Fraction(-3, 2).to_string() == "-3/2");
    CHECK_THROWS_AS(Fraction(1, 0), DomainError);
}

TEST_CASE("ordering agrees with cross multiplication") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<Int> num(-50, 50), den(1, 30);
    for (int i = 0; i < 5000; ++i) {
        Int a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        Fraction x(a, b), y(c, d);
        CHECK((x < y) == (a * d < c * b));
        CHECK((x == y) == (a * d == c * b));
        CHECK(x + y - y == x);
        if (c != 0) CHECK(x * y / y == x);
    }
}

TEST_CASE("arithmetic overflow is reported, not wrapped") {
    const Int big = std::numeric_limits<Int>::max();
    CHECK_THROWS_AS(checked::add(big, 1), OverflowError);
    CHECK_THROWS_AS(checked::mul(big / 2 + 1, 2), OverflowError);
    CHECK_THROWS_AS(Fraction(big) + Fraction(1), OverflowError);
    CHECK_THROWS_AS(-Fraction(std::numeric_limits<Int>::min()), OverflowError);
    // Comparison of extreme values stays exact.
    CHECK(Fraction(big, big - 1) < Fraction(big - 1, big - 2));
}

TEST_CASE("floor and ceiling division") {
    CHECK(floor_div(7, 2) == 3);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(ceil_div(7, 2) == 4);
    CHECK(ceil_div(-7, 2) == -3);
    CHECK(floor_div(-6, 3) == -2);
    CHECK(ceil_div(-6, 3) == -2);
}
