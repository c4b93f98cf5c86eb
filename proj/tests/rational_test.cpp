#include <doctest.h>

#include <limits>

#include "dyc/rational.hpp"

using dyc::Rational;

TEST_CASE("normalization and printing") {
    CHECK(Rational(4, 6) == Rational(2, 3));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(4, 6).str() == "2/3");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(7, 2).floor() == 3);
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(-Rational(1, 3) < Rational(0));
    CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("no overflow in intermediate results") {
    const Rational big(std::numeric_limits<std::int64_t>::max());
    const Rational sq = big * big;
    CHECK(sq / big == big);
    CHECK((big + Rational(1)) - Rational(1) == big);
    CHECK_THROWS_AS((void)sq.num(), std::overflow_error);
    CHECK_THROWS_AS((void)(big + Rational(1)).floor(), std::overflow_error);
    CHECK(Rational::parse("123456789012345678901234567890/3").str() == "41152263004115226300411522630");
}

TEST_CASE("parse") {
    CHECK(Rational::parse("2/3") == Rational(2, 3));
    CHECK(Rational::parse("4") == Rational(4));
    CHECK(Rational::parse("-4/8") == Rational(-1, 2));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("abc"));
    CHECK_THROWS(Rational::parse("1.5"));
    CHECK_THROWS(Rational::parse(""));
    CHECK_THROWS(Rational::parse("2/"));
    CHECK_THROWS(Rational::parse("1/-2"));
    CHECK_THROWS(Rational::parse("-"));
}

TEST_CASE("string form round-trips") {
    for (std::int64_t n = -20; n <= 20; ++n) {
        for (std::int64_t d = 1; d <= 12; ++d) {
            Rational r(n, d);
            CHECK(Rational::parse(r.str()) == r);
        }
    }
}
