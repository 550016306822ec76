#include <doctest.h>

#include <sstream>

#include "slopekit/error.hpp"
#include "slopekit/rational.hpp"

using slopekit::Rational;

TEST_CASE("rational normal form") {
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(8, 4).str() == "2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK_THROWS_AS(Rational(1, 0), slopekit::DomainError);
}

TEST_CASE("rational arithmetic and ordering") {
    const Rational a(1, 2);
    const Rational b(2, 3);
    CHECK(a + b == Rational(7, 6));
    CHECK(a - b == Rational(-1, 6));
    CHECK(a * b == Rational(1, 3));
    CHECK(a / b == Rational(3, 4));
    CHECK(-a == Rational(-1, 2));
    CHECK(a < b);
    CHECK(abs(Rational(-5, 7)) == Rational(5, 7));
    CHECK_THROWS_AS(a / Rational(0), slopekit::DomainError);
}

TEST_CASE("rational floor and integers") {
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(9, 3).is_integer());
    CHECK(Rational(9, 3).to_int64() == 3);
    CHECK_THROWS_AS(Rational(1, 3).to_int64(), slopekit::DomainError);
}

TEST_CASE("rational parse round trip") {
    for (const char* text : {"0", "3/2", "-1/30", "12", "-5"}) {
        CHECK(Rational::parse(text).str() == text);
    }
    CHECK(Rational::parse("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(Rational::parse("1/0"), slopekit::DomainError);
    CHECK_THROWS_AS(Rational::parse("abc"), slopekit::DomainError);
    CHECK_THROWS_AS(Rational::parse("1/"), slopekit::DomainError);
    std::ostringstream os;
    os << Rational(-1, 30);
    CHECK(os.str() == "-1/30");
}
