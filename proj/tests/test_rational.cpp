#include <corona/rational.hpp>

#include <stdexcept>

#include "doctest.h"

using corona::Rational;
using corona::make_rational;
using corona::rational_from_string;
using corona::to_string;

TEST_CASE("make_rational reduces to lowest terms") {
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    CHECK(make_rational(2, 4).get_den() == 2);
    CHECK(make_rational(6, 3) == Rational(2));
    CHECK(make_rational(0, 7) == Rational(0));
    CHECK(make_rational(0, 7).get_den() == 1);
}

TEST_CASE("make_rational normalizes the sign into the numerator") {
    CHECK(make_rational(1, -2) == make_rational(-1, 2));
    CHECK(make_rational(-2, -4) == make_rational(1, 2));
    CHECK(make_rational(1, -2).get_den() == 2);
}

TEST_CASE("make_rational rejects a zero denominator") {
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(make_rational(0, 0), std::domain_error);
}

TEST_CASE("rational_from_string parses integers and fractions") {
    CHECK(rational_from_string("3") == Rational(3));
    CHECK(rational_from_string("-3") == Rational(-3));
    CHECK(rational_from_string("+3") == Rational(3));
    CHECK(rational_from_string("6/4") == make_rational(3, 2));
    CHECK(rational_from_string("0/5") == Rational(0));
    CHECK(rational_from_string("-10/4") == make_rational(-5, 2));
}

TEST_CASE("rational_from_string canonicalizes its result") {
    Rational x = rational_from_string("6/4");
    CHECK(x.get_num() == 3);
    CHECK(x.get_den() == 2);
}

TEST_CASE("rational_from_string rejects malformed literals") {
    for (const char* bad : {"", "a", "1/", "/2", "1/0", "1/-2", "1/2/3", " 1", "2 ", "1.5", "--1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(rational_from_string(bad), std::invalid_argument);
    }
}

TEST_CASE("to_string renders p or p/q") {
    CHECK(to_string(Rational(5)) == "5");
    CHECK(to_string(Rational(-5)) == "-5");
    CHECK(to_string(make_rational(3, 2)) == "3/2");
    CHECK(to_string(make_rational(-3, 2)) == "-3/2");
}
