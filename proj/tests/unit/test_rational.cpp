#include <doctest.h>

#include <clutterkit/rational.hpp>

using namespace clutterkit;

TEST_CASE("rational normalization") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(1, -2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(6, 3).is_integral());
    CHECK(Rational(6, 3).numerator() == 2);
    CHECK(Rational(3, -6).denominator() == 2);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic stays reduced") {
    Rational a(1, 6), b(1, 10);
    CHECK((a + b) == Rational(4, 15));
    CHECK((a - b) == Rational(1, 15));
    CHECK((a * b) == Rational(1, 60));
    CHECK((a / b) == Rational(5, 3));
    CHECK((a + b).denominator() == 15);
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("rational ordering by cross multiplication") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 7) == Rational(1));
    CHECK(Rational(2, 3) > Rational(0));
    CHECK(Rational(-5).is_negative());
}

TEST_CASE("rational parse and print round trip") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-6/8") == Rational(-3, 4));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK(Rational(3, 4).str() == "3/4");
    CHECK(Rational(-3, 4).str() == "-3/4");
    CHECK(Rational(5).str() == "5");
}

TEST_CASE("big values do not overflow") {
    Rational big(Integer("123456789123456789123456789"), Integer(3));
    Rational r = big * Rational(3) / Rational(Integer("123456789123456789123456789"));
    CHECK(r == Rational(1));
    CHECK(lcm_denominators({Rational(1, 4), Rational(1, 6), Rational(1)}) == 12);
}
