#include <limits>
#include <random>
#include <sstream>

#include "doctest.h"
#include "nlbell/rational.hpp"

using nlbell::Rational;

TEST_CASE("rationals are stored reduced with positive denominator") {
    const Rational r(6, -8);
    CHECK(r.num() == -3);
    CHECK(r.den() == 4);
    CHECK(Rational(0, -5) == Rational(0));
    CHECK(Rational(0, -5).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic") {
    const Rational half(1, 2), third(1, 3);
    CHECK(half + third == Rational(5, 6));
    CHECK(half - third == Rational(1, 6));
    CHECK(half * third == Rational(1, 6));
    CHECK(half / third == Rational(3, 2));
    CHECK(-half == Rational(-1, 2));
    CHECK_THROWS(half / Rational(0));
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(7) > Rational(13, 2));
}

TEST_CASE("parse and print round trip") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-6/8") == Rational(-3, 4));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational(3, 4).to_string() == "3/4");
    CHECK(Rational(-2).to_string() == "-2");
    CHECK_THROWS(Rational::parse("1/"));
    CHECK_THROWS(Rational::parse("abc"));
    CHECK_THROWS(Rational::parse("1/0"));
    std::ostringstream os;
    os << Rational(-1, 2);
    CHECK(os.str() == "-1/2");
}

TEST_CASE("overflow is reported") {
    const Rational big(std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(big + Rational(1), nlbell::OverflowError);
    CHECK_THROWS_AS(big * Rational(2), nlbell::OverflowError);
    // large intermediates that reduce back into range are fine
    CHECK(big * Rational(1, 2) * Rational(2) == big);
}

TEST_CASE("field identities on random small fractions") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 40);
    for (int k = 0; k < 2000; ++k) {
        const Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
        if (b != 0) CHECK((a / b) * b == a);
        CHECK(Rational::parse(a.to_string()) == a);
        CHECK(((a < b) == (a.to_double() < b.to_double()) || a == b));
    }
}
