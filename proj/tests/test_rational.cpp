#include <doctest.h>

#include <random>

#include "chainloop/errors.hpp"
#include "chainloop/rational.hpp"

using chainloop::Rational;
using chainloop::ValidationError;

TEST_CASE("rationals are stored in lowest terms") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(6, 4).numerator() == 3);
    CHECK(Rational(6, 4).denominator() == 2);
    CHECK(Rational(-6, 4).numerator() == -3);
    CHECK(Rational(5, -10) == Rational(-1, 2));
    CHECK(Rational(5, -10).denominator() == 2);

    std::mt19937 rng(7);
    std::uniform_int_distribution<long> small(1, 40);
    for (int trial = 0; trial < 200; ++trial) {
        const long a = small(rng);
        const long b = small(rng);
        const long k = small(rng);
        CHECK(Rational(a * k, b * k) == Rational(a, b));
    }
}

TEST_CASE("construction rejects a zero denominator") {
    CHECK_THROWS_AS(Rational(1, 0), ValidationError);
}

TEST_CASE("string parsing and printing") {
    CHECK(Rational::from_string("10") == Rational(10));
    CHECK(Rational::from_string("-7") == Rational(-7));
    CHECK(Rational::from_string("3/6") == Rational(1, 2));
    CHECK(Rational::from_string("-3/6") == Rational(-1, 2));
    CHECK(Rational(10).str() == "10");
    CHECK(Rational(1, 2).str() == "1/2");
    CHECK(Rational(-9, 6).str() == "-3/2");

    for (const char* bad : {"", "1/0", "abc", "1.5", "/3", "3/", "1/-2", "+4",
                            " 2", "2 "}) {
        CHECK_THROWS_AS(Rational::from_string(bad), ValidationError);
    }
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
    CHECK(-Rational(1, 2) == Rational(-1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(3, 2) > Rational(1));
}

TEST_CASE("mod_floor lands in [0, modulus)") {
    CHECK(Rational(-5).mod_floor(Rational(11)) == Rational(6));
    CHECK(Rational(14).mod_floor(Rational(11)) == Rational(3));
    CHECK(Rational(14, 3).mod_floor(Rational(3, 2)) == Rational(1, 6));
    CHECK(Rational(0).mod_floor(Rational(5)) == Rational(0));

    std::mt19937 rng(11);
    std::uniform_int_distribution<long> num(-60, 60);
    std::uniform_int_distribution<long> den(1, 12);
    for (int trial = 0; trial < 300; ++trial) {
        const Rational x(num(rng), den(rng));
        const Rational m(den(rng), den(rng));
        const Rational r = x.mod_floor(m);
        CHECK(!r.is_negative());
        CHECK(r < m);
        CHECK(((x - r) / m).is_integer());
    }
}

TEST_CASE("integer conversion") {
    CHECK(Rational(42).is_integer());
    CHECK(Rational(42).to_long() == 42);
    CHECK(!Rational(1, 2).is_integer());
    CHECK_THROWS(Rational(1, 2).to_long());
}
