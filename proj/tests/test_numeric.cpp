#include <doctest.h>

#include <cstdint>
#include <stdexcept>

#include "plethyx/numeric.hpp"

using plethyx::BigInt;
using plethyx::Rational;

TEST_CASE("BigInt arithmetic agrees with long long on small values") {
    long long samples[] = {0, 1, -1, 7, -13, 1000000007, -999999937, 1ll << 40};
    for (long long a : samples)
        for (long long b : samples) {
            CHECK((BigInt(a) + BigInt(b)).to_long_long() == a + b);
            CHECK((BigInt(a) - BigInt(b)).to_long_long() == a - b);
            __int128 prod = __int128(a) * b;
            if (prod >= INT64_MIN && prod <= INT64_MAX)
                CHECK((BigInt(a) * BigInt(b)).to_long_long() == (long long)prod);
            CHECK((BigInt(a) < BigInt(b)) == (a < b));
        }
}

TEST_CASE("BigInt grows past 64 bits without wrapping") {
    BigInt p = 1;
    for (int i = 1; i <= 30; ++i) p *= BigInt(i);
    CHECK(p.to_string() == "265252859812191058636308480000000"); // 30!
    CHECK_FALSE(p.fits_long_long());
    CHECK_THROWS_AS((void)p.to_long_long(), std::overflow_error);

    BigInt q = p * p;
    CHECK(q.divided_exact(p) == p);
    CHECK((p - p).is_zero());
    CHECK((p + (-p)).is_zero());
}

TEST_CASE("BigInt decimal printing round-trips through doubling") {
    BigInt v = 1;
    std::string expect = "1";
    for (int i = 0; i < 100; ++i) v += v;
    // 2^100
    CHECK(v.to_string() == "1267650600228229401496703205376");
    CHECK(expect == "1");
}

TEST_CASE("gcd") {
    CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(-12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(0), BigInt(5)) == BigInt(5));
    CHECK(BigInt::gcd(BigInt(0), BigInt(0)) == BigInt(0));
    CHECK(BigInt::gcd(BigInt(1) , BigInt(7)) == BigInt(1));
    BigInt p = 1, q = 1;
    for (int i = 1; i <= 25; ++i) p *= BigInt(2 * i);
    for (int i = 1; i <= 25; ++i) q *= BigInt(2 * i + 1);
    CHECK(BigInt::gcd(p * q, p) == p);
}

TEST_CASE("Rational reduces and stays exact") {
    Rational half(BigInt(1), BigInt(2));
    Rational third(BigInt(1), BigInt(3));
    CHECK((half + third).to_string() == "5/6");
    CHECK((half * third).to_string() == "1/6");
    CHECK((half - half).is_zero());
    CHECK((half + half).is_integer());
    CHECK((half + half).as_integer() == BigInt(1));
    CHECK(Rational(BigInt(4), BigInt(-6)).to_string() == "-2/3");
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::invalid_argument);
    CHECK_THROWS_AS((void)half.as_integer(), std::logic_error);

    // telescoping sum of 1/(k(k+1)) = 1 - 1/(n+1)
    Rational sum(0);
    for (int k = 1; k <= 40; ++k) sum += Rational(BigInt(1), BigInt(k) * BigInt(k + 1));
    CHECK(sum == Rational(BigInt(40), BigInt(41)));
}
