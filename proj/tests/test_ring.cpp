#include <doctest.h>

#include "cohen/ring.hpp"

using namespace cohen;

TEST_CASE("ring parsing") {
    CHECK(Ring::parse("z").is_integers());
    CHECK(Ring::parse("zmod:12").modulus() == 12);
    CHECK_THROWS_AS(Ring::parse("q"), parse_error);
    CHECK_THROWS_AS(Ring::parse("zmod:"), parse_error);
    CHECK_THROWS_AS(Ring::parse("zmod:x"), parse_error);
    CHECK_THROWS_AS(Ring::parse("zmod:1"), unsupported_ring_error);
    CHECK_THROWS_AS(Ring::modular(0), unsupported_ring_error);
}

TEST_CASE("canonical reduction") {
    Ring m = Ring::modular(12);
    CHECK(m.reduce(-1) == 11);
    CHECK(m.reduce(25) == 1);
    CHECK(m.reduce(-24) == 0);
    CHECK(Ring::integers().reduce(-7) == -7);
}

TEST_CASE("prime and prime power detection") {
    CHECK(Ring::modular(7).modulus_is_prime());
    CHECK_FALSE(Ring::modular(9).modulus_is_prime());
    CHECK(Ring::modular(9).modulus_is_prime_power());
    CHECK(Ring::modular(8).modulus_is_prime_power());
    CHECK(Ring::modular(2).modulus_is_prime_power());
    CHECK_FALSE(Ring::modular(6).modulus_is_prime_power());
    CHECK_FALSE(Ring::modular(12).modulus_is_prime_power());
    CHECK_FALSE(Ring::integers().modulus_is_prime());
}

TEST_CASE("scalar arithmetic and units") {
    Ring m9 = Ring::modular(9);
    Scalar a(m9, 7), b(m9, 5);
    CHECK((a * b).value() == 8); // 35 mod 9
    CHECK((a + b).value() == 3);
    CHECK((-a).value() == 2);
    CHECK(a.is_unit());
    CHECK_FALSE(Scalar(m9, 3).is_unit());
    CHECK((a.inverse() * a).is_one());
    CHECK_THROWS_AS(Scalar(m9, 3).inverse(), unsupported_ring_error);

    Ring z = Ring::integers();
    CHECK(Scalar(z, -1).is_unit());
    CHECK_FALSE(Scalar(z, 2).is_unit());
    CHECK(Scalar(z, -1).inverse().value() == -1);
    CHECK_THROWS_AS(Scalar(z, 2).inverse(), unsupported_ring_error);
}

TEST_CASE("mixed rings are rejected") {
    Scalar a(Ring::integers(), 1), b(Ring::modular(5), 1);
    CHECK_THROWS_AS(a + b, ring_mismatch_error);
}
