#include <catch2/catch_amalgamated.hpp>

#include "toric/numeric.hpp"

using namespace toric;

TEST_CASE("rational string round trip") {
    CHECK(scalar_to_string(Rat(3, 7)) == "3/7");
    CHECK(scalar_to_string(Rat(-4)) == "-4");
    CHECK(rat_from_string("22/7") == Rat(22, 7));
    CHECK(rat_from_string("-5") == Rat(-5));
    CHECK_THROWS_AS(rat_from_string("1.5"), ParseError);
    CHECK_THROWS_AS(rat_from_string("1/0"), ParseError);
}

TEST_CASE("double string is shortest round trip") {
    for (double x : {0.1, 1.0 / 3.0, 2e-17, -123.456, 1e100}) {
        CHECK(std::stod(scalar_to_string(x)) == x);
    }
}

TEST_CASE("tolerance mediates float comparisons") {
    double saved = tolerance();
    tolerance() = 1e-9;
    CHECK(sgn(5e-10) == 0);
    CHECK(sgn(2e-9) == 1);
    CHECK(sgn(-2e-9) == -1);
    CHECK(is_zero(1e-10));
    CHECK_FALSE(is_zero(1e-8));
    tolerance() = 1e-6;
    CHECK(is_zero(1e-7));  // the knob is global
    tolerance() = saved;
}

TEST_CASE("exact comparisons are exact") {
    Rat tiny(1, Int("1000000000000000000000000"));
    CHECK(sgn(tiny) == 1);
    CHECK_FALSE(is_zero(tiny));
}

TEST_CASE("from_double is the exact binary value") {
    Rat r = scalar_traits<Rat>::from_double(0.5);
    CHECK(r == Rat(1, 2));
    Rat t = scalar_traits<Rat>::from_double(0.1);
    CHECK(t != Rat(1, 10));  // 0.1 is not representable
    CHECK(scalar_traits<Rat>::to_double(t) == 0.1);
}
