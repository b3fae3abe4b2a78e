#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "qcy/errors.hpp"
#include "qcy/intpoly.hpp"

using namespace qcy;

TEST_CASE("canonical form and degree") {
    IntPoly zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    IntPoly trimmed({Int(1), Int(0), Int(0)});
    CHECK(trimmed.degree() == 0);
    CHECK(IntPoly::constant(0).is_zero());
    CHECK(IntPoly::monomial(2, 3).degree() == 3);
}

TEST_CASE("arithmetic") {
    IntPoly a = IntPoly::parse("1,-2,1");  // (t-1)^2
    IntPoly b = IntPoly::parse("-1,1");    // t-1
    CHECK(b * b == a);
    CHECK((a - a).is_zero());
    CHECK((a + (-a)).is_zero());
    CHECK(a.eval(3) == 4);
    CHECK(a.eval(1) == 0);
    IntPoly big = IntPoly::monomial(Int("123456789123456789"), 2);
    CHECK((big * big).coeff(4) == Int("15241578780673678515622620750190521"));
}

TEST_CASE("exact division") {
    IntPoly p = IntPoly::parse("-1,0,0,0,0,0,1");  // t^6 - 1
    IntPoly d = IntPoly::parse("-1,1");
    auto q = p.divide_exact(d);
    REQUIRE(q);
    CHECK(*q == IntPoly::parse("1,1,1,1,1,1"));
    CHECK(!p.divide_exact(IntPoly::parse("1,1,1")).has_value() ==
          false);  // t^2+t+1 divides t^6-1
    CHECK(!IntPoly::parse("1,1").divide_exact(IntPoly::parse("0,2")).has_value());
    CHECK(!IntPoly::parse("1,0,1").divide_exact(IntPoly::parse("-1,1")).has_value());
    CHECK_THROWS_AS((void)p.divide_exact(IntPoly()), std::invalid_argument);
}

TEST_CASE("derivative") {
    CHECK(IntPoly::parse("5,3,0,2").derivative() == IntPoly::parse("3,0,6"));
    CHECK(IntPoly::constant(7).derivative().is_zero());
}

TEST_CASE("text format round trip") {
    for (const char* text : {"1,-2,1", "0", "-7", "0,0,1"}) {
        CHECK(IntPoly::parse(text).to_string() == text);
    }
    // non-canonical input normalizes
    CHECK(IntPoly::parse("1,2,0").to_string() == "1,2");
    CHECK_THROWS_AS(IntPoly::parse(""), parse_error);
    CHECK_THROWS_AS(IntPoly::parse("1,,2"), parse_error);
    CHECK_THROWS_AS(IntPoly::parse("1,2,"), parse_error);
    CHECK_THROWS_AS(IntPoly::parse("1,x"), parse_error);
    try {
        IntPoly::parse("12,ab");
    } catch (const parse_error& e) {
        CHECK(e.position() == 3);
    }
}

TEST_CASE("pretty printing") {
    CHECK(IntPoly::parse("1,-2,1").pretty() == "t^2 - 2t + 1");
    CHECK(IntPoly::parse("0,1").pretty() == "t");
    CHECK(IntPoly().pretty() == "0");
}
