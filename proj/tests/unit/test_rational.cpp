#include <doctest.h>

#include "mgdiv/errors.hpp"
#include "mgdiv/rational.hpp"

using namespace mgdiv;

TEST_CASE("rationals are kept in lowest terms with positive denominator") {
    CHECK(Rat(2, 4).str() == "1/2");
    CHECK(Rat(-2, 4).str() == "-1/2");
    CHECK(Rat(3, -6).str() == "-1/2");
    CHECK(Rat(0, 7).str() == "0/1");
    CHECK(Rat(5).str() == "5/1");
}

TEST_CASE("parse accepts p/q and bare integers, rejects junk") {
    CHECK(Rat::parse("3/9") == Rat(1, 3));
    CHECK(Rat::parse("7") == Rat(7));
    CHECK(Rat::parse("-4/6") == Rat(-2, 3));
    CHECK_THROWS_AS(Rat::parse("1/0"), mgdiv::error);
    CHECK_THROWS_AS(Rat::parse("1/-2"), mgdiv::error);
    CHECK_THROWS_AS(Rat::parse("0.5"), mgdiv::error);
    CHECK_THROWS_AS(Rat::parse(""), mgdiv::error);
    CHECK_THROWS_AS(Rat::parse("a/b"), mgdiv::error);
}

TEST_CASE("exact arithmetic and ordering") {
    Rat a(1, 3), b(1, 6);
    CHECK(a + b == Rat(1, 2));
    CHECK(a - b == Rat(1, 6));
    CHECK(a * b == Rat(1, 18));
    CHECK(a / b == Rat(2));
    CHECK(b < a);
    CHECK(min(a, b) == b);
    CHECK(max(a, b) == a);
    CHECK((-a).is_negative());
    CHECK(Rat(4, 2).is_integer());
    CHECK(!a.is_integer());
    CHECK_THROWS_AS(a / Rat(0), mgdiv::error);
}

TEST_CASE("str round-trips through parse") {
    for (long long n = -5; n <= 5; ++n)
        for (long long d = 1; d <= 5; ++d) {
            Rat r(n, d);
            CHECK(Rat::parse(r.str()) == r);
        }
}
