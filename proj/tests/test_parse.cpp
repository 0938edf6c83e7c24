#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace netsynth;

TEST_CASE("expression parsing", "[parse]") {
    SECTION("direct transcription") {
        auto f = parse_ratfunc("(2*s^2+s+1)/(s*(s^2+s+1))");
        CHECK(f.num() == P({1, 1, 2}));
        CHECK(f.den() == P({0, 1, 1, 1}));
    }
    SECTION("sum normalization: 1/s + 1") {
        CHECK(parse_ratfunc("1/s + 1") == RatFunc<Rational>(P({1, 1}), P({0, 1})));
    }
    SECTION("parse then reduce: (s+1)^2/((s+1)*s)") {
        auto f = parse_ratfunc("(s+1)^2/((s+1)*s)");
        CHECK(f == RatFunc<Rational>(P({1, 1}), P({0, 1})));
        for (long long x : {2, 3, 5}) {
            Complex<Rational> z(Q(x));
            CHECK(f.eval(z) == Complex<Rational>(Q(x + 1) / Q(x)));
        }
    }
    SECTION("exact literals") {
        CHECK(parse_ratfunc("0.1") == RatFunc<Rational>(Q(1, 10)));
        CHECK(parse_ratfunc("2/4") == RatFunc<Rational>(Q(1, 2)));
        CHECK(parse_ratfunc("1/3 * s") ==
              RatFunc<Rational>(Poly<Rational>(std::vector<Rational>{Q(0), Q(1, 3)})));
    }
    SECTION("precedence: ^ binds tightest, then */") {
        CHECK(parse_ratfunc("2*s^2") == RatFunc<Rational>(P({0, 0, 2})));
        CHECK(parse_ratfunc("-s^2") == RatFunc<Rational>(P({0, 0, -1})));
        CHECK(parse_ratfunc("1+2*3") == RatFunc<Rational>(Q(7)));
        CHECK(parse_ratfunc("s^-1") == RatFunc<Rational>(P({1}), P({0, 1})));
    }
    SECTION("syntax errors carry a position") {
        CHECK_THROWS_AS(parse_ratfunc("s +"), ParseError);
        CHECK_THROWS_AS(parse_ratfunc("(s+1"), ParseError);
        CHECK_THROWS_AS(parse_ratfunc("x+1"), ParseError);
        CHECK_THROWS_AS(parse_ratfunc("s^s"), ParseError);
        CHECK_THROWS_AS(parse_ratfunc(""), ParseError);
        CHECK_THROWS_AS(parse_ratfunc("s)"), ParseError);
        try {
            parse_ratfunc("s + @");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.position == 4);
        }
    }
    SECTION("division by a zero polynomial") {
        CHECK_THROWS_AS(parse_ratfunc("1/(s-s)"), ParseError);
        CHECK_THROWS_AS(parse_ratfunc("1/0"), ParseError);
    }
    SECTION("round-trip: parse(to_string(f)) == f") {
        std::mt19937_64 rng(7);
        for (int i = 0; i < 100; ++i) {
            auto f = random_ratfunc(rng);
            CHECK(parse_ratfunc(f.to_string()) == f);
        }
    }
}
