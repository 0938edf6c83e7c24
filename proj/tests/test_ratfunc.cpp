#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace netsynth;

namespace {

Complex<Rational> cq(long long ren, long long red, long long imn, long long imd) {
    return {make_rational(ren, red), make_rational(imn, imd)};
}

} // namespace

TEST_CASE("normalization is canonical", "[ratfunc]") {
    SECTION("common factor cancels: (s+1)(2s+1) / s(s+1)") {
        RatFunc<Rational> f(P({1, 1}) * P({1, 2}), P({0, 1}) * P({1, 1}));
        CHECK(f == RatFunc<Rational>(P({1, 2}), P({0, 1})));
        // evaluation-preserving at a non-pole point
        CHECK(f.eval(cq(3, 1, 0, 1)) == cq(7, 3, 0, 1));
    }
    SECTION("monomial cancellation: s^2/s") {
        RatFunc<Rational> f(P({0, 0, 1}), P({0, 1}));
        CHECK(f.num() == P({0, 1}));
        CHECK(f.den() == P({1}));
    }
    SECTION("zero numerator normalizes to 0/1") {
        RatFunc<Rational> f(Poly<Rational>(), P({1, 1}));
        CHECK(f.is_zero());
        CHECK(f.den() == P({1}));
    }
    SECTION("zero denominator rejected") {
        CHECK_THROWS_AS(RatFunc<Rational>(P({1}), Poly<Rational>()), DivideByZeroError);
    }
    SECTION("idempotent and evaluation-preserving on random inputs") {
        std::mt19937_64 rng(3);
        for (int i = 0; i < 100; ++i) {
            auto f = random_ratfunc(rng);
            RatFunc<Rational> again(f.num(), f.den());
            CHECK(f == again);
            // cross-multiplication identity against the raw pair
            auto num = random_nonzero_poly(rng, 2);
            auto den = random_nonzero_poly(rng, 2);
            RatFunc<Rational> g(num, den);
            CHECK(num * g.den() == den * g.num());
        }
    }
}

TEST_CASE("even part", "[ratfunc]") {
    SECTION("odd function vanishes: 1/s") {
        RatFunc<Rational> f(P({1}), P({0, 1}));
        CHECK(f.even_part().is_zero());
    }
    SECTION("1/(s+1) has even part 1/(1-s^2)") {
        RatFunc<Rational> f(P({1}), P({1, 1}));
        RatFunc<Rational> expect(P({1}), P({1, 0, -1}));
        CHECK(f.even_part() == expect);
        // independent oracle: (f(x)+f(-x))/2 at sample points
        for (long long x : {2, 3, 5, 7, 11}) {
            auto fx = f.eval(cq(x, 1, 0, 1));
            auto fmx = f.eval(cq(-x, 1, 0, 1));
            auto half = cq(1, 2, 0, 1);
            CHECK(f.even_part().eval(cq(x, 1, 0, 1)) == (fx + fmx) * half);
        }
    }
    SECTION("impedance of the admittance family") {
        // Z = s(d0 s^2 + d1 s + 1) / (k(a0 s^2 + a1 s + 1)); its even part is
        // 2s^2((a0 d1 - a1 d0)s^2 + (d1 - a1)) / (2k(a0 s^2 + a1 s + 1)(a0 s^2 - a1 s + 1))
        std::mt19937_64 rng(17);
        for (int i = 0; i < 50; ++i) {
            Rational a0 = random_rational(rng, 1, 8), a1 = random_rational(rng, 1, 8);
            Rational d0 = random_rational(rng, 1, 8), d1 = random_rational(rng, 1, 8);
            Rational k = random_rational(rng, 1, 8);
            Poly<Rational> zn(std::vector<Rational>{Rational(0), Rational(1), d1, d0});
            Poly<Rational> zd(std::vector<Rational>{k, k * a1, k * a0});
            RatFunc<Rational> z(zn, zd);
            Poly<Rational> en(std::vector<Rational>{Rational(0), Rational(0), d1 - a1, Rational(0),
                                                    a0 * d1 - a1 * d0});
            en = en * Rational(2);
            Poly<Rational> q1(std::vector<Rational>{Rational(1), a1, a0});
            Poly<Rational> q2(std::vector<Rational>{Rational(1), -a1, a0});
            RatFunc<Rational> expect(en, Rational(2) * k * (q1 * q2));
            CHECK(z.even_part() == expect);
        }
    }
    SECTION("even part is even: e(s) = e(-s) as reduced functions") {
        std::mt19937_64 rng(23);
        for (int i = 0; i < 100; ++i) {
            auto f = random_ratfunc(rng);
            auto e = f.even_part();
            CHECK(e == e.subst_neg());
        }
    }
}

TEST_CASE("evaluation", "[ratfunc]") {
    SECTION("(s^2+s+1)/(s^2+s) at s = j") {
        RatFunc<Rational> f(P({1, 1, 1}), P({0, 1, 1}));
        CHECK(f.eval(cq(0, 1, 1, 1)) == cq(1, 2, -1, 2));
    }
    SECTION("1/s at s = j is -j") {
        RatFunc<Rational> f(P({1}), P({0, 1}));
        CHECK(f.eval(cq(0, 1, 1, 1)) == cq(0, 1, -1, 1));
    }
    SECTION("(s+1)/(s+1) at 2 is 1 after reduction") {
        RatFunc<Rational> f(P({1, 1}), P({1, 1}));
        CHECK(f.eval(cq(2, 1, 0, 1)) == cq(1, 1, 0, 1));
    }
    SECTION("pole raises") {
        RatFunc<Rational> f(P({1}), P({0, 1}));
        CHECK_THROWS_AS(f.eval(cq(0, 1, 0, 1)), PoleError);
    }
    SECTION("near-pole underflows the working-precision tolerance") {
        set_default_precision(50);
        using BP = Poly<BigReal>;
        RatFunc<BigReal> f(BP(BigReal(1)), BP(std::vector<BigReal>{BigReal(-1), BigReal(1)}));
        Complex<BigReal> near_pole(BigReal(1) + BigReal("1e-40"), BigReal(0));
        CHECK_THROWS_AS(f.eval(near_pole), PoleError);
        Complex<BigReal> away(BigReal(2), BigReal(0));
        CHECK(scalar_abs(f.eval(away).re - BigReal(1)) < BigReal("1e-45"));
    }
}

TEST_CASE("reciprocal and substitution", "[ratfunc]") {
    RatFunc<Rational> f(P({1, 2}), P({0, 1}));  // (2s+1)/s
    CHECK(f.reciprocal() == RatFunc<Rational>(P({0, 1}), P({1, 2})));
    // f(1/s) = (2/s+1)/(1/s) = (s+2)
    CHECK(f.subst_inv() == RatFunc<Rational>(P({2, 1}), P({1})));
    std::mt19937_64 rng(31);
    for (int i = 0; i < 50; ++i) {
        auto g = random_ratfunc(rng);
        if (g.is_zero()) continue;
        CHECK(g.subst_inv().subst_inv() == g);
        CHECK(g.reciprocal().reciprocal() == g);
    }
}
