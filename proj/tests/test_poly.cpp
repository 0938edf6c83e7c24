#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace netsynth;

namespace {

// brute-force gcd oracle for quadratics and below: split into exact linear
// factors via the discriminant, intersect the root multisets
std::vector<Rational> rational_roots(const Poly<Rational>& p) {
    std::vector<Rational> roots;
    if (p.degree() == 1) {
        roots.push_back(-p.coeff(0) / p.coeff(1));
    } else if (p.degree() == 2) {
        Rational a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
        auto sq = exact_sqrt(b * b - 4 * a * c);
        if (sq) {
            roots.push_back((-b + *sq) / (2 * a));
            roots.push_back((-b - *sq) / (2 * a));
        }
    }
    return roots;
}

Poly<Rational> gcd_by_roots(const Poly<Rational>& p, const Poly<Rational>& q) {
    auto rp = rational_roots(p);
    auto rq = rational_roots(q);
    Poly<Rational> g = Poly<Rational>::one();
    std::vector<bool> used(rq.size(), false);
    for (const auto& r : rp) {
        for (std::size_t j = 0; j < rq.size(); ++j) {
            if (!used[j] && rq[j] == r) {
                used[j] = true;
                g = g * Poly<Rational>(std::vector<Rational>{-r, Rational(1)});
                break;
            }
        }
    }
    return g;
}

} // namespace

TEST_CASE("polynomial ring operations", "[poly]") {
    auto s = Poly<Rational>::variable();
    auto one = Poly<Rational>::one();

    SECTION("binomial square") {
        CHECK((s + one) * (s + one) == P({1, 2, 1}));
    }
    SECTION("divrem of s^3 by s^2+1") {
        auto [quot, rem] = Poly<Rational>::divrem(P({0, 0, 0, 1}), P({1, 0, 1}));
        CHECK(quot == s);
        CHECK(rem == -s);
    }
    SECTION("divrem invariant p = q*quot + rem with deg rem < deg q") {
        std::mt19937_64 rng(11);
        for (int i = 0; i < 200; ++i) {
            auto p = random_poly(rng, 6);
            auto q = random_nonzero_poly(rng, 3);
            auto [quot, rem] = Poly<Rational>::divrem(p, q);
            CHECK(p == q * quot + rem);
            CHECK(rem.degree() < q.degree());
        }
    }
    SECTION("derivative") {
        CHECK(P({1, 2, 3}).derivative() == P({2, 6}));
        CHECK(P({5}).derivative().is_zero());
    }
    SECTION("evaluation, real and complex") {
        CHECK(P({1, 1, 2}).eval(Q(2)) == Q(11));
        Complex<Rational> j(Q(0), Q(1));
        Complex<Rational> v = P({1, 0, 1}).eval(j);  // s^2+1 at j
        CHECK(v.is_zero());
    }
}

TEST_CASE("polynomial gcd", "[poly]") {
    SECTION("factor pair: (2s+1)(s+1) and (s+1)^2") {
        auto g = Poly<Rational>::gcd(P({1, 3, 2}), P({1, 2, 1}));
        CHECK(g == P({1, 1}));
        CHECK(g == gcd_by_roots(P({1, 3, 2}), P({1, 2, 1})));
    }
    SECTION("gcd is monic") {
        auto g = Poly<Rational>::gcd(P({2, 2}), P({4, 4}));
        CHECK(g == P({1, 1}));
    }
    SECTION("coprime gives a unit") {
        CHECK(Poly<Rational>::gcd(P({1, 1}), P({2, 1})).degree() == 0);
    }
    SECTION("random products share the planted factor") {
        std::mt19937_64 rng(5);
        for (int i = 0; i < 100; ++i) {
            auto f = random_nonzero_poly(rng, 2);
            auto a = random_nonzero_poly(rng, 2);
            auto b = random_nonzero_poly(rng, 2);
            auto g = Poly<Rational>::gcd(f * a, f * b);
            // g is divisible by f/lc(f)
            auto [q, r] = Poly<Rational>::divrem(g, f);
            (void)q;
            CHECK(r.is_zero());
        }
    }
    SECTION("division by the zero polynomial") {
        CHECK_THROWS_AS(Poly<Rational>::divrem(P({1}), Poly<Rational>()), DivideByZeroError);
    }
}

TEST_CASE("distributivity on random polynomials", "[poly]") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        auto p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK((p + q) * r == p * r + q * r);
    }
}

TEST_CASE("approximate gcd over BigReal", "[poly]") {
    set_default_precision(50);
    using BP = Poly<BigReal>;
    auto mk = [](std::initializer_list<double> c) {
        std::vector<BigReal> v;
        for (double x : c) v.emplace_back(x);
        return BP(std::move(v));
    };
    // (s + 1/3)(s + 2) vs (s + 1/3)(s + 5): common root -1/3
    BigReal third = BigReal(1) / 3;
    BP f1 = mk({0, 1});
    auto lin = [&](const BigReal& root) {
        return BP(std::vector<BigReal>{root, BigReal(1)});
    };
    BP a = lin(third) * lin(BigReal(2));
    BP b = lin(third) * lin(BigReal(5));
    BP g = BP::gcd(a, b);
    REQUIRE(g.degree() == 1);
    CHECK(scalar_abs(g.coeff(0) - third) < BigReal("1e-40"));
    (void)f1;
}
