#pragma once

#include <random>

#include "netsynth/netsynth.hpp"

namespace nst = netsynth;

inline nst::Rational Q(long long n, long long d = 1) { return nst::make_rational(n, d); }

inline nst::Poly<nst::Rational> P(std::initializer_list<long long> ascending) {
    std::vector<nst::Rational> c;
    for (long long v : ascending) c.push_back(Q(v));
    return nst::Poly<nst::Rational>(std::move(c));
}

inline nst::CanonicalAdmittance<nst::Rational> tuple5(long long a0, long long a1, long long d0,
                                                      long long d1, long long k) {
    return {Q(a0), Q(a1), Q(d0), Q(d1), Q(k)};
}

inline nst::Rational random_rational(std::mt19937_64& rng, int lo = -12, int hi = 12,
                                     int max_den = 6) {
    std::uniform_int_distribution<int> num(lo, hi), den(1, max_den);
    return nst::make_rational(num(rng), den(rng));
}

inline nst::Poly<nst::Rational> random_poly(std::mt19937_64& rng, int max_deg = 4) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    int d = deg(rng);
    std::vector<nst::Rational> c;
    for (int i = 0; i <= d; ++i) c.push_back(random_rational(rng));
    return nst::Poly<nst::Rational>(std::move(c));
}

inline nst::Poly<nst::Rational> random_nonzero_poly(std::mt19937_64& rng, int max_deg = 4) {
    for (;;) {
        auto p = random_poly(rng, max_deg);
        if (!p.is_zero()) return p;
    }
}

inline nst::RatFunc<nst::Rational> random_ratfunc(std::mt19937_64& rng, int max_deg = 4) {
    for (;;) {
        auto num = random_poly(rng, max_deg);
        auto den = random_nonzero_poly(rng, max_deg);
        if (den.degree() > 0 || num.degree() > 0)
            return nst::RatFunc<nst::Rational>(num, den);
    }
}
