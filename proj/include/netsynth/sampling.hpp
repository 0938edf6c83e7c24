#pragma once

#include <random>

#include "netsynth/admittance.hpp"
#include "netsynth/synthesis.hpp"

namespace netsynth {

/// Seeded generators for admittance-family tuples. Coefficients are small
/// rationals so exact checks stay cheap and numeric margins stay far above the
/// oracle tolerances. All randomness flows through the caller's engine.
class TupleSampler {
public:
    explicit TupleSampler(std::uint64_t seed) : rng_(seed ^ 0xc2b2ae3d27d4eb4full) {}

    std::mt19937_64& rng() { return rng_; }

    /// p/q with p in [lo, hi], q in [1, max_den]
    Rational rat(int lo, int hi, int max_den = 6) {
        std::uniform_int_distribution<int> np(lo, hi), dp(1, max_den);
        return make_rational(np(rng_), dp(rng_));
    }

    Rational positive_rat(int hi = 12, int max_den = 6) { return rat(1, hi, max_den); }

    /// Nonnegative coefficients with occasional exact zeros and ties; k > 0.
    CanonicalAdmittance<Rational> any_tuple() {
        auto coeff = [&]() {
            std::uniform_int_distribution<int> z(0, 5);
            return z(rng_) == 0 ? Rational(0) : positive_rat();
        };
        Rational a0 = coeff(), a1 = coeff(), d0 = coeff(), d1 = coeff();
        std::uniform_int_distribution<int> tie(0, 4);
        if (tie(rng_) == 0) d1 = a1;
        if (tie(rng_) == 0) d0 = a0;
        return {a0, a1, d0, d1, positive_rat()};
    }

    CanonicalAdmittance<Rational> all_positive_tuple() {
        return {positive_rat(), positive_rat(), positive_rat(), positive_rat(), positive_rat()};
    }

    CanonicalAdmittance<Rational> pr_all_positive_tuple() {
        for (;;) {
            auto y = all_positive_tuple();
            if (is_positive_real(y).is_pr) return y;
        }
    }

    CanonicalAdmittance<Rational> pure_inductor_tuple() {
        std::uniform_int_distribution<int> z(0, 3);
        Rational a0 = z(rng_) == 0 ? Rational(0) : positive_rat();
        Rational a1 = z(rng_) == 0 ? Rational(0) : positive_rat();
        return {a0, a1, a0, a1, positive_rat()};
    }

    /// d0 = 0 with a1 >= d1, or a1 = d1 = 0 with a0 >= d0 > 0.
    CanonicalAdmittance<Rational> degenerate_pr_tuple() {
        std::uniform_int_distribution<int> pick(0, 3), z(0, 3);
        if (pick(rng_) != 0) {
            Rational d1 = z(rng_) == 0 ? Rational(0) : positive_rat();
            Rational a1 = d1 + (z(rng_) == 0 ? Rational(0) : positive_rat());
            Rational a0 = z(rng_) == 0 ? Rational(0) : positive_rat();
            return {a0, a1, Rational(0), d1, positive_rat()};
        }
        Rational d0 = positive_rat();
        Rational a0 = d0 + (z(rng_) == 0 ? Rational(0) : positive_rat());
        return {a0, Rational(0), d0, Rational(0), positive_rat()};
    }

    /// All positive with a shared factor: a0 = AB, a1 = A+B, d0 = BC, d1 = B+C,
    /// A >= C. R_k = 0 exactly.
    CanonicalAdmittance<Rational> rk_zero_tuple(bool allow_full_cancel = true) {
        Rational c = positive_rat(8, 4);
        std::uniform_int_distribution<int> eq(0, 7);
        Rational a = (allow_full_cancel && eq(rng_) == 0) ? c : c + positive_rat(8, 4);
        Rational b = positive_rat(8, 4);
        return {a * b, a + b, b * c, b + c, positive_rat()};
    }

    /// Element-value parameterization of the Fig7a family: a1 = d1, a0 > d0,
    /// R_k != 0 by construction.
    CanonicalAdmittance<Rational> fig7a_family_tuple() {
        Rational r1 = positive_rat(8, 4), l1 = positive_rat(8, 4), l2 = positive_rat(8, 4),
                 c1 = positive_rat(8, 4);
        Rational a0 = l2 * c1;
        Rational a1 = r1 * c1;
        Rational d0 = l1 * l2 * c1 / (l1 + l2);
        Rational k = 1 / (l1 + l2);
        return {a0, a1, d0, a1, k};
    }

    CanonicalAdmittance<Rational> fig7b_family_tuple() { return fid_coefficients(fig7a_family_tuple()); }

    /// A > B > C > D > 0 rationals: exact RL split with R_k < 0.
    CanonicalAdmittance<Rational> rl5_exact_tuple() {
        Rational d = positive_rat(4, 3);
        Rational c = d + positive_rat(4, 3);
        Rational b = c + positive_rat(4, 3);
        Rational a = b + positive_rat(4, 3);
        return {a * c, a + c, b * d, b + d, positive_rat()};
    }

    /// R_k < 0 with generically irrational root splits (rejection sampled).
    CanonicalAdmittance<Rational> rl5_any_tuple() {
        for (;;) {
            auto y = all_positive_tuple();
            if (!is_positive_real(y).is_pr) continue;
            if (r_k(y) < 0) return y;
        }
    }

    /// (a0 d1 - a1 d0)(a1 - d1) = d0^2 with R_k != 0: d0 = T (a1 - d1) and
    /// a0 = T (a1 - d1)(a1 + T)/d1 for rational T > 0.
    CanonicalAdmittance<Rational> bridge_tuple() {
        for (;;) {
            Rational d1 = positive_rat(6, 3);
            Rational delta = positive_rat(6, 3);
            Rational t = positive_rat(6, 3);
            if (delta + t == d1) continue;  // that degenerate line has R_k = 0
            Rational a1 = d1 + delta;
            Rational d0 = t * delta;
            Rational a0 = t * delta * (a1 + t) / d1;
            return {a0, a1, d0, d1, positive_rat()};
        }
    }

    /// All positive, positive-real, R_k != 0, none of the four-element or
    /// bridge conditions: no five-or-fewer-element construction applies.
    CanonicalAdmittance<Rational> canonical_required_tuple() {
        for (;;) {
            auto y = pr_all_positive_tuple();
            Classification c = classify(y);
            if (c.kase == SynthCase::CanonicalRequired) return y;
        }
    }

    /// All-positive positive-real tuple with R_k bounded away from zero and the
    /// realizability conditions bounded away from their boundaries; used by the
    /// statistical non-realizability experiments.
    CanonicalAdmittance<Rational> margin_tuple(const Rational& margin = make_rational(1, 4)) {
        for (;;) {
            auto y = pr_all_positive_tuple();
            if (scalar_abs(r_k(y)) < margin) continue;
            if (y.a1 - y.d1 < margin) continue;
            if (y.a0 - y.d0 < margin) continue;
            if (scalar_abs(y.a0 * y.d1 - y.a1 * y.d0) < margin) continue;
            Rational defect = (y.a0 * y.d1 - y.a1 * y.d0) * (y.a1 - y.d1) - y.d0 * y.d0;
            if (scalar_abs(defect) < margin) continue;
            return y;
        }
    }

    /// Mixture spanning every classifier branch.
    CanonicalAdmittance<Rational> pr_branch_tuple(int i) {
        switch (i % 8) {
            case 0: return pure_inductor_tuple();
            case 1: return degenerate_pr_tuple();
            case 2: return rk_zero_tuple();
            case 3: return fig7a_family_tuple();
            case 4: return fig7b_family_tuple();
            case 5: return rl5_exact_tuple();
            case 6: return bridge_tuple();
            default: return canonical_required_tuple();
        }
    }

    /// Same mixture restricted to all-positive coefficient tuples.
    CanonicalAdmittance<Rational> pr_all_positive_branch_tuple(int i) {
        for (;;) {
            CanonicalAdmittance<Rational> y = [&] {
                switch (i % 7) {
                    case 0: return pure_inductor_tuple();
                    case 1: return rk_zero_tuple();
                    case 2: return fig7a_family_tuple();
                    case 3: return fig7b_family_tuple();
                    case 4: return rl5_exact_tuple();
                    case 5: return bridge_tuple();
                    default: return canonical_required_tuple();
                }
            }();
            if (y.a0 > 0 && y.a1 > 0 && y.d0 > 0 && y.d1 > 0) return y;
        }
    }

private:
    std::mt19937_64 rng_;
};

} // namespace netsynth
