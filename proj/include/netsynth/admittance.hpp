#pragma once

#include <optional>
#include <string>

#include "netsynth/ratfunc.hpp"

namespace netsynth {

/// The admittance family Y(s) = k (a0 s^2 + a1 s + 1) / (s (d0 s^2 + d1 s + 1))
/// with a0, a1, d0, d1 >= 0 and k > 0; both quadratics have constant term 1 by
/// construction.
template <class T>
struct CanonicalAdmittance {
    T a0{0}, a1{0}, d0{0}, d1{0}, k{1};

    CanonicalAdmittance() = default;
    CanonicalAdmittance(T a0_, T a1_, T d0_, T d1_, T k_)
        : a0(std::move(a0_)), a1(std::move(a1_)), d0(std::move(d0_)), d1(std::move(d1_)), k(std::move(k_)) {
        if (a0 < T(0) || a1 < T(0) || d0 < T(0) || d1 < T(0))
            throw ShapeError("coefficients must be nonnegative");
        if (!(k > T(0))) throw ShapeError("k must be positive");
    }

    RatFunc<T> to_ratfunc() const {
        Poly<T> num(std::vector<T>{k, k * a1, k * a0});
        Poly<T> den(std::vector<T>{T(0), T(1), d1, d0});
        return RatFunc<T>(num, den);
    }

    friend bool operator==(const CanonicalAdmittance& x, const CanonicalAdmittance& y) {
        return x.a0 == y.a0 && x.a1 == y.a1 && x.d0 == y.d0 && x.d1 == y.d1 && x.k == y.k;
    }

    std::string to_string() const {
        auto f = [](const T& v) { return scalar_traits<T>::to_string(v); };
        return "(" + f(a0) + ", " + f(a1) + ", " + f(d0) + ", " + f(d1) + ", " + f(k) + ")";
    }
};

enum class PrCase {
    ZeroD0,       // d0 = 0: positive-real iff a1 >= d1
    ZeroA1D1,     // a1 = d1 = 0, d0 > 0: positive-real iff a0 >= d0
    Degenerate,   // some coefficient zero in a pattern that can never be positive-real
    AllPositive,  // general three-inequality test
};

enum class PrFailure {
    None,
    A0D1MinusA1D0Negative,
    A1MinusD1Negative,
    A0MinusD0Negative,
    DegenerateViolation,
};

struct PrVerdict {
    bool is_pr = false;
    PrFailure failed_condition = PrFailure::None;
    PrCase case_tag = PrCase::AllPositive;
};

inline std::string to_string(PrFailure f) {
    switch (f) {
        case PrFailure::None: return "none";
        case PrFailure::A0D1MinusA1D0Negative: return "a0*d1 - a1*d0 < 0";
        case PrFailure::A1MinusD1Negative: return "a1 - d1 < 0";
        case PrFailure::A0MinusD0Negative: return "a0 - d0 < 0";
        case PrFailure::DegenerateViolation: return "zero-coefficient pattern cannot be positive-real";
    }
    return "?";
}

inline std::string to_string(PrCase c) {
    switch (c) {
        case PrCase::ZeroD0: return "d0 = 0";
        case PrCase::ZeroA1D1: return "a1 = d1 = 0";
        case PrCase::Degenerate: return "degenerate";
        case PrCase::AllPositive: return "all coefficients positive";
    }
    return "?";
}

/// Match a reduced rational function to the admittance family. The scaling is
/// chosen so both quadratic constant terms are exactly 1.
template <class T>
CanonicalAdmittance<T> from_ratfunc(const RatFunc<T>& f) {
    const Poly<T>& n = f.num();
    const Poly<T>& d = f.den();
    if (n.is_zero()) throw ShapeError("zero admittance has no canonical form");
    if (n.degree() > 2 || d.degree() > 3) throw ShapeError("degrees exceed (2, 3)");
    if (!(d.constant_term() == T(0)))
        throw ShapeError("denominator lacks the required factor s");
    if (d.degree() < 1) throw ShapeError("denominator must contain s");
    // d(s)/s = e2 s^2 + e1 s + e0
    T e0 = d.coeff(1), e1 = d.coeff(2), e2 = d.coeff(3);
    if (e0 == T(0)) throw ShapeError("denominator quadratic has zero constant term");
    T n0 = n.coeff(0), n1 = n.coeff(1), n2 = n.coeff(2);
    if (n0 == T(0)) throw ShapeError("numerator constant term vanishes");
    T k = n0 / e0;
    if (!(k > T(0))) throw ShapeError("k must be positive");
    T a0 = n2 / n0, a1 = n1 / n0, d0 = e2 / e0, d1 = e1 / e0;
    if (a0 < T(0) || a1 < T(0) || d0 < T(0) || d1 < T(0))
        throw ShapeError("negative coefficient");
    return CanonicalAdmittance<T>(a0, a1, d0, d1, k);
}

/// The classifier quantity R_k = (a0 - d0)^2 - (a0 d1 - a1 d0)(a1 - d1).
template <class T>
T r_k(const CanonicalAdmittance<T>& y) {
    T da = y.a0 - y.d0;
    return da * da - (y.a0 * y.d1 - y.a1 * y.d0) * (y.a1 - y.d1);
}

/// Positive-realness for the family. d0 = 0 reduces to a1 >= d1; a1 = d1 = 0
/// reduces to a0 >= d0; other zero-coefficient patterns are never positive-real;
/// the all-positive case needs a0 d1 - a1 d0 >= 0, a1 - d1 >= 0 and a0 - d0 >= 0.
template <class T>
PrVerdict is_positive_real(const CanonicalAdmittance<T>& y) {
    PrVerdict v;
    if (y.d0 == T(0)) {
        v.case_tag = PrCase::ZeroD0;
        if (y.a1 >= y.d1) {
            v.is_pr = true;
        } else {
            v.is_pr = false;
            v.failed_condition = PrFailure::A1MinusD1Negative;
        }
        return v;
    }
    if (y.a1 == T(0) && y.d1 == T(0)) {
        v.case_tag = PrCase::ZeroA1D1;
        if (y.a0 >= y.d0) {
            v.is_pr = true;
        } else {
            v.is_pr = false;
            v.failed_condition = PrFailure::A0MinusD0Negative;
        }
        return v;
    }
    if (y.a0 == T(0) || y.a1 == T(0) || y.d1 == T(0)) {
        v.case_tag = PrCase::Degenerate;
        v.is_pr = false;
        v.failed_condition = PrFailure::DegenerateViolation;
        return v;
    }
    v.case_tag = PrCase::AllPositive;
    if (y.a0 * y.d1 - y.a1 * y.d0 < T(0)) {
        v.failed_condition = PrFailure::A0D1MinusA1D0Negative;
    } else if (y.a1 - y.d1 < T(0)) {
        v.failed_condition = PrFailure::A1MinusD1Negative;
    } else if (y.a0 - y.d0 < T(0)) {
        v.failed_condition = PrFailure::A0MinusD0Negative;
    } else {
        v.is_pr = true;
    }
    return v;
}

/// Frequency-inverse dual coefficients: the tuple of Y1(s) = Y^{-1}(1/s).
/// Applying it twice returns the input exactly.
template <class T>
CanonicalAdmittance<T> fid_coefficients(const CanonicalAdmittance<T>& y) {
    if (y.a0 == T(0) || y.d0 == T(0))
        throw DegenerateDualError("frequency-inverse dual needs a0 > 0 and d0 > 0");
    return CanonicalAdmittance<T>(T(1) / y.d0, y.d1 / y.d0, T(1) / y.a0, y.a1 / y.a0,
                                  y.d0 / (y.k * y.a0));
}

/// If the reduced form of Y is k/s (numerator and denominator quadratics
/// cancel), returns the inductance 1/k; absent otherwise.
template <class T>
std::optional<T> is_pure_inductor(const CanonicalAdmittance<T>& y) {
    if (y.a0 == y.d0 && y.a1 == y.d1) return T(1) / y.k;
    return std::nullopt;
}

} // namespace netsynth
