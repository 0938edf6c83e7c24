#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "netsynth/errors.hpp"

namespace netsynth {

namespace mp = boost::multiprecision;

using Integer  = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

/// Arbitrary-precision real. Precision is a process-wide decimal-digit setting
/// (default 50, clamped to >= 30); arithmetic is correctly rounded at that precision.
using BigReal = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

inline unsigned set_default_precision(unsigned digits10) {
    digits10 = std::max(30u, digits10);
    BigReal::default_precision(digits10);
    return digits10;
}

inline unsigned default_precision() { return BigReal::default_precision(); }

namespace detail {
// the working default is 50 significant digits unless reconfigured
inline const bool kPrecisionInitialized = [] {
    BigReal::default_precision(50);
    return true;
}();
} // namespace detail

/// Canonical rational from an integer pair; goes through division so gcd
/// reduction and sign normalization always happen (string-built mpq values
/// are not canonicalized by the backend).
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DivideByZeroError("zero denominator");
    return Rational(num) / Rational(den);
}

inline Rational make_rational(long long num, long long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

/// Exact square root of a nonnegative rational, if one exists.
inline std::optional<Rational> exact_sqrt(const Rational& x) {
    if (x < 0) return std::nullopt;
    Integer n = mp::numerator(x), d = mp::denominator(x);
    Integer rn = mp::sqrt(n), rd = mp::sqrt(d);
    if (rn * rn != n || rd * rd != d) return std::nullopt;
    return make_rational(rn, rd);
}

// ---------------------------------------------------------------------------
// Scalar traits: the polynomial/rational-function layer is generic over the
// coefficient field. Exact scalars use identity zero tests; inexact scalars
// use a relative threshold derived from the working precision.
// ---------------------------------------------------------------------------

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool is_exact = true;
    static Rational epsilon() { return Rational(0); }
    static std::string to_string(const Rational& x) { return x.str(); }
    static double to_double(const Rational& x) { return x.template convert_to<double>(); }
};

template <>
struct scalar_traits<BigReal> {
    static constexpr bool is_exact = false;
    // documented approximate-equality threshold: 1e-(precision/2)
    static BigReal epsilon() {
        return mp::pow(BigReal(10), -static_cast<int>(default_precision() / 2));
    }
    static std::string to_string(const BigReal& x) { return x.str(default_precision()); }
    static double to_double(const BigReal& x) { return x.template convert_to<double>(); }
};

template <>
struct scalar_traits<double> {
    static constexpr bool is_exact = false;
    static double epsilon() { return 1e-9; }
    static std::string to_string(double x) { return std::to_string(x); }
    static double to_double(double x) { return x; }
};

template <class T>
inline T scalar_abs(const T& x) {
    return x < T(0) ? T(-x) : x;
}

/// Convert between coefficient fields (Rational -> BigReal / double and identity).
template <class To, class From>
inline To scalar_cast(const From& x) {
    if constexpr (std::is_same_v<To, From>) {
        return x;
    } else if constexpr (std::is_same_v<From, Rational>) {
        if constexpr (std::is_same_v<To, BigReal>) {
            return BigReal(mp::numerator(x)) / BigReal(mp::denominator(x));
        } else {
            return x.template convert_to<To>();
        }
    } else {
        return static_cast<To>(x);
    }
}

// ---------------------------------------------------------------------------
// Minimal complex scalar over any coefficient field (exact complex-rational
// arithmetic is what makes the evaluation oracles exact).
// ---------------------------------------------------------------------------

template <class T>
struct Complex {
    T re{0};
    T im{0};

    Complex() = default;
    Complex(T r) : re(std::move(r)) {}
    Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        T n2 = b.norm2();
        if (n2 == T(0)) throw DivideByZeroError("complex division by zero");
        return {(a.re * b.re + a.im * b.im) / n2, (a.im * b.re - a.re * b.im) / n2};
    }
    friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

    T norm2() const { return re * re + im * im; }
    Complex conj() const { return {re, -im}; }
    bool is_zero() const { return re == T(0) && im == T(0); }
};

// ---------------------------------------------------------------------------
// Text helpers: exact rational input in "p/q", integer, or decimal form.
// Decimal text converts verbatim (0.1 -> 1/10), never through binary floats.
// ---------------------------------------------------------------------------

inline Rational parse_rational(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw ParseError("empty number", 0);

    auto slash = t.find('/');
    if (slash != std::string::npos) {
        Integer n(t.substr(0, slash));
        Integer d(t.substr(slash + 1));
        return make_rational(n, d);
    }

    bool neg = false;
    std::size_t i = 0;
    if (t[0] == '+' || t[0] == '-') {
        neg = t[0] == '-';
        i = 1;
    }
    std::string digits;
    long long frac_digits = 0, exp10 = 0;
    bool seen_dot = false;
    for (; i < t.size(); ++i) {
        char c = t[i];
        if (c == '.') {
            if (seen_dot) throw ParseError("malformed number '" + text + "'", i);
            seen_dot = true;
        } else if (c == 'e' || c == 'E') {
            exp10 = std::stoll(t.substr(i + 1));
            break;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            if (seen_dot) ++frac_digits;
        } else {
            throw ParseError("malformed number '" + text + "'", i);
        }
    }
    if (digits.empty()) throw ParseError("malformed number '" + text + "'", 0);
    Integer n(digits);
    if (neg) n = -n;
    long long shift = exp10 - frac_digits;
    Integer p10 = mp::pow(Integer(10), static_cast<unsigned>(std::abs(shift)));
    return shift >= 0 ? make_rational(n * p10, 1) : make_rational(n, p10);
}

} // namespace netsynth
