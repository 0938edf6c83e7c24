#pragma once

#include <string>
#include <utility>

#include "netsynth/poly.hpp"

namespace netsynth {

/// Reduced quotient of two polynomials. Stored form is canonical: numerator and
/// denominator are coprime and the denominator is monic, so two RatFuncs are
/// equal exactly when their stored forms are identical.
template <class T>
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly<T>::one()) {}
    explicit RatFunc(T constant) : num_(Poly<T>(std::move(constant))), den_(Poly<T>::one()) {}
    explicit RatFunc(Poly<T> num) : num_(std::move(num)), den_(Poly<T>::one()) {}
    RatFunc(Poly<T> num, Poly<T> den) { normalize(std::move(num), std::move(den)); }

    static RatFunc variable() { return RatFunc(Poly<T>::variable()); }

    const Poly<T>& num() const { return num_; }
    const Poly<T>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a) {
        RatFunc r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw DivideByZeroError("division by zero rational function");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RatFunc reciprocal() const {
        if (is_zero()) throw DivideByZeroError("reciprocal of zero");
        return RatFunc(den_, num_);
    }

    /// f(-s)
    RatFunc subst_neg() const { return RatFunc(num_.subst_neg(), den_.subst_neg()); }

    /// f(1/s)
    RatFunc subst_inv() const {
        int m = std::max(num_.degree(), den_.degree());
        if (m < 0) return *this;
        return RatFunc(num_.reversed(m), den_.reversed(m));
    }

    /// (f(s) + f(-s))/2, reduced; an even function of s.
    RatFunc even_part() const {
        RatFunc half(Poly<T>(T(1)), Poly<T>(T(2)));
        return (*this + subst_neg()) * half;
    }

    template <class S>
    S eval(const S& z) const {
        S d = den_.template eval<S>(z);
        if (is_pole_value(d)) throw PoleError("evaluation at a pole");
        return num_.template eval<S>(z) / d;
    }

    std::string to_string(const std::string& var = "s") const {
        return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
    }

private:
    Poly<T> num_, den_;

    void normalize(Poly<T> num, Poly<T> den) {
        if constexpr (!scalar_traits<T>::is_exact) {
            T eps = scalar_traits<T>::epsilon();
            num = num.trimmed_relative(eps);
            den = den.trimmed_relative(eps);
        }
        if (den.is_zero()) throw DivideByZeroError("zero denominator polynomial");
        if (num.is_zero()) {
            num_ = Poly<T>();
            den_ = Poly<T>::one();
            return;
        }
        Poly<T> g = Poly<T>::gcd(num, den);
        if (g.degree() > 0) {
            num = num / g;
            den = den / g;
        }
        T inv = T(1) / den.leading();
        num_ = num * inv;
        den_ = den * inv;
    }

    static bool is_pole_value(const T& d) {
        if constexpr (scalar_traits<T>::is_exact) {
            return d == T(0);
        } else {
            return scalar_abs(d) <= scalar_traits<T>::epsilon();
        }
    }
    static bool is_pole_value(const Complex<T>& d) {
        if constexpr (scalar_traits<T>::is_exact) {
            return d.is_zero();
        } else {
            T eps = scalar_traits<T>::epsilon();
            return d.norm2() <= eps * eps;
        }
    }
};

} // namespace netsynth
