#pragma once

#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "netsynth/scalars.hpp"

namespace netsynth {

/// Dense univariate polynomial in s over an exact or approximate coefficient
/// field. Invariant: the highest stored coefficient is nonzero; degree(0) = -1.
template <class T>
class Poly {
public:
    Poly() = default;
    explicit Poly(T constant) {
        if (!(constant == T(0))) c_.push_back(std::move(constant));
    }
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(T(1)); }
    static Poly variable() { return Poly(std::vector<T>{T(0), T(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    /// Coefficient of s^i; zero beyond the stored degree.
    T coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : T(0);
    }
    const std::vector<T>& coeffs() const { return c_; }

    T leading() const { return c_.empty() ? T(0) : c_.back(); }
    T constant_term() const { return coeff(0); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator-(const Poly& a) {
        std::vector<T> r = a.c_;
        for (auto& x : r) x = -x;
        Poly p;
        p.c_ = std::move(r);
        return p;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const T& k) {
        if (k == T(0)) return Poly();
        std::vector<T> r = a.c_;
        for (auto& x : r) x = x * k;
        return Poly(std::move(r));
    }
    friend Poly operator*(const T& k, const Poly& a) { return a * k; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Quotient and remainder with p = q*quot + rem, deg(rem) < deg(q).
    static std::pair<Poly, Poly> divrem(const Poly& p, const Poly& q) {
        if (q.is_zero()) throw DivideByZeroError("polynomial division by zero");
        Poly rem = p;
        std::vector<T> quot;
        int dq = q.degree();
        if (rem.degree() >= dq) quot.assign(static_cast<std::size_t>(rem.degree() - dq) + 1, T(0));
        while (!rem.is_zero() && rem.degree() >= dq) {
            int shift = rem.degree() - dq;
            T factor = rem.leading() / q.leading();
            quot[static_cast<std::size_t>(shift)] = factor;
            std::vector<T> r = rem.c_;
            for (int i = 0; i <= dq; ++i)
                r[static_cast<std::size_t>(i + shift)] =
                    r[static_cast<std::size_t>(i + shift)] - factor * q.c_[static_cast<std::size_t>(i)];
            r.pop_back(); // leading term cancels by construction
            Poly nr;
            nr.c_ = std::move(r);
            nr.trim();
            rem = std::move(nr);
        }
        return {Poly(std::move(quot)), rem};
    }

    /// Exact quotient; the remainder must vanish (up to the field's epsilon).
    friend Poly operator/(const Poly& p, const Poly& q) {
        auto [quot, rem] = divrem(p, q);
        if constexpr (scalar_traits<T>::is_exact) {
            if (!rem.is_zero()) throw Error("inexact polynomial division");
        }
        return quot;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T(static_cast<int>(i));
        return Poly(std::move(r));
    }

    template <class S>
    S eval(const S& x) const {
        S acc(T(0));
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + S(*it);
        return acc;
    }

    /// p(-s): flip the sign of odd coefficients.
    Poly subst_neg() const {
        std::vector<T> r = c_;
        for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
        return Poly(std::move(r));
    }

    /// s^n * p(1/s) for n >= degree: reversed coefficients padded to length n+1.
    Poly reversed(int n) const {
        assert(n >= degree());
        std::vector<T> r(static_cast<std::size_t>(n) + 1, T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[static_cast<std::size_t>(n) - i] = c_[i];
        return Poly(std::move(r));
    }

    Poly monic() const {
        if (is_zero()) return *this;
        T inv = T(1) / leading();
        return *this * inv;
    }

    T max_abs_coeff() const {
        T m(0);
        for (const auto& x : c_) m = std::max(m, scalar_abs(x));
        return m;
    }

    /// Drop trailing coefficients that are tiny relative to the largest one.
    Poly trimmed_relative(const T& eps) const {
        if (is_zero()) return *this;
        T floor_val = max_abs_coeff() * eps;
        std::vector<T> r = c_;
        while (!r.empty() && scalar_abs(r.back()) <= floor_val) r.pop_back();
        for (auto& x : r)
            if (scalar_abs(x) <= floor_val) x = T(0);
        Poly p;
        p.c_ = std::move(r);
        return p;
    }

    /// Monic greatest common divisor. Exact fields use a primitive fraction-free
    /// remainder sequence over the integers; approximate fields use a thresholded
    /// Euclidean sequence at the field's epsilon (documented approximate).
    static Poly gcd(const Poly& a, const Poly& b) {
        if constexpr (std::is_same_v<T, Rational>) {
            return gcd_exact(a, b);
        } else {
            return gcd_approx(a, b);
        }
    }

    std::string to_string(const std::string& var = "s") const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            T c = coeff(i);
            if (c == T(0)) continue;
            bool negative = c < T(0);
            T mag = negative ? T(-c) : c;
            if (out.empty()) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            std::string cs = scalar_traits<T>::to_string(mag);
            if (i == 0) {
                out += cs;
            } else {
                if (!(mag == T(1))) out += cs + "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    std::vector<T> c_;

    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }

    // --- exact gcd over Rational via integer primitive PRS ---
    static std::vector<Integer> to_int_primitive(const Poly<Rational>& p) {
        Integer l(1);
        for (const auto& c : p.coeffs()) l = mp::lcm(l, mp::denominator(c));
        std::vector<Integer> v;
        v.reserve(p.coeffs().size());
        Integer g(0);
        for (const auto& c : p.coeffs()) {
            Integer x = mp::numerator(c) * (l / mp::denominator(c));
            v.push_back(x);
            g = mp::gcd(g, x);
        }
        if (g > 1)
            for (auto& x : v) x /= g;
        return v;
    }

    static void make_primitive(std::vector<Integer>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
        Integer g(0);
        for (const auto& x : v) g = mp::gcd(g, x);
        if (g > 1)
            for (auto& x : v) x /= g;
    }

    // pseudo-remainder of A by B, fraction-free (scale by lc(B) before each step)
    static std::vector<Integer> prem(std::vector<Integer> A, const std::vector<Integer>& B) {
        Integer lb = B.back();
        int db = static_cast<int>(B.size()) - 1;
        while (static_cast<int>(A.size()) - 1 >= db) {
            int k = static_cast<int>(A.size()) - 1;
            Integer la = A.back();
            for (auto& x : A) x *= lb;
            for (int i = 0; i <= db; ++i)
                A[static_cast<std::size_t>(k - db + i)] -= la * B[static_cast<std::size_t>(i)];
            A.pop_back();  // leading term cancels by construction
            while (!A.empty() && A.back() == 0) A.pop_back();
        }
        return A;
    }

    static Poly gcd_exact(const Poly& a, const Poly& b) {
        if (a.is_zero()) return b.monic();
        if (b.is_zero()) return a.monic();
        std::vector<Integer> A = to_int_primitive(a), B = to_int_primitive(b);
        if (A.size() < B.size()) std::swap(A, B);
        while (!B.empty()) {
            std::vector<Integer> R = prem(A, B);
            make_primitive(R);
            A = std::move(B);
            B = std::move(R);
        }
        std::vector<T> rc;
        rc.reserve(A.size());
        for (const auto& x : A) rc.emplace_back(make_rational(x, 1));
        return Poly(std::move(rc)).monic();
    }

    static Poly gcd_approx(const Poly& a, const Poly& b) {
        T eps = scalar_traits<T>::epsilon();
        Poly A = a.trimmed_relative(eps), B = b.trimmed_relative(eps);
        if (A.is_zero()) return B.monic();
        if (B.is_zero()) return A.monic();
        if (A.degree() < B.degree()) std::swap(A, B);
        while (!B.is_zero() && B.degree() >= 0) {
            auto [q, r] = divrem(A, B);
            (void)q;
            T scale = std::max(A.max_abs_coeff(), B.max_abs_coeff());
            Poly rr = r.trimmed_relative(eps);
            if (!rr.is_zero() && rr.max_abs_coeff() <= scale * eps) rr = Poly();
            A = std::move(B);
            B = std::move(rr);
            if (A.degree() == 0) break;
        }
        return A.monic();
    }
};

} // namespace netsynth
