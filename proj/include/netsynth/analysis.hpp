#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <vector>

#include "netsynth/admittance.hpp"
#include "netsynth/netlist.hpp"

namespace netsynth {

namespace detail {

/// Determinant of a square matrix of polynomials. Exact fields use Bareiss
/// fraction-free elimination (divisions are exact in the polynomial ring);
/// approximate fields evaluate at integer nodes, take scalar LU determinants
/// and interpolate, which avoids polynomial division entirely.
template <class T>
class PolyMatrix {
public:
    explicit PolyMatrix(std::size_t n) : n_(n), m_(n * n) {}

    Poly<T>& at(std::size_t i, std::size_t j) { return m_[i * n_ + j]; }
    const Poly<T>& at(std::size_t i, std::size_t j) const { return m_[i * n_ + j]; }
    std::size_t size() const { return n_; }

    PolyMatrix minor_without(std::size_t r) const {
        PolyMatrix out(n_ - 1);
        std::size_t oi = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            if (i == r) continue;
            std::size_t oj = 0;
            for (std::size_t j = 0; j < n_; ++j) {
                if (j == r) continue;
                out.at(oi, oj) = at(i, j);
                ++oj;
            }
            ++oi;
        }
        return out;
    }

    Poly<T> determinant() const {
        if constexpr (scalar_traits<T>::is_exact) {
            return det_bareiss();
        } else {
            return det_interpolate();
        }
    }

private:
    std::size_t n_;
    std::vector<Poly<T>> m_;

    Poly<T> det_bareiss() const {
        if (n_ == 0) return Poly<T>::one();
        std::vector<Poly<T>> a = m_;
        auto A = [&](std::size_t i, std::size_t j) -> Poly<T>& { return a[i * n_ + j]; };
        Poly<T> prev = Poly<T>::one();
        int sign = 1;
        for (std::size_t k = 0; k + 1 < n_; ++k) {
            if (A(k, k).is_zero()) {
                std::size_t swap_row = n_;
                for (std::size_t i = k + 1; i < n_; ++i)
                    if (!A(i, k).is_zero()) {
                        swap_row = i;
                        break;
                    }
                if (swap_row == n_) return Poly<T>();
                for (std::size_t j = 0; j < n_; ++j) std::swap(A(k, j), A(swap_row, j));
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n_; ++i) {
                for (std::size_t j = k + 1; j < n_; ++j)
                    A(i, j) = (A(i, j) * A(k, k) - A(i, k) * A(k, j)) / prev;
                A(i, k) = Poly<T>();
            }
            prev = A(k, k);
        }
        Poly<T> det = A(n_ - 1, n_ - 1);
        return sign < 0 ? -det : det;
    }

    Poly<T> det_interpolate() const {
        if (n_ == 0) return Poly<T>::one();
        int deg_bound = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            int row_max = 0;
            for (std::size_t j = 0; j < n_; ++j) row_max = std::max(row_max, at(i, j).degree());
            deg_bound += std::max(row_max, 0);
        }
        int npts = deg_bound + 1;
        std::vector<T> xs, ys;
        xs.reserve(static_cast<std::size_t>(npts));
        for (int k = 0; k < npts; ++k) {
            int v = (k % 2 == 0) ? (k / 2) : -(k / 2 + 1);  // 0, -1, 1, -2, 2, ...
            xs.push_back(T(v));
        }
        ys.reserve(xs.size());
        for (const T& x : xs) ys.push_back(det_at(x));
        return lagrange(xs, ys);
    }

    T det_at(const T& x) const {
        std::vector<T> a(n_ * n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) a[i * n_ + j] = at(i, j).template eval<T>(x);
        T det(1);
        for (std::size_t k = 0; k < n_; ++k) {
            std::size_t piv = k;
            for (std::size_t i = k + 1; i < n_; ++i)
                if (scalar_abs(a[i * n_ + k]) > scalar_abs(a[piv * n_ + k])) piv = i;
            if (a[piv * n_ + k] == T(0)) return T(0);
            if (piv != k) {
                for (std::size_t j = 0; j < n_; ++j) std::swap(a[k * n_ + j], a[piv * n_ + j]);
                det = -det;
            }
            det = det * a[k * n_ + k];
            for (std::size_t i = k + 1; i < n_; ++i) {
                T f = a[i * n_ + k] / a[k * n_ + k];
                for (std::size_t j = k; j < n_; ++j) a[i * n_ + j] = a[i * n_ + j] - f * a[k * n_ + j];
            }
        }
        return det;
    }

    static Poly<T> lagrange(const std::vector<T>& xs, const std::vector<T>& ys) {
        Poly<T> acc;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            Poly<T> basis = Poly<T>::one();
            T denom(1);
            for (std::size_t j = 0; j < xs.size(); ++j) {
                if (j == i) continue;
                basis = basis * Poly<T>(std::vector<T>{-xs[j], T(1)});
                denom = denom * (xs[i] - xs[j]);
            }
            acc = acc + basis * (ys[i] / denom);
        }
        return acc;
    }
};

} // namespace detail

template <class T>
struct AdmittanceResult {
    RatFunc<T> y;
    std::optional<CanonicalAdmittance<T>> canonical;  // present when the family shape matches
    int degree = 0;                                   // max of reduced num/den degrees
};

/// Unreduced numerator/denominator of the driving-point admittance: the
/// node-admittance system is scaled by s so every entry is a polynomial
/// (R -> s/R, L -> 1/L, C -> C s^2); with T- grounded,
/// Y = det(M) / (s det(M with the T+ row and column removed)).
/// The pair may share a polynomial factor; no reduction is performed here.
template <class T>
std::pair<Poly<T>, Poly<T>> driving_point_raw(const Netlist<T>& n) {
    n.validate();
    // unknown node index: all nodes except T- (ground)
    std::vector<int> unknown_of(n.nodes.size(), -1);
    std::size_t count = 0;
    for (std::size_t v = 0; v < n.nodes.size(); ++v)
        if (static_cast<int>(v) != Netlist<T>::kMinus) unknown_of[v] = static_cast<int>(count++);

    detail::PolyMatrix<T> M(count);
    for (const auto& e : n.edges) {
        Poly<T> ys;  // edge admittance times s
        switch (e.kind) {
            case ElementKind::R: ys = Poly<T>(std::vector<T>{T(0), T(1) / e.value}); break;
            case ElementKind::L: ys = Poly<T>(T(1) / e.value); break;
            case ElementKind::C: ys = Poly<T>(std::vector<T>{T(0), T(0), e.value}); break;
        }
        int ia = unknown_of[static_cast<std::size_t>(e.a)];
        int ib = unknown_of[static_cast<std::size_t>(e.b)];
        if (ia >= 0) M.at(static_cast<std::size_t>(ia), static_cast<std::size_t>(ia)) =
            M.at(static_cast<std::size_t>(ia), static_cast<std::size_t>(ia)) + ys;
        if (ib >= 0) M.at(static_cast<std::size_t>(ib), static_cast<std::size_t>(ib)) =
            M.at(static_cast<std::size_t>(ib), static_cast<std::size_t>(ib)) + ys;
        if (ia >= 0 && ib >= 0) {
            M.at(static_cast<std::size_t>(ia), static_cast<std::size_t>(ib)) =
                M.at(static_cast<std::size_t>(ia), static_cast<std::size_t>(ib)) - ys;
            M.at(static_cast<std::size_t>(ib), static_cast<std::size_t>(ia)) =
                M.at(static_cast<std::size_t>(ib), static_cast<std::size_t>(ia)) - ys;
        }
    }

    std::size_t t_plus = static_cast<std::size_t>(unknown_of[Netlist<T>::kPlus]);
    Poly<T> det_full = M.determinant();
    Poly<T> det_minor = M.minor_without(t_plus).determinant();
    return {std::move(det_full), Poly<T>::variable() * det_minor};
}

/// Reduced driving-point admittance with the family coefficients when the
/// shape matches.
template <class T>
AdmittanceResult<T> driving_point_admittance(const Netlist<T>& n) {
    auto [num, den] = driving_point_raw(n);
    if (num.is_zero() || den.is_zero()) throw SingularSystemError("nodal system is singular");
    AdmittanceResult<T> out;
    out.y = RatFunc<T>(num, den);
    out.degree = std::max(out.y.num().degree(), out.y.den().degree());
    try {
        out.canonical = from_ratfunc(out.y);
    } catch (const ShapeError&) {
        out.canonical = std::nullopt;
    }
    return out;
}

/// Family coefficients of an analysis result; throws ShapeError when the
/// reduced admittance is not in the family.
template <class T>
CanonicalAdmittance<T> extract_canonical(const AdmittanceResult<T>& r) {
    if (r.canonical) return *r.canonical;
    return from_ratfunc(r.y);  // raises the ShapeError with its reason
}

// ---------------------------------------------------------------------------
// Frequency response sampling and the numeric positive-realness oracle
// ---------------------------------------------------------------------------

struct FrequencyGrid {
    double lo = 1e-6;
    double hi = 1e6;
    int points = 601;

    std::vector<double> values() const {
        std::vector<double> out;
        out.reserve(static_cast<std::size_t>(points));
        double llo = std::log10(lo), lhi = std::log10(hi);
        for (int i = 0; i < points; ++i) {
            double t = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
            out.push_back(std::pow(10.0, llo + t * (lhi - llo)));
        }
        return out;
    }
};

struct FrequencySample {
    double omega = 0;
    double re = 0;
    double im = 0;
    bool pole = false;  // |den(j omega)| underflowed; re/im are not meaningful
};

namespace detail {

template <class T>
std::vector<double> to_double_coeffs(const Poly<T>& p) {
    std::vector<double> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(scalar_traits<T>::to_double(c));
    return out;
}

inline std::complex<double> eval_dc(const std::vector<double>& coeffs, std::complex<double> z) {
    std::complex<double> acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

} // namespace detail

template <class T>
std::vector<FrequencySample> sample_response(const RatFunc<T>& y, const FrequencyGrid& grid) {
    auto nc = detail::to_double_coeffs(y.num());
    auto dc = detail::to_double_coeffs(y.den());
    std::vector<FrequencySample> out;
    for (double w : grid.values()) {
        if (!(w > 0)) throw Error("grid frequencies must be positive");
        std::complex<double> z(0.0, w);
        std::complex<double> d = detail::eval_dc(dc, z);
        FrequencySample smp;
        smp.omega = w;
        if (std::abs(d) < 1e-250) {
            smp.pole = true;
        } else {
            std::complex<double> v = detail::eval_dc(nc, z) / d;
            smp.re = v.real();
            smp.im = v.imag();
        }
        out.push_back(smp);
    }
    return out;
}

template <class T>
std::vector<FrequencySample> sample_response(const CanonicalAdmittance<T>& y,
                                             const FrequencyGrid& grid) {
    return sample_response(y.to_ratfunc(), grid);
}

template <class T>
std::vector<FrequencySample> sample_response(const Netlist<T>& n, const FrequencyGrid& grid) {
    return sample_response(driving_point_admittance(n).y, grid);
}

/// Driving-point admittance of a double-valued netlist at one complex
/// frequency by scalar nodal analysis (stable pointwise route, independent of
/// the polynomial-determinant path). NaN when the nodal system is singular.
inline std::complex<double> admittance_at(const Netlist<double>& n, std::complex<double> s) {
    using cd = std::complex<double>;
    std::vector<int> unknown_of(n.nodes.size(), -1);
    std::size_t count = 0;
    for (std::size_t v = 0; v < n.nodes.size(); ++v)
        if (static_cast<int>(v) != Netlist<double>::kMinus) unknown_of[v] = static_cast<int>(count++);
    std::vector<cd> A(count * count, cd(0));
    auto at = [&](int i, int j) -> cd& { return A[static_cast<std::size_t>(i) * count +
                                                  static_cast<std::size_t>(j)]; };
    for (const auto& e : n.edges) {
        cd y;
        switch (e.kind) {
            case ElementKind::R: y = cd(1.0 / e.value); break;
            case ElementKind::L: y = cd(1.0) / (e.value * s); break;
            case ElementKind::C: y = e.value * s; break;
        }
        int ia = unknown_of[static_cast<std::size_t>(e.a)];
        int ib = unknown_of[static_cast<std::size_t>(e.b)];
        if (ia >= 0) at(ia, ia) += y;
        if (ib >= 0) at(ib, ib) += y;
        if (ia >= 0 && ib >= 0) {
            at(ia, ib) -= y;
            at(ib, ia) -= y;
        }
    }
    int t = unknown_of[Netlist<double>::kPlus];
    std::vector<cd> rhs(count, cd(0));
    rhs[static_cast<std::size_t>(t)] = cd(1);
    // LU with partial pivoting
    for (std::size_t k = 0; k < count; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < count; ++i)
            if (std::abs(A[i * count + k]) > std::abs(A[piv * count + k])) piv = i;
        if (std::abs(A[piv * count + k]) == 0.0)
            return {std::numeric_limits<double>::quiet_NaN(), 0.0};
        if (piv != k) {
            for (std::size_t j = 0; j < count; ++j) std::swap(A[k * count + j], A[piv * count + j]);
            std::swap(rhs[k], rhs[piv]);
        }
        for (std::size_t i = k + 1; i < count; ++i) {
            cd f = A[i * count + k] / A[k * count + k];
            for (std::size_t j = k; j < count; ++j) A[i * count + j] -= f * A[k * count + j];
            rhs[i] -= f * rhs[k];
        }
    }
    std::vector<cd> x(count);
    for (std::size_t k = count; k-- > 0;) {
        cd sum = rhs[k];
        for (std::size_t j = k + 1; j < count; ++j) sum -= A[k * count + j] * x[j];
        x[k] = sum / A[k * count + k];
    }
    return cd(1) / x[static_cast<std::size_t>(t)];
}

struct NumericPrOptions {
    FrequencyGrid grid;
    double re_tol = 1e-12;       // min Re Y(j omega) >= -re_tol
    double residue_tol = 1e-9;   // jw-axis pole residues: |Im| <= tol, Re >= -tol
};

struct NumericPrResult {
    bool is_pr = false;
    double min_re = 0;
    double min_re_omega = 0;
    bool residue_failure = false;
};

/// Independent numeric positive-realness check: sample Re Y(j omega) over a log
/// grid (plus neighborhoods of denominator roots) and verify that every simple
/// pole on the imaginary axis has a nonnegative real residue. Runs entirely in
/// double arithmetic; independent of the exact coefficient test.
template <class T>
NumericPrResult numeric_pr_check(const CanonicalAdmittance<T>& y,
                                 const NumericPrOptions& opts = {}) {
    double a0 = scalar_traits<T>::to_double(y.a0), a1 = scalar_traits<T>::to_double(y.a1);
    double d0 = scalar_traits<T>::to_double(y.d0), d1 = scalar_traits<T>::to_double(y.d1);
    double k = scalar_traits<T>::to_double(y.k);
    std::vector<double> nc{k, k * a1, k * a0};
    std::vector<double> dc{0.0, 1.0, d1, d0};

    NumericPrResult res;
    res.min_re = std::numeric_limits<double>::infinity();

    // denominator roots beyond s = 0 (whose residue is k > 0 by construction)
    std::vector<std::complex<double>> roots;
    if (d0 > 0) {
        std::complex<double> disc = std::complex<double>(d1 * d1 - 4.0 * d0, 0.0);
        std::complex<double> sq = std::sqrt(disc);
        roots.push_back((-d1 + sq) / (2.0 * d0));
        roots.push_back((-d1 - sq) / (2.0 * d0));
    } else if (d1 > 0) {
        roots.emplace_back(-1.0 / d1, 0.0);
    }

    // D(s) = s (d0 s^2 + d1 s + 1) => D'(s) = 3 d0 s^2 + 2 d1 s + 1
    std::vector<double> Dfull{0.0, 1.0, d1, d0};
    std::vector<double> Dderiv{1.0, 2.0 * d1, 3.0 * d0};

    std::vector<double> omegas = opts.grid.values();
    for (const auto& r : roots) {
        double mag = std::abs(r);
        if (std::abs(r.real()) <= 1e-9 * std::max(1.0, mag) && mag > 0) {
            // simple pole at j omega0: residue must be (numerically) real and >= 0
            std::complex<double> num = detail::eval_dc(nc, r);
            std::complex<double> dd = detail::eval_dc(Dderiv, r);
            std::complex<double> residue = num / dd;
            double scale = std::max(1.0, std::abs(residue));
            if (std::abs(residue.imag()) > opts.residue_tol * scale ||
                residue.real() < -opts.residue_tol * scale)
                res.residue_failure = true;
            double w0 = std::abs(r.imag());
            for (double f : {0.99, 1.01, 0.9999, 1.0001})
                if (w0 * f > 0) omegas.push_back(w0 * f);
        }
    }

    for (double w : omegas) {
        std::complex<double> z(0.0, w);
        std::complex<double> d = detail::eval_dc(Dfull, z);
        if (std::abs(d) < 1e-250) continue;  // sitting on a pole: covered by the residue check
        double re = (detail::eval_dc(nc, z) / d).real();
        if (re < res.min_re) {
            res.min_re = re;
            res.min_re_omega = w;
        }
    }

    res.is_pr = !res.residue_failure && res.min_re >= -opts.re_tol;
    return res;
}

} // namespace netsynth
