#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "netsynth/analysis.hpp"
#include "netsynth/enumerate.hpp"
#include "netsynth/topologies.hpp"

namespace netsynth {

/// A topology with free positive element values, fittable against a target
/// admittance in double precision.
struct ParametricTopology {
    std::string name;
    int params = 0;
    std::function<Netlist<double>(const std::vector<double>&)> build;
};

inline ParametricTopology topo_from_skeleton(const Skeleton& sk) {
    ParametricTopology t;
    t.name = sk.key();
    t.params = sk.leaf_count();
    t.build = [sk](const std::vector<double>& v) { return sk.to_netlist<double>(v); };
    return t;
}

// fixed five-element shapes; value order (R1, L1, L2, L3, C1)
inline ParametricTopology topo_fig9a() {
    return {"Fig9a", 5,
            [](const std::vector<double>& v) { return fig9a(v[0], v[1], v[2], v[3], v[4]); }};
}
inline ParametricTopology topo_fig9b() {
    return {"Fig9b", 5,
            [](const std::vector<double>& v) { return fig9b(v[0], v[1], v[2], v[3], v[4]); }};
}
inline ParametricTopology topo_fig13a() {
    return {"Fig13a", 5,
            [](const std::vector<double>& v) { return fig13a(v[0], v[1], v[2], v[3], v[4]); }};
}
inline ParametricTopology topo_fig13a_dual() {
    return {"Fig13a-dual", 5,
            [](const std::vector<double>& v) { return fig13a_dual(v[0], v[1], v[2], v[3], v[4]); }};
}
inline ParametricTopology topo_fig12() {
    return {"Fig12", 5,
            [](const std::vector<double>& v) { return fig12(v[0], v[1], v[2], v[3], v[4]); }};
}
inline ParametricTopology topo_fig7a() {
    // value order (R1, L1, L2, C1)
    return {"Fig7a", 4,
            [](const std::vector<double>& v) { return fig7a(v[0], v[1], v[2], v[3]); }};
}
inline ParametricTopology topo_fig8() {
    // value order (L1, L2, L3, R1, R2)
    return {"Fig8", 5,
            [](const std::vector<double>& v) { return fig8(v[0], v[1], v[2], v[3], v[4]); }};
}

struct FitOptions {
    int starts = 200;
    std::uint64_t seed = 0;
    int max_iters = 120;
    double value_lo = 1e-3;  // random restarts are log-uniform in [value_lo, value_hi]
    double value_hi = 1e3;
    std::vector<std::vector<double>> seeded_starts;  // tried before the random ones
    double early_exit = -1;  // stop the multistart once best_residual < early_exit
};

struct FitResult {
    std::string topology;
    double best_residual = std::numeric_limits<double>::infinity();
    std::vector<double> best_values;
    int starts = 0;
    std::uint64_t seed = 0;
};

namespace detail {

/// Normalized coefficient mismatch: with the skeleton admittance N/D (unreduced)
/// and the target Nt/Dt, the residual vector is the coefficients of
/// N Dt - D Nt scaled by the norms of the two products. Zero exactly when the
/// admittances agree as rational functions.
class FitResidual {
public:
    FitResidual(const ParametricTopology& topo, const CanonicalAdmittance<Rational>& target)
        : topo_(&topo) {
        double a0 = scalar_traits<Rational>::to_double(target.a0);
        double a1 = scalar_traits<Rational>::to_double(target.a1);
        double d0 = scalar_traits<Rational>::to_double(target.d0);
        double d1 = scalar_traits<Rational>::to_double(target.d1);
        double k = scalar_traits<Rational>::to_double(target.k);
        nt_ = Poly<double>(std::vector<double>{k, k * a1, k * a0});
        dt_ = Poly<double>(std::vector<double>{0.0, 1.0, d1, d0});
    }

    int params() const { return topo_->params; }

    std::vector<double> operator()(const std::vector<double>& log_values) const {
        std::vector<double> v(log_values.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::exp(log_values[i]);
        auto [num, den] = driving_point_raw(topo_->build(v));
        // a vanishing determinant means the value assignment degenerated the
        // network (numerically shorted/opened); that is not a realization
        if (num.is_zero() || den.is_zero()) return {1e3};
        Poly<double> lhs = num * dt_;
        Poly<double> rhs = den * nt_;
        Poly<double> diff = lhs - rhs;
        double scale = std::sqrt(norm2(lhs) + norm2(rhs));
        if (!(scale > 0)) return {1e3};
        int n = std::max(lhs.degree(), rhs.degree());
        std::vector<double> r(static_cast<std::size_t>(n + 1), 0.0);
        for (int i = 0; i <= n; ++i) r[static_cast<std::size_t>(i)] = diff.coeff(i) / scale;
        return r;
    }

private:
    const ParametricTopology* topo_;
    Poly<double> nt_, dt_;

    static double norm2(const Poly<double>& p) {
        double s = 0;
        for (double c : p.coeffs()) s += c * c;
        return s;
    }
};

inline double vec_norm(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

/// Solve (J^T J + lambda I) delta = -J^T r for a small dense system.
inline std::vector<double> lm_step(const std::vector<std::vector<double>>& J,
                                   const std::vector<double>& r, double lambda) {
    std::size_t m = J.size(), p = m ? J[0].size() : 0;
    std::vector<std::vector<double>> A(p, std::vector<double>(p, 0.0));
    std::vector<double> b(p, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t a = 0; a < p; ++a) {
            b[a] -= J[i][a] * r[i];
            for (std::size_t c = a; c < p; ++c) A[a][c] += J[i][a] * J[i][c];
        }
    }
    for (std::size_t a = 0; a < p; ++a) {
        for (std::size_t c = 0; c < a; ++c) A[a][c] = A[c][a];
        A[a][a] += lambda;
    }
    // gaussian elimination with partial pivoting
    std::vector<double> x(p, 0.0);
    for (std::size_t k = 0; k < p; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < p; ++i)
            if (std::fabs(A[i][k]) > std::fabs(A[piv][k])) piv = i;
        if (A[piv][k] == 0.0) return x;  // singular: no step
        std::swap(A[k], A[piv]);
        std::swap(b[k], b[piv]);
        for (std::size_t i = k + 1; i < p; ++i) {
            double f = A[i][k] / A[k][k];
            for (std::size_t j = k; j < p; ++j) A[i][j] -= f * A[k][j];
            b[i] -= f * b[k];
        }
    }
    for (std::size_t k = p; k-- > 0;) {
        double s = b[k];
        for (std::size_t j = k + 1; j < p; ++j) s -= A[k][j] * x[j];
        x[k] = s / A[k][k];
    }
    return x;
}

/// Damped Gauss-Newton descent in log-value space from one starting point.
inline double lm_descend(const FitResidual& f, std::vector<double>& theta, int max_iters) {
    const double theta_min = std::log(1e-8), theta_max = std::log(1e8);
    auto clamp_theta = [&](std::vector<double>& t) {
        for (double& x : t) x = std::min(theta_max, std::max(theta_min, x));
    };
    clamp_theta(theta);
    std::vector<double> r = f(theta);
    double cost = vec_norm(r);
    double lambda = 1e-3;
    const double h = 1e-6;
    for (int iter = 0; iter < max_iters && cost > 1e-15; ++iter) {
        std::vector<std::vector<double>> J(r.size(), std::vector<double>(theta.size(), 0.0));
        for (std::size_t a = 0; a < theta.size(); ++a) {
            std::vector<double> tp = theta;
            tp[a] += h;
            std::vector<double> rp = f(tp);
            for (std::size_t i = 0; i < r.size() && i < rp.size(); ++i)
                J[i][a] = (rp[i] - r[i]) / h;
        }
        bool improved = false;
        for (int inner = 0; inner < 10; ++inner) {
            std::vector<double> delta = lm_step(J, r, lambda);
            std::vector<double> cand = theta;
            for (std::size_t a = 0; a < cand.size(); ++a) cand[a] += delta[a];
            clamp_theta(cand);
            std::vector<double> rc = f(cand);
            double cc = vec_norm(rc);
            if (cc < cost) {
                theta = std::move(cand);
                r = std::move(rc);
                cost = cc;
                lambda = std::max(lambda / 3.0, 1e-12);
                improved = true;
                break;
            }
            lambda *= 4.0;
            if (lambda > 1e12) break;
        }
        if (!improved) break;
    }
    return cost;
}

} // namespace detail

/// Multistart fit of a topology's element values against a target admittance.
/// Deterministic for a given seed; the result carries the minimum residual
/// over all starts.
inline FitResult fit_elements(const ParametricTopology& topo,
                              const CanonicalAdmittance<Rational>& target,
                              const FitOptions& opts = {}) {
    detail::FitResidual f(topo, target);
    FitResult out;
    out.topology = topo.name;
    out.seed = opts.seed;
    std::mt19937_64 rng(opts.seed ^ 0xda3e39cb94b95bdbull);
    std::uniform_real_distribution<double> u(std::log(opts.value_lo), std::log(opts.value_hi));

    auto run_start = [&](std::vector<double> theta) {
        double cost = detail::lm_descend(f, theta, opts.max_iters);
        ++out.starts;
        if (cost < out.best_residual) {
            out.best_residual = cost;
            out.best_values.resize(theta.size());
            for (std::size_t i = 0; i < theta.size(); ++i) out.best_values[i] = std::exp(theta[i]);
        }
    };

    for (const auto& seed_values : opts.seeded_starts) {
        if (static_cast<int>(seed_values.size()) != topo.params) continue;
        std::vector<double> theta(seed_values.size());
        for (std::size_t i = 0; i < seed_values.size(); ++i) theta[i] = std::log(seed_values[i]);
        run_start(std::move(theta));
        if (opts.early_exit > 0 && out.best_residual < opts.early_exit) return out;
    }
    for (int s = 0; s < opts.starts; ++s) {
        std::vector<double> theta(static_cast<std::size_t>(topo.params));
        for (auto& x : theta) x = u(rng);
        run_start(std::move(theta));
        if (opts.early_exit > 0 && out.best_residual < opts.early_exit) return out;
    }
    return out;
}

inline FitResult fit_elements(const Skeleton& sk, const CanonicalAdmittance<Rational>& target,
                              const FitOptions& opts = {}) {
    return fit_elements(topo_from_skeleton(sk), target, opts);
}

/// Independent confirmation of a claimed fit: the fitted network's admittance
/// must agree with the target pointwise on the imaginary axis, computed by the
/// scalar nodal route rather than the coefficient route.
inline bool confirm_fit(const ParametricTopology& topo, const CanonicalAdmittance<Rational>& target,
                        const std::vector<double>& values, double rel_tol = 1e-6) {
    if (static_cast<int>(values.size()) != topo.params) return false;
    Netlist<double> n = topo.build(values);
    double a0 = scalar_traits<Rational>::to_double(target.a0);
    double a1 = scalar_traits<Rational>::to_double(target.a1);
    double d0 = scalar_traits<Rational>::to_double(target.d0);
    double d1 = scalar_traits<Rational>::to_double(target.d1);
    double k = scalar_traits<Rational>::to_double(target.k);
    for (double w : {1e-2, 3e-2, 1e-1, 3e-1, 1.0, 3.0, 10.0, 30.0, 100.0}) {
        std::complex<double> s(0.0, w);
        std::complex<double> want =
            k * (a0 * s * s + a1 * s + 1.0) / (s * (d0 * s * s + d1 * s + 1.0));
        std::complex<double> got = admittance_at(n, s);
        if (!(std::abs(got - want) <= rel_tol * (1.0 + std::abs(want)))) return false;
    }
    return true;
}

} // namespace netsynth
