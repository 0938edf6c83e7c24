#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netsynth/analysis.hpp"
#include "netsynth/topologies.hpp"

namespace netsynth {

enum class SynthCase {
    NotPositiveReal,
    PureInductor,
    DegenerateZeroCoeff,
    ReducibleRkZero,
    Fig7aThm3,
    Fig7bDual,
    Rl5Thm5,
    BridgeLemma13,
    CanonicalRequired,
};

inline std::string to_string(SynthCase c) {
    switch (c) {
        case SynthCase::NotPositiveReal: return "NotPositiveReal";
        case SynthCase::PureInductor: return "PureInductor";
        case SynthCase::DegenerateZeroCoeff: return "DegenerateZeroCoeff";
        case SynthCase::ReducibleRkZero: return "ReducibleRkZero";
        case SynthCase::Fig7aThm3: return "Fig7aThm3";
        case SynthCase::Fig7bDual: return "Fig7bDual";
        case SynthCase::Rl5Thm5: return "Rl5Thm5";
        case SynthCase::BridgeLemma13: return "BridgeLemma13";
        case SynthCase::CanonicalRequired: return "CanonicalRequired";
    }
    return "?";
}

/// The condition values that drive the case selection.
struct ConditionWitness {
    Rational rk;
    Rational a1_minus_d1;
    Rational a0d1_minus_a1d0;
    Rational a0_minus_d0;
    Rational bridge_defect;  // (a0 d1 - a1 d0)(a1 - d1) - d0^2
};

struct Classification {
    PrVerdict pr;
    Rational rk;
    SynthCase kase = SynthCase::NotPositiveReal;
    ConditionWitness witness;

    /// Four-element dichotomy: R_k = 0, or a0 > d0 with a1 = d1 or a0 d1 = a1 d0.
    bool four_element_realizable() const {
        if (rk == 0) return true;
        return witness.a0_minus_d0 > 0 && (witness.a1_minus_d1 == 0 || witness.a0d1_minus_a1d0 == 0);
    }
};

/// Case selection. Precedence (pure inductor, degenerate, reducible, the two
/// four-element cases, RL, bridge, canonical) resolves overlaps in favor of the
/// lower element count.
inline Classification classify(const CanonicalAdmittance<Rational>& y) {
    Classification c;
    c.pr = is_positive_real(y);
    c.rk = r_k(y);
    c.witness.rk = c.rk;
    c.witness.a1_minus_d1 = y.a1 - y.d1;
    c.witness.a0d1_minus_a1d0 = y.a0 * y.d1 - y.a1 * y.d0;
    c.witness.a0_minus_d0 = y.a0 - y.d0;
    c.witness.bridge_defect = c.witness.a0d1_minus_a1d0 * c.witness.a1_minus_d1 - y.d0 * y.d0;

    if (!c.pr.is_pr) {
        c.kase = SynthCase::NotPositiveReal;
    } else if (is_pure_inductor(y)) {
        c.kase = SynthCase::PureInductor;
    } else if (y.a0 == 0 || y.a1 == 0 || y.d0 == 0 || y.d1 == 0) {
        c.kase = SynthCase::DegenerateZeroCoeff;
    } else if (c.rk == 0) {
        c.kase = SynthCase::ReducibleRkZero;
    } else if (c.witness.a1_minus_d1 == 0 && c.witness.a0_minus_d0 > 0) {
        c.kase = SynthCase::Fig7aThm3;
    } else if (c.witness.a0d1_minus_a1d0 == 0 && c.witness.a0_minus_d0 > 0) {
        c.kase = SynthCase::Fig7bDual;
    } else if (c.rk < 0) {
        c.kase = SynthCase::Rl5Thm5;
    } else if (c.witness.bridge_defect == 0) {
        c.kase = SynthCase::BridgeLemma13;
    } else {
        c.kase = SynthCase::CanonicalRequired;
    }
    return c;
}

template <class T>
struct Realization {
    Netlist<T> netlist;
    SynthCase kase = SynthCase::CanonicalRequired;
    std::vector<std::pair<std::string, std::string>> element_formulas;  // refdes -> closed form
    bool verified = false;
    int element_count = 0;
};

/// Verification tolerance for approximate realizations, relative to the largest
/// coefficient magnitude.
inline BigReal big_verify_tolerance() { return BigReal("1e-30"); }

namespace detail {

template <class T>
void finish_realization(Realization<T>& r) {
    r.element_count = static_cast<int>(r.netlist.edges.size());
    for (const auto& e : r.netlist.edges)
        if (!e.provenance.empty()) r.element_formulas.emplace_back(e.refdes, e.provenance);
}

/// Exact round-trip: the recomputed admittance must equal the target as a
/// reduced rational function (reducible inputs cancel their shared factor).
inline void verify_exact(Realization<Rational>& r, const CanonicalAdmittance<Rational>& y) {
    auto res = driving_point_admittance(r.netlist);
    if (!res.canonical || !(res.y == y.to_ratfunc()))
        throw VerificationError("recomputed admittance does not match the input: got " + res.y.to_string());
    r.verified = true;
}

inline bool near_equal(const Poly<BigReal>& a, const Poly<BigReal>& b, const BigReal& tol) {
    if (a.degree() != b.degree()) return false;
    BigReal scale = std::max(a.max_abs_coeff(), b.max_abs_coeff());
    if (scale == 0) return true;
    for (int i = 0; i <= a.degree(); ++i)
        if (scalar_abs(a.coeff(i) - b.coeff(i)) > tol * scale) return false;
    return true;
}

/// Approximate round-trip at <= 1e-30 relative on both reduced polynomials.
inline void verify_numeric(Realization<BigReal>& r, const CanonicalAdmittance<Rational>& y) {
    auto res = driving_point_admittance(r.netlist);
    CanonicalAdmittance<BigReal> target(
        scalar_cast<BigReal>(y.a0), scalar_cast<BigReal>(y.a1), scalar_cast<BigReal>(y.d0),
        scalar_cast<BigReal>(y.d1), scalar_cast<BigReal>(y.k));
    RatFunc<BigReal> want = target.to_ratfunc();
    BigReal tol = big_verify_tolerance();
    if (!near_equal(res.y.num(), want.num(), tol) || !near_equal(res.y.den(), want.den(), tol))
        throw VerificationError("recomputed admittance exceeds the 1e-30 relative tolerance: got " +
                                res.y.to_string());
    r.verified = true;
}

inline std::string rat_str(const Rational& x) { return x.str(); }

} // namespace detail

/// Single inductor L = 1/k (the lossless member of the family).
inline Realization<Rational> realize_pure_inductor(const CanonicalAdmittance<Rational>& y) {
    auto value = is_pure_inductor(y);
    if (!value) throw ConditionError("admittance does not reduce to k/s");
    Realization<Rational> r;
    r.kase = SynthCase::PureInductor;
    using Tree = SpTree<Rational>;
    r.netlist = compose(Tree::leaf(ElementKind::L, *value, "L1", "1/k"));
    r.netlist.topology = "L";
    detail::finish_realization(r);
    detail::verify_exact(r, y);
    return r;
}

/// Reducible case: the quadratics share a factor (R_k = 0), so Y reduces to
/// k (A s + 1) / (s (C s + 1)) and needs at most three elements:
/// A = C gives a single inductor, otherwise L(1/k) || (R series L).
inline Realization<Rational> realize_reduced(const CanonicalAdmittance<Rational>& y) {
    if (!is_positive_real(y).is_pr) throw NotPositiveRealError("input is not positive-real");
    RatFunc<Rational> f = y.to_ratfunc();
    const Poly<Rational>& num = f.num();
    const Poly<Rational>& den = f.den();
    if (num.degree() > 1 || den.degree() > 2 || !(den.constant_term() == 0))
        throw ConditionError("no common factor: R_k != 0");
    // f = k (A s + 1) / (s (C s + 1)), constant terms preserved by reduction
    Rational k = num.coeff(0) / den.coeff(1);
    Rational A = num.coeff(1) / num.coeff(0);
    Rational C = den.coeff(2) / den.coeff(1);
    Realization<Rational> r;
    r.kase = SynthCase::ReducibleRkZero;
    using Tree = SpTree<Rational>;
    if (A == C) {
        r.netlist = compose(Tree::leaf(ElementKind::L, 1 / k, "L1", "1/k"));
        r.netlist.topology = "L";
    } else if (A > C) {
        Rational g = k * (A - C);
        std::vector<Tree> branch{Tree::leaf(ElementKind::R, 1 / g, "R1", "1/(k*(A-C))")};
        if (C > 0) branch.push_back(Tree::leaf(ElementKind::L, C / g, "L2", "C/(k*(A-C))"));
        r.netlist = compose(Tree::parallel(
            {Tree::leaf(ElementKind::L, 1 / k, "L1", "1/k"), Tree::series(std::move(branch))}));
        r.netlist.topology = C > 0 ? "Fig5b" : "L-R";
    } else {
        throw NotPositiveRealError("reduced form has A < C");
    }
    detail::finish_realization(r);
    detail::verify_exact(r, y);
    return r;
}

/// Zero-coefficient cases. d0 = 0 splits on the sign of
/// R_k = a0 (a0 + d1^2 - a1 d1); a1 = d1 = 0 uses the reactance decomposition
/// Y = k/s + k (a0 - d0) s / (d0 s^2 + 1). Zero-valued series resistors and
/// inductors (shorts) and zero-conductance parallel resistors (opens) are omitted.
inline Realization<Rational> realize_degenerate(const CanonicalAdmittance<Rational>& y) {
    if (!(y.a0 == 0 || y.a1 == 0 || y.d0 == 0 || y.d1 == 0))
        throw ConditionError("no zero coefficient");
    if (!is_positive_real(y).is_pr) throw NotPositiveRealError("input is not positive-real");
    using Tree = SpTree<Rational>;

    if (y.d0 == 0) {
        Rational rk = y.a0 * (y.a0 + y.d1 * y.d1 - y.a1 * y.d1);
        if (rk == 0) {
            Realization<Rational> r = realize_reduced(y);
            r.kase = SynthCase::DegenerateZeroCoeff;
            return r;
        }
        Realization<Rational> r;
        r.kase = SynthCase::DegenerateZeroCoeff;
        if (rk > 0) {
            // Y = k/s + ( d1/(k a0) + 1/( (k a0^3/R_k) s + k a0^2 (a1-d1)/R_k ) )^{-1}
            std::vector<Tree> series;
            if (y.d1 > 0)
                series.push_back(Tree::leaf(ElementKind::R, y.d1 / (y.k * y.a0), "R1", "d1/(k*a0)"));
            std::vector<Tree> shunt{Tree::leaf(ElementKind::C, y.k * y.a0 * y.a0 * y.a0 / rk, "C1",
                                               "k*a0^3/R_k")};
            if (y.a1 > y.d1)
                shunt.push_back(Tree::leaf(ElementKind::R, rk / (y.k * y.a0 * y.a0 * (y.a1 - y.d1)),
                                           "R2", "R_k/(k*a0^2*(a1-d1))"));
            series.push_back(Tree::parallel(std::move(shunt)));
            r.netlist = compose(Tree::parallel(
                {Tree::leaf(ElementKind::L, 1 / y.k, "L1", "1/k"), Tree::series(std::move(series))}));
        } else {
            // Y = k/s + k a0/d1 + ( -a0 d1/(k R_k) - a0 d1^2 s/(k R_k) )^{-1}
            r.netlist = compose(Tree::parallel(
                {Tree::leaf(ElementKind::L, 1 / y.k, "L1", "1/k"),
                 Tree::leaf(ElementKind::R, y.d1 / (y.k * y.a0), "R1", "d1/(k*a0)"),
                 Tree::series({Tree::leaf(ElementKind::R, -y.a0 * y.d1 / (y.k * rk), "R2",
                                          "-a0*d1/(k*R_k)"),
                               Tree::leaf(ElementKind::L, -y.a0 * y.d1 * y.d1 / (y.k * rk), "L2",
                                          "-a0*d1^2/(k*R_k)")})}));
        }
        r.netlist.topology = "Thm1-case1";
        detail::finish_realization(r);
        detail::verify_exact(r, y);
        return r;
    }

    if (y.a1 == 0 && y.d1 == 0) {
        if (y.a0 == y.d0) {
            Realization<Rational> r = realize_pure_inductor(y);
            r.kase = SynthCase::DegenerateZeroCoeff;
            return r;
        }
        Realization<Rational> r;
        r.kase = SynthCase::DegenerateZeroCoeff;
        Rational diff = y.a0 - y.d0;
        std::vector<Tree> branch;
        if (y.d0 > 0)
            branch.push_back(Tree::leaf(ElementKind::L, y.d0 / (y.k * diff), "L2", "d0/(k*(a0-d0))"));
        branch.push_back(Tree::leaf(ElementKind::C, y.k * diff, "C1", "k*(a0-d0)"));
        r.netlist = compose(Tree::parallel(
            {Tree::leaf(ElementKind::L, 1 / y.k, "L1", "1/k"), Tree::series(std::move(branch))}));
        r.netlist.topology = "Thm1-case2";
        detail::finish_realization(r);
        detail::verify_exact(r, y);
        return r;
    }

    throw NotPositiveRealError("zero-coefficient pattern is not positive-real");
}

/// Four-element realization. a1 = d1 gives the Fig7a network directly; the
/// a0 d1 = a1 d0 case realizes the frequency-inverse dual tuple and maps the
/// network back through the dual.
inline Realization<Rational> realize_fig7(const CanonicalAdmittance<Rational>& y) {
    if (!(y.a0 > 0 && y.a1 > 0 && y.d0 > 0 && y.d1 > 0))
        throw ConditionError("four-element cases need all coefficients positive");
    if (r_k(y) == 0) throw ConditionError("R_k = 0 belongs to the reducible case");
    const bool direct = y.a1 == y.d1;
    const bool dual = y.a0 * y.d1 == y.a1 * y.d0;
    if (!direct && !dual) throw ConditionError("needs a1 = d1 or a0 d1 = a1 d0");
    if (!(y.a0 > y.d0)) throw ConditionError("needs a0 - d0 > 0");

    if (direct) {
        Rational diff = y.a0 - y.d0;
        Rational r1 = y.a1 * diff / (y.k * y.a0 * y.a0);
        Rational l1 = y.d0 / (y.k * y.a0);
        Rational l2 = diff / (y.k * y.a0);
        Rational c1 = y.k * y.a0 * y.a0 / diff;
        Realization<Rational> r;
        r.kase = SynthCase::Fig7aThm3;
        r.netlist = fig7a(r1, l1, l2, c1,
                          {"a1*(a0-d0)/(k*a0^2)", "d0/(k*a0)", "(a0-d0)/(k*a0)", "k*a0^2/(a0-d0)"});
        detail::finish_realization(r);
        detail::verify_exact(r, y);
        return r;
    }

    CanonicalAdmittance<Rational> ydual = fid_coefficients(y);
    Realization<Rational> inner = realize_fig7(ydual);
    Realization<Rational> r;
    r.kase = SynthCase::Fig7bDual;
    r.netlist = fid_netlist(inner.netlist);
    r.netlist.topology = "Fig7b-class";
    detail::finish_realization(r);
    detail::verify_exact(r, y);
    return r;
}

namespace detail {

template <class T>
struct Rl5Values {
    T A, B, C, D, l1, l2, l3, r1, r2;
};

template <class T>
Rl5Values<T> rl5_values(const T& a0, const T& a1, const T& d0, const T& d1, const T& k, const T& sa,
                        const T& sd) {
    Rl5Values<T> v;
    v.A = (a1 + sa) / 2;
    v.C = (a1 - sa) / 2;
    v.B = (d1 + sd) / 2;
    v.D = (d1 - sd) / 2;
    if (!(v.A > v.B && v.B > v.C && v.C > v.D && v.D > T(0)))
        throw OrderingViolation("root interlacing A > B > C > D > 0 fails");
    T bd = v.B - v.D;
    v.r1 = bd / (k * (v.A - v.B) * (v.B - v.C));
    v.l2 = v.B * v.r1;
    v.r2 = bd / (k * (v.A - v.D) * (v.C - v.D));
    v.l3 = v.D * v.r2;
    v.l1 = T(1) / k;
    (void)a0;
    (void)d0;
    return v;
}

inline const std::array<std::string, 5> kRl5Provenance = {
    "1/k", "B*(B-D)/(k*(A-B)*(B-C))", "D*(B-D)/(k*(A-D)*(C-D))", "(B-D)/(k*(A-B)*(B-C))",
    "(B-D)/(k*(A-D)*(C-D))"};

} // namespace detail

struct Rl5Result {
    std::optional<Realization<Rational>> exact;
    std::optional<Realization<BigReal>> numeric;
    bool is_exact() const { return exact.has_value(); }
};

/// Five-element RL realization for R_k < 0: roots A,C = (a1 +- sqrt(a1^2-4a0))/2
/// and B,D = (d1 +- sqrt(d1^2-4d0))/2 must satisfy A > B > C > D > 0, and the
/// network is L1 || (L2 series R1) || (L3 series R2). Element values stay exact
/// when both discriminants are perfect squares; otherwise they are computed at
/// the working precision.
inline Rl5Result realize_rl5(const CanonicalAdmittance<Rational>& y) {
    if (!(y.a0 > 0 && y.a1 > 0 && y.d0 > 0 && y.d1 > 0))
        throw ConditionError("RL case needs all coefficients positive");
    if (!is_positive_real(y).is_pr) throw NotPositiveRealError("input is not positive-real");
    if (!(r_k(y) < 0)) throw ConditionError("RL case needs R_k < 0");

    Rational da = y.a1 * y.a1 - 4 * y.a0;
    Rational dd = y.d1 * y.d1 - 4 * y.d0;
    if (da < 0 || dd < 0)
        throw DiscriminantViolation("negative discriminant: no real root split");

    Rl5Result out;
    auto sa = exact_sqrt(da);
    auto sd = exact_sqrt(dd);
    if (sa && sd) {
        auto v = detail::rl5_values<Rational>(y.a0, y.a1, y.d0, y.d1, y.k, *sa, *sd);
        Realization<Rational> r;
        r.kase = SynthCase::Rl5Thm5;
        r.netlist = fig8(v.l1, v.l2, v.l3, v.r1, v.r2, detail::kRl5Provenance);
        detail::finish_realization(r);
        detail::verify_exact(r, y);
        out.exact = std::move(r);
    } else {
        BigReal a0 = scalar_cast<BigReal>(y.a0), a1 = scalar_cast<BigReal>(y.a1);
        BigReal d0 = scalar_cast<BigReal>(y.d0), d1 = scalar_cast<BigReal>(y.d1);
        BigReal k = scalar_cast<BigReal>(y.k);
        BigReal bsa = mp::sqrt(scalar_cast<BigReal>(da));
        BigReal bsd = mp::sqrt(scalar_cast<BigReal>(dd));
        auto v = detail::rl5_values<BigReal>(a0, a1, d0, d1, k, bsa, bsd);
        Realization<BigReal> r;
        r.kase = SynthCase::Rl5Thm5;
        r.netlist = fig8(v.l1, v.l2, v.l3, v.r1, v.r2, detail::kRl5Provenance);
        detail::finish_realization(r);
        detail::verify_numeric(r, y);
        out.numeric = std::move(r);
    }
    return out;
}

/// Five-element bridge realization for (a0 d1 - a1 d0)(a1 - d1) = d0^2 with
/// R_k != 0. On that condition T = sqrt((a0 d1 - a1 d0)/(a1 - d1)) = d0/(a1 - d1)
/// is rational, so the construction is exact. The independent alpha/beta route
/// is recomputed and must agree exactly, else the construction aborts.
inline Realization<Rational> realize_bridge(const CanonicalAdmittance<Rational>& y) {
    if (!(y.a0 > 0 && y.a1 > 0 && y.d0 > 0 && y.d1 > 0))
        throw ConditionError("bridge case needs all coefficients positive");
    if (!is_positive_real(y).is_pr) throw NotPositiveRealError("input is not positive-real");
    if (r_k(y) == 0) throw ConditionError("bridge case needs R_k != 0");
    Rational p = y.a0 * y.d1 - y.a1 * y.d0;
    Rational q = y.a1 - y.d1;
    if (p * q - y.d0 * y.d0 != 0)
        throw ConditionError("(a0 d1 - a1 d0)(a1 - d1) - d0^2 = 0 fails");
    if (q == 0) throw ConditionError("T undefined: a1 = d1");
    if (!(p > 0 && q > 0)) throw ConditionError("bridge case needs a0 d1 > a1 d0 and a1 > d1");

    auto t = exact_sqrt(p / q);
    if (!t) throw VerificationError("T = sqrt((a0 d1 - a1 d0)/(a1 - d1)) is not rational");
    Rational T = *t;

    Rational S = q * T + (y.a0 - y.d0);
    Rational r1 = y.a1 * (T * T + y.a1 * T + y.a0) / (y.k * (y.a1 + T) * (y.a1 + T) * S);
    Rational l1 = (q * T * T + (y.a1 * y.a1 - y.a1 * y.d1 - y.d0) * T + y.a1 * (y.a0 - y.d0)) /
                  (y.k * (y.a1 + T) * S);
    Rational l2 = y.a0 * T / (y.k * (y.a1 + T) * S);
    Rational l3 = (y.d1 * T + y.d0) / (y.k * S);
    Rational c1 = y.k * S;

    // independent route: degree-(3,4) coefficients after multiplying by (T s + 1)
    Rational a3 = y.a0 * T, a2 = y.a0 + y.a1 * T, a1c = y.a1 + T;
    Rational b4 = y.d0 * T / y.k, b3 = (y.d0 + y.d1 * T) / y.k, b2 = (y.d1 + T) / y.k,
             b1 = 1 / y.k;
    Rational w1 = a1c * a2 - a3;
    Rational w2 = a2 * b1 - b3;
    Rational w3 = a1c * b1 - b2;
    Rational w = 2 * (a1c * a2 * b1 - a1c * b3 - a3 * b1);
    if (!(w1 > 0 && w2 > 0 && w3 > 0)) throw VerificationError("bridge side conditions W1,W2,W3 > 0 fail");
    if (!(w - 2 * a2 * w3 > 0)) throw VerificationError("bridge side condition W - 2 a2 W3 > 0 fails");
    if (w * w - 4 * w1 * w2 * w3 != 0) throw VerificationError("W^2 - 4 W1 W2 W3 = 0 fails");
    if (b4 + a1c * b3 + a3 * b1 - a2 * b2 != 0)
        throw VerificationError("b4 + a1 b3 + a3 b1 - a2 b2 = 0 fails");
    Rational r1_alt = w1 * b1 * b1 / (a1c * a1c * w2);
    Rational l1_alt = (a1c * a2 * b1 - a3 * b1 - a1c * b3) * b1 / (a1c * w2);
    Rational l2_alt = a3 * b1 * b1 / (a1c * w2);
    Rational l3_alt = b1 * b3 / w2;
    Rational c1_alt = w2 / (b1 * b1);
    if (!(r1 == r1_alt && l1 == l1_alt && l2 == l2_alt && l3 == l3_alt && c1 == c1_alt))
        throw VerificationError("the two bridge value routes disagree");

    Realization<Rational> r;
    r.kase = SynthCase::BridgeLemma13;
    r.netlist = fig12(r1, l1, l2, l3, c1,
                      {"a1*(T^2+a1*T+a0)/(k*(a1+T)^2*((a1-d1)*T+(a0-d0)))",
                       "((a1-d1)*T^2+(a1^2-a1*d1-d0)*T+a1*(a0-d0))/(k*(a1+T)*((a1-d1)*T+(a0-d0)))",
                       "a0*T/(k*(a1+T)*((a1-d1)*T+(a0-d0)))", "(d1*T+d0)/(k*((a1-d1)*T+(a0-d0)))",
                       "k*((a1-d1)*T+(a0-d0))"});
    detail::finish_realization(r);
    detail::verify_exact(r, y);
    return r;
}

/// Full synthesis result: the classification plus at most one realization
/// (exact rational values, or working-precision values when the RL case has
/// irrational roots). CanonicalRequired carries no netlist and is a normal
/// outcome.
struct SynthResult {
    Classification cls;
    std::optional<Realization<Rational>> exact;
    std::optional<Realization<BigReal>> numeric;

    bool realized() const { return exact.has_value() || numeric.has_value(); }
    int element_count() const {
        if (exact) return exact->element_count;
        if (numeric) return numeric->element_count;
        return 0;
    }
};

inline SynthResult synthesize(const CanonicalAdmittance<Rational>& y) {
    SynthResult out;
    out.cls = classify(y);
    switch (out.cls.kase) {
        case SynthCase::NotPositiveReal:
            throw NotPositiveRealError("input is not positive-real: failed " +
                                       to_string(out.cls.pr.failed_condition));
        case SynthCase::PureInductor: out.exact = realize_pure_inductor(y); break;
        case SynthCase::DegenerateZeroCoeff: out.exact = realize_degenerate(y); break;
        case SynthCase::ReducibleRkZero: out.exact = realize_reduced(y); break;
        case SynthCase::Fig7aThm3:
        case SynthCase::Fig7bDual: out.exact = realize_fig7(y); break;
        case SynthCase::Rl5Thm5: {
            Rl5Result r = realize_rl5(y);
            out.exact = std::move(r.exact);
            out.numeric = std::move(r.numeric);
            break;
        }
        case SynthCase::BridgeLemma13: out.exact = realize_bridge(y); break;
        case SynthCase::CanonicalRequired: break;  // classification only
    }
    return out;
}

} // namespace netsynth
