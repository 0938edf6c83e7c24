#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "netsynth/analysis.hpp"
#include "netsynth/netlist.hpp"

namespace netsynth {

/// Two-terminal series/parallel structure with element kinds but no values.
/// Stored in canonical form: same-type children flattened, children sorted by
/// key, so structurally isomorphic skeletons compare equal by key().
struct Skeleton {
    enum class Type { Leaf, Series, Parallel };

    Type type = Type::Leaf;
    ElementKind kind = ElementKind::R;
    std::vector<Skeleton> children;

    static Skeleton leaf(ElementKind k) {
        Skeleton s;
        s.type = Type::Leaf;
        s.kind = k;
        return s;
    }

    static Skeleton combine(Type ty, std::vector<Skeleton> ch) {
        std::vector<Skeleton> flat;
        for (auto& c : ch) {
            if (c.type == ty) {
                for (auto& g : c.children) flat.push_back(std::move(g));
            } else {
                flat.push_back(std::move(c));
            }
        }
        if (flat.size() == 1) return std::move(flat[0]);
        Skeleton s;
        s.type = ty;
        s.children = std::move(flat);
        std::sort(s.children.begin(), s.children.end(),
                  [](const Skeleton& a, const Skeleton& b) { return a.key() < b.key(); });
        return s;
    }

    std::string key() const {
        if (type == Type::Leaf) return std::string(1, kind_letter(kind));
        std::string out = type == Type::Series ? "S(" : "P(";
        for (std::size_t i = 0; i < children.size(); ++i) {
            if (i) out += ",";
            out += children[i].key();
        }
        out += ")";
        return out;
    }

    int leaf_count() const {
        if (type == Type::Leaf) return 1;
        int n = 0;
        for (const auto& c : children) n += c.leaf_count();
        return n;
    }

    std::vector<ElementKind> leaf_kinds() const {
        std::vector<ElementKind> out;
        collect_kinds(out);
        return out;
    }

    /// Instantiate with values assigned to leaves in canonical pre-order.
    template <class T>
    SpTree<T> instantiate(const std::vector<T>& values) const {
        std::size_t next = 0;
        SpTree<T> t = build<T>(values, next);
        if (next != values.size()) throw Error("value count does not match leaf count");
        return t;
    }

    template <class T>
    Netlist<T> to_netlist(const std::vector<T>& values) const {
        return compose(instantiate<T>(values));
    }

    /// Skeleton of an SpTree plus its values in canonical leaf order.
    template <class T>
    static std::pair<Skeleton, std::vector<T>> from_tree(const SpTree<T>& t) {
        auto [sk, vals] = lift(t);
        return {std::move(sk), std::move(vals)};
    }

private:
    void collect_kinds(std::vector<ElementKind>& out) const {
        if (type == Type::Leaf) {
            out.push_back(kind);
            return;
        }
        for (const auto& c : children) c.collect_kinds(out);
    }

    template <class T>
    SpTree<T> build(const std::vector<T>& values, std::size_t& next) const {
        if (type == Type::Leaf) {
            if (next >= values.size()) throw Error("value count does not match leaf count");
            return SpTree<T>::leaf(kind, values[next++]);
        }
        std::vector<SpTree<T>> ch;
        ch.reserve(children.size());
        for (const auto& c : children) ch.push_back(c.build(values, next));
        return type == Type::Series ? SpTree<T>::series(std::move(ch))
                                    : SpTree<T>::parallel(std::move(ch));
    }

    template <class T>
    static std::pair<Skeleton, std::vector<T>> lift(const SpTree<T>& t) {
        if (t.type == SpTree<T>::Type::Leaf) return {leaf(t.kind), {t.value}};
        struct Part {
            Skeleton sk;
            std::vector<T> vals;
        };
        std::vector<Part> parts;
        for (const auto& c : t.children) {
            auto [sk, vals] = lift(c);
            parts.push_back({std::move(sk), std::move(vals)});
        }
        std::sort(parts.begin(), parts.end(),
                  [](const Part& a, const Part& b) { return a.sk.key() < b.sk.key(); });
        Skeleton s;
        s.type = t.type == SpTree<T>::Type::Series ? Type::Series : Type::Parallel;
        std::vector<T> vals;
        std::vector<Skeleton> ch;
        for (auto& p : parts) {
            // flatten children that collapsed to the parent type
            if (p.sk.type == s.type) {
                for (auto& g : p.sk.children) ch.push_back(std::move(g));
            } else {
                ch.push_back(std::move(p.sk));
            }
            for (auto& v : p.vals) vals.push_back(std::move(v));
        }
        if (ch.size() == 1) return {std::move(ch[0]), std::move(vals)};
        s.children = std::move(ch);
        // children arrived sorted; flattening preserves the order of each block.
        std::sort(s.children.begin(), s.children.end(),
                  [](const Skeleton& a, const Skeleton& b) { return a.key() < b.key(); });
        return {std::move(s), std::move(vals)};
    }
};

struct SkeletonInfo {
    Skeleton skeleton;
    int elements = 0;
    bool inductor_path_and_cutset = false;  // false: flagged by the inductor path/cut-set test
    bool forced_jw_pole = false;            // true: generic values give poles at s = j w0, w0 != 0
};

namespace detail {

inline void gen_trees(int leaves, std::vector<Skeleton>& out, std::set<std::string>& seen) {
    // binary generation + canonical flatten/sort dedups into multiset forms
    if (leaves == 1) {
        for (ElementKind k : {ElementKind::R, ElementKind::L, ElementKind::C}) {
            Skeleton s = Skeleton::leaf(k);
            if (seen.insert(s.key()).second) out.push_back(std::move(s));
        }
        return;
    }
    for (int left = 1; left < leaves; ++left) {
        std::vector<Skeleton> ls, rs;
        std::set<std::string> lseen, rseen;
        gen_trees(left, ls, lseen);
        gen_trees(leaves - left, rs, rseen);
        for (const auto& a : ls) {
            for (const auto& b : rs) {
                for (auto ty : {Skeleton::Type::Series, Skeleton::Type::Parallel}) {
                    Skeleton s = Skeleton::combine(ty, {a, b});
                    if (seen.insert(s.key()).second) out.push_back(std::move(s));
                }
            }
        }
    }
}

/// Exact check for imaginary-axis denominator roots away from s = 0: passive
/// network poles lie in the closed left half plane, so roots shared between
/// D(s) and D(-s) beyond powers of s sit on the imaginary axis.
inline bool has_jw_pole(const RatFunc<Rational>& y) {
    Poly<Rational> d = y.den();
    Poly<Rational> g = Poly<Rational>::gcd(d, d.subst_neg());
    while (!g.is_zero() && g.constant_term() == 0) g = g / Poly<Rational>::variable();
    return g.degree() > 0;
}

} // namespace detail

/// All series/parallel two-terminal skeletons with exactly n elements, every
/// R/L/C kind assignment, deduplicated up to structural isomorphism.
inline std::vector<Skeleton> sp_skeletons_exact(int n) {
    std::vector<Skeleton> out;
    std::set<std::string> seen;
    detail::gen_trees(n, out, seen);
    std::sort(out.begin(), out.end(),
              [](const Skeleton& a, const Skeleton& b) { return a.key() < b.key(); });
    return out;
}

/// Skeletons with at most max_elements edges (every two-terminal graph on <= 4
/// edges is series/parallel). Skeletons failing the inductor path/cut-set
/// condition or forcing imaginary-axis poles are flagged, not removed; the
/// flags are deterministic for a given seed (three generic instantiations).
inline std::vector<SkeletonInfo> enumerate_networks(int max_elements, std::uint64_t seed = 0) {
    if (max_elements < 1 || max_elements > 4)
        throw Error("max_elements must be between 1 and 4");
    std::vector<SkeletonInfo> out;
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_int_distribution<int> num(1, 12), den(1, 6);
    for (int n = 1; n <= max_elements; ++n) {
        for (const auto& sk : sp_skeletons_exact(n)) {
            SkeletonInfo info;
            info.skeleton = sk;
            info.elements = n;
            std::vector<Rational> ones(static_cast<std::size_t>(n), Rational(1));
            Netlist<Rational> shape = sk.to_netlist(ones);
            info.inductor_path_and_cutset = inductor_path_and_cutset(shape);
            int forced = 0;
            const int trials = 3;
            for (int t = 0; t < trials; ++t) {
                std::vector<Rational> vals;
                for (int i = 0; i < n; ++i) vals.push_back(make_rational(num(rng), den(rng)));
                auto res = driving_point_admittance(sk.to_netlist(vals));
                if (detail::has_jw_pole(res.y)) ++forced;
            }
            info.forced_jw_pole = forced == trials;
            out.push_back(std::move(info));
        }
    }
    return out;
}

} // namespace netsynth
