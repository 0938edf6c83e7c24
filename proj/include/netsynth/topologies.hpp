#pragma once

#include "netsynth/netlist.hpp"
#include "netsynth/ratfunc.hpp"

namespace netsynth {

// Named two-terminal topologies. The figures themselves are pinned by their
// displayed admittance formulas; each constructor has a matching *_formula
// evaluator and the test suite asserts constructor admittance == formula as a
// reduced RatFunc identity over random element values.

/// Three-element reducible-case network: L1 || (R1 series L2).
template <class T>
Netlist<T> fig5b(T l1, T r1, T l2) {
    using Tree = SpTree<T>;
    auto tree = Tree::parallel({Tree::leaf(ElementKind::L, l1, "L1"),
                                Tree::series({Tree::leaf(ElementKind::R, r1, "R1"),
                                              Tree::leaf(ElementKind::L, l2, "L2")})});
    Netlist<T> n = compose(tree);
    n.topology = "Fig5b";
    return n;
}

/// All-inductor variant of the four-element network: L1 series (L2 || (L3 series R1)).
template <class T>
Netlist<T> fig6(T l1, T l2, T l3, T r1) {
    using Tree = SpTree<T>;
    auto tree = Tree::series({Tree::leaf(ElementKind::L, l1, "L1"),
                              Tree::parallel({Tree::leaf(ElementKind::L, l2, "L2"),
                                              Tree::series({Tree::leaf(ElementKind::L, l3, "L3"),
                                                            Tree::leaf(ElementKind::R, r1, "R1")})})});
    Netlist<T> n = compose(tree);
    n.topology = "Fig6";
    return n;
}

/// Four-element network: L1 series (L2 || (C1 series R1)).
template <class T>
Netlist<T> fig7a(T r1, T l1, T l2, T c1, std::array<std::string, 4> provenance = {}) {
    using Tree = SpTree<T>;
    auto tree = Tree::series(
        {Tree::leaf(ElementKind::L, l1, "L1", provenance[1]),
         Tree::parallel({Tree::leaf(ElementKind::L, l2, "L2", provenance[2]),
                         Tree::series({Tree::leaf(ElementKind::C, c1, "C1", provenance[3]),
                                       Tree::leaf(ElementKind::R, r1, "R1", provenance[0])})})});
    Netlist<T> n = compose(tree);
    n.topology = "Fig7a";
    return n;
}

/// Y(s) of the Fig7a network:
/// (L2 C1 s^2 + R1 C1 s + 1) / (s (L1 L2 C1 s^2 + R1 C1 (L1+L2) s + L1 + L2)).
template <class T>
RatFunc<T> fig7a_formula(T r1, T l1, T l2, T c1) {
    Poly<T> num(std::vector<T>{T(1), r1 * c1, l2 * c1});
    Poly<T> den(std::vector<T>{T(0), l1 + l2, r1 * c1 * (l1 + l2), l1 * l2 * c1});
    return RatFunc<T>(num, den);
}

/// Five-element RL network: L1 || (L2 series R1) || (L3 series R2).
template <class T>
Netlist<T> fig8(T l1, T l2, T l3, T r1, T r2, std::array<std::string, 5> provenance = {}) {
    using Tree = SpTree<T>;
    auto tree = Tree::parallel({Tree::leaf(ElementKind::L, l1, "L1", provenance[0]),
                                Tree::series({Tree::leaf(ElementKind::L, l2, "L2", provenance[1]),
                                              Tree::leaf(ElementKind::R, r1, "R1", provenance[3])}),
                                Tree::series({Tree::leaf(ElementKind::L, l3, "L3", provenance[2]),
                                              Tree::leaf(ElementKind::R, r2, "R2", provenance[4])})});
    Netlist<T> n = compose(tree);
    n.topology = "Fig8";
    return n;
}

/// Y(s) of the Fig8 network as a partial-fraction sum:
/// 1/(L1 s) + 1/(L2 s + R1) + 1/(L3 s + R2).
template <class T>
RatFunc<T> fig8_formula(T l1, T l2, T l3, T r1, T r2) {
    RatFunc<T> y1(Poly<T>::one(), Poly<T>(std::vector<T>{T(0), l1}));
    RatFunc<T> y2(Poly<T>::one(), Poly<T>(std::vector<T>{r1, l2}));
    RatFunc<T> y3(Poly<T>::one(), Poly<T>(std::vector<T>{r2, l3}));
    return y1 + y2 + y3;
}

/// Wheatstone bridge: arms L1 (T+ n1), L2 (n1 T-), L3 (T+ n2), C1 (n2 T-),
/// bridge R1 (n1 n2).
template <class T>
Netlist<T> fig12(T r1, T l1, T l2, T l3, T c1, std::array<std::string, 5> provenance = {}) {
    Netlist<T> n;
    int n1 = n.fresh_node(), n2 = n.fresh_node();
    n.add_edge(ElementKind::L, l1, Netlist<T>::kPlus, n1, "L1", provenance[1]);
    n.add_edge(ElementKind::L, l2, n1, Netlist<T>::kMinus, "L2", provenance[2]);
    n.add_edge(ElementKind::L, l3, Netlist<T>::kPlus, n2, "L3", provenance[3]);
    n.add_edge(ElementKind::C, c1, n2, Netlist<T>::kMinus, "C1", provenance[4]);
    n.add_edge(ElementKind::R, r1, n1, n2, "R1", provenance[0]);
    n.topology = "Fig12";
    n.validate();
    return n;
}

/// Y(s) of the Fig12 bridge:
/// (C1 L2 (L1+L3) s^3 + R1 C1 (L1+L2+L3) s^2 + (L1+L3) s + R1)
///   / (s (C1 L1 L2 L3 s^3 + R1 C1 L3 (L1+L2) s^2 + (L1 L2 + L2 L3 + L1 L3) s + R1 (L1+L2))).
template <class T>
RatFunc<T> fig12_formula(T r1, T l1, T l2, T l3, T c1) {
    Poly<T> num(std::vector<T>{r1, l1 + l3, r1 * c1 * (l1 + l2 + l3), c1 * l2 * (l1 + l3)});
    Poly<T> den(std::vector<T>{T(0), r1 * (l1 + l2), l1 * l2 + l2 * l3 + l1 * l3,
                               r1 * c1 * l3 * (l1 + l2), c1 * l1 * l2 * l3});
    return RatFunc<T>(num, den);
}

/// Five-element series/parallel network excluded for this family:
/// (C1 || L3 || (R1 series L2)) series L1.
template <class T>
Netlist<T> fig9a(T r1, T l1, T l2, T l3, T c1) {
    using Tree = SpTree<T>;
    auto tree = Tree::series(
        {Tree::parallel({Tree::series({Tree::leaf(ElementKind::R, r1, "R1"),
                                       Tree::leaf(ElementKind::L, l2, "L2")}),
                         Tree::leaf(ElementKind::L, l3, "L3"), Tree::leaf(ElementKind::C, c1, "C1")}),
         Tree::leaf(ElementKind::L, l1, "L1")});
    Netlist<T> n = compose(tree);
    n.topology = "Fig9a";
    return n;
}

/// Y(s) of the Fig9a network:
/// (C1 L2 L3 s^3 + R1 C1 L3 s^2 + (L2+L3) s + R1)
///   / (s (C1 L1 L2 L3 s^3 + R1 C1 L1 L3 s^2 + (L1 L2 + L2 L3 + L1 L3) s + R1 (L1+L3))).
template <class T>
RatFunc<T> fig9a_formula(T r1, T l1, T l2, T l3, T c1) {
    Poly<T> num(std::vector<T>{r1, l2 + l3, r1 * c1 * l3, c1 * l2 * l3});
    Poly<T> den(std::vector<T>{T(0), r1 * (l1 + l3), l1 * l2 + l2 * l3 + l1 * l3, r1 * c1 * l1 * l3,
                               c1 * l1 * l2 * l3});
    return RatFunc<T>(num, den);
}

/// Frequency-inverse dual of Fig9a.
template <class T>
Netlist<T> fig9b(T r1, T l1, T l2, T l3, T c1) {
    Netlist<T> n = fid_netlist(fig9a(T(1) / r1, T(1) / l1, T(1) / l2, T(1) / l3, T(1) / c1));
    n.topology = "Fig9b";
    return n;
}

/// Five-element bridge excluded for this family: arms L1 (T+ n1), L2 (n1 T-),
/// L3 (T+ n2), R1 (n2 T-), bridge C1 (n1 n2).
template <class T>
Netlist<T> fig13a(T r1, T l1, T l2, T l3, T c1) {
    Netlist<T> n;
    int n1 = n.fresh_node(), n2 = n.fresh_node();
    n.add_edge(ElementKind::L, l1, Netlist<T>::kPlus, n1, "L1");
    n.add_edge(ElementKind::L, l2, n1, Netlist<T>::kMinus, "L2");
    n.add_edge(ElementKind::L, l3, Netlist<T>::kPlus, n2, "L3");
    n.add_edge(ElementKind::R, r1, n2, Netlist<T>::kMinus, "R1");
    n.add_edge(ElementKind::C, c1, n1, n2, "C1");
    n.topology = "Fig13a";
    n.validate();
    return n;
}

/// Y(s) of the Fig13a bridge:
/// (C1 L2 (L1+L3) s^3 + R1 C1 (L1+L3) s^2 + (L1+L2+L3) s + R1)
///   / (s (C1 L1 L2 L3 s^3 + R1 C1 (L1 L2 + L2 L3 + L1 L3) s^2 + L3 (L1+L2) s + R1 (L1+L2))).
template <class T>
RatFunc<T> fig13a_formula(T r1, T l1, T l2, T l3, T c1) {
    Poly<T> num(std::vector<T>{r1, l1 + l2 + l3, r1 * c1 * (l1 + l3), c1 * l2 * (l1 + l3)});
    Poly<T> den(std::vector<T>{T(0), r1 * (l1 + l2), l3 * (l1 + l2),
                               r1 * c1 * (l1 * l2 + l2 * l3 + l1 * l3), c1 * l1 * l2 * l3});
    return RatFunc<T>(num, den);
}

/// Frequency-inverse dual of Fig13a (also excluded: the family and the
/// exclusion condition are both closed under the dual).
template <class T>
Netlist<T> fig13a_dual(T r1, T l1, T l2, T l3, T c1) {
    Netlist<T> n = fid_netlist(fig13a(T(1) / r1, T(1) / l1, T(1) / l2, T(1) / l3, T(1) / c1));
    n.topology = "Fig13a-dual";
    return n;
}

} // namespace netsynth
