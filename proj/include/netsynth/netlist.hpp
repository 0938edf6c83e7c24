#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "netsynth/scalars.hpp"

namespace netsynth {

enum class ElementKind { R, L, C };

inline char kind_letter(ElementKind k) {
    switch (k) {
        case ElementKind::R: return 'R';
        case ElementKind::L: return 'L';
        case ElementKind::C: return 'C';
    }
    return '?';
}

inline std::optional<ElementKind> kind_from_letter(char c) {
    switch (c) {
        case 'R': return ElementKind::R;
        case 'L': return ElementKind::L;
        case 'C': return ElementKind::C;
        default: return std::nullopt;
    }
}

template <class T>
struct Element {
    ElementKind kind;
    T value;                 // ohms / henries / farads, positive and finite
    std::string provenance;  // optional closed-form expression for the value
};

/// Labeled two-terminal multigraph of R/L/C elements. Terminals are the
/// distinguished node labels "T+" and "T-" (indices 0 and 1). Connected,
/// self-loop free.
template <class T>
struct Netlist {
    struct Edge {
        ElementKind kind;
        T value;
        int a, b;  // node indices
        std::string refdes;
        std::string provenance;
    };

    std::vector<std::string> nodes{"T+", "T-"};
    std::vector<Edge> edges;
    std::string topology;  // optional tag, e.g. "Fig7a"

    static constexpr int kPlus = 0;
    static constexpr int kMinus = 1;

    int node(const std::string& label) {
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (nodes[i] == label) return static_cast<int>(i);
        nodes.push_back(label);
        return static_cast<int>(nodes.size()) - 1;
    }

    int fresh_node() {
        nodes.push_back("n" + std::to_string(nodes.size() - 1));
        return static_cast<int>(nodes.size()) - 1;
    }

    void add_edge(ElementKind kind, T value, int a, int b, std::string refdes = "",
                  std::string provenance = "") {
        if (a == b) throw Error("self-loop edge");
        if (!(value > T(0))) throw Error("element value must be positive");
        if (refdes.empty()) refdes = next_refdes(kind);
        edges.push_back(Edge{kind, std::move(value), a, b, std::move(refdes), std::move(provenance)});
    }

    std::string next_refdes(ElementKind kind) const {
        int n = 1;
        for (const auto& e : edges)
            if (e.kind == kind) ++n;
        return std::string(1, kind_letter(kind)) + std::to_string(n);
    }

    const Edge* find(const std::string& refdes) const {
        for (const auto& e : edges)
            if (e.refdes == refdes) return &e;
        return nullptr;
    }

    bool connected() const {
        if (nodes.empty()) return false;
        std::vector<char> seen(nodes.size(), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& e : edges) {
                int w = -1;
                if (e.a == v) w = e.b;
                if (e.b == v) w = e.a;
                if (w >= 0 && !seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        for (char s : seen)
            if (!s) return false;
        return true;
    }

    void validate() const {
        if (nodes.size() < 2 || nodes[0] != "T+" || nodes[1] != "T-")
            throw Error("netlist must have terminals T+ and T-");
        if (edges.empty()) throw Error("empty netlist");
        for (const auto& e : edges) {
            if (e.a < 0 || e.b < 0 || e.a >= static_cast<int>(nodes.size()) ||
                e.b >= static_cast<int>(nodes.size()))
                throw Error("edge endpoint out of range");
            if (e.a == e.b) throw Error("self-loop edge");
            if (!(e.value > T(0))) throw Error("element value must be positive");
        }
        if (!connected()) throw Error("netlist is not connected");
    }
};

// ---------------------------------------------------------------------------
// Series/parallel trees
// ---------------------------------------------------------------------------

/// Composition tree for two-terminal series/parallel networks. Internal nodes
/// have at least two children; converts losslessly to a Netlist.
template <class T>
struct SpTree {
    enum class Type { Leaf, Series, Parallel };

    Type type = Type::Leaf;
    ElementKind kind = ElementKind::R;  // leaf only
    T value{};                          // leaf only
    std::string refdes;                 // leaf only, optional
    std::string provenance;             // leaf only, optional
    std::vector<SpTree> children;

    static SpTree leaf(ElementKind k, T v, std::string refdes = "", std::string prov = "") {
        SpTree t;
        t.type = Type::Leaf;
        t.kind = k;
        t.value = std::move(v);
        t.refdes = std::move(refdes);
        t.provenance = std::move(prov);
        return t;
    }
    static SpTree series(std::vector<SpTree> ch) { return internal(Type::Series, std::move(ch)); }
    static SpTree parallel(std::vector<SpTree> ch) { return internal(Type::Parallel, std::move(ch)); }

    /// Series/parallel of possibly one child: a single child collapses to itself.
    static SpTree internal(Type ty, std::vector<SpTree> ch) {
        if (ch.empty()) throw Error("series/parallel node needs children");
        if (ch.size() == 1) return std::move(ch[0]);
        SpTree t;
        t.type = ty;
        t.children = std::move(ch);
        return t;
    }

    int leaf_count() const {
        if (type == Type::Leaf) return 1;
        int n = 0;
        for (const auto& c : children) n += c.leaf_count();
        return n;
    }

    /// Kinds-preserving frequency-inverse dual: swap series and parallel,
    /// reciprocate every element value.
    SpTree dual() const {
        if (type == Type::Leaf) {
            SpTree t = *this;
            t.value = T(1) / value;
            if (!t.provenance.empty()) t.provenance = "1/(" + t.provenance + ")";
            return t;
        }
        SpTree t;
        t.type = type == Type::Series ? Type::Parallel : Type::Series;
        for (const auto& c : children) t.children.push_back(c.dual());
        return t;
    }
};

namespace detail {

template <class T>
void compose_into(const SpTree<T>& t, Netlist<T>& n, int a, int b) {
    using Type = typename SpTree<T>::Type;
    switch (t.type) {
        case Type::Leaf:
            n.add_edge(t.kind, t.value, a, b, t.refdes, t.provenance);
            break;
        case Type::Series: {
            int prev = a;
            for (std::size_t i = 0; i < t.children.size(); ++i) {
                int next = (i + 1 == t.children.size()) ? b : n.fresh_node();
                compose_into(t.children[i], n, prev, next);
                prev = next;
            }
            break;
        }
        case Type::Parallel:
            for (const auto& c : t.children) compose_into(c, n, a, b);
            break;
    }
}

} // namespace detail

/// Netlist whose series/parallel structure mirrors the tree; node labels are
/// deterministic in traversal order.
template <class T>
Netlist<T> compose(const SpTree<T>& tree) {
    Netlist<T> n;
    detail::compose_into(tree, n, Netlist<T>::kPlus, Netlist<T>::kMinus);
    n.validate();
    return n;
}

// ---------------------------------------------------------------------------
// Structural predicates
// ---------------------------------------------------------------------------

namespace detail {

template <class T, class Pred>
bool terminals_connected(const Netlist<T>& n, Pred include_edge) {
    std::vector<char> seen(n.nodes.size(), 0);
    std::vector<int> stack{Netlist<T>::kPlus};
    seen[Netlist<T>::kPlus] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == Netlist<T>::kMinus) return true;
        for (const auto& e : n.edges) {
            if (!include_edge(e)) continue;
            int w = -1;
            if (e.a == v) w = e.b;
            if (e.b == v) w = e.a;
            if (w >= 0 && !seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    return false;
}

} // namespace detail

/// True iff the network has a T+ -> T- path of inductors only AND a
/// terminal-separating cut-set of inductors only. The cut-set condition is
/// equivalent to the non-inductor subgraph not connecting the terminals.
template <class T>
bool inductor_path_and_cutset(const Netlist<T>& n) {
    bool path = detail::terminals_connected(
        n, [](const typename Netlist<T>::Edge& e) { return e.kind == ElementKind::L; });
    bool cut = !detail::terminals_connected(
        n, [](const typename Netlist<T>::Edge& e) { return e.kind != ElementKind::L; });
    return path && cut;
}

// ---------------------------------------------------------------------------
// Series/parallel decomposition and the frequency-inverse dual of a netlist
// ---------------------------------------------------------------------------

/// Rebuild an SpTree from a netlist by repeated parallel-merge and
/// series-contraction; nullopt when the graph is not series-parallel.
template <class T>
std::optional<SpTree<T>> sp_decompose(const Netlist<T>& n) {
    using Tree = SpTree<T>;
    struct Item {
        Tree tree;
        int a, b;
    };
    std::vector<Item> items;
    for (const auto& e : n.edges)
        items.push_back({Tree::leaf(e.kind, e.value, e.refdes, e.provenance), e.a, e.b});

    auto degree_of = [&](int v) {
        int d = 0;
        for (const auto& it : items)
            if (it.a == v || it.b == v) ++d;
        return d;
    };

    bool progress = true;
    while (progress && items.size() > 1) {
        progress = false;
        // parallel: two items across the same node pair
        for (std::size_t i = 0; i < items.size() && !progress; ++i) {
            for (std::size_t j = i + 1; j < items.size() && !progress; ++j) {
                auto key = [](const Item& it) {
                    return std::pair<int, int>(std::min(it.a, it.b), std::max(it.a, it.b));
                };
                if (key(items[i]) == key(items[j])) {
                    std::vector<Tree> ch;
                    auto absorb = [&](Tree& t) {
                        if (t.type == Tree::Type::Parallel) {
                            for (auto& c : t.children) ch.push_back(std::move(c));
                        } else {
                            ch.push_back(std::move(t));
                        }
                    };
                    absorb(items[i].tree);
                    absorb(items[j].tree);
                    items[i].tree = Tree::parallel(std::move(ch));
                    items.erase(items.begin() + static_cast<std::ptrdiff_t>(j));
                    progress = true;
                }
            }
        }
        if (progress) continue;
        // series: contract an internal node of degree two
        for (int v = 2; v < static_cast<int>(n.nodes.size()) && !progress; ++v) {
            if (degree_of(v) != 2) continue;
            std::size_t e1 = items.size(), e2 = items.size();
            for (std::size_t i = 0; i < items.size(); ++i) {
                if (items[i].a == v || items[i].b == v) {
                    if (e1 == items.size())
                        e1 = i;
                    else
                        e2 = i;
                }
            }
            if (e2 == items.size()) continue;
            int x = items[e1].a == v ? items[e1].b : items[e1].a;
            int y = items[e2].a == v ? items[e2].b : items[e2].a;
            if (x == y) return std::nullopt;  // series would create a self-loop
            std::vector<Tree> ch;
            auto absorb = [&](Tree& t) {
                if (t.type == Tree::Type::Series) {
                    for (auto& c : t.children) ch.push_back(std::move(c));
                } else {
                    ch.push_back(std::move(t));
                }
            };
            absorb(items[e1].tree);
            absorb(items[e2].tree);
            items[e1].tree = Tree::series(std::move(ch));
            items[e1].a = x;
            items[e1].b = y;
            items.erase(items.begin() + static_cast<std::ptrdiff_t>(e2));
            progress = true;
        }
    }
    if (items.size() != 1) return std::nullopt;
    auto is_terminal_pair = [&](const Item& it) {
        return (it.a == Netlist<T>::kPlus && it.b == Netlist<T>::kMinus) ||
               (it.a == Netlist<T>::kMinus && it.b == Netlist<T>::kPlus);
    };
    if (!is_terminal_pair(items[0])) return std::nullopt;
    return items[0].tree;
}

/// Wheatstone-bridge pattern: nodes {T+, T-, x, y}, arms T+x, xT-, T+y, yT-
/// and bridge xy, each exactly once. Returns edge indices in that order.
template <class T>
std::optional<std::array<std::size_t, 5>> match_bridge(const Netlist<T>& n) {
    if (n.edges.size() != 5 || n.nodes.size() != 4) return std::nullopt;
    int x = 2, y = 3;
    auto find_edge = [&](int u, int v) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < n.edges.size(); ++i) {
            const auto& e = n.edges[i];
            if ((e.a == u && e.b == v) || (e.a == v && e.b == u)) return i;
        }
        return std::nullopt;
    };
    for (int swap = 0; swap < 2; ++swap) {
        auto e1 = find_edge(Netlist<T>::kPlus, x);
        auto e2 = find_edge(x, Netlist<T>::kMinus);
        auto e3 = find_edge(Netlist<T>::kPlus, y);
        auto e4 = find_edge(y, Netlist<T>::kMinus);
        auto e5 = find_edge(x, y);
        if (e1 && e2 && e3 && e4 && e5) {
            std::set<std::size_t> all{*e1, *e2, *e3, *e4, *e5};
            if (all.size() == 5) return std::array<std::size_t, 5>{*e1, *e2, *e3, *e4, *e5};
        }
        std::swap(x, y);
    }
    return std::nullopt;
}

/// Two-terminal graph dual with element kinds preserved and values
/// reciprocated; the admittance of the result equals Y^{-1}(1/s). Handles
/// series/parallel graphs by tree swap and the 5-edge bridge by its self-dual
/// arm exchange (the only non-series-parallel graph on <= 5 edges).
template <class T>
Netlist<T> fid_netlist(const Netlist<T>& n) {
    n.validate();
    if (auto tree = sp_decompose(n)) {
        Netlist<T> out = compose(tree->dual());
        if (!n.topology.empty()) out.topology = n.topology + "-dual";
        return out;
    }
    if (auto bridge = match_bridge(n)) {
        // dual of the bridge graph is the bridge graph with the two cross
        // arms exchanged; the bridge edge maps to itself
        const auto& idx = *bridge;
        Netlist<T> out;
        int x = out.fresh_node(), y = out.fresh_node();
        auto put = [&](std::size_t src, int a, int b) {
            const auto& e = n.edges[src];
            std::string prov = e.provenance.empty() ? "" : "1/(" + e.provenance + ")";
            out.add_edge(e.kind, T(1) / e.value, a, b, e.refdes, prov);
        };
        put(idx[0], Netlist<T>::kPlus, x);
        put(idx[2], x, Netlist<T>::kMinus);
        put(idx[1], Netlist<T>::kPlus, y);
        put(idx[3], y, Netlist<T>::kMinus);
        put(idx[4], x, y);
        if (!n.topology.empty()) out.topology = n.topology + "-dual";
        out.validate();
        return out;
    }
    throw NonPlanarError("no series/parallel decomposition or bridge pattern found");
}

// ---------------------------------------------------------------------------
// Netlist file format: line-oriented, "# netsynth v1" header, one element per
// line "<KindRefDes> <node+> <node-> <value>"; values exact p/q or decimal.
// ---------------------------------------------------------------------------

template <class T>
std::string write_netlist(const Netlist<T>& n) {
    std::ostringstream out;
    out << "# netsynth v1\n";
    if (!n.topology.empty()) out << "# topology: " << n.topology << "\n";
    for (const auto& e : n.edges)
        if (!e.provenance.empty()) out << "# " << e.refdes << " = " << e.provenance << "\n";
    for (const auto& e : n.edges) {
        out << e.refdes << " " << n.nodes[static_cast<std::size_t>(e.a)] << " "
            << n.nodes[static_cast<std::size_t>(e.b)] << " " << scalar_traits<T>::to_string(e.value)
            << "\n";
    }
    return out.str();
}

namespace detail {

inline bool is_rational_literal(const std::string& s) {
    return s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
           s.find('E') == std::string::npos;
}

template <class T>
T netlist_value(const std::string& text, int line);

template <>
inline Rational netlist_value<Rational>(const std::string& text, int line) {
    if (!is_rational_literal(text))
        throw NetlistFormatError("decimal value in an exact-rational netlist", line);
    try {
        return parse_rational(text);
    } catch (const Error&) {
        throw NetlistFormatError("malformed value '" + text + "'", line);
    }
}

template <>
inline BigReal netlist_value<BigReal>(const std::string& text, int line) {
    try {
        if (is_rational_literal(text)) return scalar_cast<BigReal>(parse_rational(text));
        return BigReal(text);
    } catch (const std::exception&) {
        throw NetlistFormatError("malformed value '" + text + "'", line);
    }
}

struct RawNetlist {
    std::string topology;
    struct Line {
        std::string refdes, node_a, node_b, value;
        int lineno;
    };
    std::vector<Line> lines;
    bool all_exact = true;
};

inline RawNetlist read_raw_netlist(const std::string& text) {
    RawNetlist raw;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed = line;
        while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
            trimmed.pop_back();
        std::size_t start = 0;
        while (start < trimmed.size() && std::isspace(static_cast<unsigned char>(trimmed[start])))
            ++start;
        trimmed = trimmed.substr(start);
        if (trimmed.empty()) continue;
        if (trimmed[0] == '#') {
            if (!header_seen) {
                if (trimmed != "# netsynth v1")
                    throw NetlistFormatError("expected header '# netsynth v1'", lineno);
                header_seen = true;
            } else if (trimmed.rfind("# topology:", 0) == 0) {
                std::string tag = trimmed.substr(std::string("# topology:").size());
                std::size_t p = tag.find_first_not_of(' ');
                raw.topology = p == std::string::npos ? "" : tag.substr(p);
            }
            continue;
        }
        if (!header_seen) throw NetlistFormatError("expected header '# netsynth v1'", lineno);
        std::istringstream ls(trimmed);
        RawNetlist::Line l;
        l.lineno = lineno;
        if (!(ls >> l.refdes >> l.node_a >> l.node_b >> l.value))
            throw NetlistFormatError("expected '<KindRefDes> <node+> <node-> <value>'", lineno);
        std::string extra;
        if (ls >> extra) throw NetlistFormatError("trailing tokens", lineno);
        if (!kind_from_letter(l.refdes[0]))
            throw NetlistFormatError(std::string("unknown element kind ") + l.refdes[0], lineno);
        if (!is_rational_literal(l.value)) raw.all_exact = false;
        raw.lines.push_back(std::move(l));
    }
    if (!header_seen) throw NetlistFormatError("empty netlist file", 1);
    if (raw.lines.empty()) throw NetlistFormatError("netlist has no elements", lineno);
    return raw;
}

} // namespace detail

template <class T>
Netlist<T> read_netlist(const std::string& text) {
    detail::RawNetlist raw = detail::read_raw_netlist(text);
    Netlist<T> n;
    n.topology = raw.topology;
    for (const auto& l : raw.lines) {
        ElementKind kind = *kind_from_letter(l.refdes[0]);
        T value = detail::netlist_value<T>(l.value, l.lineno);
        if (!(value > T(0))) throw NetlistFormatError("nonpositive value", l.lineno);
        int a = n.node(l.node_a), b = n.node(l.node_b);
        if (a == b) throw NetlistFormatError("self-loop edge", l.lineno);
        n.add_edge(kind, std::move(value), a, b, l.refdes);
    }
    n.validate();
    return n;
}

using AnyNetlist = std::variant<Netlist<Rational>, Netlist<BigReal>>;

/// Reads exact netlists into the Rational representation and netlists with any
/// decimal value into BigReal.
inline AnyNetlist read_netlist_any(const std::string& text) {
    detail::RawNetlist raw = detail::read_raw_netlist(text);
    if (raw.all_exact) return read_netlist<Rational>(text);
    return read_netlist<BigReal>(text);
}

} // namespace netsynth
