#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "test_util.hpp"

using namespace netsynth;
using Tree = SpTree<Rational>;

namespace {

Tree L(long long n, long long d = 1) { return Tree::leaf(ElementKind::L, Q(n, d)); }
Tree R(long long n, long long d = 1) { return Tree::leaf(ElementKind::R, Q(n, d)); }
Tree C(long long n, long long d = 1) { return Tree::leaf(ElementKind::C, Q(n, d)); }

// exhaustive oracle for the inductor path/cut-set predicate on small graphs
bool brute_inductor_path(const Netlist<Rational>& n) {
    // enumerate simple paths T+ -> T- over inductor edges only
    std::vector<int> stack{Netlist<Rational>::kPlus};
    std::vector<char> visited(n.nodes.size(), 0);
    std::function<bool(int)> dfs = [&](int v) -> bool {
        if (v == Netlist<Rational>::kMinus) return true;
        visited[static_cast<std::size_t>(v)] = 1;
        for (const auto& e : n.edges) {
            if (e.kind != ElementKind::L) continue;
            int w = e.a == v ? e.b : (e.b == v ? e.a : -1);
            if (w >= 0 && !visited[static_cast<std::size_t>(w)])
                if (dfs(w)) return true;
        }
        visited[static_cast<std::size_t>(v)] = 0;
        return false;
    };
    return dfs(Netlist<Rational>::kPlus);
}

bool separates(const Netlist<Rational>& n, unsigned removed_mask) {
    std::vector<char> seen(n.nodes.size(), 0);
    std::vector<int> stack{Netlist<Rational>::kPlus};
    seen[Netlist<Rational>::kPlus] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (std::size_t i = 0; i < n.edges.size(); ++i) {
            if (removed_mask & (1u << i)) continue;
            const auto& e = n.edges[i];
            int w = e.a == v ? e.b : (e.b == v ? e.a : -1);
            if (w >= 0 && !seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    return !seen[Netlist<Rational>::kMinus];
}

bool brute_inductor_cutset(const Netlist<Rational>& n) {
    unsigned m = 1u << n.edges.size();
    for (unsigned mask = 1; mask < m; ++mask) {
        bool all_l = true;
        for (std::size_t i = 0; i < n.edges.size(); ++i)
            if ((mask & (1u << i)) && n.edges[i].kind != ElementKind::L) all_l = false;
        if (all_l && separates(n, mask)) return true;
    }
    return false;
}

std::multiset<std::string> edge_signature(const Netlist<Rational>& n) {
    std::multiset<std::string> sig;
    for (const auto& e : n.edges)
        sig.insert(std::string(1, kind_letter(e.kind)) + ":" + e.value.str());
    return sig;
}

} // namespace

TEST_CASE("series/parallel composition", "[netlist]") {
    SECTION("single leaf spans the terminals") {
        auto n = compose(L(2));
        REQUIRE(n.edges.size() == 1);
        CHECK(n.edges[0].a == Netlist<Rational>::kPlus);
        CHECK(n.edges[0].b == Netlist<Rational>::kMinus);
        CHECK(n.edges[0].refdes == "L1");
    }
    SECTION("three-element reducible shape: L1 || (R1 series L2)") {
        auto n = compose(Tree::parallel({L(1), Tree::series({R(1), L(1)})}));
        CHECK(n.edges.size() == 3);
        CHECK(n.nodes.size() == 3);  // one internal node
        auto y = driving_point_admittance(n);
        CHECK(y.y == parse_ratfunc("1/s + 1/(s+1)"));
    }
    SECTION("deterministic node labels") {
        auto n = compose(Tree::series({L(1), L(2), L(3)}));
        REQUIRE(n.nodes.size() == 4);
        CHECK(n.nodes[2] == "n1");
        CHECK(n.nodes[3] == "n2");
    }
    SECTION("invalid trees and elements") {
        CHECK_THROWS_AS(Tree::series({}), Error);
        CHECK_THROWS_AS(compose(Tree::leaf(ElementKind::L, Q(0))), Error);
        CHECK_THROWS_AS(compose(Tree::leaf(ElementKind::L, Q(-1))), Error);
    }
}

TEST_CASE("inductor path and cut-set predicate", "[netlist]") {
    SECTION("single elements") {
        CHECK(inductor_path_and_cutset(compose(L(1))));
        CHECK_FALSE(inductor_path_and_cutset(compose(R(1))));
        CHECK_FALSE(inductor_path_and_cutset(compose(C(1))));
    }
    SECTION("the four-element network passes: path L1-L2, cut {L1}") {
        auto n = fig7a(Q(1, 4), Q(1, 2), Q(1, 2), Q(4));
        CHECK(inductor_path_and_cutset(n));
    }
    SECTION("matches the exhaustive path/cut oracle on every skeleton up to 3") {
        for (int k = 1; k <= 3; ++k) {
            for (const auto& sk : sp_skeletons_exact(k)) {
                std::vector<Rational> vals(static_cast<std::size_t>(k), Q(1));
                auto n = sk.to_netlist(vals);
                bool expect = brute_inductor_path(n) && brute_inductor_cutset(n);
                INFO(sk.key());
                CHECK(inductor_path_and_cutset(n) == expect);
            }
        }
        auto bridge = fig12(Q(1), Q(1), Q(1), Q(1), Q(1));
        CHECK(inductor_path_and_cutset(bridge) ==
              (brute_inductor_path(bridge) && brute_inductor_cutset(bridge)));
    }
}

TEST_CASE("frequency-inverse dual of a netlist", "[netlist]") {
    SECTION("single inductor reciprocates") {
        auto d = fid_netlist(compose(L(2)));
        REQUIRE(d.edges.size() == 1);
        CHECK(d.edges[0].kind == ElementKind::L);
        CHECK(d.edges[0].value == Q(1, 2));
        auto y = driving_point_admittance(d).y;
        CHECK(y == parse_ratfunc("2/s"));
    }
    SECTION("series(R(2), L(3)) becomes parallel(R(1/2), L(1/3))") {
        auto d = fid_netlist(compose(Tree::series({R(2), L(3)})));
        REQUIRE(d.edges.size() == 2);
        CHECK(d.nodes.size() == 2);  // parallel: no internal node
        auto sig = edge_signature(d);
        CHECK(sig == std::multiset<std::string>{"R:1/2", "L:1/3"});
    }
    SECTION("duality identity on random series/parallel networks") {
        std::mt19937_64 rng(61);
        TupleSampler gen(62);
        for (int i = 0; i < 60; ++i) {
            int k = 1 + static_cast<int>(rng() % 4);
            auto skeletons = sp_skeletons_exact(k);
            const auto& sk = skeletons[rng() % skeletons.size()];
            std::vector<Rational> vals;
            for (int v = 0; v < k; ++v) vals.push_back(gen.positive_rat());
            auto n = sk.to_netlist(vals);
            auto d = fid_netlist(n);
            auto yn = driving_point_admittance(n).y;
            auto yd = driving_point_admittance(d).y;
            CHECK(yd == yn.reciprocal().subst_inv());
        }
    }
    SECTION("bridge duality and involution") {
        TupleSampler gen(67);
        for (int i = 0; i < 20; ++i) {
            auto n = fig12(gen.positive_rat(), gen.positive_rat(), gen.positive_rat(),
                           gen.positive_rat(), gen.positive_rat());
            auto d = fid_netlist(n);
            auto yn = driving_point_admittance(n).y;
            auto yd = driving_point_admittance(d).y;
            CHECK(yd == yn.reciprocal().subst_inv());
            auto dd = fid_netlist(d);
            CHECK(edge_signature(dd) == edge_signature(n));
            CHECK(driving_point_admittance(dd).y == yn);
        }
    }
    SECTION("involution on series/parallel networks up to isomorphism") {
        std::mt19937_64 rng(71);
        TupleSampler gen(72);
        for (int i = 0; i < 40; ++i) {
            int k = 1 + static_cast<int>(rng() % 4);
            auto skeletons = sp_skeletons_exact(k);
            const auto& sk = skeletons[rng() % skeletons.size()];
            std::vector<Rational> vals;
            for (int v = 0; v < k; ++v) vals.push_back(gen.positive_rat());
            auto n = sk.to_netlist(vals);
            auto dd = fid_netlist(fid_netlist(n));
            auto a = Skeleton::from_tree(*sp_decompose(n));
            auto b = Skeleton::from_tree(*sp_decompose(dd));
            CHECK(a.first.key() == b.first.key());
            auto sa = a.second, sb = b.second;
            std::sort(sa.begin(), sa.end());
            std::sort(sb.begin(), sb.end());
            CHECK(sa == sb);
        }
    }
    SECTION("series/parallel decomposition fails cleanly on the bridge") {
        auto bridge = fig12(Q(1), Q(1), Q(1), Q(1), Q(1));
        CHECK_FALSE(sp_decompose(bridge).has_value());
    }
}

TEST_CASE("netlist file round-trip", "[netlist]") {
    SECTION("single inductor") {
        auto n = compose(L(1, 2));
        std::string text = write_netlist(n);
        CHECK(text == "# netsynth v1\nL1 T+ T- 1/2\n");
        auto back = read_netlist<Rational>(text);
        CHECK(edge_signature(back) == edge_signature(n));
        CHECK(write_netlist(back) == text);
    }
    SECTION("five-element network with shared internal nodes") {
        auto n = fig8(Q(1), Q(6), Q(2, 3), Q(2), Q(2, 3));
        std::string text = write_netlist(n);
        auto back = read_netlist<Rational>(text);
        CHECK(back.nodes == n.nodes);
        CHECK(back.edges.size() == 5);
        CHECK(back.topology == "Fig8");
        CHECK(write_netlist(back) == text);
        CHECK(driving_point_admittance(back).y == driving_point_admittance(n).y);
    }
    SECTION("format errors") {
        CHECK_THROWS_AS(read_netlist<Rational>("# netsynth v1\nX1 T+ T- 5\n"), NetlistFormatError);
        CHECK_THROWS_AS(read_netlist<Rational>("# netsynth v1\nL1 T+ T- 0\n"), NetlistFormatError);
        CHECK_THROWS_AS(read_netlist<Rational>("# netsynth v1\nL1 T+ T- -2\n"), NetlistFormatError);
        CHECK_THROWS_AS(read_netlist<Rational>("# netsynth v1\nL1 T+ T-\n"), NetlistFormatError);
        CHECK_THROWS_AS(read_netlist<Rational>("# netsynth v1\nL1 T+ T+ 1\n"), NetlistFormatError);
        CHECK_THROWS_AS(read_netlist<Rational>("L1 T+ T- 1\n"), NetlistFormatError);
        CHECK_THROWS_AS(read_netlist<Rational>(""), NetlistFormatError);
        try {
            read_netlist<Rational>("# netsynth v1\nL1 T+ n1 1\nX9 n1 T- 2\n");
            FAIL("expected NetlistFormatError");
        } catch (const NetlistFormatError& e) {
            CHECK(e.line == 3);
            CHECK(std::string(e.what()).find("unknown element kind X") != std::string::npos);
        }
    }
    SECTION("decimal values route to the working-precision representation") {
        set_default_precision(50);
        std::string text = "# netsynth v1\nL1 T+ n1 0.5\nR1 n1 T- 1.25\n";
        auto any = read_netlist_any(text);
        CHECK(std::holds_alternative<Netlist<BigReal>>(any));
        const auto& n = std::get<Netlist<BigReal>>(any);
        CHECK(scalar_abs(n.edges[0].value - BigReal("0.5")) == 0);
        // round-trip at 50 significant digits
        auto text2 = write_netlist(n);
        auto n2 = read_netlist<BigReal>(text2);
        CHECK(scalar_abs(n2.edges[1].value - n.edges[1].value) < BigReal("1e-45"));
    }
    SECTION("exact netlists stay rational") {
        auto any = read_netlist_any("# netsynth v1\nL1 T+ T- 3/7\n");
        CHECK(std::holds_alternative<Netlist<Rational>>(any));
    }
}
