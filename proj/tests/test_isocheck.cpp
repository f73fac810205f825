#include <catch2/catch_amalgamated.hpp>

#include <functional>

#include "clg/generators.hpp"
#include "clg/isocheck.hpp"
#include "fixtures.hpp"

using namespace clg;

namespace {

std::vector<LabeledGraph> all_labeled_graphs(int n) {
    std::vector<Edge> pairs;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
    std::vector<LabeledGraph> out;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<Edge> es;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (mask >> k & 1) es.push_back(pairs[k]);
        out.emplace_back(n, es);
    }
    return out;
}

std::vector<int> random_perm(int n, SplitMix64& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.uniform_below(i + 1)]);
    return p;
}

}  // namespace

TEST_CASE("are_isomorphic examples") {
    CHECK_FALSE(are_isomorphic(fixtures::complete(3), fixtures::claw()).isomorphic);

    Graph lclaw = line_graph(fixtures::claw()).graph;
    CHECK(are_isomorphic(fixtures::complete(3), lclaw).isomorphic);

    Graph two_triangles({1, 2, 3, 4, 5, 6}, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}});
    CHECK_FALSE(are_isomorphic(fixtures::cycle(6), two_triangles).isomorphic);
}

TEST_CASE("are_isomorphic returns a verified mapping") {
    SplitMix64 rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng.uniform_below(8));
        Graph g = gen_random(n, 0.5, rng.next());
        LabeledGraph lg = LabeledGraph::from_graph(g);
        LabeledGraph hg = apply_permutation(lg, random_perm(n, rng));
        auto res = are_isomorphic(g, hg.to_graph());
        REQUIRE(res.isomorphic);
        Graph h = hg.to_graph();
        for (const auto& [u, v] : g.edges()) {
            Vertex iu = -1, iv = -1;
            for (const auto& [a, b] : res.mapping) {
                if (a == u) iu = b;
                if (a == v) iv = b;
            }
            CHECK(h.adjacent(iu, iv));
        }
    }
}

TEST_CASE("are_isomorphic is an equivalence relation on a small corpus") {
    SplitMix64 rng(77);
    std::vector<Graph> corpus;
    for (int trial = 0; trial < 12; ++trial)
        corpus.push_back(gen_random(2 + static_cast<int>(rng.uniform_below(5)), 0.5, rng.next()));
    for (const auto& g : corpus) CHECK(are_isomorphic(g, g).isomorphic);
    for (const auto& a : corpus)
        for (const auto& b : corpus)
            CHECK(are_isomorphic(a, b).isomorphic == are_isomorphic(b, a).isomorphic);
    for (const auto& a : corpus)
        for (const auto& b : corpus)
            for (const auto& c : corpus)
                if (are_isomorphic(a, b).isomorphic && are_isomorphic(b, c).isomorphic)
                    CHECK(are_isomorphic(a, c).isomorphic);
}

TEST_CASE("brute_canonical examples") {
    LabeledGraph k3(3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(brute_canonical(k3) == k3);

    LabeledGraph p_213(3, {{1, 2}, {1, 3}});  // path 2-1-3
    LabeledGraph p_123(3, {{1, 2}, {2, 3}});  // path 1-2-3
    CHECK(brute_canonical(p_213) == brute_canonical(p_123));
    // the s-lex least path on 3 vertices avoids the pair (1,2)
    CHECK(brute_canonical(p_123) == LabeledGraph(3, {{1, 3}, {2, 3}}));

    LabeledGraph dia = LabeledGraph::from_graph(fixtures::diamond());
    // least form puts the one non-edge on the pair (1,2)
    CHECK(brute_canonical(dia) == LabeledGraph(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));

    CHECK_THROWS_AS(brute_canonical(LabeledGraph(10, {})), TooLarge);
}

TEST_CASE("brute_canonical is invariant under all permutations for n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& g : all_labeled_graphs(n)) {
            LabeledGraph want = brute_canonical(g);
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 1);
            do {
                CHECK(brute_canonical(apply_permutation(g, perm)) == want);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    // n = 5 exhaustively in the acceptance suite
}

TEST_CASE("color_refinement examples") {
    Coloring kn = color_refinement(fixtures::complete(5));
    CHECK(kn.class_sizes() == std::vector<int>{5});

    Coloring p3 = color_refinement(fixtures::path(3));
    CHECK(p3.class_sizes() == std::vector<int>{1, 2});
    CHECK(p3.color(1) == p3.color(3));
    CHECK(p3.color(1) != p3.color(2));

    Graph two_triangles({1, 2, 3, 4, 5, 6}, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}});
    Coloring c6 = color_refinement(fixtures::cycle(6));
    Coloring tt = color_refinement(two_triangles);
    CHECK(c6.class_sizes() == tt.class_sizes());  // the classic 1-WL blind spot
    CHECK_FALSE(are_isomorphic(fixtures::cycle(6), two_triangles).isomorphic);
}

TEST_CASE("color_refinement reaches a fixpoint") {
    SplitMix64 rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = gen_random(2 + static_cast<int>(rng.uniform_below(9)), 0.4, rng.next());
        Coloring c = color_refinement(g);
        std::map<std::pair<int, std::vector<int>>, int> sig_ids;
        std::map<Vertex, int> fresh;
        for (Vertex v : g.vertices()) {
            std::vector<int> nb;
            for (Vertex w : g.neighbors(v)) nb.push_back(c.color(w));
            std::sort(nb.begin(), nb.end());
            auto [it, inserted] = sig_ids.emplace(std::pair{c.color(v), nb},
                                                  static_cast<int>(sig_ids.size()));
            fresh[v] = it->second;
        }
        for (Vertex v : g.vertices())
            for (Vertex w : g.vertices())
                CHECK((c.color(v) == c.color(w)) == (fresh[v] == fresh[w]));
    }
}

TEST_CASE("color_refinement never splits an automorphism orbit (n <= 6)") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 2 + static_cast<int>(rng.uniform_below(5));
        Graph g = gen_random(n, 0.5, rng.next());
        LabeledGraph lg = LabeledGraph::from_graph(g);
        std::vector<int> orbit(n);
        std::iota(orbit.begin(), orbit.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (orbit[x] != x) x = orbit[x] = orbit[orbit[x]];
            return x;
        };
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 1);
        do {
            if (apply_permutation(lg, perm) == lg)
                for (int i = 0; i < n; ++i) orbit[find(i)] = find(perm[i] - 1);
        } while (std::next_permutation(perm.begin(), perm.end()));
        Coloring c = color_refinement(g);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (find(i) == find(j)) CHECK(c.color(i + 1) == c.color(j + 1));
    }
}
