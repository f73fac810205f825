#pragma once

// Seeded, reproducible generators and exhaustive enumerators for test
// corpora: triangle cacti (the roots of chordal line graphs), their line
// graphs, random chordal graphs, Erdos-Renyi graphs, and the exhaustive list
// of small roots up to isomorphism.
//
// All randomness comes from a splitmix64 stream so corpora are bit-exact
// across platforms:
//   state <- state + 0x9E3779B97F4A7C15 (mod 2^64)
//   z <- state; z <- (z xor z>>30) * 0xBF58476D1CE4E5B9
//   z <- (z xor z>>27) * 0x94D049BB133111EB; output z xor z>>31
// uniform_below(n) draws until below 2^64 - (2^64 mod n) and reduces mod n;
// bernoulli(p) compares the top 53 bits scaled into [0,1) against p.

#include <cstdint>

#include "clg/graph.hpp"
#include "clg/isocheck.hpp"
#include "clg/linegraph.hpp"

namespace clg {

using Seed = std::uint64_t;

class SplitMix64 {
public:
    explicit SplitMix64(Seed seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) by modulo rejection.
    std::uint64_t uniform_below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("uniform_below(0)");
        const std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    bool bernoulli(double p) {
        const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return u < p;
    }

private:
    std::uint64_t state_;
};

// ---------------------------------------------------------------------------
// Triangle cacti and their line graphs

// Connected graph built block by block; each block is K2 (probability
// 1 - triangle_fraction) or K3, attached at a uniformly chosen existing
// vertex. Every block spans at most 3 vertices by construction. Stream
// order: block type first, then the attachment point.
inline Graph gen_triangle_cactus(int blocks, double triangle_fraction, Seed seed) {
    if (blocks < 1) throw std::invalid_argument("blocks must be >= 1");
    SplitMix64 rng(seed);
    std::vector<Edge> es;
    int n = 0;
    for (int b = 0; b < blocks; ++b) {
        bool triangle = rng.bernoulli(triangle_fraction);
        Vertex at;
        if (n == 0) {
            at = 1;
            n = 1;
        } else {
            at = 1 + static_cast<Vertex>(rng.uniform_below(n));
        }
        if (triangle) {
            es.push_back(make_edge(at, n + 1));
            es.push_back(make_edge(at, n + 2));
            es.push_back(make_edge(n + 1, n + 2));
            n += 2;
        } else {
            es.push_back(make_edge(at, n + 1));
            n += 1;
        }
    }
    std::vector<Vertex> vs(n);
    for (int i = 0; i < n; ++i) vs[i] = i + 1;
    return Graph(vs, es);
}

// Guaranteed chordal line graph: the line graph of a triangle cactus.
inline Graph gen_chordal_line(int blocks, double triangle_fraction, Seed seed) {
    return line_graph(gen_triangle_cactus(blocks, triangle_fraction, seed)).graph;
}

// ---------------------------------------------------------------------------
// Random chordal graphs

// Reverse perfect elimination: vertex i joins a random subclique of the
// clique its anchor vertex was created in, so earlier neighbors always form
// a clique. extra_fill = 1 grows complete graphs.
inline Graph gen_chordal(int n, double extra_fill, Seed seed) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    SplitMix64 rng(seed);
    std::vector<Edge> es;
    std::vector<std::vector<Vertex>> cliques = {{1}};
    std::vector<int> clique_of = {0};  // per vertex, 0-based
    for (Vertex i = 2; i <= n; ++i) {
        Vertex v = 1 + static_cast<Vertex>(rng.uniform_below(i - 1));
        const int b = clique_of[v - 1];
        std::vector<Vertex> chosen = {v};
        for (Vertex w : cliques[b]) {
            if (w == v) continue;
            if (rng.bernoulli(extra_fill)) chosen.push_back(w);
        }
        std::sort(chosen.begin(), chosen.end());
        for (Vertex w : chosen) es.push_back(make_edge(i, w));
        if (chosen.size() == cliques[b].size()) {
            cliques[b].push_back(i);
            std::sort(cliques[b].begin(), cliques[b].end());
            clique_of.push_back(b);
        } else {
            chosen.push_back(i);
            std::sort(chosen.begin(), chosen.end());
            cliques.push_back(std::move(chosen));
            clique_of.push_back(static_cast<int>(cliques.size()) - 1);
        }
    }
    std::vector<Vertex> vs(n);
    for (int i = 0; i < n; ++i) vs[i] = i + 1;
    return Graph(vs, es);
}

// ---------------------------------------------------------------------------
// Erdos-Renyi

inline Graph gen_random(int n, double p, Seed seed) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    SplitMix64 rng(seed);
    std::vector<Edge> es;
    for (Vertex i = 1; i <= n; ++i)
        for (Vertex j = i + 1; j <= n; ++j)
            if (rng.bernoulli(p)) es.emplace_back(i, j);
    std::vector<Vertex> vs(n);
    for (int i = 0; i < n; ++i) vs[i] = i + 1;
    return Graph(vs, es);
}

// ---------------------------------------------------------------------------
// Exhaustive small roots

namespace detail {

inline std::vector<int> degree_multiset(const Graph& g) {
    std::vector<int> d;
    d.reserve(g.order());
    for (Vertex v : g.vertices()) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace detail

// All connected graphs, up to isomorphism, whose blocks span at most 3
// vertices (edges and triangles) and that have exactly `edges` edges.
// Grown block by block from K2 and K3, deduplicated via the exact oracle;
// the output order is the deterministic generation order.
inline std::vector<Graph> enumerate_small_roots(int edges) {
    if (edges < 1 || edges > 9) throw TooLarge();
    std::vector<Graph> result;
    std::vector<Graph> seen;  // all distinct graphs found so far, any size
    std::vector<std::vector<int>> seen_degrees;
    std::vector<Graph> queue;
    auto try_add = [&](Graph g) {
        if (static_cast<int>(g.size()) > edges) return;
        std::vector<int> deg = detail::degree_multiset(g);
        for (std::size_t i = 0; i < seen.size(); ++i) {
            if (seen[i].order() != g.order() || seen[i].size() != g.size()) continue;
            if (seen_degrees[i] != deg) continue;
            if (are_isomorphic(seen[i], g).isomorphic) return;
        }
        seen.push_back(g);
        seen_degrees.push_back(std::move(deg));
        if (static_cast<int>(g.size()) == edges) result.push_back(g);
        queue.push_back(std::move(g));
    };
    try_add(Graph({1, 2}, {{1, 2}}));
    try_add(Graph({1, 2, 3}, {{1, 2}, {1, 3}, {2, 3}}));
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Graph g = queue[qi];
        const int n = static_cast<int>(g.order());
        if (static_cast<int>(g.size()) >= edges) continue;
        for (Vertex at = 1; at <= n; ++at) {
            // attach a pendant edge
            {
                std::vector<Vertex> vs = g.vertices();
                vs.push_back(n + 1);
                std::vector<Edge> es = g.edges();
                es.push_back(make_edge(at, n + 1));
                try_add(Graph(vs, es));
            }
            // attach a triangle
            if (static_cast<int>(g.size()) + 3 <= edges) {
                std::vector<Vertex> vs = g.vertices();
                vs.push_back(n + 1);
                vs.push_back(n + 2);
                std::vector<Edge> es = g.edges();
                es.push_back(make_edge(at, n + 1));
                es.push_back(make_edge(at, n + 2));
                es.push_back(make_edge(n + 1, n + 2));
                try_add(Graph(vs, es));
            }
        }
    }
    return result;
}

// Union of enumerate_small_roots(k) for k = 1..max_edges.
inline std::vector<Graph> enumerate_small_roots_up_to(int max_edges) {
    std::vector<Graph> out;
    for (int k = 1; k <= max_edges; ++k) {
        auto part = enumerate_small_roots(k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace clg
