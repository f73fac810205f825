#pragma once

// The hat construction: complete graph on V(G) plus one degree-2 vertex per
// edge, always chordal. Includes the inverse, membership testing, and the
// reduction combinator that transports deciders along hat / line-graph images.

#include <functional>
#include <optional>

#include "clg/graph.hpp"
#include "clg/linegraph.hpp"

namespace clg {

struct HatImage {
    Graph graph;
    std::vector<Vertex> core;                       // the original V(G), sorted
    std::vector<std::pair<Vertex, Edge>> pendant;   // new vertex -> encoded edge
};

struct NotHatImageError : std::runtime_error {
    NotHatImageError(const std::string& why) : std::runtime_error("not a hat image: " + why) {}
};

inline HatImage hat(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("empty graph");
    std::vector<Vertex> vs = g.vertices();
    Vertex next = vs.back() + 1;
    std::vector<Edge> es;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            es.emplace_back(vs[i], vs[j]);
    std::vector<std::pair<Vertex, Edge>> pendant;
    std::vector<Vertex> all = vs;
    for (const Edge& e : g.edges()) {
        pendant.emplace_back(next, e);
        all.push_back(next);
        es.push_back(make_edge(next, e.first));
        es.push_back(make_edge(next, e.second));
        ++next;
    }
    return HatImage{Graph(all, es), vs, pendant};
}

namespace detail {

struct HatDecode {
    std::vector<Vertex> core;
    std::vector<Edge> recovered_edges;
};

inline std::optional<HatDecode> try_hat_core(const Graph& h, const std::vector<Vertex>& core) {
    if (core.empty()) return std::nullopt;
    for (std::size_t i = 0; i < core.size(); ++i)
        for (std::size_t j = i + 1; j < core.size(); ++j)
            if (!h.adjacent(core[i], core[j])) return std::nullopt;
    std::vector<Edge> recovered;
    std::size_t pendants = 0;
    for (Vertex v : h.vertices()) {
        if (contains_sorted(core, v)) continue;
        const auto& nb = h.neighbors(v);
        if (nb.size() != 2) return std::nullopt;
        if (!contains_sorted(core, nb[0]) || !contains_sorted(core, nb[1])) return std::nullopt;
        recovered.push_back(make_edge(nb[0], nb[1]));
        ++pendants;
    }
    std::sort(recovered.begin(), recovered.end());
    if (std::adjacent_find(recovered.begin(), recovered.end()) != recovered.end())
        return std::nullopt;  // two pendants encode the same pair
    if (h.size() != core.size() * (core.size() - 1) / 2 + 2 * pendants) return std::nullopt;
    return HatDecode{core, recovered};
}

// Decodes h as a hat image. Large orders use the degree criterion (core =
// vertices of degree >= 3, exact whenever |G| >= 4, which |h| >= 7 forces);
// small orders try every bipartition. Among valid decodings the K2 preimage
// is dropped, resolving hat(K2) = hat(I3) = K3 to I3.
inline std::optional<HatDecode> hat_decode(const Graph& h) {
    if (h.order() >= 7) {
        std::vector<Vertex> core;
        for (Vertex v : h.vertices())
            if (h.degree(v) >= 3) core.push_back(v);
        return try_hat_core(h, core);
    }
    const auto& vs = h.vertices();
    const int n = static_cast<int>(vs.size());
    std::optional<HatDecode> best;
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<Vertex> core;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) core.push_back(vs[i]);
        auto dec = try_hat_core(h, core);
        if (!dec) continue;
        bool is_k2 = dec->core.size() == 2 && dec->recovered_edges.size() == 1;
        if (is_k2) continue;  // excluded from the codomain
        if (!best || dec->core.size() > best->core.size() ||
            (dec->core.size() == best->core.size() && dec->core < best->core))
            best = dec;
    }
    return best;
}

}  // namespace detail

inline bool is_hat(const Graph& h) {
    return h.order() > 0 && detail::hat_decode(h).has_value();
}

// Recovers the unique G (up to isomorphism) with hat(G) isomorphic to h,
// excluding K2. Core vertices keep their identifiers.
inline Graph unhat(const Graph& h) {
    if (h.order() == 0) throw std::invalid_argument("empty graph");
    auto dec = detail::hat_decode(h);
    if (!dec) throw NotHatImageError("no core/pendant split satisfies the structural conditions");
    return Graph(dec->core, dec->recovered_edges);
}

// ---------------------------------------------------------------------------
// Reduction combinator

enum class TransportRoute { ViaHat, ViaLineGraph };

using GraphDecider = std::function<bool(const Graph&)>;

// Turns a decider on hat images (resp. line graphs) into a decider on all
// graphs by composing with the corresponding transformation.
inline GraphDecider transport_decider(GraphDecider decider, TransportRoute route) {
    if (route == TransportRoute::ViaHat)
        return [decider](const Graph& g) { return decider(hat(g).graph); };
    return [decider](const Graph& g) { return decider(line_graph(g).graph); };
}

}  // namespace clg
