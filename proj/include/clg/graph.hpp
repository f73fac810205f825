#pragma once

// Core graph types: simple undirected graphs with arbitrary integer vertex
// identifiers, labeled graphs on {1..n}, the edge-list file format, and the
// elementary algorithms (components, blocks, permutations, s-lex order)
// shared by every other header.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace clg {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // normalized: first < second

inline Edge make_edge(Vertex u, Vertex v) {
    if (u == v) throw std::invalid_argument("loop edge");
    return u < v ? Edge{u, v} : Edge{v, u};
}

namespace detail {

inline bool contains_sorted(const std::vector<Vertex>& s, Vertex v) {
    return std::binary_search(s.begin(), s.end(), v);
}

inline std::vector<Vertex> set_union(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::vector<Vertex> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline std::vector<Vertex> set_difference(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::vector<Vertex> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline std::vector<Vertex> set_intersection(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool is_subset(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Set comparison used throughout: A precedes B iff the smallest element of
// the symmetric difference belongs to B.
inline bool set_lex_less(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) { ++i; ++j; continue; }
        return a[i] > b[j];  // smallest sym-diff element sits on the b side
    }
    return i == a.size() && j < b.size();  // proper subset precedes
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Graph

class Graph {
public:
    Graph() = default;

    Graph(std::vector<Vertex> vertices, std::vector<Edge> edges) {
        std::sort(vertices.begin(), vertices.end());
        if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
            throw std::invalid_argument("duplicate vertex");
        verts_ = std::move(vertices);
        for (auto& e : edges) {
            if (e.first == e.second) throw std::invalid_argument("loop edge");
            if (e.first > e.second) std::swap(e.first, e.second);
            if (!detail::contains_sorted(verts_, e.first) || !detail::contains_sorted(verts_, e.second))
                throw std::invalid_argument("edge endpoint is not a vertex");
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw std::invalid_argument("duplicate edge");
        edges_ = std::move(edges);
        adj_.assign(verts_.size(), {});
        for (const auto& [u, v] : edges_) {
            adj_[index_of(u)].push_back(v);
            adj_[index_of(v)].push_back(u);
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    }

    static Graph complete(const std::vector<Vertex>& vertices) {
        std::vector<Edge> es;
        std::vector<Vertex> vs = vertices;
        std::sort(vs.begin(), vs.end());
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                es.emplace_back(vs[i], vs[j]);
        return Graph(vs, es);
    }

    const std::vector<Vertex>& vertices() const { return verts_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t order() const { return verts_.size(); }
    std::size_t size() const { return edges_.size(); }

    bool has_vertex(Vertex v) const { return detail::contains_sorted(verts_, v); }

    int index_of(Vertex v) const {
        auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
        if (it == verts_.end() || *it != v) throw std::out_of_range("unknown vertex");
        return static_cast<int>(it - verts_.begin());
    }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[index_of(v)]; }

    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    bool adjacent(Vertex u, Vertex v) const {
        if (u == v) return false;
        const auto& nu = neighbors(u);
        return std::binary_search(nu.begin(), nu.end(), v);
    }

    bool is_complete() const {
        return size() == order() * (order() - 1) / 2;
    }

    Graph induced(std::vector<Vertex> subset) const {
        std::sort(subset.begin(), subset.end());
        std::vector<Edge> es;
        for (const auto& e : edges_)
            if (detail::contains_sorted(subset, e.first) && detail::contains_sorted(subset, e.second))
                es.push_back(e);
        return Graph(std::move(subset), std::move(es));
    }

    bool operator==(const Graph& o) const { return verts_ == o.verts_ && edges_ == o.edges_; }

private:
    std::vector<Vertex> verts_;            // sorted, unique
    std::vector<Edge> edges_;              // sorted, normalized
    std::vector<std::vector<Vertex>> adj_; // by vertex index, sorted
};

// ---------------------------------------------------------------------------
// LabeledGraph: vertex set is exactly {1..n}

class LabeledGraph {
public:
    LabeledGraph() : n_(1) {}

    LabeledGraph(int n, std::vector<Edge> edges) : n_(n) {
        if (n < 1) throw std::invalid_argument("graph must be nonempty");
        for (auto& e : edges) {
            if (e.first == e.second) throw std::invalid_argument("loop edge");
            if (e.first > e.second) std::swap(e.first, e.second);
            if (e.first < 1 || e.second > n) throw std::invalid_argument("endpoint out of range");
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw std::invalid_argument("duplicate edge");
        edges_ = std::move(edges);
    }

    static LabeledGraph from_graph(const Graph& g) {
        const auto& vs = g.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i)
            if (vs[i] != static_cast<Vertex>(i + 1))
                throw std::invalid_argument("vertex set is not an initial segment {1..n}");
        return LabeledGraph(static_cast<int>(vs.size()), g.edges());
    }

    int order() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }

    Graph to_graph() const {
        std::vector<Vertex> vs(n_);
        for (int i = 0; i < n_; ++i) vs[i] = i + 1;
        return Graph(vs, edges_);
    }

    bool operator==(const LabeledGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_;
    std::vector<Edge> edges_;  // sorted, normalized
};

// ---------------------------------------------------------------------------
// s-lex order on labeled graphs.
//
// Vertex sets are initial segments, so the vertex part reduces to comparing
// orders. Edge sets are compared under the rule that the smallest pair of the
// symmetric difference (pairs ordered lexicographically) belongs to the
// larger graph; equivalently, characteristic vectors over the pair sequence
// (1,2),(1,3),...,(n-1,n) are compared as binary strings with absent < present.

inline std::strong_ordering slex_compare(const LabeledGraph& a, const LabeledGraph& b) {
    if (a.order() != b.order())
        return a.order() < b.order() ? std::strong_ordering::less : std::strong_ordering::greater;
    const auto& ea = a.edges();
    const auto& eb = b.edges();
    std::size_t i = 0, j = 0;
    while (i < ea.size() && j < eb.size()) {
        if (ea[i] == eb[j]) { ++i; ++j; continue; }
        // The smaller pair is missing from the other side and decides.
        return ea[i] < eb[j] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (i < ea.size()) return std::strong_ordering::greater;  // b is a proper subset
    if (j < eb.size()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

inline bool slex_less(const LabeledGraph& a, const LabeledGraph& b) {
    return slex_compare(a, b) == std::strong_ordering::less;
}

// ---------------------------------------------------------------------------
// Edge-list file format

struct ParseError : std::runtime_error {
    int line;
    ParseError(int ln, const std::string& what)
        : std::runtime_error("line " + std::to_string(ln) + ": " + what), line(ln) {}
};

namespace detail {

inline bool parse_two_ints(const std::string& s, long long& a, long long& b) {
    std::size_t pos = s.find(' ');
    if (pos == std::string::npos || pos == 0 || pos + 1 >= s.size()) return false;
    const std::string t1 = s.substr(0, pos), t2 = s.substr(pos + 1);
    auto numeric = [](const std::string& t) {
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    if (!numeric(t1) || !numeric(t2)) return false;
    try {
        a = std::stoll(t1);
        b = std::stoll(t2);
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

}  // namespace detail

// Parses the edge-list format: comment lines start with '#' and may appear
// anywhere; the first non-comment line is "n m"; exactly m non-comment lines
// "u v" follow with 1 <= u,v <= n, u != v, no duplicates.
inline Graph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    std::vector<Edge> edges;
    long long seen = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line[0] == '#') continue;
        if (line.empty()) throw ParseError(lineno, "blank line");
        long long a, b;
        if (!detail::parse_two_ints(line, a, b))
            throw ParseError(lineno, "expected two integers separated by a single space");
        if (n < 0) {
            n = a;
            m = b;
            if (n < 1) throw ParseError(lineno, "graph must be nonempty (n >= 1)");
            if (m < 0) throw ParseError(lineno, "negative edge count");
            continue;
        }
        if (seen == m) throw ParseError(lineno, "more edge lines than declared");
        if (a < 1 || a > n || b < 1 || b > n) throw ParseError(lineno, "endpoint out of range");
        if (a == b) throw ParseError(lineno, "loop edge");
        Edge e = make_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
        if (std::find(edges.begin(), edges.end(), e) != edges.end())
            throw ParseError(lineno, "duplicate edge");
        edges.push_back(e);
        ++seen;
    }
    if (n < 0) throw ParseError(lineno, "missing header");
    if (seen != m) throw ParseError(lineno, "fewer edge lines than declared");
    std::vector<Vertex> vs(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) vs[static_cast<std::size_t>(i)] = static_cast<Vertex>(i + 1);
    return Graph(vs, edges);
}

inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

inline LabeledGraph parse_labeled(const std::string& text) {
    return LabeledGraph::from_graph(parse_graph(text));
}

// Canonical text form: "n m" header, then edges ascending; '\n' endings.
inline std::string serialize_graph(const LabeledGraph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.edges().size()) + "\n";
    for (const auto& [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Elementary algorithms

// Maximal connected vertex sets, ordered by smallest member, members sorted.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<std::vector<Vertex>> comps;
    std::vector<char> seen(g.order(), 0);
    const auto& vs = g.vertices();
    for (std::size_t s = 0; s < vs.size(); ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp;
        std::vector<Vertex> stack = {vs[s]};
        seen[s] = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v)) {
                int wi = g.index_of(w);
                if (!seen[wi]) {
                    seen[wi] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    return connected_components(g).size() == 1;
}

// Standard block decomposition: vertex sets of maximal 2-connected subgraphs,
// bridges as 2-sets, isolated vertices as singletons. Blocks sorted.
inline std::vector<std::vector<Vertex>> biconnected_blocks(const Graph& g) {
    const int n = static_cast<int>(g.order());
    const auto& vs = g.vertices();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::vector<Vertex>> blocks;
    std::vector<Edge> estack;
    int timer = 0;

    struct Frame { int vi; std::size_t nb; int parent; };
    for (int s = 0; s < n; ++s) {
        if (disc[s] != -1) continue;
        if (g.neighbors(vs[s]).empty()) {
            disc[s] = timer++;
            blocks.push_back({vs[s]});
            continue;
        }
        std::vector<Frame> st;
        st.push_back({s, 0, -1});
        disc[s] = low[s] = timer++;
        while (!st.empty()) {
            Frame& f = st.back();
            Vertex v = vs[f.vi];
            const auto& nbs = g.neighbors(v);
            if (f.nb < nbs.size()) {
                Vertex w = nbs[f.nb++];
                int wi = g.index_of(w);
                if (disc[wi] == -1) {
                    estack.push_back({v, w});
                    disc[wi] = low[wi] = timer++;
                    st.push_back({wi, 0, f.vi});
                } else if (wi != f.parent && disc[wi] < disc[f.vi]) {
                    estack.push_back({v, w});
                    low[f.vi] = std::min(low[f.vi], disc[wi]);
                }
            } else {
                st.pop_back();
                if (!st.empty()) {
                    Frame& pf = st.back();
                    low[pf.vi] = std::min(low[pf.vi], low[f.vi]);
                    if (low[f.vi] >= disc[pf.vi]) {
                        // pf.vi is an articulation point wrt this subtree: pop a block
                        std::vector<Vertex> block;
                        Edge top;
                        do {
                            top = estack.back();
                            estack.pop_back();
                            block.push_back(top.first);
                            block.push_back(top.second);
                        } while (!(top == Edge{vs[pf.vi], vs[f.vi]} || top == Edge{vs[f.vi], vs[pf.vi]}));
                        std::sort(block.begin(), block.end());
                        block.erase(std::unique(block.begin(), block.end()), block.end());
                        blocks.push_back(std::move(block));
                    }
                }
            }
        }
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

// Image of g under a bijection on {1..n}; perm[i-1] is the image of vertex i.
inline LabeledGraph apply_permutation(const LabeledGraph& g, const std::vector<int>& perm) {
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation has wrong size");
    std::vector<char> hit(n + 1, 0);
    for (int x : perm) {
        if (x < 1 || x > n || hit[x]) throw std::invalid_argument("map is not a bijection on {1..n}");
        hit[x] = 1;
    }
    std::vector<Edge> es;
    es.reserve(g.edges().size());
    for (const auto& [u, v] : g.edges()) es.push_back(make_edge(perm[u - 1], perm[v - 1]));
    return LabeledGraph(n, std::move(es));
}

}  // namespace clg
