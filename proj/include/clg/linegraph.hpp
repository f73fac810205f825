#pragma once

// Line graphs: construction, recognition, and root-graph reconstruction via
// Krausz edge-clique covers, plus the chordal-line-graph characterization
// (all cycles of the root are triangles).

#include <cstdint>
#include <map>
#include <optional>

#include "clg/chordal.hpp"
#include "clg/graph.hpp"

namespace clg {

struct EdgelessInputError : std::runtime_error {
    EdgelessInputError() : std::runtime_error("line graph of an edgeless graph is empty") {}
};

struct NotLineGraphError : std::runtime_error {
    std::vector<Vertex> claw;  // {center, leaf, leaf, leaf} when an induced claw witnesses it
    explicit NotLineGraphError(std::vector<Vertex> c)
        : std::runtime_error(c.empty() ? "no Krausz edge-clique cover exists"
                                       : "graph contains an induced claw"),
          claw(std::move(c)) {}
};

// ---------------------------------------------------------------------------
// Construction

struct LineGraphResult {
    Graph graph;                    // vertices 1..m
    std::vector<Edge> source_edge;  // source_edge[i] is the g-edge behind vertex i+1

    Edge source_of(Vertex v) const { return source_edge.at(static_cast<std::size_t>(v) - 1); }
};

inline LineGraphResult line_graph(const Graph& g) {
    if (g.size() == 0) throw EdgelessInputError();
    const int m = static_cast<int>(g.size());
    std::vector<Vertex> vs(m);
    for (int i = 0; i < m; ++i) vs[i] = i + 1;
    std::vector<Edge> les;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const Edge& a = g.edges()[i];
            const Edge& b = g.edges()[j];
            if (a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second)
                les.emplace_back(i + 1, j + 1);
        }
    return LineGraphResult{Graph(vs, les), g.edges()};
}

// X(v): the set of edges incident to v.
inline std::vector<Edge> vertex_star(const Graph& g, Vertex v) {
    std::vector<Edge> out;
    for (Vertex w : g.neighbors(v)) out.push_back(make_edge(v, w));
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Krausz covers

namespace detail {

struct Bitset {
    std::vector<std::uint64_t> w;
    explicit Bitset(int n = 0) : w((n + 63) / 64, 0) {}
    void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    bool subset_of(const Bitset& o) const {
        for (std::size_t k = 0; k < w.size(); ++k)
            if (w[k] & ~o.w[k]) return false;
        return true;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t k = 0; k < w.size(); ++k) w[k] |= o.w[k];
        return *this;
    }
    bool operator==(const Bitset& o) const { return w == o.w; }
};

// Searches one Krausz partition of a connected, non-complete graph: a family
// of cliques (cells) that partitions the edge set with every vertex in at
// most two cells. Triangles with an odd-adjacent outside vertex must lie in a
// single cell of any partition, so their edges are pre-merged; the remaining
// freedom is resolved by backtracking.
class KrauszSolver {
public:
    explicit KrauszSolver(const Graph& g) : g_(g), n_(static_cast<int>(g.order())) {
        rows_.assign(n_, Bitset(n_));
        for (const auto& [u, v] : g.edges()) {
            int ui = g.index_of(u), vi = g.index_of(v);
            rows_[ui].set(vi);
            rows_[vi].set(ui);
            edge_id_[{ui, vi}] = static_cast<int>(edges_.size());
            edges_.emplace_back(ui, vi);
        }
        m_ = static_cast<int>(edges_.size());
        dsu_.resize(m_);
        for (int i = 0; i < m_; ++i) dsu_[i] = i;
    }

    // Returns the cells as vertex-index bitsets, or nullopt.
    std::optional<std::vector<std::vector<int>>> solve() {
        if (!premerge()) return std::nullopt;
        group_of_.assign(m_, -1);
        groups_.clear();
        std::map<int, int> root_to_group;
        for (int e = 0; e < m_; ++e) {
            int r = find(e);
            auto it = root_to_group.find(r);
            if (it == root_to_group.end()) {
                it = root_to_group.emplace(r, static_cast<int>(groups_.size())).first;
                groups_.push_back({});
            }
            group_of_[e] = it->second;
            groups_[it->second].edges.push_back(e);
        }
        for (auto& gr : groups_) {
            gr.span = Bitset(n_);
            for (int e : gr.edges) {
                gr.span.set(edges_[e].first);
                gr.span.set(edges_[e].second);
            }
            gr.cell = -1;
        }
        cell_count_.assign(n_, 0);
        cells_.clear();
        if (!assign_next()) return std::nullopt;
        std::vector<std::vector<int>> out;
        for (const auto& c : cells_) {
            std::vector<int> members;
            for (int i = 0; i < n_; ++i)
                if (c.test(i)) members.push_back(i);
            out.push_back(std::move(members));
        }
        return out;
    }

private:
    struct Group {
        std::vector<int> edges;
        Bitset span{0};
        int cell;
    };

    int find(int x) {
        while (dsu_[x] != x) x = dsu_[x] = dsu_[dsu_[x]];
        return x;
    }
    void unite(int a, int b) { dsu_[find(a)] = find(b); }

    int eid(int a, int b) const {
        auto it = edge_id_.find(a < b ? std::pair{a, b} : std::pair{b, a});
        return it == edge_id_.end() ? -1 : it->second;
    }

    bool clique(const std::vector<int>& vs) const {
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (!rows_[vs[i]].test(vs[j])) return false;
        return true;
    }

    bool premerge() {
        // Odd triangles: some vertex outside sees an odd number of the three.
        for (int e = 0; e < m_; ++e) {
            auto [a, b] = edges_[e];
            for (int c = 0; c < n_; ++c) {
                if (c == a || c == b || !rows_[a].test(c) || !rows_[b].test(c)) continue;
                if (c < b && c < a) continue;  // visit each triangle once via its smallest edge
                bool odd = false;
                for (int w = 0; w < n_ && !odd; ++w) {
                    if (w == a || w == b || w == c) continue;
                    int deg = int(rows_[w].test(a)) + int(rows_[w].test(b)) + int(rows_[w].test(c));
                    odd = (deg == 1 || deg == 3);
                }
                if (odd) {
                    unite(eid(a, b), eid(a, c));
                    unite(eid(a, b), eid(b, c));
                }
            }
        }
        // Closure: a group's span must be a clique and own all internal edges.
        bool changed = true;
        while (changed) {
            changed = false;
            std::map<int, std::vector<int>> members;
            for (int e = 0; e < m_; ++e) members[find(e)].push_back(e);
            for (const auto& [root, es] : members) {
                std::vector<int> span;
                for (int e : es) {
                    span.push_back(edges_[e].first);
                    span.push_back(edges_[e].second);
                }
                std::sort(span.begin(), span.end());
                span.erase(std::unique(span.begin(), span.end()), span.end());
                if (!clique(span)) return false;  // forced cell is not a clique
                for (std::size_t i = 0; i < span.size(); ++i)
                    for (std::size_t j = i + 1; j < span.size(); ++j) {
                        int e = eid(span[i], span[j]);
                        if (find(e) != root) {
                            unite(e, root);
                            changed = true;
                        }
                    }
            }
        }
        return true;
    }

    bool assign_next() {
        int gi = -1;
        for (int i = 0; i < static_cast<int>(groups_.size()); ++i)
            if (groups_[i].cell == -1) { gi = i; break; }
        if (gi == -1) return true;
        Group& gr = groups_[gi];

        std::vector<int> span;
        for (int i = 0; i < n_; ++i)
            if (gr.span.test(i)) span.push_back(i);
        for (int v : span)
            if (cell_count_[v] >= 2) return false;

        // Extension candidates: vertices adjacent to the whole span whose
        // connecting edges are unassigned and who still have a free slot.
        std::vector<int> w;
        for (int v = 0; v < n_; ++v) {
            if (gr.span.test(v) || cell_count_[v] >= 2) continue;
            bool ok = true;
            for (int s : span) {
                if (!rows_[v].test(s)) { ok = false; break; }
                int e = eid(v, s);
                if (groups_[group_of_[e]].cell != -1) { ok = false; break; }
            }
            if (ok) w.push_back(v);
        }
        if (w.size() > 26) throw std::logic_error("krausz candidate neighborhood too large");

        // Enumerate subsets T of w, largest cells first. Two nonadjacent
        // candidates cannot both stay outside the cell, which prunes most
        // masks early.
        std::vector<std::uint32_t> masks;
        for (std::uint32_t mask = 0; mask < (1u << w.size()); ++mask) masks.push_back(mask);
        std::sort(masks.begin(), masks.end(), [&](std::uint32_t x, std::uint32_t y) {
            int px = __builtin_popcount(x), py = __builtin_popcount(y);
            if (px != py) return px > py;
            return x < y;
        });
        for (std::uint32_t mask : masks) {
            std::vector<int> inside = span, outside;
            for (std::size_t k = 0; k < w.size(); ++k)
                (mask >> k & 1 ? inside : outside).push_back(w[k]);
            bool ok = true;
            for (std::size_t i = 0; i < outside.size() && ok; ++i)
                for (std::size_t j = i + 1; j < outside.size() && ok; ++j)
                    if (!rows_[outside[i]].test(outside[j])) ok = false;
            if (!ok) continue;
            std::vector<int> added;
            for (std::size_t k = 0; k < w.size(); ++k)
                if (mask >> k & 1) added.push_back(w[k]);
            for (std::size_t i = 0; i < added.size() && ok; ++i)
                for (std::size_t j = i + 1; j < added.size() && ok; ++j)
                    if (!rows_[added[i]].test(added[j])) ok = false;
            if (!ok) continue;
            if (try_cell(inside)) return true;
        }
        return false;
    }

    bool try_cell(const std::vector<int>& members) {
        // Every edge inside the cell joins it; their groups must fit entirely.
        Bitset cell(n_);
        for (int v : members) cell.set(v);
        std::vector<int> touched;
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                int e = eid(members[i], members[j]);
                int gi = group_of_[e];
                if (groups_[gi].cell != -1) return false;
                if (!groups_[gi].span.subset_of(cell)) return false;
                if (std::find(touched.begin(), touched.end(), gi) == touched.end()) touched.push_back(gi);
            }
        for (int v : members)
            if (cell_count_[v] >= 2) return false;

        int cell_id = static_cast<int>(cells_.size());
        cells_.push_back(cell);
        for (int gi : touched) groups_[gi].cell = cell_id;
        for (int v : members) cell_count_[v]++;
        if (assign_next()) return true;
        for (int v : members) cell_count_[v]--;
        for (int gi : touched) groups_[gi].cell = -1;
        cells_.pop_back();
        return false;
    }

    const Graph& g_;
    int n_, m_ = 0;
    std::vector<Bitset> rows_;
    std::vector<std::pair<int, int>> edges_;
    std::map<std::pair<int, int>, int> edge_id_;
    std::vector<int> dsu_;
    std::vector<int> group_of_;
    std::vector<Group> groups_;
    std::vector<int> cell_count_;
    std::vector<Bitset> cells_;
};

// Finds an induced claw for failure witnesses.
inline std::optional<std::vector<Vertex>> find_claw(const Graph& g) {
    for (Vertex v : g.vertices()) {
        const auto& nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (g.adjacent(nb[i], nb[j])) continue;
                for (std::size_t k = j + 1; k < nb.size(); ++k) {
                    if (g.adjacent(nb[i], nb[k]) || g.adjacent(nb[j], nb[k])) continue;
                    return std::vector<Vertex>{v, nb[i], nb[j], nb[k]};
                }
            }
    }
    return std::nullopt;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Recognition and root reconstruction

struct RootGraphResult {
    Graph root;
    std::vector<std::pair<Edge, Vertex>> edge_to_vertex;  // root edge -> input vertex

    Vertex vertex_of(const Edge& e) const {
        for (const auto& [re, v] : edge_to_vertex)
            if (re == e) return v;
        throw std::out_of_range("no such root edge");
    }
};

// Root of a connected line graph. The root is never a triangle: complete
// inputs K_n reconstruct to stars K_{1,n}, which resolves the triangle/claw
// collision to the claw.
inline RootGraphResult root_graph(const Graph& h) {
    if (h.order() == 0) throw std::invalid_argument("empty graph");
    if (!is_connected(h)) throw DisconnectedError();

    std::vector<std::vector<int>> cells;  // vertex indices per cell
    const int n = static_cast<int>(h.order());
    if (h.is_complete()) {
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        cells.push_back(all);
    } else {
        detail::KrauszSolver solver(h);
        auto got = solver.solve();
        if (!got) {
            auto claw = detail::find_claw(h);
            throw NotLineGraphError(claw ? *claw : std::vector<Vertex>{});
        }
        cells = std::move(*got);
    }

    const int k = static_cast<int>(cells.size());
    std::vector<std::vector<int>> cells_of(n);
    for (int c = 0; c < k; ++c)
        for (int vi : cells[c]) cells_of[vi].push_back(c);

    int next_id = k + 1;  // cells take 1..k, pendants follow
    std::vector<Vertex> root_vs;
    for (int c = 1; c <= k; ++c) root_vs.push_back(c);
    std::vector<Edge> root_es;
    std::vector<std::pair<Edge, Vertex>> corr;
    for (int vi = 0; vi < n; ++vi) {
        Vertex hv = h.vertices()[vi];
        Edge re;
        if (cells_of[vi].size() == 2) {
            re = make_edge(cells_of[vi][0] + 1, cells_of[vi][1] + 1);
        } else if (cells_of[vi].size() == 1) {
            root_vs.push_back(next_id);
            re = make_edge(cells_of[vi][0] + 1, next_id);
            ++next_id;
        } else {
            throw std::logic_error("cover left a vertex in no cell");
        }
        root_es.push_back(re);
        corr.emplace_back(re, hv);
    }
    std::sort(corr.begin(), corr.end());
    return RootGraphResult{Graph(root_vs, root_es), std::move(corr)};
}

inline bool is_line_graph(const Graph& h) {
    if (h.order() == 0) throw std::invalid_argument("empty graph");
    for (const auto& comp : connected_components(h)) {
        Graph sub = h.induced(comp);
        if (sub.is_complete()) continue;
        detail::KrauszSolver solver(sub);
        if (!solver.solve()) return false;
    }
    return true;
}

// True iff every cycle has length 3; equivalently every biconnected block
// spans at most 3 vertices (a 2-connected graph on >= 4 vertices always
// carries a cycle of length >= 4).
inline bool all_cycles_triangles(const Graph& g) {
    for (const auto& block : biconnected_blocks(g))
        if (block.size() > 3) return false;
    return true;
}

struct ChordalLineResult {
    enum class Status { Yes, NotChordal, NotLineGraph };
    Status status = Status::NotLineGraph;
    Graph root;                // valid when status == Yes; disjoint union over components
    std::vector<Vertex> hole;  // when NotChordal
    std::vector<Vertex> claw;  // when NotLineGraph and a claw witnesses it

    bool yes() const { return status == Status::Yes; }
};

// Membership in the class of chordal line graphs; on success the root has
// all cycles triangular.
inline ChordalLineResult is_chordal_line(const Graph& h) {
    if (h.order() == 0) throw std::invalid_argument("empty graph");
    ChordalLineResult res;
    ChordalityResult c = is_chordal(h);
    if (!c.chordal) {
        res.status = ChordalLineResult::Status::NotChordal;
        res.hole = std::move(c.hole);
        return res;
    }
    std::vector<Vertex> root_vs;
    std::vector<Edge> root_es;
    int offset = 0;
    for (const auto& comp : connected_components(h)) {
        Graph sub = h.induced(comp);
        RootGraphResult r;
        try {
            r = root_graph(sub);
        } catch (const NotLineGraphError& e) {
            res.status = ChordalLineResult::Status::NotLineGraph;
            res.claw = e.claw;
            return res;
        }
        for (Vertex v : r.root.vertices()) root_vs.push_back(v + offset);
        for (const auto& [u, v] : r.root.edges()) root_es.emplace_back(u + offset, v + offset);
        offset += static_cast<int>(r.root.order());
    }
    res.status = ChordalLineResult::Status::Yes;
    res.root = Graph(root_vs, root_es);
    return res;
}

// ---------------------------------------------------------------------------
// Full decomposition validation (adds the line-graph conditions (iii)/(iv)
// on top of validate_tree_decomposition_core)

inline ValidationReport validate_tree_decomposition(const Graph& g, const GoodTreeDecomposition& d) {
    ValidationReport rep = validate_tree_decomposition_core(g, d);
    if (!rep.pass) return rep;
    if (!is_line_graph(g)) return rep;
    const int k = static_cast<int>(d.nodes.size());
    for (int t = 0; t < k; ++t) {
        auto nb = d.neighbors_of(t);
        bool small_bag = d.nodes[t].bag.size() == 3 && nb.size() <= 3;
        bool disjoint = true;
        for (std::size_t i = 0; i < nb.size() && disjoint; ++i)
            for (std::size_t j = i + 1; j < nb.size() && disjoint; ++j)
                if (!detail::set_intersection(d.nodes[nb[i]].bag, d.nodes[nb[j]].bag).empty())
                    disjoint = false;
        if (!small_bag && !disjoint) {
            rep.fail(false, "(iii) neighbour-bag dichotomy violated");
            return rep;
        }
    }
    for (int t = 0; t < k; ++t)
        for (int u = t + 1; u < k; ++u)
            if (detail::set_intersection(d.nodes[t].bag, d.nodes[u].bag).size() > 2) {
                rep.fail(false, "(iv) two bags intersect in more than 2 vertices");
                return rep;
            }
    return rep;
}

}  // namespace clg
