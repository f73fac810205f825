#pragma once

// Chordality recognition via maximum cardinality search, maximal-clique
// enumeration for chordal graphs, and good tree decompositions (rooted clique
// trees with sigma/alpha/gamma maps).

#include <optional>

#include "clg/graph.hpp"

namespace clg {

// ---------------------------------------------------------------------------
// Maximum cardinality search

// MCS visit order: repeatedly pick the unvisited vertex with the most visited
// neighbors; ties go to the smallest identifier. The REVERSE of this order is
// a perfect elimination ordering iff the graph is chordal.
inline std::vector<Vertex> mcs_order(const Graph& g) {
    const int n = static_cast<int>(g.order());
    if (n == 0) throw std::invalid_argument("empty graph");
    const auto& vs = g.vertices();
    std::vector<int> weight(n, 0);
    std::vector<char> done(n, 0);
    std::vector<Vertex> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int i = 0; i < n; ++i) {
            if (done[i]) continue;
            if (best == -1 || weight[i] > weight[best]) best = i;
        }
        done[best] = 1;
        order.push_back(vs[best]);
        for (Vertex w : g.neighbors(vs[best])) {
            int wi = g.index_of(w);
            if (!done[wi]) weight[wi]++;
        }
    }
    return order;
}

struct PeoViolation {
    Vertex v;       // vertex whose later neighborhood is not a clique
    Vertex x, y;    // two later neighbors of v that are not adjacent
};

// Checks the perfect-elimination property: for every vertex, the neighbors
// occurring later in the order form a clique.
inline std::optional<PeoViolation> verify_peo(const Graph& g, const std::vector<Vertex>& order) {
    const int n = static_cast<int>(g.order());
    std::vector<int> pos(n, -1);
    for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[g.index_of(order[i])] = i;
    for (Vertex v : order) {
        std::vector<Vertex> later;
        for (Vertex w : g.neighbors(v))
            if (pos[g.index_of(w)] > pos[g.index_of(v)]) later.push_back(w);
        for (std::size_t i = 0; i < later.size(); ++i)
            for (std::size_t j = i + 1; j < later.size(); ++j)
                if (!g.adjacent(later[i], later[j])) return PeoViolation{v, later[i], later[j]};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Chordality with witnesses

struct ChordalityResult {
    bool chordal = false;
    std::vector<Vertex> peo;   // perfect elimination ordering when chordal
    std::vector<Vertex> hole;  // a chordless cycle of length >= 4 otherwise
};

namespace detail {

// Searches for a chordless cycle through v and two nonadjacent neighbors
// x, y: a shortest x-y path avoiding N[v] \ {x,y} closes such a cycle.
inline std::optional<std::vector<Vertex>> hole_through(const Graph& g, Vertex v, Vertex x, Vertex y) {
    std::vector<char> blocked(g.order(), 0);
    blocked[g.index_of(v)] = 1;
    for (Vertex w : g.neighbors(v)) blocked[g.index_of(w)] = 1;
    blocked[g.index_of(x)] = 0;
    blocked[g.index_of(y)] = 0;
    std::vector<int> prev(g.order(), -1);
    std::vector<Vertex> queue = {x};
    std::vector<char> seen(g.order(), 0);
    seen[g.index_of(x)] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Vertex u = queue[qi];
        if (u == y) break;
        for (Vertex w : g.neighbors(u)) {
            int wi = g.index_of(w);
            if (blocked[wi] || seen[wi]) continue;
            seen[wi] = 1;
            prev[wi] = g.index_of(u);
            queue.push_back(w);
        }
    }
    if (!seen[g.index_of(y)]) return std::nullopt;
    std::vector<Vertex> path;
    for (int cur = g.index_of(y); cur != -1; cur = prev[cur]) path.push_back(g.vertices()[cur]);
    std::reverse(path.begin(), path.end());  // x ... y
    path.insert(path.begin(), v);            // v, x, ..., y — cycle closes at v
    return path;
}

inline std::vector<Vertex> find_hole(const Graph& g, std::optional<PeoViolation> hint) {
    if (hint) {
        if (auto h = hole_through(g, hint->v, hint->x, hint->y)) return *h;
    }
    for (Vertex v : g.vertices()) {
        const auto& nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (g.adjacent(nb[i], nb[j])) continue;
                if (auto h = hole_through(g, v, nb[i], nb[j])) return *h;
            }
    }
    throw std::logic_error("no chordless cycle found in a non-chordal graph");
}

}  // namespace detail

inline ChordalityResult is_chordal(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("empty graph");
    std::vector<Vertex> visit = mcs_order(g);
    std::vector<Vertex> candidate(visit.rbegin(), visit.rend());
    ChordalityResult res;
    if (auto bad = verify_peo(g, candidate)) {
        res.chordal = false;
        res.hole = detail::find_hole(g, bad);
        return res;
    }
    res.chordal = true;
    res.peo = std::move(candidate);
    return res;
}

struct NotChordalError : std::runtime_error {
    std::vector<Vertex> hole;
    explicit NotChordalError(std::vector<Vertex> h)
        : std::runtime_error("graph is not chordal"), hole(std::move(h)) {}
};

// ---------------------------------------------------------------------------
// Maximal cliques of a chordal graph (at most |V| of them)

inline std::vector<std::vector<Vertex>> maximal_cliques_chordal(const Graph& g) {
    ChordalityResult c = is_chordal(g);
    if (!c.chordal) throw NotChordalError(c.hole);
    const int n = static_cast<int>(g.order());
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[g.index_of(c.peo[i])] = i;
    std::vector<std::vector<Vertex>> cands;
    for (Vertex v : c.peo) {
        std::vector<Vertex> cl = {v};
        for (Vertex w : g.neighbors(v))
            if (pos[g.index_of(w)] > pos[g.index_of(v)]) cl.push_back(w);
        std::sort(cl.begin(), cl.end());
        cands.push_back(std::move(cl));
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    std::vector<std::vector<Vertex>> out;
    for (const auto& a : cands) {
        bool maximal = true;
        for (const auto& b : cands)
            if (&a != &b && a != b && detail::is_subset(a, b)) { maximal = false; break; }
        if (maximal) out.push_back(a);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Good tree decompositions

struct CompleteGraphError : std::runtime_error {
    CompleteGraphError() : std::runtime_error("complete graph has a single maximal clique") {}
};
struct DisconnectedError : std::runtime_error {
    DisconnectedError() : std::runtime_error("graph is not connected") {}
};

struct GoodTreeDecomposition {
    struct Node {
        std::vector<Vertex> bag;      // a maximal clique
        int parent = -1;              // -1 for the root
        std::vector<int> children;
        std::vector<Vertex> sigma;    // bag intersection with the parent bag (root: chosen)
        std::vector<Vertex> alpha;    // gamma minus sigma
        std::vector<Vertex> gamma;    // union of bags at or below this node
    };
    std::vector<Node> nodes;
    int root = -1;
    std::vector<Vertex> root_separator_pool;  // the set S the root's sigma was drawn from

    std::vector<int> neighbors_of(int t) const {
        std::vector<int> nb = nodes[t].children;
        if (nodes[t].parent != -1) nb.push_back(nodes[t].parent);
        return nb;
    }
};

// Clique tree of a connected, chordal, non-complete graph, rooted at a leaf
// so the root has exactly one child. Deterministic: cliques are ordered
// lexicographically, the spanning tree is max-weight Kruskal with ties by
// clique-index pair, the root leaf minimizes the MCS-relabeled bag, and the
// root separator takes the two smallest vertex ids of S.
inline GoodTreeDecomposition good_tree_decomposition(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedError();
    ChordalityResult c = is_chordal(g);
    if (!c.chordal) throw NotChordalError(c.hole);
    if (g.is_complete()) throw CompleteGraphError();

    std::vector<std::vector<Vertex>> cliques = maximal_cliques_chordal(g);
    std::sort(cliques.begin(), cliques.end());
    const int k = static_cast<int>(cliques.size());

    // Max-weight spanning tree of the clique intersection graph.
    struct WEdge { int w, i, j; };
    std::vector<WEdge> wedges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            int w = static_cast<int>(detail::set_intersection(cliques[i], cliques[j]).size());
            if (w > 0) wedges.push_back({w, i, j});
        }
    std::sort(wedges.begin(), wedges.end(), [](const WEdge& a, const WEdge& b) {
        if (a.w != b.w) return a.w > b.w;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });
    std::vector<int> dsu(k);
    for (int i = 0; i < k; ++i) dsu[i] = i;
    auto find = [&](int x) {
        while (dsu[x] != x) x = dsu[x] = dsu[dsu[x]];
        return x;
    };
    std::vector<std::vector<int>> tree_adj(k);
    int joined = 0;
    for (const auto& e : wedges) {
        int a = find(e.i), b = find(e.j);
        if (a == b) continue;
        dsu[a] = b;
        tree_adj[e.i].push_back(e.j);
        tree_adj[e.j].push_back(e.i);
        ++joined;
    }
    if (joined != k - 1) throw std::logic_error("clique intersection graph is disconnected");

    // Root: the leaf whose bag, relabeled by MCS positions, is set-lex least.
    std::vector<Vertex> mcs = mcs_order(g);
    std::vector<int> mcs_pos(g.order());
    for (int i = 0; i < static_cast<int>(mcs.size()); ++i) mcs_pos[g.index_of(mcs[i])] = i;
    auto relabel = [&](const std::vector<Vertex>& bag) {
        std::vector<Vertex> out;
        out.reserve(bag.size());
        for (Vertex v : bag) out.push_back(mcs_pos[g.index_of(v)]);
        std::sort(out.begin(), out.end());
        return out;
    };
    int root = -1;
    std::vector<Vertex> root_key;
    for (int i = 0; i < k; ++i) {
        if (tree_adj[i].size() > 1) continue;
        std::vector<Vertex> key = relabel(cliques[i]);
        if (root == -1 || detail::set_lex_less(key, root_key)) {
            root = i;
            root_key = key;
        }
    }

    GoodTreeDecomposition d;
    d.nodes.resize(k);
    for (int i = 0; i < k; ++i) d.nodes[i].bag = cliques[i];
    d.root = root;
    // BFS orientation.
    std::vector<int> stack = {root};
    std::vector<char> seen(k, 0);
    seen[root] = 1;
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int u : tree_adj[t]) {
            if (seen[u]) continue;
            seen[u] = 1;
            d.nodes[u].parent = t;
            d.nodes[t].children.push_back(u);
            stack.push_back(u);
        }
    }
    for (auto& node : d.nodes) std::sort(node.children.begin(), node.children.end());

    // gamma bottom-up (children have larger BFS depth; process by repeated passes
    // over a post-order).
    std::vector<int> order_post;
    {
        std::vector<int> st = {root};
        while (!st.empty()) {
            int t = st.back();
            st.pop_back();
            order_post.push_back(t);
            for (int u : d.nodes[t].children) st.push_back(u);
        }
        std::reverse(order_post.begin(), order_post.end());
    }
    for (int t : order_post) {
        std::vector<Vertex> gm = d.nodes[t].bag;
        for (int u : d.nodes[t].children) gm = detail::set_union(gm, d.nodes[u].gamma);
        d.nodes[t].gamma = std::move(gm);
    }

    // sigma: bag intersection with the parent; the root draws from S.
    for (int t = 0; t < k; ++t) {
        if (t == root) continue;
        d.nodes[t].sigma = detail::set_intersection(d.nodes[t].bag, d.nodes[d.nodes[t].parent].bag);
    }
    {
        int child = d.nodes[root].children.at(0);
        std::vector<Vertex> S = detail::set_difference(d.nodes[root].bag, d.nodes[child].bag);
        d.root_separator_pool = S;
        if (S.size() >= 2)
            d.nodes[root].sigma = {S[0], S[1]};
        else
            d.nodes[root].sigma = S;
    }
    for (int t = 0; t < k; ++t)
        d.nodes[t].alpha = detail::set_difference(d.nodes[t].gamma, d.nodes[t].sigma);
    return d;
}

// Diagnostic text form: one node per line "id parent | bag". Best-effort
// output for inspection, not a frozen format.
inline std::string format_decomposition(const GoodTreeDecomposition& d) {
    std::string out;
    for (std::size_t t = 0; t < d.nodes.size(); ++t) {
        out += std::to_string(t) + " " + std::to_string(d.nodes[t].parent) + " |";
        for (Vertex v : d.nodes[t].bag) out += " " + std::to_string(v);
        out += "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Decomposition validation

struct ValidationReport {
    bool pass = true;        // all applicable checks hold
    bool core_pass = true;   // tree-decomposition and clique-tree conditions hold
    std::string first_violation;

    void fail(bool core, const std::string& msg) {
        if (pass) first_violation = msg;
        pass = false;
        if (core) core_pass = false;
    }
};

// Checks (T.1), (T.2), the good-decomposition conditions (i)/(ii), the
// sigma/alpha/gamma map equations and root rule, and the separator-size
// bounds. The line-graph conditions (iii)/(iv) are layered on top by
// validate_tree_decomposition (linegraph.hpp), which can tell whether g is a
// line graph.
inline ValidationReport validate_tree_decomposition_core(const Graph& g, const GoodTreeDecomposition& d) {
    ValidationReport rep;
    const int k = static_cast<int>(d.nodes.size());
    if (k == 0 || d.root < 0 || d.root >= k) {
        rep.fail(true, "malformed tree");
        return rep;
    }

    // Tree structure sanity.
    int roots = 0;
    for (int t = 0; t < k; ++t) {
        if (d.nodes[t].parent == -1) ++roots;
        for (Vertex v : d.nodes[t].bag)
            if (!g.has_vertex(v)) {
                rep.fail(true, "bag contains a non-vertex");
                return rep;
            }
    }
    if (roots != 1 || d.nodes[d.root].parent != -1) {
        rep.fail(true, "tree must have exactly one root");
        return rep;
    }

    // (T.1) occurrences of each vertex form a connected subtree.
    for (Vertex v : g.vertices()) {
        std::vector<int> occ;
        for (int t = 0; t < k; ++t)
            if (detail::contains_sorted(d.nodes[t].bag, v)) occ.push_back(t);
        if (occ.empty()) {
            rep.fail(true, "(T.1) vertex missing from every bag");
            return rep;
        }
        // Connected iff every occurrence but the subtree-top has its parent occupied.
        int tops = 0;
        for (int t : occ) {
            int p = d.nodes[t].parent;
            bool parent_has = p != -1 && detail::contains_sorted(d.nodes[p].bag, v);
            if (!parent_has) ++tops;
        }
        if (tops != 1) {
            rep.fail(true, "(T.1) bag occurrences not connected in the tree");
            return rep;
        }
    }

    // (T.2) every edge inside some bag.
    for (const auto& [u, v] : g.edges()) {
        bool covered = false;
        for (int t = 0; t < k && !covered; ++t)
            covered = detail::contains_sorted(d.nodes[t].bag, u) && detail::contains_sorted(d.nodes[t].bag, v);
        if (!covered) {
            rep.fail(true, "(T.2) edge not covered by any bag");
            return rep;
        }
    }

    // (i) bags are maximal cliques.
    for (int t = 0; t < k; ++t) {
        const auto& bag = d.nodes[t].bag;
        for (std::size_t i = 0; i < bag.size(); ++i)
            for (std::size_t j = i + 1; j < bag.size(); ++j)
                if (!g.adjacent(bag[i], bag[j])) {
                    rep.fail(true, "(i) bag is not a clique");
                    return rep;
                }
        for (Vertex v : g.vertices()) {
            if (detail::contains_sorted(bag, v)) continue;
            bool dominates = true;
            for (Vertex b : bag)
                if (!g.adjacent(v, b)) { dominates = false; break; }
            if (dominates) {
                rep.fail(true, "(i) bag is not a maximal clique");
                return rep;
            }
        }
    }

    // (ii) bags are exactly MCL(g), each once. Passing T.1+T.2+(i) makes g
    // chordal, so the PEO-based enumeration below is safe.
    {
        std::vector<std::vector<Vertex>> bags;
        for (int t = 0; t < k; ++t) bags.push_back(d.nodes[t].bag);
        std::sort(bags.begin(), bags.end());
        if (std::adjacent_find(bags.begin(), bags.end()) != bags.end()) {
            rep.fail(true, "(ii) repeated bag");
            return rep;
        }
        std::vector<std::vector<Vertex>> mcl = maximal_cliques_chordal(g);
        std::sort(mcl.begin(), mcl.end());
        if (bags != mcl) {
            rep.fail(true, "(ii) bags differ from the maximal clique set");
            return rep;
        }
    }

    // Root rule and map equations.
    if (k >= 2) {
        if (d.nodes[d.root].children.size() != 1) {
            rep.fail(true, "root must have exactly one child");
            return rep;
        }
        int child = d.nodes[d.root].children[0];
        std::vector<Vertex> S = detail::set_difference(d.nodes[d.root].bag, d.nodes[child].bag);
        std::size_t want = std::min<std::size_t>(2, S.size());
        if (d.nodes[d.root].sigma.size() != want || !detail::is_subset(d.nodes[d.root].sigma, S)) {
            rep.fail(true, "root separator violates the S rule");
            return rep;
        }
    } else {
        rep.fail(true, "root must have exactly one child");
        return rep;
    }
    for (int t = 0; t < k; ++t) {
        const auto& node = d.nodes[t];
        std::vector<Vertex> gm = node.bag;
        for (int u : node.children) gm = detail::set_union(gm, d.nodes[u].gamma);
        if (gm != node.gamma) {
            rep.fail(true, "gamma map does not equal the union of descendant bags");
            return rep;
        }
        if (t != d.root) {
            auto want = detail::set_intersection(node.bag, d.nodes[node.parent].bag);
            if (node.sigma != want) {
                rep.fail(true, "sigma map does not equal the parent-bag intersection");
                return rep;
            }
        }
        if (node.alpha != detail::set_difference(node.gamma, node.sigma)) {
            rep.fail(true, "alpha map does not equal gamma minus sigma");
            return rep;
        }
    }

    // Separator bounds: guaranteed on chordal line graphs, reported as
    // class-specific (non-core) violations elsewhere.
    for (int t = 0; t < k; ++t) {
        if (d.nodes[t].sigma.empty() || d.nodes[t].sigma.size() > 2) {
            rep.fail(false, "separator size out of the [1,2] range");
            return rep;
        }
        if (detail::set_difference(d.nodes[t].bag, d.nodes[t].sigma).empty()) {
            rep.fail(false, "bag minus sigma is empty");
            return rep;
        }
    }
    return rep;
}

}  // namespace clg
