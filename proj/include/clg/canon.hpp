#pragma once

// Canonical forms for chordal line graphs. A connected, non-complete member
// is canonised by a recursion over triple-rooted cone decompositions: a node
// is a separator pair sigma = {u1,u2} (possibly equal) together with the
// component alpha of G minus sigma holding u3 and the unique maximal clique
// beta containing the triple. Children are the components of
// gamma \ beta with their neighborhoods as separators; leaves are cliques.
// Labeled forms are assembled bottom-up (clique part first, then child copies
// ordered by s-lex), and the final form is the s-lex minimum over all
// structurally valid root candidates, which makes the output isomorphism
// invariant. Complete graphs map to K_n directly.

#include <functional>
#include <map>
#include <optional>

#include "clg/chordal.hpp"
#include "clg/graph.hpp"
#include "clg/linegraph.hpp"

namespace clg {

struct TripleNode {
    Vertex u1, u2, u3;
};

struct ConeData {
    std::vector<Vertex> sigma;  // {u1,u2}
    std::vector<Vertex> alpha;  // component of G minus sigma containing u3
    std::vector<Vertex> beta;   // the unique maximal clique containing the triple
    std::vector<Vertex> gamma;  // sigma united with alpha
};

struct NotInUError : std::runtime_error {
    explicit NotInUError(const std::string& why) : std::runtime_error("triple not in U: " + why) {}
};

struct StructuralViolationError : std::runtime_error {
    explicit StructuralViolationError(const std::string& why)
        : std::runtime_error("structural validation failed: " + why) {}
};

struct NotChordalLineCanonError : std::runtime_error {
    ChordalLineResult detail;
    explicit NotChordalLineCanonError(ChordalLineResult d, const std::string& what)
        : std::runtime_error(what), detail(std::move(d)) {}
};

struct CanonicalForm {
    LabeledGraph graph;
    std::vector<std::pair<Vertex, int>> witness;  // input vertex -> position, vertex-sorted

    int position_of(Vertex v) const {
        auto it = std::lower_bound(witness.begin(), witness.end(), std::pair{v, 0},
                                   [](const auto& a, const auto& b) { return a.first < b.first; });
        if (it == witness.end() || it->first != v) throw std::out_of_range("vertex not in witness");
        return it->second;
    }
};

// Per-node trace for invariant checking: the four sets, the child interiors,
// and which assembly case fired (0 = leaf, 1, 2).
struct CanonTraceNode {
    std::vector<Vertex> sigma, alpha, beta, gamma;
    std::vector<std::vector<Vertex>> child_alphas;
    int assembly_case = 0;
};

struct CanonOptions {
    bool paranoid = false;
    std::vector<CanonTraceNode>* trace = nullptr;
};

// True iff f maps g edge-perfectly onto h.
inline bool verify_canonical_witness(const Graph& g, const CanonicalForm& form) {
    const int n = static_cast<int>(g.order());
    if (form.graph.order() != n) return false;
    if (static_cast<int>(form.witness.size()) != n) return false;
    std::vector<char> hit(n + 1, 0);
    for (const auto& [v, p] : form.witness) {
        if (!g.has_vertex(v) || p < 1 || p > n || hit[p]) return false;
        hit[p] = 1;
    }
    if (g.size() != form.graph.edges().size()) return false;
    const auto& he = form.graph.edges();
    for (const auto& [u, v] : g.edges()) {
        Edge e = make_edge(form.position_of(u), form.position_of(v));
        if (!std::binary_search(he.begin(), he.end(), e)) return false;
    }
    return true;
}

namespace detail {

struct PointedResult {
    LabeledGraph graph;
    std::vector<std::pair<Vertex, int>> witness;
};

class CanonContext {
public:
    CanonContext(const Graph& g, std::vector<std::vector<Vertex>> cliques,
                 std::vector<CanonTraceNode>* trace)
        : g_(g), cliques_(std::move(cliques)), trace_(trace) {
        for (int c = 0; c < static_cast<int>(cliques_.size()); ++c)
            for (Vertex v : cliques_[c]) cliques_of_[v].push_back(c);
    }

    const std::vector<std::vector<Vertex>>& cliques() const { return cliques_; }

    // Ids of maximal cliques containing every vertex of s.
    std::vector<int> cliques_containing(const std::vector<Vertex>& s) const {
        if (s.empty()) return {};
        auto it = cliques_of_.find(s[0]);
        if (it == cliques_of_.end()) return {};
        std::vector<int> cur = it->second;
        for (std::size_t i = 1; i < s.size() && !cur.empty(); ++i) {
            auto jt = cliques_of_.find(s[i]);
            if (jt == cliques_of_.end()) return {};
            std::vector<int> nxt;
            std::set_intersection(cur.begin(), cur.end(), jt->second.begin(), jt->second.end(),
                                  std::back_inserter(nxt));
            cur = std::move(nxt);
        }
        return cur;
    }

    // Component of `from` in G minus `removed`.
    std::vector<Vertex> component_without(const std::vector<Vertex>& removed, Vertex from) const {
        std::vector<char> seen(g_.order(), 0);
        for (Vertex r : removed) seen[g_.index_of(r)] = 1;
        std::vector<Vertex> out, stack = {from};
        seen[g_.index_of(from)] = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            out.push_back(v);
            for (Vertex w : g_.neighbors(v)) {
                int wi = g_.index_of(w);
                if (!seen[wi]) {
                    seen[wi] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    struct ChildData {
        std::vector<Vertex> sigma;  // sorted, size 1 or 2
        std::vector<Vertex> alpha;  // sorted component
        std::vector<int> bags;      // candidate bag ids, ascending
        Vertex witness_u3;          // smallest vertex certifying membership in U
    };

    // Children of a node: one per component of gamma minus beta. Throws
    // StructuralViolationError when the configuration cannot come from a good
    // tree decomposition.
    std::vector<ChildData> derive_children(const std::vector<Vertex>& beta,
                                           const std::vector<Vertex>& gamma) const {
        std::vector<Vertex> rest = set_difference(gamma, beta);
        std::vector<ChildData> out;
        std::vector<char> claimed(g_.order(), 0);
        for (Vertex v : rest) {
            if (claimed[g_.index_of(v)]) continue;
            // component of v in G[rest]
            std::vector<Vertex> comp, stack = {v};
            claimed[g_.index_of(v)] = 1;
            while (!stack.empty()) {
                Vertex x = stack.back();
                stack.pop_back();
                comp.push_back(x);
                for (Vertex w : g_.neighbors(x)) {
                    if (!contains_sorted(rest, w)) continue;
                    int wi = g_.index_of(w);
                    if (!claimed[wi]) {
                        claimed[wi] = 1;
                        stack.push_back(w);
                    }
                }
            }
            std::sort(comp.begin(), comp.end());

            std::vector<Vertex> nb;
            for (Vertex x : comp)
                for (Vertex w : g_.neighbors(x))
                    if (!contains_sorted(comp, w)) nb.push_back(w);
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());

            if (nb.empty() || nb.size() > 2)
                throw StructuralViolationError("child separator size outside [1,2]");
            if (!is_subset(nb, beta))
                throw StructuralViolationError("child separator escapes the bag");

            ChildData cd;
            cd.sigma = nb;
            cd.alpha = comp;
            cd.witness_u3 = -1;
            for (Vertex a : comp) {
                bool adj = true;
                for (Vertex s : nb)
                    if (!g_.adjacent(a, s)) { adj = false; break; }
                if (!adj) continue;
                std::vector<Vertex> key = nb;
                key.push_back(a);
                std::sort(key.begin(), key.end());
                auto cs = cliques_containing(key);
                if (cs.size() != 1) continue;
                if (cd.witness_u3 == -1) cd.witness_u3 = a;
                if (!std::binary_search(cd.bags.begin(), cd.bags.end(), cs[0])) {
                    cd.bags.insert(std::lower_bound(cd.bags.begin(), cd.bags.end(), cs[0]), cs[0]);
                }
            }
            if (cd.bags.empty())
                throw StructuralViolationError("child cone has no certifying triple");
            // The separator must cut the component off exactly.
            std::vector<Vertex> cut = component_without(nb, comp[0]);
            if (cut != comp)
                throw StructuralViolationError("child separator does not isolate the cone");
            out.push_back(std::move(cd));
        }
        return out;
    }

    // Pointed canonical form of the cone (sigma-ordered s1,s2 | alpha | bag).
    // s1 == s2 encodes a singleton separator.
    PointedResult pointed(Vertex s1, Vertex s2, const std::vector<Vertex>& alpha, int bag_id) {
        MemoKey key{s1, s2, alpha, bag_id};
        auto hit = memo_.find(key);
        if (hit != memo_.end()) return hit->second;

        std::vector<Vertex> sigma = s1 == s2 ? std::vector<Vertex>{s1} : std::vector<Vertex>{s1, s2};
        std::sort(sigma.begin(), sigma.end());
        const std::vector<Vertex>& beta = cliques_[bag_id];
        std::vector<Vertex> gamma = set_union(sigma, alpha);
        if (!is_subset(sigma, beta)) throw StructuralViolationError("separator escapes its own bag");
        if (!is_subset(beta, gamma)) throw StructuralViolationError("bag escapes the cone");

        PointedResult res;
        std::vector<ChildData> children;
        int assembly_case = 0;
        if (gamma == beta) {
            res = leaf_form(s1, s2, beta);
        } else {
            children = derive_children(beta, gamma);
            bool disjoint = true;
            for (std::size_t i = 0; i < children.size() && disjoint; ++i) {
                if (!set_intersection(children[i].sigma, sigma).empty()) disjoint = false;
                for (std::size_t j = i + 1; j < children.size() && disjoint; ++j)
                    if (!set_intersection(children[i].sigma, children[j].sigma).empty()) disjoint = false;
            }
            if (disjoint) {
                assembly_case = 1;
                res = assemble_disjoint(s1, s2, beta, gamma, children);
            } else {
                assembly_case = 2;
                if (beta.size() != 3 || children.size() > 2)
                    throw StructuralViolationError("overlapping separators demand a 3-bag with at most two children");
                res = assemble_overlapping(s1, s2, beta, gamma, children);
            }
        }

        if (trace_) {
            CanonTraceNode node;
            node.sigma = sigma;
            node.alpha = alpha;
            node.beta = beta;
            node.gamma = gamma;
            for (const auto& c : children) node.child_alphas.push_back(c.alpha);
            node.assembly_case = assembly_case;
            trace_->push_back(std::move(node));
        }
        memo_.emplace(std::move(key), res);
        return res;
    }

private:
    struct MemoKey {
        Vertex s1, s2;
        std::vector<Vertex> alpha;
        int bag;
        bool operator<(const MemoKey& o) const {
            if (s1 != o.s1) return s1 < o.s1;
            if (s2 != o.s2) return s2 < o.s2;
            if (bag != o.bag) return bag < o.bag;
            return alpha < o.alpha;
        }
    };

    PointedResult leaf_form(Vertex s1, Vertex s2, const std::vector<Vertex>& beta) const {
        const int n = static_cast<int>(beta.size());
        PointedResult res;
        std::vector<Edge> es;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) es.emplace_back(i, j);
        res.graph = LabeledGraph(n, es);
        int next = 1;
        res.witness.emplace_back(s1, next++);
        if (s2 != s1) res.witness.emplace_back(s2, next++);
        for (Vertex v : beta)
            if (v != s1 && v != s2) res.witness.emplace_back(v, next++);
        std::sort(res.witness.begin(), res.witness.end());
        return res;
    }

    struct ChildForm {
        LabeledGraph graph;
        std::vector<std::pair<Vertex, int>> witness;
        std::vector<Vertex> sigma_ordered;  // sigma in the order mapped to 1(,2)
        int q;                              // separator size
    };

    // Best (s-lex least) recursive form of a child over its separator
    // orderings and certifying bags. Throws if every combination violates.
    ChildForm best_child_form(const ChildData& c) {
        std::vector<std::pair<Vertex, Vertex>> orderings;
        if (c.sigma.size() == 1)
            orderings = {{c.sigma[0], c.sigma[0]}};
        else
            orderings = {{c.sigma[0], c.sigma[1]}, {c.sigma[1], c.sigma[0]}};
        std::optional<ChildForm> best;
        for (const auto& [a, b] : orderings)
            for (int bag : c.bags) {
                PointedResult r;
                try {
                    r = pointed(a, b, c.alpha, bag);
                } catch (const StructuralViolationError&) {
                    continue;
                }
                if (!best || slex_less(r.graph, best->graph)) {
                    ChildForm f;
                    f.graph = r.graph;
                    f.witness = r.witness;
                    f.sigma_ordered = a == b ? std::vector<Vertex>{a} : std::vector<Vertex>{a, b};
                    f.q = static_cast<int>(c.sigma.size());
                    best = std::move(f);
                }
            }
        if (!best) throw StructuralViolationError("no child combination assembles");
        return *best;
    }

    // Case 1: separators pairwise disjoint. K_q carries the bag vertices in
    // no child bag (the pointed pair first); copies of the child forms follow
    // on consecutive intervals, grouped by (form, separator size) ascending;
    // the bag positions are completed into a clique.
    PointedResult assemble_disjoint(Vertex s1, Vertex s2, const std::vector<Vertex>& beta,
                                    const std::vector<Vertex>& gamma,
                                    const std::vector<ChildData>& children) {
        struct Member {
            ChildForm form;
            const ChildData* data;
        };
        std::vector<Member> members;
        for (const auto& c : children) members.push_back({best_child_form(c), &c});
        std::sort(members.begin(), members.end(), [](const Member& x, const Member& y) {
            auto c = slex_compare(x.form.graph, y.form.graph);
            if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
            if (x.form.q != y.form.q) return x.form.q < y.form.q;
            return x.data->alpha < y.data->alpha;
        });

        std::vector<Vertex> bag_rest = beta;
        for (const auto& m : members) bag_rest = set_difference(bag_rest, m.data->sigma);
        const int q = static_cast<int>(bag_rest.size());

        PointedResult res;
        int next = 1;
        res.witness.emplace_back(s1, next++);
        if (s2 != s1) res.witness.emplace_back(s2, next++);
        for (Vertex v : bag_rest)
            if (v != s1 && v != s2) res.witness.emplace_back(v, next++);
        if (next != q + 1) throw std::logic_error("pointed pair escaped the K_q section");

        std::vector<Edge> edges;
        std::vector<int> kset;
        for (int i = 1; i <= q; ++i) kset.push_back(i);
        int offset = q;
        int bag_check = q;
        for (const auto& m : members) {
            const int ni = m.form.graph.order();
            for (const auto& [a, b] : m.form.graph.edges())
                edges.push_back(make_edge(a + offset, b + offset));
            for (const auto& [v, p] : m.form.witness) res.witness.emplace_back(v, p + offset);
            for (int t = 1; t <= m.form.q; ++t) kset.push_back(offset + t);
            bag_check += m.form.q;
            offset += ni;
        }
        if (bag_check != static_cast<int>(beta.size()))
            throw std::logic_error("bag size bookkeeping failed");
        if (offset != static_cast<int>(gamma.size()))
            throw std::logic_error("cone size bookkeeping failed");
        for (std::size_t i = 0; i < kset.size(); ++i)
            for (std::size_t j = i + 1; j < kset.size(); ++j)
                edges.push_back(make_edge(kset[i], kset[j]));
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        res.graph = LabeledGraph(offset, std::move(edges));
        std::sort(res.witness.begin(), res.witness.end());
        return res;
    }

    // Case 2: separators overlap, the bag is a triangle with at most two
    // children whose separator vertices are identified with bag positions.
    // Every consistent combination (order of the non-pointed bag vertices,
    // per-child separator ordering and bag, child block order) is built and
    // the s-lex least result returned.
    PointedResult assemble_overlapping(Vertex s1, Vertex s2, const std::vector<Vertex>& beta,
                                       const std::vector<Vertex>& gamma,
                                       const std::vector<ChildData>& children) {
        std::vector<Vertex> rest;
        for (Vertex v : beta)
            if (v != s1 && v != s2) rest.push_back(v);
        std::vector<std::vector<Vertex>> rest_orders = {rest};
        if (rest.size() == 2) rest_orders.push_back({rest[1], rest[0]});

        std::vector<int> child_idx(children.size());
        for (std::size_t i = 0; i < children.size(); ++i) child_idx[i] = static_cast<int>(i);
        std::vector<std::vector<int>> child_orders = {child_idx};
        if (children.size() == 2) child_orders.push_back({child_idx[1], child_idx[0]});

        // Recursive results per child, per (ordering, bag) combination.
        struct Variant {
            PointedResult rec;
            std::vector<Vertex> sigma_ordered;
        };
        std::vector<std::vector<Variant>> variants(children.size());
        for (std::size_t ci = 0; ci < children.size(); ++ci) {
            const auto& c = children[ci];
            std::vector<std::pair<Vertex, Vertex>> ords;
            if (c.sigma.size() == 1)
                ords = {{c.sigma[0], c.sigma[0]}};
            else
                ords = {{c.sigma[0], c.sigma[1]}, {c.sigma[1], c.sigma[0]}};
            for (const auto& [a, b] : ords)
                for (int bag : c.bags) {
                    try {
                        Variant v;
                        v.rec = pointed(a, b, c.alpha, bag);
                        v.sigma_ordered = a == b ? std::vector<Vertex>{a} : std::vector<Vertex>{a, b};
                        variants[ci].push_back(std::move(v));
                    } catch (const StructuralViolationError&) {
                    }
                }
            if (variants[ci].empty())
                throw StructuralViolationError("no child combination assembles");
        }

        std::optional<PointedResult> best;
        for (const auto& ro : rest_orders) {
            std::map<Vertex, int> bagpos;
            int next = 1;
            bagpos[s1] = next++;
            if (s2 != s1) bagpos[s2] = next++;
            for (Vertex v : ro) bagpos[v] = next++;
            if (next != 4) continue;  // bag must have exactly 3 vertices

            for (const auto& co : child_orders) {
                // Choose a variant per child (small cross product).
                std::vector<std::size_t> pick(children.size(), 0);
                while (true) {
                    PointedResult cand;
                    for (const auto& [v, p] : bagpos) cand.witness.emplace_back(v, p);
                    std::vector<Edge> edges = {{1, 2}, {1, 3}, {2, 3}};
                    int offset = 3;
                    for (int ci : co) {
                        const Variant& var = variants[ci][pick[ci]];
                        const int qi = static_cast<int>(var.sigma_ordered.size());
                        const int ni = var.rec.graph.order();
                        auto mapped = [&](int local) {
                            return local <= qi ? bagpos.at(var.sigma_ordered[local - 1])
                                               : offset + (local - qi);
                        };
                        for (const auto& [a, b] : var.rec.graph.edges())
                            edges.push_back(make_edge(mapped(a), mapped(b)));
                        for (const auto& [v, p] : var.rec.witness)
                            if (p > qi) cand.witness.emplace_back(v, offset + (p - qi));
                        offset += ni - qi;
                    }
                    if (offset != static_cast<int>(gamma.size()))
                        throw std::logic_error("cone size bookkeeping failed");
                    std::sort(edges.begin(), edges.end());
                    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
                    cand.graph = LabeledGraph(offset, std::move(edges));
                    std::sort(cand.witness.begin(), cand.witness.end());
                    if (!best || slex_less(cand.graph, best->graph)) best = std::move(cand);
                    // advance the variant choice vector
                    std::size_t k = 0;
                    while (k < pick.size()) {
                        if (++pick[k] < variants[k].size()) break;
                        pick[k] = 0;
                        ++k;
                    }
                    if (k == pick.size()) break;
                }
            }
        }
        if (!best) throw StructuralViolationError("no overlapping assembly succeeds");
        return *best;
    }

    const Graph& g_;
    std::vector<std::vector<Vertex>> cliques_;
    std::map<Vertex, std::vector<int>> cliques_of_;
    std::map<MemoKey, PointedResult> memo_;
    std::vector<CanonTraceNode>* trace_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Triple-level API

// The four definable sets attached to a triple. Throws NotInUError unless
// exactly one maximal clique contains {u1,u2,u3} and u3 is distinct.
inline ConeData cone_data(const Graph& g, const TripleNode& u) {
    if (u.u3 == u.u1 || u.u3 == u.u2) throw NotInUError("u3 must differ from u1 and u2");
    std::vector<std::vector<Vertex>> cliques = maximal_cliques_chordal(g);
    std::vector<Vertex> trip = {u.u1, u.u2, u.u3};
    std::sort(trip.begin(), trip.end());
    trip.erase(std::unique(trip.begin(), trip.end()), trip.end());
    std::vector<const std::vector<Vertex>*> hits;
    for (const auto& c : cliques)
        if (detail::is_subset(trip, c)) hits.push_back(&c);
    if (hits.empty()) throw NotInUError("no maximal clique contains the triple");
    if (hits.size() > 1) throw NotInUError("more than one maximal clique contains the triple");
    ConeData cd;
    cd.sigma = u.u1 == u.u2 ? std::vector<Vertex>{u.u1} : std::vector<Vertex>{u.u1, u.u2};
    std::sort(cd.sigma.begin(), cd.sigma.end());
    cd.beta = *hits[0];
    // component of u3 without sigma
    std::vector<char> seen(g.order(), 0);
    for (Vertex s : cd.sigma) seen[g.index_of(s)] = 1;
    std::vector<Vertex> stack = {u.u3};
    seen[g.index_of(u.u3)] = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        cd.alpha.push_back(v);
        for (Vertex w : g.neighbors(v)) {
            int wi = g.index_of(w);
            if (!seen[wi]) {
                seen[wi] = 1;
                stack.push_back(w);
            }
        }
    }
    std::sort(cd.alpha.begin(), cd.alpha.end());
    cd.gamma = detail::set_union(cd.sigma, cd.alpha);
    return cd;
}

struct ChildCone {
    TripleNode representative;
    std::vector<Vertex> sigma;
    std::vector<Vertex> alpha;
    std::vector<Vertex> beta;  // bag of the representative triple
};

// One group per distinct child cone of u: the components of gamma(u) minus
// beta(u) with their neighborhoods as separators.
inline std::vector<ChildCone> children(const Graph& g, const TripleNode& u) {
    ConeData cd = cone_data(g, u);
    detail::CanonContext ctx(g, maximal_cliques_chordal(g), nullptr);
    auto kids = ctx.derive_children(cd.beta, cd.gamma);
    std::vector<ChildCone> out;
    for (const auto& k : kids) {
        ChildCone c;
        c.sigma = k.sigma;
        c.alpha = k.alpha;
        c.representative = TripleNode{k.sigma[0], k.sigma.size() == 2 ? k.sigma[1] : k.sigma[0],
                                      k.witness_u3};
        c.beta = cone_data(g, c.representative).beta;
        out.push_back(std::move(c));
    }
    return out;
}

// All triples whose cone covers the whole graph. Defined for connected,
// non-complete chordal line graphs.
inline std::vector<TripleNode> root_candidates(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedError();
    if (g.is_complete()) throw std::invalid_argument("complete graphs bypass pointed canonisation");
    std::vector<std::vector<Vertex>> cliques = maximal_cliques_chordal(g);
    auto unique_bag = [&](std::vector<Vertex> key) {
        std::sort(key.begin(), key.end());
        int hits = 0;
        for (const auto& c : cliques)
            if (detail::is_subset(key, c)) ++hits;
        return hits == 1;
    };
    auto connected_without = [&](const std::vector<Vertex>& removed) {
        std::vector<char> seen(g.order(), 0);
        for (Vertex r : removed) seen[g.index_of(r)] = 1;
        Vertex start = -1;
        std::size_t want = g.order() - removed.size();
        for (Vertex v : g.vertices())
            if (!seen[g.index_of(v)]) { start = v; break; }
        if (start == -1) return false;
        std::vector<Vertex> stack = {start};
        seen[g.index_of(start)] = 1;
        std::size_t cnt = 0;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            ++cnt;
            for (Vertex w : g.neighbors(v)) {
                int wi = g.index_of(w);
                if (!seen[wi]) {
                    seen[wi] = 1;
                    stack.push_back(w);
                }
            }
        }
        return cnt == want;
    };
    std::vector<TripleNode> out;
    for (Vertex v : g.vertices()) {
        if (!connected_without({v})) continue;
        for (Vertex u3 : g.neighbors(v))
            if (unique_bag({v, u3})) out.push_back({v, v, u3});
    }
    for (const auto& [a, b] : g.edges()) {
        if (!connected_without({a, b})) continue;
        for (Vertex u3 : detail::set_intersection(g.neighbors(a), g.neighbors(b))) {
            if (unique_bag({a, b, u3})) {
                out.push_back({a, b, u3});
                out.push_back({b, a, u3});
            }
        }
    }
    return out;
}

struct PointedForm {
    LabeledGraph graph;
    std::vector<std::pair<Vertex, int>> witness;  // gamma(u) vertex -> position
};

// Pointed canonical form H(u) with its witness: a labeled graph on
// [1..|gamma(u)|] isomorphic to G[gamma(u)] with u1 -> 1 (and u2 -> 2 when
// distinct).
inline PointedForm canon_pointed_form(const Graph& g, const TripleNode& u, CanonOptions opts = {}) {
    ConeData cd = cone_data(g, u);
    detail::CanonContext ctx(g, maximal_cliques_chordal(g), opts.trace);
    int bag_id = -1;
    const auto& cliques = ctx.cliques();
    for (int i = 0; i < static_cast<int>(cliques.size()); ++i)
        if (cliques[i] == cd.beta) bag_id = i;
    if (bag_id == -1) throw std::logic_error("bag of the triple is not a maximal clique");
    detail::PointedResult r = ctx.pointed(u.u1, u.u2, cd.alpha, bag_id);
    return PointedForm{r.graph, r.witness};
}

inline LabeledGraph canon_pointed(const Graph& g, const TripleNode& u, CanonOptions opts = {}) {
    return canon_pointed_form(g, u, opts).graph;
}

// ---------------------------------------------------------------------------
// Full canonisation

inline CanonicalForm canon_connected(const Graph& g, CanonOptions opts = {}) {
    if (g.order() == 0) throw std::invalid_argument("empty graph");
    if (!is_connected(g)) throw DisconnectedError();
    ChordalLineResult cls = is_chordal_line(g);
    if (!cls.yes())
        throw NotChordalLineCanonError(cls, cls.status == ChordalLineResult::Status::NotChordal
                                                ? "input is not chordal"
                                                : "input is not a line graph");

    const int n = static_cast<int>(g.order());
    CanonicalForm form;
    if (g.is_complete()) {
        std::vector<Edge> es;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) es.emplace_back(i, j);
        form.graph = LabeledGraph(n, es);
        int pos = 1;
        for (Vertex v : g.vertices()) form.witness.emplace_back(v, pos++);
        if (opts.trace) {
            CanonTraceNode node;
            node.sigma = {};
            node.alpha = g.vertices();
            node.beta = g.vertices();
            node.gamma = g.vertices();
            node.assembly_case = 0;
            opts.trace->push_back(std::move(node));
        }
        return form;
    }

    detail::CanonContext ctx(g, maximal_cliques_chordal(g), opts.trace);

    // Root candidates, deduplicated to (ordered separator, bag) pairs: every
    // valid u3 with the same separator and bag yields the same recursion.
    struct Candidate {
        Vertex s1, s2;
        int bag;
    };
    std::vector<Candidate> cands;
    auto bags_for = [&](const std::vector<Vertex>& sep, const std::vector<Vertex>& thirds) {
        std::vector<int> bags;
        for (Vertex t : thirds) {
            std::vector<Vertex> key = sep;
            key.push_back(t);
            std::sort(key.begin(), key.end());
            auto cs = ctx.cliques_containing(key);
            if (cs.size() == 1 && !std::binary_search(bags.begin(), bags.end(), cs[0]))
                bags.insert(std::lower_bound(bags.begin(), bags.end(), cs[0]), cs[0]);
        }
        return bags;
    };
    auto connected_without = [&](const std::vector<Vertex>& removed) {
        std::vector<char> seen(g.order(), 0);
        for (Vertex r : removed) seen[g.index_of(r)] = 1;
        Vertex start = -1;
        for (Vertex v : g.vertices())
            if (!seen[g.index_of(v)]) { start = v; break; }
        if (start == -1) return false;
        std::vector<Vertex> stack = {start};
        seen[g.index_of(start)] = 1;
        std::size_t cnt = 0;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            ++cnt;
            for (Vertex w : g.neighbors(v)) {
                int wi = g.index_of(w);
                if (!seen[wi]) {
                    seen[wi] = 1;
                    stack.push_back(w);
                }
            }
        }
        return cnt == g.order() - removed.size();
    };
    for (Vertex v : g.vertices()) {
        if (!connected_without({v})) continue;
        for (int bag : bags_for({v}, g.neighbors(v))) cands.push_back({v, v, bag});
    }
    for (const auto& [a, b] : g.edges()) {
        if (!connected_without({a, b})) continue;
        auto common = detail::set_intersection(g.neighbors(a), g.neighbors(b));
        for (int bag : bags_for({a, b}, common)) {
            cands.push_back({a, b, bag});
            cands.push_back({b, a, bag});
        }
    }

    std::optional<detail::PointedResult> best;
    for (const auto& c : cands) {
        std::vector<Vertex> sep = c.s1 == c.s2 ? std::vector<Vertex>{c.s1}
                                               : std::vector<Vertex>{c.s1, c.s2};
        std::sort(sep.begin(), sep.end());
        std::vector<Vertex> alpha = detail::set_difference(g.vertices(), sep);
        try {
            detail::PointedResult r = ctx.pointed(c.s1, c.s2, alpha, c.bag);
            if (!best || slex_less(r.graph, best->graph)) best = std::move(r);
        } catch (const StructuralViolationError&) {
        }
    }
    if (!best) throw std::logic_error("no root candidate survives structural validation");
    form.graph = best->graph;
    form.witness = best->witness;
    if (opts.paranoid && !verify_canonical_witness(g, form))
        throw std::logic_error("paranoid verification failed: witness is not an isomorphism");
    return form;
}

// Canonise a graph whose components are chordal line graphs: components are
// canonised independently, sorted ascending by s-lex, and concatenated on
// consecutive vertex intervals.
inline CanonicalForm canon(const Graph& g, CanonOptions opts = {}) {
    if (g.order() == 0) throw std::invalid_argument("empty graph");
    auto comps = connected_components(g);
    std::vector<CanonicalForm> parts;
    for (const auto& comp : comps) {
        Graph sub = g.induced(comp);
        try {
            parts.push_back(canon_connected(sub, CanonOptions{false, opts.trace}));
        } catch (const NotChordalLineCanonError& e) {
            throw NotChordalLineCanonError(e.detail,
                                           std::string(e.what()) + " (component containing vertex " +
                                               std::to_string(comp[0]) + ")");
        }
    }
    std::sort(parts.begin(), parts.end(), [](const CanonicalForm& a, const CanonicalForm& b) {
        return slex_less(a.graph, b.graph);
    });
    int offset = 0;
    std::vector<Edge> edges;
    CanonicalForm out;
    for (const auto& p : parts) {
        for (const auto& [a, b] : p.graph.edges()) edges.emplace_back(a + offset, b + offset);
        for (const auto& [v, pos] : p.witness) out.witness.emplace_back(v, pos + offset);
        offset += p.graph.order();
    }
    out.graph = LabeledGraph(offset, std::move(edges));
    std::sort(out.witness.begin(), out.witness.end());
    if (opts.paranoid && !verify_canonical_witness(g, out))
        throw std::logic_error("paranoid verification failed: witness is not an isomorphism");
    return out;
}

}  // namespace clg
