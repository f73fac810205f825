#pragma once

// Ground-truth oracles: exact isomorphism testing (backtracking over a color
// refinement partition), brute-force canonical labeling for tiny graphs, and
// 1-WL color refinement as a comparison baseline.

#include <map>
#include <numeric>
#include <optional>

#include "clg/graph.hpp"

namespace clg {

// ---------------------------------------------------------------------------
// 1-WL color refinement

struct Coloring {
    std::vector<std::pair<Vertex, int>> color_of;  // (vertex, color id), vertex-sorted
    int rounds = 0;

    int color(Vertex v) const {
        for (const auto& [u, c] : color_of)
            if (u == v) return c;
        throw std::out_of_range("unknown vertex");
    }

    // Sizes of the color classes, ascending.
    std::vector<int> class_sizes() const {
        std::map<int, int> cnt;
        for (const auto& [u, c] : color_of) cnt[c]++;
        std::vector<int> out;
        for (const auto& [c, k] : cnt) out.push_back(k);
        std::sort(out.begin(), out.end());
        return out;
    }
};

// Stable 1-WL coloring. Color ids are canonical: each round's signatures are
// sorted and numbered by first occurrence, so isomorphic graphs get identical
// (class size, color id) statistics.
inline Coloring color_refinement(const Graph& g) {
    const int n = static_cast<int>(g.order());
    const auto& vs = g.vertices();
    std::vector<int> color(n, 0);
    int classes = 1;
    int rounds = 0;
    while (true) {
        using Sig = std::pair<int, std::vector<int>>;
        std::vector<Sig> sig(n);
        for (int i = 0; i < n; ++i) {
            std::vector<int> nb;
            nb.reserve(g.neighbors(vs[i]).size());
            for (Vertex w : g.neighbors(vs[i])) nb.push_back(color[g.index_of(w)]);
            std::sort(nb.begin(), nb.end());
            sig[i] = {color[i], std::move(nb)};
        }
        std::vector<Sig> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(n);
        for (int i = 0; i < n; ++i)
            next[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[i]) - sorted.begin());
        int next_classes = static_cast<int>(sorted.size());
        if (next_classes == classes) {
            color = next;  // renumber once more for canonical ids, partition unchanged
            break;
        }
        color = next;
        classes = next_classes;
        ++rounds;
        if (rounds > n) break;  // fixpoint is reached within n rounds
    }
    Coloring out;
    out.rounds = rounds;
    for (int i = 0; i < n; ++i) out.color_of.emplace_back(vs[i], color[i]);
    return out;
}

// ---------------------------------------------------------------------------
// Exact isomorphism

struct IsoResult {
    bool isomorphic = false;
    std::vector<std::pair<Vertex, Vertex>> mapping;  // g-vertex -> h-vertex
};

namespace detail {

inline bool iso_backtrack(const Graph& g, const Graph& h,
                          const std::vector<int>& gcol, const std::vector<int>& hcol,
                          const std::vector<int>& order, std::size_t pos,
                          std::vector<int>& img, std::vector<char>& used) {
    if (pos == order.size()) return true;
    const int gi = order[pos];
    Vertex v = g.vertices()[gi];
    const int n = static_cast<int>(h.order());
    for (int hi = 0; hi < n; ++hi) {
        if (used[hi] || hcol[hi] != gcol[gi]) continue;
        Vertex w = h.vertices()[hi];
        bool ok = true;
        for (std::size_t k = 0; k < pos && ok; ++k) {
            const int pgi = order[k];
            Vertex pv = g.vertices()[pgi];
            Vertex pw = h.vertices()[img[pgi]];
            if (g.adjacent(v, pv) != h.adjacent(w, pw)) ok = false;
        }
        if (!ok) continue;
        img[gi] = hi;
        used[hi] = 1;
        if (iso_backtrack(g, h, gcol, hcol, order, pos + 1, img, used)) return true;
        used[hi] = 0;
        img[gi] = -1;
    }
    return false;
}

}  // namespace detail

// Exact isomorphism test; the returned mapping is verified edge-perfect.
inline IsoResult are_isomorphic(const Graph& g, const Graph& h) {
    IsoResult res;
    if (g.order() != h.order() || g.size() != h.size()) return res;
    const int n = static_cast<int>(g.order());

    // Joint refinement: colors must be computed with a shared signature table,
    // otherwise ids are incomparable. Refine the disjoint union.
    std::vector<Vertex> uv;
    std::vector<Edge> ue;
    for (Vertex v : g.vertices()) uv.push_back(v);
    const Vertex shift = (g.vertices().empty() ? 0 : g.vertices().back()) + 1
                       - (h.vertices().empty() ? 0 : h.vertices().front()) + 1;
    for (Vertex v : h.vertices()) uv.push_back(v + shift);
    for (const auto& [a, b] : g.edges()) ue.emplace_back(a, b);
    for (const auto& [a, b] : h.edges()) ue.emplace_back(a + shift, b + shift);
    Graph uni(uv, ue);
    Coloring joint = color_refinement(uni);

    std::vector<int> gcol(n), hcol(n);
    for (int i = 0; i < n; ++i) gcol[i] = joint.color(g.vertices()[i]);
    for (int i = 0; i < n; ++i) hcol[i] = joint.color(h.vertices()[i] + shift);
    {
        std::vector<int> a = gcol, b = hcol;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return res;
    }

    // Most-constrained-first static order: small color classes first.
    std::map<int, int> class_size;
    for (int c : gcol) class_size[c]++;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (class_size[gcol[a]] != class_size[gcol[b]]) return class_size[gcol[a]] < class_size[gcol[b]];
        if (gcol[a] != gcol[b]) return gcol[a] < gcol[b];
        return a < b;
    });

    std::vector<int> img(n, -1);
    std::vector<char> used(n, 0);
    if (!detail::iso_backtrack(g, h, gcol, hcol, order, 0, img, used)) return res;

    res.isomorphic = true;
    for (int i = 0; i < n; ++i) res.mapping.emplace_back(g.vertices()[i], h.vertices()[img[i]]);
    // Verify before returning.
    for (const auto& [u, v] : g.edges()) {
        Vertex iu = -1, iv = -1;
        for (const auto& [a, b] : res.mapping) {
            if (a == u) iu = b;
            if (a == v) iv = b;
        }
        if (!h.adjacent(iu, iv)) throw std::logic_error("isomorphism verification failed");
    }
    return res;
}

// ---------------------------------------------------------------------------
// Brute-force canonical labeling

struct TooLarge : std::runtime_error {
    TooLarge() : std::runtime_error("brute-force canonical form limited to n <= 9") {}
};

// The s-lex minimum of apply_permutation(g, pi) over all n! permutations.
inline LabeledGraph brute_canonical(const LabeledGraph& g) {
    const int n = g.order();
    if (n > 9) throw TooLarge();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    LabeledGraph best = g;
    do {
        LabeledGraph cand = apply_permutation(g, perm);
        if (slex_less(cand, best)) best = cand;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace clg
