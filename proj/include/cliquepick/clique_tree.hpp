#ifndef CLIQUEPICK_CLIQUE_TREE_HPP
#define CLIQUEPICK_CLIQUE_TREE_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "cliquepick/errors.hpp"
#include "cliquepick/graph.hpp"
#include "cliquepick/lbfs.hpp"
#include "cliquepick/random.hpp"

namespace cliquepick {

struct CliqueTreeOptions {
    TieBreak tie_break;
    // Default root: the clique holding the lowest label (local vertex 0).
    bool random_root = false;
    std::uint64_t root_seed = 0;

    static CliqueTreeOptions seeded(std::uint64_t seed) {
        return {TieBreak::seeded(seed), true, seed ^ 0x5851f42d4c957f2dull};
    }
};

/// Rooted clique tree over local vertices. Node x holds the maximal clique
/// cliques[x]; separators[x] = cliques[x] ∩ cliques[parent[x]] (empty at
/// the root, whose parent is itself).
struct CliqueTree {
    std::vector<VertexSet> cliques;
    std::vector<int> parent;
    std::vector<VertexSet> separators;
    std::vector<std::vector<int>> children;
    std::vector<int> bfs_order;  // root first
    int root = 0;

    std::size_t size() const { return cliques.size(); }
};

/// Builds a clique tree from an LBFS sweep. Visiting v either extends the
/// clique of the previously visited vertex (when v's earlier neighbors are
/// exactly that clique) or opens the clique {v} ∪ prev(v), attached to the
/// clique where the latest-visited member of prev(v) was placed. Throws
/// NotChordal when the sweep is not the reverse of a PEO.
inline CliqueTree clique_tree(const UndirectedGraph& g, CliqueTreeOptions opts = {}) {
    const std::size_t n = g.size();
    CliqueTree t;
    if (n == 0) return t;
    const auto order = lbfs(g, opts.tie_break).order;
    {
        std::vector<Vertex> rev(order.rbegin(), order.rend());
        if (!is_peo(g, rev)) throw NotChordal(g.labels);
    }
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;

    std::vector<int> clique_of(n, -1);
    std::vector<std::size_t> prev_count(n, 0);
    std::vector<std::vector<int>> tree_adj;
    std::vector<std::pair<int, int>> tree_edges;
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex v = order[i];
        Vertex latest = -1;
        std::size_t count = 0;
        for (Vertex w : g.adj[v]) {
            if (pos[w] >= i) continue;
            ++count;
            if (latest < 0 || pos[w] > pos[latest]) latest = w;
        }
        prev_count[v] = count;
        const bool extends = i > 0 && latest == order[i - 1] && count == prev_count[latest] + 1;
        if (extends) {
            const int c = clique_of[latest];
            t.cliques[c].push_back(v);
            clique_of[v] = c;
            continue;
        }
        VertexSet clique;
        clique.reserve(count + 1);
        for (Vertex w : g.adj[v])
            if (pos[w] < i) clique.push_back(w);
        clique.push_back(v);
        const int c = static_cast<int>(t.cliques.size());
        t.cliques.push_back(std::move(clique));
        tree_adj.emplace_back();
        clique_of[v] = c;
        if (latest >= 0) {
            const int p = clique_of[latest];
            tree_adj[c].push_back(p);
            tree_adj[p].push_back(c);
        }
    }
    for (auto& c : t.cliques) std::sort(c.begin(), c.end());

    const std::size_t k = t.cliques.size();
    if (opts.random_root) {
        Rng rng(opts.root_seed);
        t.root = static_cast<int>(rng.below(k));
    } else {
        t.root = clique_of[0];
    }
    t.parent.assign(k, -1);
    t.children.assign(k, {});
    t.separators.assign(k, {});
    t.bfs_order.reserve(k);
    t.parent[t.root] = t.root;
    t.bfs_order.push_back(t.root);
    for (std::size_t head = 0; head < t.bfs_order.size(); ++head) {
        const int x = t.bfs_order[head];
        for (int y : tree_adj[x]) {
            if (t.parent[y] >= 0) continue;
            t.parent[y] = x;
            t.children[x].push_back(y);
            t.separators[y] = set_intersection(t.cliques[y], t.cliques[x]);
            t.bfs_order.push_back(y);
        }
    }
    return t;
}

/// Separators of all tree edges (a multiset). The distinct members are
/// exactly the minimal separators of the graph.
inline std::vector<VertexSet> minimal_separators(const CliqueTree& t) {
    std::vector<VertexSet> out;
    for (int x : t.bfs_order)
        if (x != t.root) out.push_back(t.separators[x]);
    return out;
}

}  // namespace cliquepick

#endif
