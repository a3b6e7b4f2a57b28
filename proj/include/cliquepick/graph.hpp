#ifndef CLIQUEPICK_GRAPH_HPP
#define CLIQUEPICK_GRAPH_HPP

#include <algorithm>
#include <array>
#include <cassert>
#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace cliquepick {

using Vertex = int;
// Sorted, duplicate free.
using VertexSet = std::vector<Vertex>;
using Adjacency = std::vector<std::vector<Vertex>>;

inline bool contains(const VertexSet& sorted, Vertex v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const noexcept {
        std::size_t h = 0xcbf29ce484222325ull ^ s.size();
        for (Vertex v : s) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

/// Partially directed graph as read from a file: undirected edges stored on
/// both endpoints, a directed edge u->v stored at u only.
struct PartialGraph {
    int n = 0;
    Adjacency undirected;
    Adjacency directed_out;

    PartialGraph() = default;
    explicit PartialGraph(int vertices) : n(vertices), undirected(vertices), directed_out(vertices) {}

    bool has_undirected(Vertex u, Vertex v) const { return contains(undirected[u], v); }
    bool has_directed(Vertex u, Vertex v) const { return contains(directed_out[u], v); }
    bool adjacent(Vertex u, Vertex v) const {
        return has_undirected(u, v) || has_directed(u, v) || has_directed(v, u);
    }

    // Callers keep the lists sorted via normalize() after bulk insertion.
    void add_undirected(Vertex u, Vertex v) {
        undirected[u].push_back(v);
        undirected[v].push_back(u);
    }
    void add_directed(Vertex u, Vertex v) { directed_out[u].push_back(v); }

    void normalize() {
        for (auto& l : undirected) std::sort(l.begin(), l.end());
        for (auto& l : directed_out) std::sort(l.begin(), l.end());
    }

    std::size_t undirected_edge_count() const {
        std::size_t twice = 0;
        for (const auto& l : undirected) twice += l.size();
        return twice / 2;
    }
    std::size_t directed_edge_count() const {
        std::size_t m = 0;
        for (const auto& l : directed_out) m += l.size();
        return m;
    }

    friend bool operator==(const PartialGraph&, const PartialGraph&) = default;
};

/// Undirected graph over a subset of a global vertex universe. Local vertex
/// i carries global id labels[i]; adj holds sorted local indices.
struct UndirectedGraph {
    VertexSet labels;
    Adjacency adj;
    int universe = 0;

    std::size_t size() const { return labels.size(); }
    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (const auto& l : adj) twice += l.size();
        return twice / 2;
    }
    bool adjacent(Vertex u, Vertex v) const { return contains(adj[u], v); }

    // -1 when the label is absent.
    Vertex local_of(Vertex label) const {
        auto it = std::lower_bound(labels.begin(), labels.end(), label);
        if (it == labels.end() || *it != label) return -1;
        return static_cast<Vertex>(it - labels.begin());
    }

    VertexSet to_labels(std::span<const Vertex> local) const {
        VertexSet out;
        out.reserve(local.size());
        for (Vertex v : local) out.push_back(labels[v]);
        return out;
    }

    friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;
};

/// Builds an UndirectedGraph on the given global labels from global edges.
/// Labels need not be sorted; the result is canonical.
inline UndirectedGraph make_undirected(int universe, VertexSet labels,
                                       std::span<const std::pair<Vertex, Vertex>> edges) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    UndirectedGraph g;
    g.universe = universe;
    g.adj.resize(labels.size());
    g.labels = std::move(labels);
    for (auto [u, v] : edges) {
        Vertex a = g.local_of(u), b = g.local_of(v);
        assert(a >= 0 && b >= 0 && a != b);
        g.adj[a].push_back(b);
        g.adj[b].push_back(a);
    }
    for (auto& l : g.adj) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
    return g;
}

// Connected components of an adjacency structure; each sorted, ordered by
// smallest member.
inline std::vector<VertexSet> connected_components(const Adjacency& adj) {
    const std::size_t n = adj.size();
    std::vector<char> seen(n, 0);
    std::vector<VertexSet> out;
    std::vector<Vertex> stack;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        seen[s] = 1;
        stack.push_back(static_cast<Vertex>(s));
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : adj[v]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

inline bool is_connected(const UndirectedGraph& g) {
    return g.size() <= 1 || connected_components(g.adj).size() == 1;
}

/// Fully directed graph over n vertices; out[u] holds sorted heads.
struct Dag {
    int n = 0;
    Adjacency out;

    Dag() = default;
    explicit Dag(int vertices) : n(vertices), out(vertices) {}

    bool has_edge(Vertex u, Vertex v) const { return contains(out[u], v); }
    std::size_t edge_count() const {
        std::size_t m = 0;
        for (const auto& l : out) m += l.size();
        return m;
    }
    std::vector<std::pair<Vertex, Vertex>> edges() const {
        std::vector<std::pair<Vertex, Vertex>> e;
        for (int u = 0; u < n; ++u)
            for (Vertex v : out[u]) e.emplace_back(u, v);
        return e;
    }
    void normalize() {
        for (auto& l : out) std::sort(l.begin(), l.end());
    }

    friend bool operator==(const Dag&, const Dag&) = default;
    friend auto operator<=>(const Dag& a, const Dag& b) { return a.out <=> b.out; }
};

inline Dag to_dag(const PartialGraph& g) {
    Dag d(g.n);
    d.out = g.directed_out;
    return d;
}

inline PartialGraph to_partial(const Dag& d) {
    PartialGraph g(d.n);
    g.directed_out = d.out;
    return g;
}

// Kahn's algorithm.
inline bool is_acyclic(const Dag& d) {
    std::vector<int> indeg(d.n, 0);
    for (const auto& l : d.out)
        for (Vertex v : l) ++indeg[v];
    std::vector<Vertex> ready;
    for (int v = 0; v < d.n; ++v)
        if (indeg[v] == 0) ready.push_back(v);
    int removed = 0;
    while (!ready.empty()) {
        Vertex u = ready.back();
        ready.pop_back();
        ++removed;
        for (Vertex v : d.out[u])
            if (--indeg[v] == 0) ready.push_back(v);
    }
    return removed == d.n;
}

// Unordered skeleton edges (u < v), sorted.
inline std::vector<std::pair<Vertex, Vertex>> skeleton(const PartialGraph& g) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int u = 0; u < g.n; ++u) {
        for (Vertex v : g.undirected[u])
            if (u < v) e.emplace_back(u, v);
        for (Vertex v : g.directed_out[u]) e.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(e.begin(), e.end());
    return e;
}

inline std::vector<std::pair<Vertex, Vertex>> skeleton(const Dag& d) { return skeleton(to_partial(d)); }

// Triples (a, b, c), a < c, with a->b<-c and a, c nonadjacent. Only directed
// edges take part; sorted.
inline std::vector<std::array<Vertex, 3>> v_structures(const PartialGraph& g) {
    std::vector<std::vector<Vertex>> parents(g.n);
    for (int u = 0; u < g.n; ++u)
        for (Vertex v : g.directed_out[u]) parents[v].push_back(u);
    std::vector<std::array<Vertex, 3>> out;
    for (int b = 0; b < g.n; ++b) {
        auto& ps = parents[b];
        std::sort(ps.begin(), ps.end());
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = i + 1; j < ps.size(); ++j)
                if (!g.adjacent(ps[i], ps[j])) out.push_back({ps[i], b, ps[j]});
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::array<Vertex, 3>> v_structures(const Dag& d) { return v_structures(to_partial(d)); }

}  // namespace cliquepick

#endif
