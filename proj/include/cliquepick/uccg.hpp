#ifndef CLIQUEPICK_UCCG_HPP
#define CLIQUEPICK_UCCG_HPP

#include <cassert>
#include <span>
#include <utility>
#include <vector>

#include "cliquepick/errors.hpp"
#include "cliquepick/graph.hpp"
#include "cliquepick/lbfs.hpp"

namespace cliquepick {

/// Undirected connected chordal graph with canonical (increasing) global
/// labels. The label list doubles as the memoization key.
class Uccg {
  public:
    // Validates connectivity and chordality.
    static Uccg from(UndirectedGraph g) {
        if (!is_connected(g)) throw NotConnected();
        if (!is_chordal(g)) throw NotChordal(g.labels);
        return Uccg(std::move(g));
    }

    static Uccg from_edges(int universe, VertexSet labels, std::span<const std::pair<Vertex, Vertex>> edges) {
        return from(make_undirected(universe, std::move(labels), edges));
    }

    // For graphs known to be connected induced subgraphs of a chordal graph.
    static Uccg trusted(UndirectedGraph g) {
        assert(is_connected(g));
        return Uccg(std::move(g));
    }

    const UndirectedGraph& graph() const { return g_; }
    operator const UndirectedGraph&() const { return g_; }

    const VertexSet& labels() const { return g_.labels; }
    const VertexSet& key() const { return g_.labels; }
    const Adjacency& adj() const { return g_.adj; }
    std::size_t size() const { return g_.size(); }
    std::size_t edge_count() const { return g_.edge_count(); }
    int universe() const { return g_.universe; }
    Vertex local_of(Vertex label) const { return g_.local_of(label); }

    friend bool operator==(const Uccg&, const Uccg&) = default;

  private:
    explicit Uccg(UndirectedGraph g) : g_(std::move(g)) {}
    UndirectedGraph g_;
};

namespace detail {

// Induced subgraph on sorted local vertices of g. `local_map` is scratch of
// size g.size() filled with -1 and restored before returning.
inline UndirectedGraph induced_local(const UndirectedGraph& g, const VertexSet& vs, std::vector<Vertex>& local_map) {
    UndirectedGraph h;
    h.universe = g.universe;
    h.labels.reserve(vs.size());
    h.adj.resize(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
        local_map[vs[i]] = static_cast<Vertex>(i);
        h.labels.push_back(g.labels[vs[i]]);
    }
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (Vertex w : g.adj[vs[i]])
            if (local_map[w] >= 0) h.adj[i].push_back(local_map[w]);
    }
    for (Vertex v : vs) local_map[v] = -1;
    return h;
}

}  // namespace detail

/// Induced subgraph on a set of global labels (must be a subset of g's
/// labels inducing a connected graph).
inline Uccg induced_subgraph(const Uccg& g, VertexSet labels) {
    std::sort(labels.begin(), labels.end());
    VertexSet local;
    local.reserve(labels.size());
    for (Vertex l : labels) {
        Vertex v = g.local_of(l);
        assert(v >= 0);
        local.push_back(v);
    }
    std::vector<Vertex> map(g.size(), -1);
    return Uccg::trusted(detail::induced_local(g.graph(), local, map));
}

/// Connected components of the undirected part of a CPDAG, each validated
/// chordal; isolated vertices give singleton components. Ordered by
/// smallest label.
inline std::vector<Uccg> undirected_components(const PartialGraph& g) {
    std::vector<Uccg> out;
    UndirectedGraph whole;
    whole.universe = g.n;
    whole.adj = g.undirected;
    whole.labels.resize(g.n);
    for (int v = 0; v < g.n; ++v) whole.labels[v] = v;
    std::vector<Vertex> map(g.n, -1);
    for (auto& comp : connected_components(g.undirected)) {
        UndirectedGraph h = detail::induced_local(whole, comp, map);
        if (!is_chordal(h)) throw NotChordal(h.labels);
        out.push_back(Uccg::trusted(std::move(h)));
    }
    return out;
}

/// Orients every edge of g from the earlier to the later vertex of tau
/// (global labels). The result lives on g's vertex universe.
inline Dag orient_by_ordering(const Uccg& g, std::span<const Vertex> tau) {
    const std::size_t n = g.size();
    if (tau.size() != n) throw InvalidOrdering();
    std::vector<std::size_t> pos(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Vertex v = g.local_of(tau[i]);
        if (v < 0 || pos[v] != n) throw InvalidOrdering();
        pos[v] = i;
    }
    Dag d(g.universe());
    for (std::size_t u = 0; u < n; ++u)
        for (Vertex w : g.adj()[u])
            if (pos[u] < pos[w]) d.out[g.labels()[u]].push_back(g.labels()[w]);
    d.normalize();
    return d;
}

}  // namespace cliquepick

#endif
