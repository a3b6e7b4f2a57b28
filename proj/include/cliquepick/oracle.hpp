#ifndef CLIQUEPICK_ORACLE_HPP
#define CLIQUEPICK_ORACLE_HPP

#include <functional>
#include <utility>
#include <vector>

#include "cliquepick/components.hpp"
#include "cliquepick/count.hpp"
#include "cliquepick/counting.hpp"
#include "cliquepick/errors.hpp"
#include "cliquepick/graph.hpp"
#include "cliquepick/uccg.hpp"

// Slow, independent reference implementations used to check the counting
// and sampling code.

namespace cliquepick::oracle {

inline constexpr std::size_t kEnumerateMaxEdges = 28;
inline constexpr std::size_t kRootPickMaxVertices = 32;
inline constexpr std::size_t kOrderingsMaxVertices = 10;

/// Every acyclic orientation of g without v-structures, by backtracking
/// over edge directions. A partial orientation is abandoned as soon as it
/// contains a v-structure or a directed cycle, since no completion can
/// remove either. Completed orientations are re-checked with the plain
/// predicates.
inline std::vector<Dag> enumerate_amos(const Uccg& g) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t u = 0; u < g.size(); ++u)
        for (Vertex v : g.adj()[u])
            if (static_cast<Vertex>(u) < v) edges.emplace_back(static_cast<Vertex>(u), v);
    if (edges.size() > kEnumerateMaxEdges) throw TooLarge("enumerate_amos: more than 28 edges");

    const std::size_t n = g.size();
    std::vector<std::vector<Vertex>> out(n), parents(n);
    std::vector<Dag> result;

    auto reaches = [&](Vertex from, Vertex to) {
        std::vector<char> seen(n, 0);
        std::vector<Vertex> stack{from};
        seen[from] = 1;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            if (x == to) return true;
            for (Vertex y : out[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
        }
        return false;
    };
    auto creates_v_structure = [&](Vertex a, Vertex b) {
        for (Vertex p : parents[b])
            if (p != a && !g.graph().adjacent(p, a)) return true;
        return false;
    };

    std::function<void(std::size_t)> assign = [&](std::size_t i) {
        if (i == edges.size()) {
            Dag d(g.universe());
            for (std::size_t u = 0; u < n; ++u)
                for (Vertex v : out[u]) d.out[g.labels()[u]].push_back(g.labels()[v]);
            d.normalize();
            if (is_acyclic(d) && v_structures(d).empty()) result.push_back(std::move(d));
            return;
        }
        for (int dir = 0; dir < 2; ++dir) {
            auto [a, b] = edges[i];
            if (dir == 1) std::swap(a, b);
            if (creates_v_structure(a, b) || reaches(b, a)) continue;
            out[a].push_back(b);
            parents[b].push_back(a);
            assign(i + 1);
            out[a].pop_back();
            parents[b].pop_back();
        }
    };
    assign(0);
    return result;
}

/// #AMO by picking each vertex as the unique source and recursing on the
/// components of its s-orientation, memoized on vertex sets.
inline Count count_root_picking(const Uccg& g) {
    if (g.size() > kRootPickMaxVertices) throw TooLarge("count_root_picking: more than 32 vertices");
    MemoTable memo;
    std::function<Count(const Uccg&)> count = [&](const Uccg& h) -> Count {
        if (auto it = memo.find(h.key()); it != memo.end()) return it->second;
        Count sum = 0;
        for (Vertex s : h.labels()) {
            Count prod = 1;
            for (const auto& sub : components_after_clique(h, {s})) prod *= count(sub);
            sum += prod;
        }
        memo.emplace(h.key(), sum);
        return sum;
    };
    return count(g);
}

/// All linear extensions of the dag restricted to g's vertices (labels).
inline std::vector<std::vector<Vertex>> topological_orderings_of_amo(const Uccg& g, const Dag& dag) {
    const std::size_t n = g.size();
    if (n > kOrderingsMaxVertices) throw TooLarge("topological_orderings_of_amo: more than 10 vertices");
    std::vector<std::vector<Vertex>> succ(n);
    std::vector<int> indeg(n, 0);
    for (std::size_t u = 0; u < n; ++u) {
        for (Vertex w : dag.out[g.labels()[u]]) {
            const Vertex v = g.local_of(w);
            if (v < 0) continue;
            succ[u].push_back(v);
            ++indeg[v];
        }
    }
    std::vector<std::vector<Vertex>> result;
    std::vector<Vertex> prefix;
    std::vector<char> used(n, 0);
    std::function<void()> extend = [&]() {
        if (prefix.size() == n) {
            result.push_back(g.graph().to_labels(prefix));
            return;
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (used[v] || indeg[v] != 0) continue;
            used[v] = 1;
            prefix.push_back(static_cast<Vertex>(v));
            for (Vertex w : succ[v]) --indeg[w];
            extend();
            for (Vertex w : succ[v]) ++indeg[w];
            prefix.pop_back();
            used[v] = 0;
        }
    };
    extend();
    return result;
}

}  // namespace cliquepick::oracle

#endif
