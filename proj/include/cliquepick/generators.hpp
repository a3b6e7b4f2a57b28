#ifndef CLIQUEPICK_GENERATORS_HPP
#define CLIQUEPICK_GENERATORS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cliquepick/errors.hpp"
#include "cliquepick/graph.hpp"
#include "cliquepick/lbfs.hpp"
#include "cliquepick/random.hpp"
#include "cliquepick/uccg.hpp"

// Random connected chordal graphs on vertices 0..n-1. Every generator is a
// pure function of its parameters and seed.

namespace cliquepick::gen {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

/// Uniform labeled tree on n vertices from a random Prüfer sequence.
inline EdgeList random_tree(int n, Rng& rng) {
    EdgeList edges;
    if (n < 2) return edges;
    std::vector<int> seq(n - 2), degree(n, 1);
    for (auto& x : seq) {
        x = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        ++degree[x];
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.push(v);
    for (int x : seq) {
        const int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, x);
        if (--degree[x] == 1) leaves.push(x);
    }
    const int a = leaves.top();
    leaves.pop();
    edges.emplace_back(a, leaves.top());
    return edges;
}

inline Adjacency adjacency(int n, const EdgeList& edges) {
    Adjacency adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& l : adj) std::sort(l.begin(), l.end());
    return adj;
}

inline UndirectedGraph build(int n, EdgeList edges) {
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    VertexSet labels(n);
    for (int v = 0; v < n; ++v) labels[v] = v;
    return make_undirected(n, std::move(labels), edges);
}

inline double density(const UndirectedGraph& g) {
    const double n = static_cast<double>(g.size());
    return n < 2 ? 0.0 : 2.0 * static_cast<double>(g.edge_count()) / (n * (n - 1));
}

namespace detail {

inline constexpr int kMaxAttempts = 10000;

template <class Make>
Uccg until_connected(const char* model, Make make) {
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        UndirectedGraph g = make();
        if (is_connected(g)) return Uccg::from(std::move(g));
    }
    throw Error(std::string(model) + ": no connected graph after 10000 attempts (k too small for n?)");
}

inline void check_size(int n, int k) {
    if (n < 1) throw Error("generator: n must be positive");
    if (k < 1) throw Error("generator: k must be positive");
}

}  // namespace detail

/// Intersection graph of n random subtrees of a random tree. Each subtree
/// starts at a random node and grows by random neighbors to a size drawn
/// from {1, ..., 2k-1} (capped at n).
inline Uccg gen_subtree(int n, int k, std::uint64_t seed) {
    detail::check_size(n, k);
    Rng rng(seed);
    return detail::until_connected("subtree", [&] {
        const Adjacency tree = adjacency(n, random_tree(n, rng));
        std::vector<std::vector<Vertex>> members(n);  // tree node -> subtrees through it
        std::vector<int> mark(n, -1);
        std::vector<Vertex> frontier;
        for (int s = 0; s < n; ++s) {
            const auto size = std::min<std::int64_t>(rng.between(1, 2 * k - 1), n);
            frontier.clear();
            auto add = [&](Vertex t) {
                mark[t] = s;
                members[t].push_back(s);
                for (Vertex w : tree[t])
                    if (mark[w] != s) frontier.push_back(w);
            };
            add(static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n))));
            for (std::int64_t grown = 1; grown < size;) {
                const std::size_t i = rng.below(frontier.size());
                const Vertex t = frontier[i];
                frontier[i] = frontier.back();
                frontier.pop_back();
                if (mark[t] == s) continue;  // queued twice
                add(t);
                ++grown;
            }
        }
        EdgeList edges;
        for (const auto& m : members)
            for (std::size_t i = 0; i < m.size(); ++i)
                for (std::size_t j = i + 1; j < m.size(); ++j) edges.emplace_back(m[i], m[j]);
        return build(n, std::move(edges));
    });
}

/// Intersection graph of closed intervals [l, r], vertex i for interval i.
inline UndirectedGraph interval_graph(const std::vector<std::pair<double, double>>& iv) {
    const int n = static_cast<int>(iv.size());
    std::vector<int> by_left(n);
    for (int i = 0; i < n; ++i) by_left[i] = i;
    std::sort(by_left.begin(), by_left.end(), [&](int a, int b) { return iv[a].first < iv[b].first; });
    EdgeList edges;
    for (std::size_t i = 0; i < by_left.size(); ++i) {
        const auto& a = iv[by_left[i]];
        for (std::size_t j = i + 1; j < by_left.size() && iv[by_left[j]].first <= a.second; ++j)
            edges.emplace_back(by_left[i], by_left[j]);
    }
    return build(n, std::move(edges));
}

/// Intersection graph of n random intervals: 2n uniform points in [0, 1),
/// paired consecutively.
inline Uccg gen_interval(int n, std::uint64_t seed) {
    detail::check_size(n, 1);
    Rng rng(seed);
    return detail::until_connected("interval", [&] {
        std::vector<std::pair<double, double>> iv(n);
        for (auto& [l, r] : iv) {
            const double a = rng.unit(), b = rng.unit();
            l = std::min(a, b);
            r = std::max(a, b);
        }
        return interval_graph(iv);
    });
}

/// Built backwards along a random elimination ordering: each vertex except
/// the last gets as later neighbors a random subset, of size drawn from
/// {max(1, k/2), ..., 2k}, of the closed later neighborhood of a random
/// later vertex (a clique, so the ordering stays perfect).
inline Uccg gen_peo(int n, int k, std::uint64_t seed) {
    detail::check_size(n, k);
    Rng rng(seed);
    std::vector<Vertex> label(n);
    for (int v = 0; v < n; ++v) label[v] = v;
    rng.shuffle(label);
    // later[i]: later neighbors of position i in the elimination ordering.
    std::vector<std::vector<int>> later(n);
    EdgeList edges;
    std::vector<int> pool;
    for (int i = n - 2; i >= 0; --i) {
        const int u = i + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1 - i)));
        pool.assign(later[u].begin(), later[u].end());
        pool.push_back(u);
        const auto s = static_cast<std::size_t>(rng.between(std::max(1, k / 2), 2 * k));
        rng.shuffle(pool);
        pool.resize(std::min(s, pool.size()));
        later[i] = pool;
        for (int w : pool) edges.emplace_back(label[i], label[w]);
    }
    return Uccg::from(build(n, std::move(edges)));
}

/// A random tree thickened by random chordality-preserving edges until it
/// has k·n edges (k = 1 keeps the tree), capped by the complete graph.
inline Uccg gen_thicken(int n, int k, std::uint64_t seed) {
    detail::check_size(n, k);
    Rng rng(seed);
    const std::size_t complete = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    const std::size_t target = k == 1 ? static_cast<std::size_t>(n - 1)
                                      : std::min(static_cast<std::size_t>(k) * static_cast<std::size_t>(n), complete);
    UndirectedGraph g = build(n, random_tree(n, rng));
    std::size_t edges = g.edge_count();

    auto insert = [](std::vector<Vertex>& l, Vertex v) { l.insert(std::lower_bound(l.begin(), l.end(), v), v); };
    auto erase = [](std::vector<Vertex>& l, Vertex v) { l.erase(std::lower_bound(l.begin(), l.end(), v)); };
    // Adds u-v if the result stays chordal. Without a common neighbor the
    // new edge closes a chordless cycle, so those pairs are rejected early.
    auto try_add = [&](Vertex u, Vertex v) {
        if (u == v || g.adjacent(u, v)) return false;
        const auto& a = g.adj[u];
        const auto& b = g.adj[v];
        auto i = a.begin();
        auto j = b.begin();
        bool common = false;
        while (i != a.end() && j != b.end() && !common) {
            if (*i < *j) ++i;
            else if (*j < *i) ++j;
            else common = true;
        }
        if (!common) return false;
        insert(g.adj[u], v);
        insert(g.adj[v], u);
        if (is_chordal(g)) return true;
        erase(g.adj[u], v);
        erase(g.adj[v], u);
        return false;
    };

    const std::size_t patience = 20 * static_cast<std::size_t>(n) + 100;
    std::size_t failures = 0;
    while (edges < target) {
        const auto u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        const auto v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        if (try_add(u, v)) {
            ++edges;
            failures = 0;
            continue;
        }
        if (++failures < patience) continue;
        // Random probing stalls on sparse candidate sets: scan every
        // nonadjacent pair in random order instead.
        EdgeList pairs;
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                if (!g.adjacent(a, b)) pairs.emplace_back(a, b);
        rng.shuffle(pairs);
        bool added = false;
        for (auto [a, b] : pairs) {
            if (try_add(a, b)) {
                added = true;
                break;
            }
        }
        if (!added) break;
        ++edges;
        failures = 0;
    }
    return Uccg::from(std::move(g));
}

enum class Model { Subtree, Interval, Peo, Thicken };

inline std::optional<Model> parse_model(std::string_view name) {
    if (name == "subtree") return Model::Subtree;
    if (name == "interval") return Model::Interval;
    if (name == "peo") return Model::Peo;
    if (name == "thicken") return Model::Thicken;
    return std::nullopt;
}

inline const char* to_string(Model m) {
    switch (m) {
        case Model::Subtree: return "subtree";
        case Model::Interval: return "interval";
        case Model::Peo: return "peo";
        case Model::Thicken: return "thicken";
    }
    return "?";
}

inline Uccg generate(Model m, int n, int k, std::uint64_t seed) {
    switch (m) {
        case Model::Subtree: return gen_subtree(n, k, seed);
        case Model::Interval: return gen_interval(n, seed);
        case Model::Peo: return gen_peo(n, k, seed);
        case Model::Thicken: return gen_thicken(n, k, seed);
    }
    throw Error("unknown model");
}

/// k as a function of n: "log" = round(log2 n), "2log" = 2 round(log2 n),
/// "sqrt" = round(sqrt n), or a positive integer constant. Never below 1.
inline std::optional<int> resolve_k(std::string_view policy, int n) {
    const double x = std::max(1, n);
    double k;
    if (policy == "log") k = std::round(std::log2(x));
    else if (policy == "2log") k = 2 * std::round(std::log2(x));
    else if (policy == "sqrt") k = std::round(std::sqrt(x));
    else {
        try {
            std::size_t used = 0;
            const int c = std::stoi(std::string(policy), &used);
            if (used != policy.size() || c < 1) return std::nullopt;
            return c;
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    return std::max(1, static_cast<int>(k));
}

}  // namespace cliquepick::gen

#endif
