#ifndef CLIQUEPICK_COUNTING_HPP
#define CLIQUEPICK_COUNTING_HPP

#include <chrono>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cliquepick/clique_tree.hpp"
#include "cliquepick/components.hpp"
#include "cliquepick/count.hpp"
#include "cliquepick/errors.hpp"
#include "cliquepick/graph.hpp"
#include "cliquepick/phi.hpp"
#include "cliquepick/uccg.hpp"

namespace cliquepick {

/// Memoized #AMO per explored UCCG, keyed by its sorted global labels. Every
/// explored graph is an induced subgraph of the input, so the vertex set
/// identifies it.
using MemoTable = std::unordered_map<VertexSet, Count, VertexSetHash>;

struct CountOptions {
    CliqueTreeOptions tree;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct LevelStats {
    std::size_t uccgs = 0;         // distinct UCCGs first explored at this depth
    std::size_t max_vertices = 0;  // largest of them
};

struct CountStats {
    std::size_t explored = 0;  // distinct memo keys created, the input included
    std::size_t cliques = 0;   // |Π| of the input graph
    std::vector<LevelStats> levels;
};

/// Forbidden prefixes per tree node (local vertex sets): the separators on
/// the root path that are contained in the node's clique, in path order
/// (hence strictly nested). A child's chain is its parent's chain filtered
/// by inclusion, plus the separator to the parent.
inline std::vector<FPChain> fp_sets(const CliqueTree& t) {
    std::vector<FPChain> chains(t.size());
    for (int x : t.bfs_order) {
        if (x == t.root) continue;
        const int p = t.parent[x];
        auto& chain = chains[x].sets;
        for (const auto& s : chains[p].sets)
            if (is_subset(s, t.cliques[x])) chain.push_back(s);
        if (chain.empty() || chain.back() != t.separators[x]) chain.push_back(t.separators[x]);
    }
    return chains;
}

namespace detail {

struct NodeTerm {
    int node = 0;
    FPChain chain;                    // local sets
    std::vector<VertexSet> children;  // keys (global labels) of C_G(clique)
    Count phi;
    Count weight;  // phi · Π #AMO(child), set once children are resolved
};

struct Frame {
    Uccg graph;
    CliqueTree tree;
    std::vector<NodeTerm> terms;
    std::size_t term = 0, child = 0;
    std::size_t depth = 0;
};

inline void check_deadline(const CountOptions& opts) {
    if (opts.deadline && std::chrono::steady_clock::now() > *opts.deadline) throw Timeout();
}

inline Frame expand(Uccg g, const CountOptions& opts, std::size_t depth) {
    Frame f{std::move(g), {}, {}, 0, 0, depth};
    f.tree = clique_tree(f.graph.graph(), opts.tree);
    auto chains = fp_sets(f.tree);
    ComponentFinder finder(f.graph.graph());
    f.terms.reserve(f.tree.size());
    std::vector<std::size_t> sizes;
    for (int x : f.tree.bfs_order) {
        check_deadline(opts);
        NodeTerm term;
        term.node = x;
        sizes.clear();
        for (const auto& s : chains[x].sets) sizes.push_back(s.size());
        term.phi = phi_chain_sizes(f.tree.cliques[x].size(), sizes);
        for (auto& comp : finder.run(f.tree.cliques[x])) term.children.push_back(f.graph.graph().to_labels(comp));
        term.chain = std::move(chains[x]);
        f.terms.push_back(std::move(term));
    }
    return f;
}

inline Uccg child_graph(const Uccg& parent, const VertexSet& key, std::vector<Vertex>& map) {
    VertexSet local;
    local.reserve(key.size());
    for (Vertex l : key) local.push_back(parent.local_of(l));
    return Uccg::trusted(induced_local(parent.graph(), local, map));
}

struct NoRecorder {
    void operator()(const Frame&, const Count&) const {}
};

/// Clique-Picking with memoization over an explicit stack. `recorder` sees
/// every newly resolved frame (terms carry their weights).
template <class Recorder>
Count clique_picking(const Uccg& g, MemoTable& memo, const CountOptions& opts, Recorder&& recorder,
                     CountStats* stats) {
    if (auto it = memo.find(g.key()); it != memo.end()) return it->second;
    auto note = [&](const Uccg& h, std::size_t depth) {
        if (!stats) return;
        ++stats->explored;
        if (stats->levels.size() <= depth) stats->levels.resize(depth + 1);
        auto& level = stats->levels[depth];
        ++level.uccgs;
        level.max_vertices = std::max(level.max_vertices, h.size());
    };
    std::vector<Frame> stack;
    std::vector<Vertex> map;
    note(g, 0);
    stack.push_back(expand(g, opts, 0));
    if (stats) stats->cliques = stack.back().tree.size();
    while (!stack.empty()) {
        Frame& f = stack.back();
        std::optional<VertexSet> missing;
        for (; f.term < f.terms.size(); ++f.term, f.child = 0) {
            auto& children = f.terms[f.term].children;
            for (; f.child < children.size(); ++f.child) {
                if (!memo.contains(children[f.child])) {
                    missing = children[f.child];
                    break;
                }
            }
            if (missing) break;
        }
        if (missing) {
            map.assign(f.graph.size(), -1);
            Uccg child = child_graph(f.graph, *missing, map);
            const std::size_t depth = f.depth + 1;
            note(child, depth);
            Frame next = expand(std::move(child), opts, depth);
            stack.push_back(std::move(next));  // f is invalid from here on
            continue;
        }
        Count sum = 0;
        for (auto& term : f.terms) {
            term.weight = term.phi;
            for (const auto& key : term.children) term.weight *= memo.at(key);
            sum += term.weight;
        }
        recorder(f, sum);
        memo.emplace(f.graph.key(), sum);
        stack.pop_back();
    }
    return memo.at(g.key());
}

}  // namespace detail

/// Number of acyclic moral orientations of a UCCG (Clique-Picking).
inline Count count_amos(const Uccg& g, MemoTable& memo, const CountOptions& opts = {}) {
    return detail::clique_picking(g, memo, opts, detail::NoRecorder{}, nullptr);
}

inline Count count_amos(const Uccg& g, const CountOptions& opts = {}) {
    MemoTable memo;
    return count_amos(g, memo, opts);
}

struct CountResult {
    Count count;
    CountStats stats;
};

inline CountResult count_with_stats(const Uccg& g, const CountOptions& opts = {}) {
    MemoTable memo;
    CountResult r;
    r.count = detail::clique_picking(g, memo, opts, detail::NoRecorder{}, &r.stats);
    return r;
}

/// Size of the Markov equivalence class of a CPDAG: product over its
/// undirected components.
inline Count count_cpdag(const PartialGraph& g, const CountOptions& opts = {}) {
    Count total = 1;
    MemoTable memo;
    for (const auto& h : undirected_components(g)) total *= count_amos(h, memo, opts);
    return total;
}

}  // namespace cliquepick

#endif
