#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace cptest;

namespace {

std::set<VertexSet> label_cliques(const Uccg& g, const CliqueTree& t) {
    std::set<VertexSet> out;
    for (const auto& c : t.cliques) out.insert(g.graph().to_labels(c));
    return out;
}

std::multiset<VertexSet> label_separators(const Uccg& g, const CliqueTree& t) {
    std::multiset<VertexSet> out;
    for (const auto& s : minimal_separators(t)) out.insert(g.graph().to_labels(s));
    return out;
}

bool is_clique(const UndirectedGraph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j])) return false;
    return true;
}

// Maximal cliques by brute force over vertex subsets (n <= 16).
std::set<VertexSet> maximal_cliques_naive(const UndirectedGraph& g) {
    const std::size_t n = g.size();
    std::vector<VertexSet> cliques;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        VertexSet s;
        for (std::size_t v = 0; v < n; ++v)
            if (mask >> v & 1u) s.push_back(static_cast<Vertex>(v));
        if (is_clique(g, s)) cliques.push_back(s);
    }
    std::set<VertexSet> out;
    for (const auto& c : cliques) {
        bool maximal = true;
        for (const auto& d : cliques)
            if (d.size() > c.size() && is_subset(c, d)) maximal = false;
        if (maximal) out.insert(c);
    }
    return out;
}

// Whether removing s separates some a and b that are fully adjacent to a
// component each (s is a minimal a-b separator): at least two components of
// G - s have every vertex of s as a neighbor.
bool is_minimal_separator(const UndirectedGraph& g, const VertexSet& s) {
    const std::size_t n = g.size();
    Adjacency rest(n);
    std::vector<char> in_s(n, 0);
    for (Vertex v : s) in_s[v] = 1;
    for (std::size_t v = 0; v < n; ++v)
        if (!in_s[v])
            for (Vertex w : g.adj[v])
                if (!in_s[w]) rest[v].push_back(w);
    int full = 0;
    for (const auto& comp : connected_components(rest)) {
        if (in_s[comp[0]]) continue;
        std::set<Vertex> touched;
        for (Vertex v : comp)
            for (Vertex w : g.adj[v])
                if (in_s[w]) touched.insert(w);
        if (touched.size() == s.size()) ++full;
    }
    return full >= 2;
}

void check_tree_invariants(const Uccg& g, const CliqueTree& t) {
    const auto& h = g.graph();
    const std::size_t k = t.size();
    ASSERT_GE(k, 1u);
    EXPECT_LE(k, g.size());
    EXPECT_EQ(t.bfs_order.size(), k);
    EXPECT_EQ(t.parent[t.root], t.root);
    // Every clique maximal, none contained in another, union is V.
    std::vector<char> covered(g.size(), 0);
    for (std::size_t x = 0; x < k; ++x) {
        EXPECT_TRUE(is_clique(h, t.cliques[x]));
        for (Vertex v : t.cliques[x]) covered[v] = 1;
        for (std::size_t y = 0; y < k; ++y) {
            if (x == y) continue;
            EXPECT_FALSE(is_subset(t.cliques[x], t.cliques[y]));
        }
    }
    for (char c : covered) EXPECT_TRUE(c);
    // Running intersection: nodes holding v form a connected subtree, i.e.
    // exactly one of them has a parent not holding v.
    for (std::size_t v = 0; v < g.size(); ++v) {
        int tops = 0;
        for (std::size_t x = 0; x < k; ++x) {
            if (!contains(t.cliques[x], static_cast<Vertex>(v))) continue;
            const int p = t.parent[x];
            if (static_cast<std::size_t>(p) == x || !contains(t.cliques[p], static_cast<Vertex>(v))) ++tops;
        }
        EXPECT_EQ(tops, 1) << "vertex " << v;
    }
    // Separators: |cliques| - 1 of them, each a clique and a minimal separator.
    auto seps = minimal_separators(t);
    EXPECT_EQ(seps.size(), k - 1);
    for (std::size_t x = 0; x < k; ++x) {
        if (static_cast<int>(x) == t.root) continue;
        EXPECT_EQ(t.separators[x], set_intersection(t.cliques[x], t.cliques[t.parent[x]]));
        EXPECT_TRUE(is_clique(h, t.separators[x]));
        EXPECT_TRUE(is_minimal_separator(h, t.separators[x]));
    }
}

}  // namespace

TEST(CliqueTree, CompleteGraphSingleNode) {
    const Uccg g = complete(5);
    auto t = clique_tree(g.graph());
    ASSERT_EQ(t.size(), 1u);
    EXPECT_EQ(t.cliques[0], g.labels());
    EXPECT_TRUE(minimal_separators(t).empty());
}

TEST(CliqueTree, ThreeCliques) {
    const Uccg g = three_cliques();
    auto t = clique_tree(g.graph());
    EXPECT_EQ(label_cliques(g, t), (std::set<VertexSet>{L({1, 2, 3}), L({2, 3, 4, 5}), L({2, 3, 5, 6})}));
    EXPECT_EQ(label_separators(g, t), (std::multiset<VertexSet>{L({2, 3}), L({2, 3, 5})}));
    check_tree_invariants(g, t);
}

TEST(CliqueTree, Paths) {
    const Uccg p3 = path(3);
    auto t = clique_tree(p3.graph());
    EXPECT_EQ(label_cliques(p3, t), (std::set<VertexSet>{L({1, 2}), L({2, 3})}));
    EXPECT_EQ(label_separators(p3, t), (std::multiset<VertexSet>{L({2})}));

    const Uccg p4 = path(4);
    auto t4 = clique_tree(p4.graph());
    EXPECT_EQ(label_separators(p4, t4), (std::multiset<VertexSet>{L({2}), L({3})}));
}

TEST(CliqueTree, DefaultRootHoldsLowestLabel) {
    for (const auto& g : corpus(50, 20, 4)) {
        auto t = clique_tree(g.graph());
        EXPECT_TRUE(contains(t.cliques[t.root], 0));
    }
}

TEST(CliqueTree, RejectsNonChordal) { EXPECT_THROW(clique_tree(cycle(5)), NotChordal); }

TEST(CliqueTree, InvariantsOnRandomGraphs) {
    for (const auto& g : corpus(300, 16, 8)) {
        check_tree_invariants(g, clique_tree(g.graph()));
        check_tree_invariants(g, clique_tree(g.graph(), CliqueTreeOptions::seeded(3)));
    }
}

TEST(CliqueTree, CliquesMatchBruteForce) {
    for (const auto& g : corpus(200, 14, 31)) {
        auto t = clique_tree(g.graph());
        std::set<VertexSet> found(t.cliques.begin(), t.cliques.end());
        EXPECT_EQ(found, maximal_cliques_naive(g.graph()));
    }
}

TEST(CliqueTree, CliquesAndSeparatorsIndependentOfTieBreak) {
    for (const auto& g : corpus(60, 40, 12)) {
        auto base = clique_tree(g.graph());
        const auto cliques = label_cliques(g, base);
        std::set<VertexSet> seps;
        for (const auto& s : minimal_separators(base)) seps.insert(s);
        for (std::uint64_t s = 1; s <= 10; ++s) {
            auto t = clique_tree(g.graph(), CliqueTreeOptions::seeded(s));
            EXPECT_EQ(label_cliques(g, t), cliques);
            std::set<VertexSet> other;
            for (const auto& x : minimal_separators(t)) other.insert(x);
            EXPECT_EQ(other, seps);
            check_tree_invariants(g, t);
        }
    }
}

TEST(CliqueTree, LargeGraphStaysLinear) {
    const Uccg g = gen::gen_subtree(2000, 11, 5);
    auto t = clique_tree(g.graph());
    EXPECT_LE(t.size(), g.size());
    EXPECT_EQ(minimal_separators(t).size(), t.size() - 1);
}
