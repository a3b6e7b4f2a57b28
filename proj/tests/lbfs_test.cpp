#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "support.hpp"

using namespace cptest;

namespace {

// Later neighbors pairwise adjacent, straight from the definition.
bool peo_by_definition(const UndirectedGraph& g, const std::vector<Vertex>& rho) {
    std::vector<std::size_t> pos(g.size());
    for (std::size_t i = 0; i < rho.size(); ++i) pos[rho[i]] = i;
    for (std::size_t v = 0; v < g.size(); ++v) {
        std::vector<Vertex> later;
        for (Vertex w : g.adj[v])
            if (pos[w] > pos[v]) later.push_back(w);
        for (std::size_t i = 0; i < later.size(); ++i)
            for (std::size_t j = i + 1; j < later.size(); ++j)
                if (!g.adjacent(later[i], later[j])) return false;
    }
    return true;
}

// Lexicographic labels compared directly: each visited vertex must have a
// label (sequence of visit times of earlier neighbors, most recent first)
// no smaller than any unvisited vertex at that moment.
bool is_lbfs_by_definition(const UndirectedGraph& g, const std::vector<Vertex>& order) {
    const std::size_t n = g.size();
    std::vector<std::vector<int>> label(n);
    std::vector<char> done(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex v = order[i];
        for (std::size_t w = 0; w < n; ++w)
            if (!done[w] && label[w] > label[v]) return false;
        done[v] = 1;
        for (Vertex w : g.adj[v])
            if (!done[w]) label[w].push_back(static_cast<int>(n - i));
    }
    return true;
}

std::vector<Vertex> reversed(std::vector<Vertex> v) {
    std::reverse(v.begin(), v.end());
    return v;
}

}  // namespace

TEST(Lbfs, CompleteGraphAnyOrder) {
    const Uccg g = complete(3);
    auto o = lbfs(g.graph()).order;
    EXPECT_EQ(o.size(), 3u);
    EXPECT_TRUE(is_peo(g.graph(), reversed(o)));
}

TEST(Lbfs, PathFromMiddle) {
    const Uccg g = path(3);
    for (std::uint64_t s = 0; s < 10; ++s) {
        auto o = lbfs_from(g.graph(), 1, TieBreak::seeded(s)).order;
        EXPECT_EQ(o[0], 1);
        EXPECT_TRUE(o == (std::vector<Vertex>{1, 0, 2}) || o == (std::vector<Vertex>{1, 2, 0}));
        EXPECT_TRUE(is_peo(g.graph(), reversed(o)));
    }
}

TEST(Lbfs, CycleHasNoPeo) {
    const UndirectedGraph c = cycle(4);
    EXPECT_FALSE(is_peo(c, reversed(lbfs(c).order)));
    EXPECT_FALSE(is_chordal(c));
    std::vector<Vertex> rho(4);
    std::iota(rho.begin(), rho.end(), 0);
    do {
        EXPECT_FALSE(is_peo(c, rho));
    } while (std::next_permutation(rho.begin(), rho.end()));
}

TEST(Lbfs, IsPeoExamples) {
    const Uccg p = path(3);
    EXPECT_TRUE(is_peo(p.graph(), std::vector<Vertex>{0, 2, 1}));
    EXPECT_FALSE(is_peo(p.graph(), std::vector<Vertex>{1, 0, 2}));
    const Uccg k = complete(5);
    std::vector<Vertex> rho(5);
    std::iota(rho.begin(), rho.end(), 0);
    do {
        EXPECT_TRUE(is_peo(k.graph(), rho));
    } while (std::next_permutation(rho.begin(), rho.end()));
}

TEST(Lbfs, IsPeoRejectsNonPermutations) {
    const Uccg p = path(3);
    EXPECT_FALSE(is_peo(p.graph(), std::vector<Vertex>{0, 1}));
    EXPECT_FALSE(is_peo(p.graph(), std::vector<Vertex>{0, 0, 1}));
    EXPECT_FALSE(is_peo(p.graph(), std::vector<Vertex>{0, 1, 3}));
}

TEST(Lbfs, IsPeoMatchesDefinitionOnAllOrderings) {
    for (const auto& g : {three_cliques(), clique_chain(), diamond()}) {
        std::vector<Vertex> rho(g.size());
        std::iota(rho.begin(), rho.end(), 0);
        do {
            EXPECT_EQ(is_peo(g.graph(), rho), peo_by_definition(g.graph(), rho));
        } while (std::next_permutation(rho.begin(), rho.end()));
    }
}

TEST(Lbfs, Chordality) {
    EXPECT_TRUE(is_chordal(clique_chain().graph()));
    EXPECT_TRUE(is_chordal(random_tree(50, 2).graph()));
    EXPECT_FALSE(is_chordal(cycle(6)));
    // 4-cycle with a pendant triangle is still not chordal.
    EXPECT_FALSE(is_chordal(plain(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}, {4, 5}, {5, 3}})));
}

TEST(Lbfs, ReversedLbfsIsPeoOnRandomChordalGraphs) {
    std::size_t checked = 0;
    for (const auto& g : corpus(1000, 60, 2024)) {
        auto o = lbfs(g.graph()).order;
        EXPECT_TRUE(is_peo(g.graph(), reversed(o)));
        auto r = lbfs(g.graph(), TieBreak::seeded(checked)).order;
        EXPECT_TRUE(is_peo(g.graph(), reversed(r)));
        ++checked;
    }
    EXPECT_EQ(checked, 1000u);
}

TEST(Lbfs, SatisfiesLexicographicDefinition) {
    for (const auto& g : corpus(100, 25, 77)) {
        EXPECT_TRUE(is_lbfs_by_definition(g.graph(), lbfs(g.graph()).order));
        EXPECT_TRUE(is_lbfs_by_definition(g.graph(), lbfs(g.graph(), TieBreak::seeded(5)).order));
    }
    EXPECT_TRUE(is_lbfs_by_definition(cycle(7), lbfs(cycle(7)).order));
}

TEST(Lbfs, DefinitionAgreesWithPeoOnSmallGraphs) {
    // Chordal iff reversed LBFS is a PEO, checked on every graph with 5
    // vertices against the definition of a PEO over all orderings.
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) pairs.emplace_back(u, v);
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        Edges e;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1u) e.push_back(pairs[i]);
        const UndirectedGraph g = plain(5, e);
        bool any = false;
        std::vector<Vertex> rho{0, 1, 2, 3, 4};
        do {
            any = any || peo_by_definition(g, rho);
        } while (!any && std::next_permutation(rho.begin(), rho.end()));
        EXPECT_EQ(is_chordal(g), any) << mask;
    }
}
