#ifndef CLIQUEPICK_TESTS_SUPPORT_HPP
#define CLIQUEPICK_TESTS_SUPPORT_HPP

// Fixtures and independent reference computations shared by the unit tests
// and the acceptance binary. Graph literals use 1-indexed vertex names like
// the file format; internally vertex i is label i-1.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cliquepick/cliquepick.hpp"

namespace cptest {

using namespace cliquepick;

using Edges = std::vector<std::pair<Vertex, Vertex>>;

inline Edges zero_based(std::initializer_list<std::pair<int, int>> one_based) {
    Edges e;
    for (auto [u, v] : one_based) e.emplace_back(u - 1, v - 1);
    return e;
}

inline VertexSet L(std::initializer_list<int> one_based) {
    VertexSet s;
    for (int v : one_based) s.push_back(v - 1);
    std::sort(s.begin(), s.end());
    return s;
}

inline VertexSet all_labels(int n) {
    VertexSet s(n);
    std::iota(s.begin(), s.end(), 0);
    return s;
}

inline UndirectedGraph plain(int n, const Edges& e) { return make_undirected(n, all_labels(n), e); }

inline Uccg uccg(int n, std::initializer_list<std::pair<int, int>> one_based) {
    return Uccg::from(plain(n, zero_based(one_based)));
}

// Cliques {1,2,3}, {2,3,4,5}, {2,3,5,6}; 54 AMOs.
inline Uccg three_cliques() {
    return uccg(6, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}, {2, 6}, {3, 6}, {5, 6}});
}

// K_4 on {1,2,3,4} with {3,4,5,6} and {5,6,7} hanging off it.
inline Uccg clique_chain() {
    return uccg(7, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}, {5, 7},
                    {6, 7}});
}

// Two triangles sharing the edge 2-3.
inline Uccg diamond() { return uccg(4, {{1, 2}, {2, 4}, {4, 3}, {3, 1}, {2, 3}}); }

inline Uccg path(int n) {
    Edges e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Uccg::from(plain(n, e));
}

inline Uccg complete(int n) {
    Edges e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Uccg::from(plain(n, e));
}

inline UndirectedGraph cycle(int n) {
    Edges e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return plain(n, e);
}

inline Uccg random_tree(int n, std::uint64_t seed) {
    Rng rng(seed);
    return Uccg::from(gen::build(n, gen::random_tree(n, rng)));
}

/// Seeded mixture of the four generator families with n in [1, max_n].
inline std::vector<Uccg> corpus(std::size_t count, int max_n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Uccg> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const int n = static_cast<int>(rng.between(1, max_n));
        const auto model = static_cast<gen::Model>(i % 4);
        int k = static_cast<int>(rng.between(1, 4));
        // Small subtrees rarely intersect into a connected graph.
        if (model == gen::Model::Subtree) k = std::max(2, *gen::resolve_k("log", n)) + static_cast<int>(rng.between(0, 2));
        out.push_back(gen::generate(model, n, k, rng.next()));
    }
    return out;
}

inline std::vector<VertexSet> maximal_cliques(const Uccg& g) {
    auto t = clique_tree(g.graph());
    std::vector<VertexSet> out;
    for (const auto& c : t.cliques) out.push_back(g.graph().to_labels(c));
    std::sort(out.begin(), out.end());
    return out;
}

// Δ(G): distinct separators of a clique tree, as labels.
inline std::vector<VertexSet> min_separators(const Uccg& g) {
    auto t = clique_tree(g.graph());
    std::set<VertexSet> out;
    for (const auto& s : minimal_separators(t)) out.insert(g.graph().to_labels(s));
    return {out.begin(), out.end()};
}

inline bool is_maximal_clique(const Uccg& g, const VertexSet& s) {
    auto cliques = maximal_cliques(g);
    return std::binary_search(cliques.begin(), cliques.end(), s);
}

struct DeltaPiTerm {
    VertexSet set;
    Count phi;
    Count product;
};

/// Sum over S in Δ ∪ Π of φ(S, {S' in Δ : S' ⊊ S}) · Π #AMO(H) over
/// H in C_G(S), with φ by brute force.
inline std::vector<DeltaPiTerm> delta_pi_terms(const Uccg& g) {
    const auto delta = min_separators(g);
    std::set<VertexSet> sets(delta.begin(), delta.end());
    for (auto& k : maximal_cliques(g)) sets.insert(k);
    std::vector<DeltaPiTerm> out;
    for (const auto& s : sets) {
        std::vector<VertexSet> r;
        for (const auto& d : delta)
            if (d.size() < s.size() && is_subset(d, s)) r.push_back(d);
        DeltaPiTerm term{s, phi_naive(s, r), 1};
        for (const auto& h : components_after_clique(g, s)) term.product *= count_amos(h);
        out.push_back(std::move(term));
    }
    return out;
}

inline Count delta_pi_count(const Uccg& g) {
    Count sum = 0;
    for (const auto& t : delta_pi_terms(g)) sum += t.phi * t.product;
    return sum;
}

/// Exact output distribution of sample_amo: walks every branch of the
/// sampler's random choices with rational probabilities.
class SamplerDistribution {
  public:
    SamplerDistribution(const Uccg& g, const SamplerModel& model) : g_(g), model_(model) {
        state({&g.key()}, {}, mpq_class(1));
    }

    const std::map<Dag, mpq_class>& probabilities() const { return dist_; }
    std::size_t paths() const { return paths_; }
    bool all_paths_valid() const { return valid_; }

  private:
    using Pending = std::vector<const VertexSet*>;

    void state(Pending pending, std::vector<Vertex> tau, const mpq_class& p) {
        if (pending.empty()) {
            ++paths_;
            Dag d = orient_by_ordering(g_, tau);
            if (!is_acyclic(d) || !v_structures(d).empty()) valid_ = false;
            dist_[d] += p;
            return;
        }
        const VertexSet* key = pending.back();
        pending.pop_back();
        const auto& e = model_.entry(*key);
        for (const auto& rec : e.records) {
            if (rec.weight == 0) continue;
            mpq_class q = p * mpq_class(rec.weight, e.total);
            q.canonicalize();
            Pending next = pending;
            for (auto it = rec.children.rbegin(); it != rec.children.rend(); ++it) next.push_back(&*it);
            detail::PermDraw draw(rec.clique, rec.level, SamplerModel::phi_table(rec));
            perm(draw, next, tau, q);
        }
    }

    void perm(const detail::PermDraw& draw, const Pending& pending, std::vector<Vertex>& tau, const mpq_class& p) {
        if (draw.remaining() == 0) {
            state(pending, tau, p);
            return;
        }
        for (std::size_t i = 0; i < draw.remaining(); ++i) {
            const Count& w = draw.weight(i);
            if (w == 0) continue;
            mpq_class q = p * mpq_class(w, draw.total());
            q.canonicalize();
            detail::PermDraw next = draw;
            tau.push_back(next.take(i));
            perm(next, pending, tau, q);
            tau.pop_back();
        }
    }

    const Uccg& g_;
    const SamplerModel& model_;
    std::map<Dag, mpq_class> dist_;
    std::size_t paths_ = 0;
    bool valid_ = true;
};

/// Every connected chordal graph on n vertices, one per isomorphism class
/// (canonical form: lexicographically smallest adjacency bitmask over all
/// relabelings).
inline std::vector<Uccg> all_connected_chordal(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<int> perm(n);
    std::set<std::uint32_t> seen;
    std::vector<Uccg> out;
    const std::uint32_t limit = 1u << pairs.size();
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        Edges e;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1u) e.push_back(pairs[i]);
        if (e.size() + 1 < static_cast<std::size_t>(n)) continue;
        UndirectedGraph g = plain(n, e);
        if (!is_connected(g) || !is_chordal(g)) continue;
        std::iota(perm.begin(), perm.end(), 0);
        std::uint32_t best = UINT32_MAX;
        do {
            std::uint32_t code = 0;
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                auto [a, b] = pairs[i];
                if (g.adjacent(perm[a], perm[b])) code |= 1u << i;
            }
            best = std::min(best, code);
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (seen.insert(best).second) out.push_back(Uccg::trusted(std::move(g)));
    }
    return out;
}

}  // namespace cptest

#endif
