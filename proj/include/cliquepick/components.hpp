#ifndef CLIQUEPICK_COMPONENTS_HPP
#define CLIQUEPICK_COMPONENTS_HPP

#include <algorithm>
#include <span>
#include <vector>

#include "cliquepick/errors.hpp"
#include "cliquepick/graph.hpp"
#include "cliquepick/lbfs.hpp"
#include "cliquepick/uccg.hpp"

namespace cliquepick {

namespace detail {

// Computes the undirected components left after a clique is placed at the
// front of the topological ordering. Runs an LBFS from the sequence
// (K, V \ K), visiting K in the given order; whenever a vertex outside K
// and outside every recorded class is visited, its class X is recorded and
// the connected components of G[X] are emitted. Buffers are reused across
// calls on the same graph.
class ComponentFinder {
  public:
    explicit ComponentFinder(const UndirectedGraph& g)
        : g_(g), sweep_(g.adj), recorded_(g.size(), 0), in_class_(g.size(), 0), in_k_(g.size(), 0) {}

    // Local vertex sets, each sorted. The clique must be valid (see
    // check_clique).
    std::vector<VertexSet> run(std::span<const Vertex> ordered_clique) {
        std::vector<VertexSet> out;
        sweep_.reset(ordered_clique);
        std::fill(recorded_.begin(), recorded_.end(), 0);
        for (Vertex v : ordered_clique) in_k_[v] = 1;
        for (Vertex v : ordered_clique) sweep_.visit(v);
        while (!sweep_.done()) {
            const Vertex v = sweep_.front();
            if (!recorded_[v] && !in_k_[v]) emit(sweep_.first_class(), out);
            sweep_.visit(v);
        }
        for (Vertex v : ordered_clique) in_k_[v] = 0;
        return out;
    }

    bool is_clique(std::span<const Vertex> vs) {
        for (Vertex v : vs) {
            if (v < 0 || static_cast<std::size_t>(v) >= g_.size() || in_k_[v]) {
                for (Vertex w : vs)
                    if (w >= 0 && static_cast<std::size_t>(w) < g_.size()) in_k_[w] = 0;
                return false;  // out of range or repeated
            }
            in_k_[v] = 1;
        }
        bool ok = true;
        for (Vertex v : vs) {
            std::size_t hits = 0;
            for (Vertex w : g_.adj[v]) hits += in_k_[w];
            if (hits + 1 != vs.size()) ok = false;
        }
        for (Vertex v : vs) in_k_[v] = 0;
        return ok;
    }

  private:
    void emit(std::span<const Vertex> cls, std::vector<VertexSet>& out) {
        for (Vertex v : cls) {
            recorded_[v] = 1;
            in_class_[v] = 1;
        }
        for (Vertex s : cls) {
            if (in_class_[s] != 1) continue;
            VertexSet comp{s};
            in_class_[s] = 2;
            for (std::size_t head = 0; head < comp.size(); ++head) {
                for (Vertex w : g_.adj[comp[head]]) {
                    if (in_class_[w] == 1) {
                        in_class_[w] = 2;
                        comp.push_back(w);
                    }
                }
            }
            std::sort(comp.begin(), comp.end());
            out.push_back(std::move(comp));
        }
        for (Vertex v : cls) in_class_[v] = 0;
    }

    const UndirectedGraph& g_;
    LexSweep sweep_;
    std::vector<char> recorded_;
    std::vector<char> in_class_;
    std::vector<char> in_k_;
};

inline std::vector<Vertex> to_local(const Uccg& g, std::span<const Vertex> labels) {
    std::vector<Vertex> local;
    local.reserve(labels.size());
    for (Vertex l : labels) {
        Vertex v = g.local_of(l);
        if (v < 0) throw NotAClique();
        local.push_back(v);
    }
    return local;
}

inline std::vector<Uccg> build_components(const Uccg& g, const std::vector<VertexSet>& sets) {
    std::vector<Uccg> out;
    std::vector<Vertex> map(g.size(), -1);
    for (const auto& s : sets) out.push_back(Uccg::trusted(induced_local(g.graph(), s, map)));
    std::sort(out.begin(), out.end(), [](const Uccg& a, const Uccg& b) { return a.key() < b.key(); });
    return out;
}

}  // namespace detail

/// Components of G^{π(K)} restricted to V \ K for the clique ordering piK
/// (global labels), sorted by key. Singletons included.
inline std::vector<Uccg> components_after_permutation(const Uccg& g, std::span<const Vertex> piK) {
    auto local = detail::to_local(g, piK);
    detail::ComponentFinder finder(g.graph());
    if (!finder.is_clique(local)) throw NotAClique();
    return detail::build_components(g, finder.run(local));
}

/// C_G(K) for a clique K given as global labels.
inline std::vector<Uccg> components_after_clique(const Uccg& g, VertexSet K) {
    std::sort(K.begin(), K.end());
    return components_after_permutation(g, K);
}

}  // namespace cliquepick

#endif
