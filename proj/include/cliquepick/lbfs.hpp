#ifndef CLIQUEPICK_LBFS_HPP
#define CLIQUEPICK_LBFS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "cliquepick/graph.hpp"
#include "cliquepick/random.hpp"

namespace cliquepick {

/// Choice of "an arbitrary vertex" from the first class during LBFS.
/// The default takes the vertex at the front of the class, which is
/// deterministic; `seeded` draws uniformly from the class.
struct TieBreak {
    bool randomized = false;
    std::uint64_t seed = 0;

    static TieBreak first() { return {}; }
    static TieBreak seeded(std::uint64_t s) { return {true, s}; }
};

namespace detail {

// Lexicographic BFS by partition refinement. The unvisited vertices live in
// `slots_`, where every class occupies a contiguous range and classes are
// ordered by position; the first class therefore always starts at
// position `visited_`. Refining by a vertex moves each unvisited neighbor
// to the front of its class and detaches the moved prefix as a new class
// placed immediately before the old one. Each visit costs O(deg).
class LexSweep {
  public:
    explicit LexSweep(const Adjacency& adj) : adj_(adj) {
        const std::size_t n = adj.size();
        slots_.resize(n);
        pos_.resize(n);
        cls_.resize(n);
    }

    // Initial sequence: (front, rest) where rest is every other vertex in
    // ascending order. `front` may be empty.
    void reset(std::span<const Vertex> front) {
        const std::size_t n = adj_.size();
        start_.clear();
        end_.clear();
        split_.clear();
        stamp_.clear();
        visited_ = 0;
        ++round_;
        std::vector<char>& in_front = scratch_;
        in_front.assign(n, 0);
        std::size_t p = 0;
        for (Vertex v : front) {
            in_front[v] = 1;
            place(v, p++, 0);
        }
        for (std::size_t v = 0; v < n; ++v)
            if (!in_front[v]) place(static_cast<Vertex>(v), p++, front.empty() ? 0 : 1);
        if (!front.empty()) new_class(0, front.size());
        if (front.size() < n || front.empty()) new_class(front.size(), n);
    }

    bool done() const { return visited_ == slots_.size(); }
    std::size_t visited() const { return visited_; }

    // The current first class as a range of slots.
    std::span<const Vertex> first_class() const {
        const int c = cls_[slots_[visited_]];
        return {slots_.data() + start_[c], slots_.data() + end_[c]};
    }

    Vertex front() const { return slots_[visited_]; }

    bool is_visited(Vertex v) const { return pos_[v] < visited_; }

    // Visits v, which must belong to the first class, and refines.
    void visit(Vertex v) {
        const int c = cls_[v];
        swap_slots(pos_[v], start_[c]);
        ++start_[c];
        ++visited_;
        ++round_;
        for (Vertex w : adj_[v]) {
            if (is_visited(w)) continue;
            const int wc = cls_[w];
            if (stamp_[wc] != round_) {
                stamp_[wc] = round_;
                split_[wc] = new_class(start_[wc], start_[wc]);
            }
            const int nc = split_[wc];
            swap_slots(pos_[w], start_[wc]);
            ++start_[wc];
            ++end_[nc];
            cls_[w] = nc;
        }
    }

  private:
    void place(Vertex v, std::size_t p, int c) {
        slots_[p] = v;
        pos_[v] = p;
        cls_[v] = c;
    }

    int new_class(std::size_t s, std::size_t e) {
        start_.push_back(s);
        end_.push_back(e);
        split_.push_back(-1);
        stamp_.push_back(0);
        return static_cast<int>(start_.size()) - 1;
    }

    void swap_slots(std::size_t a, std::size_t b) {
        if (a == b) return;
        Vertex va = slots_[a], vb = slots_[b];
        slots_[a] = vb;
        slots_[b] = va;
        pos_[vb] = a;
        pos_[va] = b;
    }

    const Adjacency& adj_;
    std::vector<Vertex> slots_;
    std::vector<std::size_t> pos_;
    std::vector<int> cls_;
    std::vector<std::size_t> start_, end_;
    std::vector<int> split_;
    std::vector<std::uint64_t> stamp_;
    std::vector<char> scratch_;
    std::size_t visited_ = 0;
    std::uint64_t round_ = 0;
};

inline Vertex pick(const LexSweep& sweep, Rng* rng) {
    if (rng == nullptr) return sweep.front();
    auto cls = sweep.first_class();
    return cls[rng->below(cls.size())];
}

}  // namespace detail

/// LBFS visit order (local vertices). Its reverse is a perfect elimination
/// ordering exactly when the graph is chordal.
struct LbfsOrdering {
    std::vector<Vertex> order;
};

namespace detail {

inline LbfsOrdering run_lbfs(const UndirectedGraph& g, std::span<const Vertex> front, TieBreak tie) {
    detail::LexSweep sweep(g.adj);
    sweep.reset(front);
    Rng rng(tie.seed);
    LbfsOrdering out;
    out.order.reserve(g.size());
    while (!sweep.done()) {
        Vertex v = detail::pick(sweep, tie.randomized ? &rng : nullptr);
        out.order.push_back(v);
        sweep.visit(v);
    }
    return out;
}

}  // namespace detail

inline LbfsOrdering lbfs(const UndirectedGraph& g, TieBreak tie = {}) { return detail::run_lbfs(g, {}, tie); }

/// LBFS whose first visited vertex is `start` (local).
inline LbfsOrdering lbfs_from(const UndirectedGraph& g, Vertex start, TieBreak tie = {}) {
    const Vertex front[] = {start};
    return detail::run_lbfs(g, front, tie);
}

// Linear-time check (Rose, Tarjan, Lueker): for each v with later
// neighbors, all of them but the earliest one u must be neighbors of u.
inline bool is_peo(const UndirectedGraph& g, std::span<const Vertex> rho) {
    const std::size_t n = g.size();
    if (rho.size() != n) return false;
    std::vector<std::size_t> pos(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rho[i] < 0 || static_cast<std::size_t>(rho[i]) >= n || pos[rho[i]] != n) return false;
        pos[rho[i]] = i;
    }
    std::vector<std::vector<Vertex>> required(n);
    for (std::size_t v = 0; v < n; ++v) {
        Vertex first = -1;
        for (Vertex w : g.adj[v])
            if (pos[w] > pos[v] && (first < 0 || pos[w] < pos[first])) first = w;
        if (first < 0) continue;
        for (Vertex w : g.adj[v])
            if (pos[w] > pos[v] && w != first) required[first].push_back(w);
    }
    std::vector<std::size_t> mark(n, n);
    for (std::size_t u = 0; u < n; ++u) {
        if (required[u].empty()) continue;
        for (Vertex w : g.adj[u]) mark[w] = u;
        for (Vertex w : required[u])
            if (mark[w] != u) return false;
    }
    return true;
}

inline bool is_chordal(const UndirectedGraph& g) {
    auto order = lbfs(g).order;
    std::reverse(order.begin(), order.end());
    return is_peo(g, order);
}

}  // namespace cliquepick

#endif
