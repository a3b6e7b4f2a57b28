#ifndef CLIQUEPICK_SAMPLING_HPP
#define CLIQUEPICK_SAMPLING_HPP

#include <algorithm>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cliquepick/count.hpp"
#include "cliquepick/counting.hpp"
#include "cliquepick/errors.hpp"
#include "cliquepick/graph.hpp"
#include "cliquepick/phi.hpp"
#include "cliquepick/random.hpp"
#include "cliquepick/uccg.hpp"

namespace cliquepick {

namespace detail {

struct LazyPhiTable {
    std::once_flag once;
    PhiTable table;
};

}  // namespace detail

/// One clique-tree node of an explored UCCG, in global labels.
struct CliqueRecord {
    VertexSet clique;
    FPChain chain;
    // level[i]: smallest chain index whose set holds clique[i] (chain size
    // when none does).
    std::vector<std::size_t> level;
    std::vector<VertexSet> children;
    Count weight;  // φ(clique, chain) · Π #AMO(child)
    std::shared_ptr<detail::LazyPhiTable> phi = std::make_shared<detail::LazyPhiTable>();
};

struct SamplerEntry {
    std::vector<CliqueRecord> records;
    std::vector<Count> prefix;  // prefix[i] = weight_0 + ... + weight_i
    Count total;
};

/// Per-UCCG clique weights and permutation tables produced by a counting
/// pass. Read-only after construction except for the φ tables, which are
/// built once per record on first use (std::call_once), so concurrent
/// sampling with separate generators is safe.
class SamplerModel {
  public:
    // Runs the recording count on g; returns #AMO(g).
    const Count& add(const Uccg& g, const CountOptions& opts = {}) {
        auto record = [this](const detail::Frame& f, const Count& total) { this->record(f, total); };
        detail::clique_picking(g, memo_, opts, record, nullptr);
        return entries_.at(g.key()).total;
    }

    bool contains(const VertexSet& key) const { return entries_.contains(key); }

    const SamplerEntry& entry(const VertexSet& key) const {
        auto it = entries_.find(key);
        if (it == entries_.end()) throw KeyMissing();
        return it->second;
    }

    std::size_t size() const { return entries_.size(); }

    static const PhiTable& phi_table(const CliqueRecord& r) {
        std::call_once(r.phi->once, [&r] {
            std::vector<std::size_t> sizes;
            for (const auto& x : r.chain.sets) sizes.push_back(x.size());
            r.phi->table = PhiTable(r.clique.size(), sizes);
        });
        return r.phi->table;
    }

  private:
    void record(const detail::Frame& f, const Count& total) {
        const auto& g = f.graph.graph();
        SamplerEntry e;
        e.total = total;
        e.records.reserve(f.terms.size());
        Count running = 0;
        for (const auto& term : f.terms) {
            CliqueRecord r;
            const auto& clique = f.tree.cliques[term.node];
            r.clique = g.to_labels(clique);
            for (const auto& x : term.chain.sets) r.chain.sets.push_back(g.to_labels(x));
            const std::size_t l = r.chain.size();
            r.level.assign(clique.size(), l);
            for (std::size_t i = l; i-- > 0;) {
                for (Vertex v : term.chain.sets[i]) {
                    auto at = std::lower_bound(clique.begin(), clique.end(), v) - clique.begin();
                    r.level[at] = i;
                }
            }
            r.children = term.children;
            r.weight = term.weight;
            running += r.weight;
            e.prefix.push_back(running);
            e.records.push_back(std::move(r));
        }
        entries_.emplace(f.graph.key(), std::move(e));
    }

    std::unordered_map<VertexSet, SamplerEntry, VertexSetHash> entries_;
    MemoTable memo_;
};

inline SamplerModel precount(const Uccg& g, const CountOptions& opts = {}) {
    SamplerModel model;
    model.add(g, opts);
    return model;
}

/// Record i of the entry with probability weight_i / total: a uniform
/// integer in [0, total) located in the prefix sums.
inline const CliqueRecord& draw_clique(const SamplerModel& model, const VertexSet& key, Rng& rng) {
    const auto& e = model.entry(key);
    const Count r = rng.below_count(e.total);
    auto it = std::upper_bound(e.prefix.begin(), e.prefix.end(), r);
    return e.records[static_cast<std::size_t>(it - e.prefix.begin())];
}

namespace detail {

// State of a constrained permutation draw. The next vertex v is chosen
// with weight equal to the number of admissible completions starting with
// v: (m-1)! if v lies in no live chain set, otherwise φ of the remaining
// set under the chain suffix that begins at the first live set holding v
// (all minus v). The weights sum to table.at(m, start).
class PermDraw {
  public:
    PermDraw(std::span<const Vertex> clique, std::span<const std::size_t> level, const PhiTable& table)
        : table_(table), verts_(clique.begin(), clique.end()), level_(level.begin(), level.end()) {}

    std::size_t remaining() const { return verts_.size(); }
    const std::vector<Vertex>& candidates() const { return verts_; }
    bool unconstrained() const { return start_ == table_.chain_length(); }
    const Count& total() const { return table_.at(verts_.size(), start_); }

    const Count& weight(std::size_t i) const {
        const std::size_t m = verts_.size(), l = table_.chain_length();
        if (level_[i] >= l || start_ == l) return factorial(m - 1);
        return table_.at(m - 1, std::max(level_[i], start_));
    }

    // Places candidate i next; returns the vertex.
    Vertex take(std::size_t i) {
        const std::size_t l = table_.chain_length();
        start_ = (level_[i] >= l || start_ == l) ? l : std::max(level_[i], start_);
        const Vertex v = verts_[i];
        verts_[i] = verts_.back();
        level_[i] = level_.back();
        verts_.pop_back();
        level_.pop_back();
        return v;
    }

  private:
    const PhiTable& table_;
    std::vector<Vertex> verts_;
    std::vector<std::size_t> level_;
    std::size_t start_ = 0;  // first live chain index
};

inline void draw_perm_into(std::span<const Vertex> clique, std::span<const std::size_t> level,
                           const PhiTable& table, Rng& rng, std::vector<Vertex>& out) {
    PermDraw draw(clique, level, table);
    while (draw.remaining() > 0) {
        std::size_t pick = 0;
        if (draw.unconstrained()) {
            pick = rng.below(draw.remaining());
        } else {
            Count r = rng.below_count(draw.total());
            for (; pick + 1 < draw.remaining(); ++pick) {
                const Count& w = draw.weight(pick);
                if (r < w) break;
                r -= w;
            }
        }
        out.push_back(draw.take(pick));
    }
}

}  // namespace detail

/// Uniform member of the permutations of K (sorted labels) that do not
/// start with a set of the chain.
inline std::vector<Vertex> draw_perm(const VertexSet& K, const FPChain& chain, const PhiTable& table, Rng& rng) {
    validate_chain(K, chain);
    if (table.clique_size() != K.size() || table.chain_length() != chain.size())
        throw InvalidChain(ChainErrorKind::NotNested);
    for (std::size_t i = 0; i < chain.size(); ++i)
        if (table.chain_size(i) != chain.sets[i].size()) throw InvalidChain(ChainErrorKind::NotNested);
    std::vector<std::size_t> level(K.size(), chain.size());
    for (std::size_t i = chain.size(); i-- > 0;)
        for (Vertex v : chain.sets[i]) level[std::lower_bound(K.begin(), K.end(), v) - K.begin()] = i;
    std::vector<Vertex> out;
    out.reserve(K.size());
    detail::draw_perm_into(K, level, table, rng, out);
    return out;
}

inline std::vector<Vertex> draw_perm(const VertexSet& K, const FPChain& chain, Rng& rng) {
    validate_chain(K, chain);
    std::vector<std::size_t> sizes;
    for (const auto& x : chain.sets) sizes.push_back(x.size());
    return draw_perm(K, chain, PhiTable(K.size(), sizes), rng);
}

struct SampleResult {
    std::vector<Vertex> tau;  // global labels, a topological ordering
    Dag dag;
};

/// Uniform AMO of g: draw a clique by weight, a constrained permutation of
/// it, then recurse into the components left behind. Components are
/// concatenated in the order the LBFS discovered them; arcs between
/// components only point forward in that order.
inline SampleResult sample_amo(const Uccg& g, const SamplerModel& model, Rng& rng) {
    if (!model.contains(g.key())) throw ModelMismatch();
    SampleResult result;
    result.tau.reserve(g.size());
    std::vector<const VertexSet*> pending{&g.key()};
    while (!pending.empty()) {
        const VertexSet& key = *pending.back();
        pending.pop_back();
        const CliqueRecord& rec = draw_clique(model, key, rng);
        detail::draw_perm_into(rec.clique, rec.level, SamplerModel::phi_table(rec), rng, result.tau);
        for (auto it = rec.children.rbegin(); it != rec.children.rend(); ++it) pending.push_back(&*it);
    }
    result.dag = orient_by_ordering(g, result.tau);
    return result;
}

/// Sampler for a whole CPDAG: one model covering all undirected components.
struct CpdagSampler {
    PartialGraph graph;
    std::vector<Uccg> components;
    SamplerModel model;
    Count total = 1;
};

inline CpdagSampler precount_cpdag(const PartialGraph& g, const CountOptions& opts = {}) {
    CpdagSampler s;
    s.graph = g;
    s.components = undirected_components(g);
    for (const auto& h : s.components) s.total *= s.model.add(h, opts);
    return s;
}

/// Keeps the directed edges and orients each component independently.
inline Dag sample_cpdag(const CpdagSampler& sampler, Rng& rng) {
    Dag d = to_dag(sampler.graph);
    for (const auto& h : sampler.components) {
        if (h.size() == 1) continue;
        auto part = sample_amo(h, sampler.model, rng);
        for (int u = 0; u < part.dag.n; ++u)
            d.out[u].insert(d.out[u].end(), part.dag.out[u].begin(), part.dag.out[u].end());
    }
    d.normalize();
    return d;
}

}  // namespace cliquepick

#endif
