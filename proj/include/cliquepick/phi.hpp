#ifndef CLIQUEPICK_PHI_HPP
#define CLIQUEPICK_PHI_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "cliquepick/count.hpp"
#include "cliquepick/errors.hpp"
#include "cliquepick/graph.hpp"

namespace cliquepick {

// φ(S, R): the number of permutations of S that have no member of R as a
// prefix.

/// Strictly nested sets X_1 ⊊ X_2 ⊊ ... ⊊ X_l.
struct FPChain {
    std::vector<VertexSet> sets;

    std::size_t size() const { return sets.size(); }
    bool empty() const { return sets.empty(); }
    friend bool operator==(const FPChain&, const FPChain&) = default;
};

/// φ for a nested chain; only the sizes matter. sizes must be strictly
/// increasing and below set_size. Uses
///   φ(S,R) = |S|! - Σ_i |S \ X_i|! · φ(X_i, {X_1..X_{i-1}})
/// with the l inner values computed bottom-up.
inline Count phi_chain_sizes(std::size_t set_size, std::span<const std::size_t> sizes) {
    std::vector<Count> inner(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        Count v = factorial(sizes[i]);
        for (std::size_t j = 0; j < i; ++j) v -= factorial(sizes[i] - sizes[j]) * inner[j];
        inner[i] = std::move(v);
    }
    Count result = factorial(set_size);
    for (std::size_t i = 0; i < sizes.size(); ++i) result -= factorial(set_size - sizes[i]) * inner[i];
    return result;
}

inline void validate_chain(const VertexSet& s, const FPChain& chain) {
    for (std::size_t i = 0; i < chain.sets.size(); ++i) {
        const auto& x = chain.sets[i];
        if (x.size() >= s.size() || !is_subset(x, s)) throw InvalidChain(ChainErrorKind::NotProperSubset);
        if (i > 0) {
            const auto& prev = chain.sets[i - 1];
            if (prev.size() >= x.size() || !is_subset(prev, x)) throw InvalidChain(ChainErrorKind::NotNested);
        }
    }
}

inline Count phi_chain(const VertexSet& s, const FPChain& chain) {
    validate_chain(s, chain);
    std::vector<std::size_t> sizes;
    for (const auto& x : chain.sets) sizes.push_back(x.size());
    return phi_chain_sizes(s.size(), sizes);
}

inline constexpr std::size_t kPhiNaiveLimit = 10;

/// φ by enumerating every permutation of S and testing each prefix against
/// R (any collection of subsets). |S| <= 10.
inline Count phi_naive(const VertexSet& s, const std::vector<VertexSet>& r) {
    if (s.size() > kPhiNaiveLimit) throw TooLarge("phi_naive: set larger than 10");
    auto mask_of = [&](const VertexSet& x) {
        std::uint32_t m = 0;
        for (Vertex v : x) {
            auto it = std::lower_bound(s.begin(), s.end(), v);
            if (it == s.end() || *it != v) return UINT32_MAX;  // not a subset: never a prefix
            m |= 1u << (it - s.begin());
        }
        return m;
    };
    std::vector<std::uint32_t> forbidden;
    for (const auto& x : r) {
        const auto m = mask_of(x);
        if (m != UINT32_MAX) forbidden.push_back(m);
    }
    std::sort(forbidden.begin(), forbidden.end());
    std::vector<int> perm(s.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::uint64_t allowed = 0;
    do {
        bool ok = !std::binary_search(forbidden.begin(), forbidden.end(), 0u);  // empty prefix
        std::uint32_t prefix = 0;
        for (std::size_t k = 0; ok && k < perm.size(); ++k) {
            prefix |= 1u << perm[k];
            if (std::binary_search(forbidden.begin(), forbidden.end(), prefix)) ok = false;
        }
        allowed += ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Count(static_cast<unsigned long>(allowed));
}

/// Table of φ values needed to draw a constrained permutation of a clique
/// K with nested chain sizes x_0 < ... < x_{l-1}. After a prefix P of size
/// d = |K| - m has been drawn, the live chain is X_i \ P, ..., X_{l-1} \ P
/// for some i, with P ⊆ X_i; φ then depends only on (m, i). at(m, l) = m!.
/// Filled with the recursion
///   φ(S,R) = |S|! - Σ_j |X_j|! · φ(S \ X_j, {X_{j+1} \ X_j, ...})
/// where the inner term is at(|K| - x_j, j + 1), independent of m.
class PhiTable {
  public:
    PhiTable() = default;
    PhiTable(std::size_t clique_size, std::span<const std::size_t> sizes)
        : k_(clique_size), sizes_(sizes.begin(), sizes.end()), values_((k_ + 1) * (sizes_.size() + 1)) {
        const std::size_t l = sizes_.size();
        for (std::size_t m = 0; m <= k_; ++m) cell(m, l) = factorial(m);
        // tail[j] = at(k - x_j, j + 1)
        std::vector<const Count*> tail(l, nullptr);
        for (std::size_t i = l; i-- > 0;) {
            tail[i] = &cell(k_ - sizes_[i], i + 1);
            for (std::size_t m = k_ - sizes_[i]; m <= k_; ++m) {
                const std::size_t d = k_ - m;
                Count v = factorial(m);
                for (std::size_t j = i; j < l; ++j) v -= factorial(sizes_[j] - d) * *tail[j];
                cell(m, i) = std::move(v);
            }
        }
    }

    // Valid when i == l or m >= |K| - x_i.
    const Count& at(std::size_t m, std::size_t i) const { return values_[m * (sizes_.size() + 1) + i]; }
    std::size_t clique_size() const { return k_; }
    std::size_t chain_length() const { return sizes_.size(); }
    std::size_t chain_size(std::size_t i) const { return sizes_[i]; }

  private:
    Count& cell(std::size_t m, std::size_t i) { return values_[m * (sizes_.size() + 1) + i]; }

    std::size_t k_ = 0;
    std::vector<std::size_t> sizes_;
    std::vector<Count> values_;
};

}  // namespace cliquepick

#endif
