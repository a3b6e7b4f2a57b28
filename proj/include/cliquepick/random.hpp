#ifndef CLIQUEPICK_RANDOM_HPP
#define CLIQUEPICK_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "cliquepick/count.hpp"

namespace cliquepick {

// Deterministic generator: MT19937-64 (std::mt19937_64, whose output
// sequence is fixed by the C++ standard). All derived draws are computed
// here instead of through std distributions, whose algorithms are
// implementation-defined, so a seed gives the same stream everywhere.
class Rng {
  public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform integer in [0, bound). bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        // Rejection on the largest multiple of bound.
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    // Uniform integer in [lo, hi], lo <= hi.
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform big integer in [0, bound), bound > 0. Rejection sampling over
    // random words masked to the bit length of bound (expected < 2 rounds).
    Count below_count(const Count& bound) {
        if (bound.fits_ulong_p()) {
            return Count(static_cast<unsigned long>(below(static_cast<std::uint64_t>(bound.get_ui()))));
        }
        const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
        const std::size_t words = (bits + 63) / 64;
        const unsigned top_bits = static_cast<unsigned>(bits - 64 * (words - 1));
        const std::uint64_t top_mask = top_bits == 64 ? UINT64_MAX : ((std::uint64_t{1} << top_bits) - 1);
        std::vector<std::uint64_t> buffer(words);
        Count x;
        do {
            for (auto& w : buffer) w = engine_();
            buffer.back() &= top_mask;  // most significant word (least-first order below)
            mpz_import(x.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, buffer.data());
        } while (x >= bound);
        return x;
    }

    template <class T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::swap(items[i - 1], items[below(i)]);
        }
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace cliquepick

#endif
