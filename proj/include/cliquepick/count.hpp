#ifndef CLIQUEPICK_COUNT_HPP
#define CLIQUEPICK_COUNT_HPP

#include <cstddef>
#include <deque>
#include <mutex>
#include <string>

#include <gmpxx.h>

namespace cliquepick {

// Arbitrary precision nonnegative integer. Counts reach n! quickly.
using Count = mpz_class;

inline std::string to_decimal(const Count& c) { return c.get_str(10); }

inline std::size_t decimal_digits(const Count& c) { return c.get_str(10).size(); }

// Process-wide factorial table, grown on demand. Elements never move once
// created (deque), so returned references stay valid.
inline const Count& factorial(std::size_t n) {
    static std::mutex mutex;
    static std::deque<Count> values{Count(1)};
    std::lock_guard<std::mutex> lock(mutex);
    while (values.size() <= n) {
        Count next = values.back() * static_cast<unsigned long>(values.size());
        values.push_back(std::move(next));
    }
    return values[n];
}

}  // namespace cliquepick

#endif
