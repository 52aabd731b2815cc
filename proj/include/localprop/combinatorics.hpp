#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace localprop {

/// C(n, r), saturating at uint64 max instead of wrapping.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
    if (r > n) {
        return 0;
    }
    r = (r < n - r) ? r : n - r;
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max()) {
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return static_cast<std::uint64_t>(acc);
}

inline std::uint64_t pair_count(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

/// Advances `combo` (strictly increasing indices below n) to the next
/// combination in lexicographic order. Returns false after the last one.
inline bool next_combination(std::span<std::size_t> combo, std::size_t n) {
    const std::size_t r = combo.size();
    if (r == 0) {
        return false;
    }
    std::size_t i = r;
    while (i > 0) {
        --i;
        if (combo[i] < n - r + i) {
            ++combo[i];
            for (std::size_t j = i + 1; j < r; ++j) {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    return false;
}

inline std::vector<std::size_t> first_combination(std::size_t r) {
    std::vector<std::size_t> combo(r);
    for (std::size_t i = 0; i < r; ++i) {
        combo[i] = i;
    }
    return combo;
}

}  // namespace localprop
