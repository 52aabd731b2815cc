#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace localprop {

/// Unsigned 128-bit accumulator used for energies and other quadratic counts.
using u128 = unsigned __int128;

/// Raised whenever an exact integer computation would leave its range.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

inline u128 checked_add(u128 lhs, u128 rhs) {
    u128 out;
    if (__builtin_add_overflow(lhs, rhs, &out)) {
        throw OverflowError("128-bit addition overflow");
    }
    return out;
}

inline u128 checked_mul(u128 lhs, u128 rhs) {
    u128 out;
    if (__builtin_mul_overflow(lhs, rhs, &out)) {
        throw OverflowError("128-bit multiplication overflow");
    }
    return out;
}

inline std::int64_t checked_sub(std::int64_t lhs, std::int64_t rhs) {
    std::int64_t out;
    if (__builtin_sub_overflow(lhs, rhs, &out)) {
        throw OverflowError("64-bit subtraction overflow");
    }
    return out;
}

inline std::int64_t checked_add(std::int64_t lhs, std::int64_t rhs) {
    std::int64_t out;
    if (__builtin_add_overflow(lhs, rhs, &out)) {
        throw OverflowError("64-bit addition overflow");
    }
    return out;
}

/// Converts to uint64 or throws when the value does not fit.
inline std::uint64_t narrow_u64(u128 value) {
    if (value > std::numeric_limits<std::uint64_t>::max()) {
        throw OverflowError("value exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(value);
}

inline std::string to_string(u128 value) {
    if (value == 0) {
        return "0";
    }
    std::string digits;
    while (value != 0) {
        digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    return digits;
}

}  // namespace localprop
