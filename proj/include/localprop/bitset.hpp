#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace localprop {

// Fixed-width bitset sized at runtime, used for vertex supports and set
// systems where intersections dominate the cost.
class DynamicBitset {
public:
    DynamicBitset() = default;
    explicit DynamicBitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }

    void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

    std::size_t count() const {
        std::size_t total = 0;
        for (auto w : words_) {
            total += static_cast<std::size_t>(std::popcount(w));
        }
        return total;
    }

    DynamicBitset& operator&=(const DynamicBitset& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            words_[i] &= other.words_[i];
        }
        return *this;
    }

    /// |this ∩ other| without materializing the intersection.
    std::size_t intersection_count(const DynamicBitset& other) const {
        std::size_t total = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        }
        return total;
    }

    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t word = words_[w];
            while (word != 0) {
                out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
                word &= word - 1;
            }
        }
        return out;
    }

    friend bool operator==(const DynamicBitset&, const DynamicBitset&) = default;

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace localprop
