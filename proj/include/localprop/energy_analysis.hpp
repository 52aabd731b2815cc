#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "localprop/checked.hpp"
#include "localprop/coloring.hpp"
#include "localprop/forbidden.hpp"

namespace localprop {

/// Color counts by multiplicity, in both readings used by the analysis:
/// per bin (2^j <= m_c < 2^(j+1)) and cumulative (m_c >= 2^j).
struct DyadicProfile {
    std::size_t n = 0;
    std::vector<std::uint64_t> bin_count;
    /// k_j = #{c : m_c >= 2^j}.
    std::vector<std::uint64_t> cum_count;
    /// Largest j with 2^(jb) <= b^b * 2 * a^(b+1) * n^(b-1).
    std::uint32_t t = 0;

    std::uint64_t cumulative(std::size_t j) const { return j < cum_count.size() ? cum_count[j] : 0; }
    std::uint64_t bin(std::size_t j) const { return j < bin_count.size() ? bin_count[j] : 0; }
};

/// bin_count only; shared by the profile and the energy decomposition.
std::vector<std::uint64_t> dyadic_bins(const ColorHistogram& hist);

/// The crossover index t for n vertices, exact integer comparison.
std::uint32_t crossover_index(std::size_t n, const ThmParams& p);

DyadicProfile dyadic_profile(const ColoredCompleteGraph& g, const ThmParams& p);

enum class BoundRegime { poor, rich };

struct BoundRow {
    std::uint32_t j = 0;
    std::uint64_t bin_count = 0;
    std::uint64_t k_j = 0;  // cumulative reading
    std::string poor_num;   // n²
    std::string poor_den;   // 2^j
    std::string rich_num;   // 2 n^b b^(b+1) a^b
    std::string rich_den;   // 2^(jb)
    bool poor_ok = false;   // k_j < n² / 2^j
    bool rich_ok = false;   // k_j < rich_num / rich_den
    BoundRegime regime = BoundRegime::poor;
    /// 2^(j-1) < n^((b-1)/b) < 2^(j+1): where a sharper poor bound is wanted.
    bool remark_range = false;
    /// Set on rich-regime violations when a forbidden configuration was
    /// searched for.
    std::optional<std::string> forbidden_hint;

    bool applicable_ok() const { return regime == BoundRegime::poor ? poor_ok : rich_ok; }
};

struct BoundReport {
    DyadicProfile profile;
    std::vector<BoundRow> rows;
};

/// Rows j = 0..max(J, t+1) where J = ⌊log2 max m_c⌋. Rich-regime
/// violations are diagnostic (the rich bound only binds colorings with the
/// local property); for n <= forbidden_search_max_n the forbidden-config
/// detectors are run to locate a witness.
BoundReport bound_report(const ColoredCompleteGraph& g, const ThmParams& p,
                         std::size_t forbidden_search_max_n = 64);

struct EnergyDecomposition {
    std::vector<std::uint64_t> bin_count;
    std::vector<u128> contribution;  // Σ m_c² per bin
    u128 total = 0;
};

EnergyDecomposition energy_decomposition(const ColoredCompleteGraph& g);

}  // namespace localprop
