#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "localprop/coloring.hpp"

namespace localprop {

struct SolveBudget {
    std::uint64_t node_limit = 2'000'000'000;
    double time_limit_seconds = 3600.0;

    void validate() const;
};

enum class FeasibleOutcome { yes, no, budget_exhausted };

std::string_view to_string(FeasibleOutcome outcome);

struct FeasibleResult {
    FeasibleOutcome outcome = FeasibleOutcome::no;
    std::optional<ColoredCompleteGraph> certificate;
    std::uint64_t nodes = 0;
};

/// Is there a coloring of K_n with at most `colors` colors in which every
/// k-subset spans >= ell colors? Depth-first over edges in vertex-addition
/// order ((0,1), (0,2), (1,2), (0,3), ...); a color id is opened only as
/// max-so-far + 1. The first certificate found is the least one in that
/// edge order.
FeasibleResult feasible(std::size_t n, const LocalSpec& spec, std::uint32_t colors,
                        const SolveBudget& budget = {});

enum class SolveStatus { optimal, bound_only, budget_exhausted };

std::string_view to_string(SolveStatus status);

struct SolveLogEntry {
    std::uint32_t colors = 0;
    std::uint64_t nodes = 0;
    FeasibleOutcome outcome = FeasibleOutcome::no;
};

struct SolveResult {
    SolveStatus status = SolveStatus::budget_exhausted;
    /// Optimal value, or the best proven lower bound when not optimal.
    std::uint32_t value = 0;
    std::optional<ColoredCompleteGraph> certificate;
    /// First color count tried (analytic lower bound).
    std::uint32_t start = 1;
    std::vector<SolveLogEntry> log;
};

/// Analytic starting point: ⌈C(n,2) / (⌊k/2⌋ - 1)⌉ when k >= 4 and
/// ell >= C(k,2) - ⌊k/2⌋ + 2 (no color may repeat ⌊k/2⌋ times), else 1.
std::uint32_t min_colors_lower_bound(std::size_t n, const LocalSpec& spec);

/// Least feasible color count, searching upward from the analytic bound.
/// The node budget is shared across all attempts.
SolveResult min_colors(std::size_t n, const LocalSpec& spec, const SolveBudget& budget = {});

}  // namespace localprop
