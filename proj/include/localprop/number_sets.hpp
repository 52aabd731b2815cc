#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "localprop/checked.hpp"
#include "localprop/coloring.hpp"
#include "localprop/sets.hpp"

namespace localprop {

/// Strictly positive differences a - a'. Requires |A| >= 2.
IntegerSet difference_set(const IntegerSet& a);

/// All sums a + a' with a = a' allowed.
IntegerSet sum_set(const IntegerSet& a);

/// #{(a,b,c,d) in A^4 : a + b = c + d}, computed as Σ_s r(s)².
u128 additive_energy(const IntegerSet& a);

/// Number of distinct positive differences among the chosen elements.
std::size_t subset_difference_count(const IntegerSet& a, std::span<const std::size_t> indices);

/// Number of distinct distances among the chosen points.
std::size_t subset_distance_count(const PointSet& p, std::span<const std::size_t> indices);

/// Direct scan: every k-subset must have >= ell distinct positive
/// differences. The witness holds element indices (ascending).
PropertyVerdict verify_diff_local_property(const IntegerSet& a, const LocalSpec& spec);

/// Direct scan over k-point subsets counting distinct squared distances.
PropertyVerdict verify_distance_local_property(const PointSet& p, const LocalSpec& spec);

/// Vertex i is a_i; edge (i, j) is colored by a_j - a_i.
ColoredCompleteGraph difference_color_graph(const IntegerSet& a);

/// Vertex i is p_i; edge (i, j) is colored by |p_i p_j|².
ColoredCompleteGraph distance_color_graph(const PointSet& p);

struct DifferenceRepeat {
    std::int64_t difference = 0;
    /// Pairs (smaller, larger) realizing the difference, ascending.
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
};

struct RepeatedDifferenceReport {
    std::size_t max_multiplicity = 0;
    /// One entry per difference attaining the maximum, ascending.
    std::vector<DifferenceRepeat> witnesses;
    /// Lexicographically least 4 distinct elements containing two disjoint
    /// pairs with equal difference, if any; such a quadruple spans <= 4
    /// distinct differences.
    std::optional<std::vector<std::int64_t>> disjoint_quadruple;
};

RepeatedDifferenceReport repeated_difference_bound_check(const IntegerSet& a);

struct GSearchOptions {
    /// Upper limit on normalized candidate sets, C(M-1, n-1).
    std::uint64_t candidate_budget = 50'000'000;
    unsigned threads = 1;
};

enum class GSearchStatus { optimal, infeasible, budget_exceeded };

std::string_view to_string(GSearchStatus status);

struct GSearchResult {
    GSearchStatus status = GSearchStatus::infeasible;
    /// Minimum |A - A| over the capped range; an upper bound for g(n,k,ell).
    std::size_t value = 0;
    std::optional<IntegerSet> certificate;
    std::int64_t range_cap = 0;
    std::uint64_t candidates = 0;
};

/// Exhaustive minimum of |A - A| over A ⊆ {1..M}, |A| = n, min A = 1 and
/// A no larger (lexicographically) than its reflection. Ties resolve to the
/// lexicographically least set.
GSearchResult g_search(std::size_t n, const LocalSpec& spec, std::int64_t range_cap,
                       const GSearchOptions& options = {});

}  // namespace localprop
