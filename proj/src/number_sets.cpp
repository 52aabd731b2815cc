#include "localprop/number_sets.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "localprop/combinatorics.hpp"
#include "localprop/parallel.hpp"

namespace localprop {

IntegerSet difference_set(const IntegerSet& a) {
    if (a.size() < 2) {
        throw std::invalid_argument("difference set needs at least two elements");
    }
    std::vector<std::int64_t> diffs;
    diffs.reserve(pair_count(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            diffs.push_back(checked_sub(a[j], a[i]));
        }
    }
    return IntegerSet::normalized(std::move(diffs));
}

IntegerSet sum_set(const IntegerSet& a) {
    std::vector<std::int64_t> sums;
    sums.reserve(a.size() * (a.size() + 1) / 2);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i; j < a.size(); ++j) {
            sums.push_back(checked_add(a[i], a[j]));
        }
    }
    return IntegerSet::normalized(std::move(sums));
}

u128 additive_energy(const IntegerSet& a) {
    // r(s) over ordered pairs; sorting all |A|² sums groups equal s.
    std::vector<std::int64_t> sums;
    sums.reserve(a.size() * a.size());
    for (auto x : a) {
        for (auto y : a) {
            sums.push_back(checked_add(x, y));
        }
    }
    std::sort(sums.begin(), sums.end());
    u128 energy = 0;
    for (std::size_t i = 0; i < sums.size();) {
        std::size_t j = i;
        while (j < sums.size() && sums[j] == sums[i]) {
            ++j;
        }
        const u128 r = j - i;
        energy = checked_add(energy, checked_mul(r, r));
        i = j;
    }
    return energy;
}

std::size_t subset_difference_count(const IntegerSet& a, std::span<const std::size_t> indices) {
    std::vector<std::int64_t> diffs;
    diffs.reserve(pair_count(indices.size()));
    for (std::size_t i = 0; i < indices.size(); ++i) {
        for (std::size_t j = i + 1; j < indices.size(); ++j) {
            const auto d = checked_sub(a[indices[j]], a[indices[i]]);
            diffs.push_back(d < 0 ? -d : d);
        }
    }
    std::sort(diffs.begin(), diffs.end());
    return static_cast<std::size_t>(std::unique(diffs.begin(), diffs.end()) - diffs.begin());
}

std::size_t subset_distance_count(const PointSet& p, std::span<const std::size_t> indices) {
    std::vector<u128> dists;
    dists.reserve(pair_count(indices.size()));
    for (std::size_t i = 0; i < indices.size(); ++i) {
        for (std::size_t j = i + 1; j < indices.size(); ++j) {
            dists.push_back(squared_distance(p[indices[i]], p[indices[j]]));
        }
    }
    std::sort(dists.begin(), dists.end());
    return static_cast<std::size_t>(std::unique(dists.begin(), dists.end()) - dists.begin());
}

namespace {

template <typename Counter>
PropertyVerdict scan_subsets(std::size_t size, const LocalSpec& spec, Counter&& count) {
    if (spec.k > size) {
        throw std::invalid_argument("infeasible query: k=" + std::to_string(spec.k) +
                                    " exceeds set size " + std::to_string(size));
    }
    PropertyVerdict verdict;
    auto combo = first_combination(spec.k);
    do {
        const std::size_t c = count(std::span<const std::size_t>(combo));
        if (c < spec.ell) {
            verdict.holds = false;
            verdict.witness = Witness{combo, c};
            break;
        }
    } while (next_combination(combo, size));
    return verdict;
}

}  // namespace

PropertyVerdict verify_diff_local_property(const IntegerSet& a, const LocalSpec& spec) {
    return scan_subsets(a.size(), spec,
                        [&](std::span<const std::size_t> idx) { return subset_difference_count(a, idx); });
}

PropertyVerdict verify_distance_local_property(const PointSet& p, const LocalSpec& spec) {
    return scan_subsets(p.size(), spec,
                        [&](std::span<const std::size_t> idx) { return subset_distance_count(p, idx); });
}

ColoredCompleteGraph difference_color_graph(const IntegerSet& a) {
    if (a.size() < 2) {
        throw std::invalid_argument("difference graph needs at least two elements");
    }
    std::vector<std::int64_t> keys;
    keys.reserve(pair_count(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            keys.push_back(checked_sub(a[j], a[i]));
        }
    }
    return ColoredCompleteGraph::from_keys(a.size(), keys);
}

ColoredCompleteGraph distance_color_graph(const PointSet& p) {
    if (p.size() < 2) {
        throw std::invalid_argument("distance graph needs at least two points");
    }
    std::vector<u128> keys;
    keys.reserve(pair_count(p.size()));
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            keys.push_back(squared_distance(p[i], p[j]));
        }
    }
    return ColoredCompleteGraph::from_keys(p.size(), keys);
}

RepeatedDifferenceReport repeated_difference_bound_check(const IntegerSet& a) {
    if (a.size() < 2) {
        throw std::invalid_argument("repeated-difference check needs at least two elements");
    }
    std::map<std::int64_t, std::vector<std::pair<std::int64_t, std::int64_t>>> by_diff;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            by_diff[checked_sub(a[j], a[i])].emplace_back(a[i], a[j]);
        }
    }
    RepeatedDifferenceReport report;
    for (auto& [d, pairs] : by_diff) {
        std::sort(pairs.begin(), pairs.end());
        report.max_multiplicity = std::max(report.max_multiplicity, pairs.size());
    }
    for (const auto& [d, pairs] : by_diff) {
        if (pairs.size() == report.max_multiplicity) {
            report.witnesses.push_back({d, pairs});
        }
        for (std::size_t x = 0; x < pairs.size(); ++x) {
            for (std::size_t y = x + 1; y < pairs.size(); ++y) {
                const auto& p = pairs[x];
                const auto& q = pairs[y];
                if (p.first == q.first || p.first == q.second || p.second == q.first ||
                    p.second == q.second) {
                    continue;
                }
                std::vector<std::int64_t> quad{p.first, p.second, q.first, q.second};
                std::sort(quad.begin(), quad.end());
                if (!report.disjoint_quadruple || quad < *report.disjoint_quadruple) {
                    report.disjoint_quadruple = quad;
                }
            }
        }
    }
    return report;
}

std::string_view to_string(GSearchStatus status) {
    switch (status) {
        case GSearchStatus::optimal:
            return "optimal";
        case GSearchStatus::infeasible:
            return "infeasible";
        case GSearchStatus::budget_exceeded:
            return "budget_exceeded";
    }
    return "unknown";
}

namespace {

struct TaskBest {
    std::size_t value = 0;
    std::vector<std::int64_t> set;
};

bool reflection_is_smaller(const std::vector<std::int64_t>& set) {
    const std::int64_t pivot = set.front() + set.back();
    for (std::size_t i = 0; i < set.size(); ++i) {
        const std::int64_t mirrored = pivot - set[set.size() - 1 - i];
        if (mirrored != set[i]) {
            return mirrored < set[i];
        }
    }
    return false;
}

}  // namespace

GSearchResult g_search(std::size_t n, const LocalSpec& spec, std::int64_t range_cap,
                       const GSearchOptions& options) {
    if (spec.k > n) {
        throw std::invalid_argument("g_search requires k <= n");
    }
    if (range_cap < 1 || static_cast<std::uint64_t>(range_cap) < n) {
        throw std::invalid_argument("g_search requires n <= M");
    }
    GSearchResult result;
    result.range_cap = range_cap;
    const std::uint64_t total = binomial(static_cast<std::uint64_t>(range_cap) - 1, n - 1);
    if (total > options.candidate_budget) {
        result.status = GSearchStatus::budget_exceeded;
        return result;
    }

    // Task t fixes the second element at t + 2; the first is always 1.
    const std::size_t tasks = static_cast<std::size_t>(range_cap) - 1;
    std::vector<std::optional<TaskBest>> best(tasks);
    std::vector<std::uint64_t> examined(tasks, 0);
    parallel_for_tasks(tasks, options.threads, [&](std::size_t t) {
        const std::int64_t second = static_cast<std::int64_t>(t) + 2;
        const std::size_t rest = n - 2;
        const std::size_t pool = static_cast<std::size_t>(range_cap - second);
        if (pool < rest) {
            return;
        }
        std::vector<std::int64_t> set(n);
        set[0] = 1;
        set[1] = second;
        auto combo = first_combination(rest);
        std::optional<TaskBest> local;
        do {
            for (std::size_t i = 0; i < rest; ++i) {
                set[i + 2] = second + 1 + static_cast<std::int64_t>(combo[i]);
            }
            if (reflection_is_smaller(set)) {
                continue;
            }
            ++examined[t];
            const IntegerSet candidate(set);
            const std::size_t value = difference_set(candidate).size();
            if (local && value >= local->value) {
                continue;
            }
            if (verify_diff_local_property(candidate, spec).holds) {
                local = TaskBest{value, set};
            }
        } while (rest > 0 && next_combination(combo, pool));
        best[t] = std::move(local);
    });

    for (std::size_t t = 0; t < tasks; ++t) {
        result.candidates += examined[t];
        if (!best[t]) {
            continue;
        }
        if (!result.certificate || best[t]->value < result.value) {
            result.value = best[t]->value;
            result.certificate = IntegerSet(best[t]->set);
        }
    }
    result.status = result.certificate ? GSearchStatus::optimal : GSearchStatus::infeasible;
    return result;
}

}  // namespace localprop
