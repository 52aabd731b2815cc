#include "localprop/exact_solver.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>

#include "localprop/combinatorics.hpp"

namespace localprop {

void SolveBudget::validate() const {
    if (node_limit == 0 || !(time_limit_seconds > 0.0)) {
        throw std::invalid_argument("solve budget must be positive");
    }
}

std::string_view to_string(FeasibleOutcome outcome) {
    switch (outcome) {
        case FeasibleOutcome::yes:
            return "yes";
        case FeasibleOutcome::no:
            return "no";
        case FeasibleOutcome::budget_exhausted:
            return "budget_exhausted";
    }
    return "unknown";
}

std::string_view to_string(SolveStatus status) {
    switch (status) {
        case SolveStatus::optimal:
            return "optimal";
        case SolveStatus::bound_only:
            return "bound_only";
        case SolveStatus::budget_exhausted:
            return "budget_exhausted";
    }
    return "unknown";
}

namespace {

constexpr Color kUnassigned = ~Color{0};

struct EdgeStep {
    std::size_t lo = 0;
    std::size_t hi = 0;
    std::size_t index = 0;  // normative upper-triangle position
    // Each entry lists the other k-2 vertices of a subset that contains
    // lo and hi and lies inside {0..hi}.
    std::vector<std::vector<std::size_t>> subsets;
};

class ColoringSearch {
public:
    ColoringSearch(std::size_t n, const LocalSpec& spec, std::uint32_t colors, const SolveBudget& budget)
        : n_(n), spec_(spec), colors_(colors), budget_(budget), assignment_(pair_count(n), kUnassigned) {
        for (std::size_t hi = 1; hi < n; ++hi) {
            for (std::size_t lo = 0; lo < hi; ++lo) {
                EdgeStep step{lo, hi, edge_index(n, lo, hi), {}};
                std::vector<std::size_t> others;
                for (std::size_t v = 0; v < hi; ++v) {
                    if (v != lo) {
                        others.push_back(v);
                    }
                }
                const std::size_t extra = spec.k - 2;
                if (others.size() >= extra) {
                    auto combo = first_combination(extra);
                    do {
                        std::vector<std::size_t> members;
                        members.reserve(extra);
                        for (auto idx : combo) {
                            members.push_back(others[idx]);
                        }
                        step.subsets.push_back(std::move(members));
                    } while (extra > 0 && next_combination(combo, others.size()));
                }
                steps_.push_back(std::move(step));
            }
        }
        scratch_.reserve(spec.pairs());
        start_ = std::chrono::steady_clock::now();
    }

    FeasibleResult run() {
        FeasibleResult result;
        const Outcome outcome = descend(0, 0);
        result.nodes = nodes_;
        if (outcome == Outcome::found) {
            result.outcome = FeasibleOutcome::yes;
            result.certificate = ColoredCompleteGraph(n_, assignment_);
        } else if (outcome == Outcome::exhausted) {
            result.outcome = FeasibleOutcome::budget_exhausted;
        } else {
            result.outcome = FeasibleOutcome::no;
        }
        return result;
    }

private:
    enum class Outcome { found, refuted, exhausted };

    Outcome descend(std::size_t pos, std::uint32_t used) {
        if (pos == steps_.size()) {
            return Outcome::found;
        }
        const auto& step = steps_[pos];
        const std::uint32_t limit = std::min(used + 1, colors_);
        for (Color c = 0; c < limit; ++c) {
            if (++nodes_ > budget_.node_limit || out_of_time()) {
                return Outcome::exhausted;
            }
            assignment_[step.index] = c;
            if (consistent(step)) {
                const Outcome sub = descend(pos + 1, std::max(used, c + 1));
                if (sub != Outcome::refuted) {
                    return sub;
                }
            }
        }
        assignment_[step.index] = kUnassigned;
        return Outcome::refuted;
    }

    bool out_of_time() {
        if ((nodes_ & 0x3FF) != 0) {
            return false;
        }
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
        return elapsed.count() > budget_.time_limit_seconds;
    }

    // Optimistic bound: assigned distinct colors + unassigned edges >= ell
    // for every subset touched by the new edge. Complete subsets get an
    // exact check this way.
    bool consistent(const EdgeStep& step) {
        for (const auto& others : step.subsets) {
            scratch_.clear();
            std::size_t unassigned = 0;
            members_.assign(others.begin(), others.end());
            members_.push_back(step.lo);
            members_.push_back(step.hi);
            for (std::size_t x = 0; x < members_.size(); ++x) {
                for (std::size_t y = x + 1; y < members_.size(); ++y) {
                    const Color c = assignment_[edge_index(n_, members_[x], members_[y])];
                    if (c == kUnassigned) {
                        ++unassigned;
                    } else {
                        scratch_.push_back(c);
                    }
                }
            }
            std::sort(scratch_.begin(), scratch_.end());
            const auto distinct = static_cast<std::size_t>(std::unique(scratch_.begin(), scratch_.end()) -
                                                           scratch_.begin());
            if (distinct + unassigned < spec_.ell) {
                return false;
            }
        }
        return true;
    }

    std::size_t n_;
    LocalSpec spec_;
    std::uint32_t colors_;
    SolveBudget budget_;
    std::vector<Color> assignment_;
    std::vector<EdgeStep> steps_;
    std::vector<Color> scratch_;
    std::vector<std::size_t> members_;
    std::uint64_t nodes_ = 0;
    std::chrono::steady_clock::time_point start_;
};

void check_query(std::size_t n, const LocalSpec& spec) {
    if (spec.k > n) {
        throw std::invalid_argument("solver requires k <= n, got k=" + std::to_string(spec.k) +
                                    " n=" + std::to_string(n));
    }
}

}  // namespace

FeasibleResult feasible(std::size_t n, const LocalSpec& spec, std::uint32_t colors, const SolveBudget& budget) {
    check_query(n, spec);
    budget.validate();
    if (colors < 1) {
        throw std::invalid_argument("feasible requires at least one color");
    }
    return ColoringSearch(n, spec, colors, budget).run();
}

std::uint32_t min_colors_lower_bound(std::size_t n, const LocalSpec& spec) {
    const std::uint64_t half = spec.k / 2;
    if (spec.k >= 4 && spec.ell + half >= spec.pairs() + 2) {
        const std::uint64_t per_color = half - 1;
        const std::uint64_t edges = pair_count(n);
        return static_cast<std::uint32_t>(std::max<std::uint64_t>(1, (edges + per_color - 1) / per_color));
    }
    return 1;
}

SolveResult min_colors(std::size_t n, const LocalSpec& spec, const SolveBudget& budget) {
    check_query(n, spec);
    budget.validate();
    SolveResult result;
    result.start = min_colors_lower_bound(n, spec);
    const auto began = std::chrono::steady_clock::now();
    const auto top = static_cast<std::uint32_t>(std::max<std::uint64_t>(1, pair_count(n)));
    std::uint64_t spent = 0;
    bool refuted_any = false;
    for (std::uint32_t c = result.start; c <= top; ++c) {
        SolveBudget remaining = budget;
        remaining.node_limit = budget.node_limit - spent;
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - began;
        remaining.time_limit_seconds = budget.time_limit_seconds - elapsed.count();
        if (remaining.node_limit == 0 || remaining.time_limit_seconds <= 0.0) {
            result.status = refuted_any ? SolveStatus::bound_only : SolveStatus::budget_exhausted;
            result.value = c;
            return result;
        }
        auto attempt = ColoringSearch(n, spec, c, remaining).run();
        spent += attempt.nodes;
        result.log.push_back({c, attempt.nodes, attempt.outcome});
        if (attempt.outcome == FeasibleOutcome::yes) {
            result.status = SolveStatus::optimal;
            result.value = c;
            result.certificate = std::move(attempt.certificate);
            return result;
        }
        if (attempt.outcome == FeasibleOutcome::budget_exhausted) {
            result.status = refuted_any ? SolveStatus::bound_only : SolveStatus::budget_exhausted;
            result.value = c;
            return result;
        }
        refuted_any = true;
    }
    // Unreachable for valid specs: the rainbow coloring always qualifies.
    throw std::logic_error("no feasible color count up to C(n,2)");
}

}  // namespace localprop
