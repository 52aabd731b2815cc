#include "localprop/coloring.hpp"

#include <numeric>
#include <string>

namespace localprop {

LocalSpec::LocalSpec(std::uint32_t k_, std::uint32_t ell_) : k(k_), ell(ell_) {
    if (k < 2) {
        throw std::invalid_argument("local spec requires k >= 2");
    }
    if (ell < 1 || ell > pair_count(k)) {
        throw std::invalid_argument("local spec requires 1 <= ell <= k(k-1)/2, got k=" +
                                    std::to_string(k) + " ell=" + std::to_string(ell));
    }
}

ColoredCompleteGraph::ColoredCompleteGraph(std::size_t n, std::vector<Color> edge_colors)
    : n_(n), colors_(std::move(edge_colors)) {
    if (n == 0) {
        throw std::invalid_argument("graph needs at least one vertex");
    }
    if (colors_.size() != pair_count(n)) {
        throw std::invalid_argument("edge count " + std::to_string(colors_.size()) +
                                    " does not match n(n-1)/2 for n=" + std::to_string(n));
    }
    Color max_id = 0;
    for (auto c : colors_) {
        max_id = std::max(max_id, c);
    }
    num_colors_ = colors_.empty() ? 0 : static_cast<std::size_t>(max_id) + 1;
    std::vector<bool> seen(num_colors_, false);
    for (auto c : colors_) {
        seen[c] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        throw std::invalid_argument("color ids are not dense");
    }
}

std::uint64_t ColorHistogram::total() const {
    return std::accumulate(multiplicity.begin(), multiplicity.end(), std::uint64_t{0});
}

std::size_t subset_color_count(const ColoredCompleteGraph& g, std::span<const std::size_t> subset) {
    if (subset.size() < 2) {
        throw std::invalid_argument("subset must contain at least two vertices");
    }
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] >= g.n()) {
            throw std::out_of_range("vertex id " + std::to_string(subset[i]) + " out of range");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (subset[i] == subset[j]) {
                throw std::invalid_argument("subset repeats a vertex");
            }
        }
    }
    std::vector<Color> seen;
    seen.reserve(pair_count(subset.size()));
    for (std::size_t i = 0; i < subset.size(); ++i) {
        for (std::size_t j = i + 1; j < subset.size(); ++j) {
            seen.push_back(g.color(subset[i], subset[j]));
        }
    }
    std::sort(seen.begin(), seen.end());
    return static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

namespace {

class SubsetScanner {
public:
    SubsetScanner(const ColoredCompleteGraph& g, const LocalSpec& spec)
        : g_(g), k_(spec.k), ell_(spec.ell), counts_(g.num_colors(), 0) {
        subset_.reserve(k_);
    }

    std::optional<Witness> run() {
        if (descend(0)) {
            return Witness{subset_, distinct_};
        }
        return std::nullopt;
    }

private:
    // Returns true when a failing subset has been completed in subset_.
    bool descend(std::size_t start) {
        if (subset_.size() == k_) {
            return distinct_ < ell_;
        }
        // Colors only accumulate, so once ell is reached no completion fails.
        if (distinct_ >= ell_) {
            return false;
        }
        const std::size_t needed = k_ - subset_.size();
        for (std::size_t v = start; v + needed <= g_.n(); ++v) {
            add(v);
            if (descend(v + 1)) {
                return true;
            }
            remove(v);
        }
        return false;
    }

    void add(std::size_t v) {
        for (auto u : subset_) {
            if (counts_[g_.color(u, v)]++ == 0) {
                ++distinct_;
            }
        }
        subset_.push_back(v);
    }

    void remove(std::size_t v) {
        subset_.pop_back();
        for (auto u : subset_) {
            if (--counts_[g_.color(u, v)] == 0) {
                --distinct_;
            }
        }
    }

    const ColoredCompleteGraph& g_;
    std::size_t k_;
    std::size_t ell_;
    std::vector<std::uint32_t> counts_;
    std::vector<std::size_t> subset_;
    std::size_t distinct_ = 0;
};

}  // namespace

PropertyVerdict verify_local_property(const ColoredCompleteGraph& g, const LocalSpec& spec) {
    if (spec.k > g.n()) {
        throw std::invalid_argument("infeasible query: k=" + std::to_string(spec.k) +
                                    " exceeds n=" + std::to_string(g.n()));
    }
    PropertyVerdict verdict;
    verdict.witness = SubsetScanner(g, spec).run();
    verdict.holds = !verdict.witness.has_value();
    return verdict;
}

ColorHistogram color_histogram(const ColoredCompleteGraph& g) {
    ColorHistogram hist;
    hist.multiplicity.assign(g.num_colors(), 0);
    for (auto c : g.edge_colors()) {
        ++hist.multiplicity[c];
    }
    return hist;
}

u128 color_energy(const ColoredCompleteGraph& g) {
    u128 energy = 0;
    for (auto m : color_histogram(g).multiplicity) {
        energy = checked_add(energy, checked_mul(m, m));
    }
    return energy;
}

u128 cauchy_schwarz_floor(const ColoredCompleteGraph& g) {
    if (g.num_colors() == 0) {
        throw std::invalid_argument("Cauchy-Schwarz floor needs at least one color");
    }
    const u128 edges = g.num_edges();
    const u128 square = checked_mul(edges, edges);
    const u128 colors = g.num_colors();
    return (square + colors - 1) / colors;
}

ColoredCompleteGraph relabel_colors(const ColoredCompleteGraph& g, std::span<const Color> perm) {
    if (perm.size() != g.num_colors()) {
        throw std::invalid_argument("permutation size does not match color count");
    }
    std::vector<bool> hit(perm.size(), false);
    for (auto c : perm) {
        if (c >= perm.size() || hit[c]) {
            throw std::invalid_argument("color map is not a bijection");
        }
        hit[c] = true;
    }
    std::vector<Color> colors(g.edge_colors().begin(), g.edge_colors().end());
    for (auto& c : colors) {
        c = perm[c];
    }
    return ColoredCompleteGraph(g.n(), std::move(colors));
}

ColoredCompleteGraph permute_vertices(const ColoredCompleteGraph& g, std::span<const std::size_t> perm) {
    const std::size_t n = g.n();
    if (perm.size() != n) {
        throw std::invalid_argument("vertex permutation size does not match n");
    }
    std::vector<bool> hit(n, false);
    for (auto v : perm) {
        if (v >= n || hit[v]) {
            throw std::invalid_argument("vertex map is not a bijection");
        }
        hit[v] = true;
    }
    std::vector<Color> colors(g.num_edges());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            colors[edge_index(n, perm[i], perm[j])] = g.color(i, j);
        }
    }
    return ColoredCompleteGraph(n, std::move(colors));
}

ColoredCompleteGraph monochromatic(std::size_t n) {
    return ColoredCompleteGraph(n, std::vector<Color>(pair_count(n), 0));
}

ColoredCompleteGraph rainbow(std::size_t n) {
    std::vector<Color> colors(pair_count(n));
    std::iota(colors.begin(), colors.end(), Color{0});
    return ColoredCompleteGraph(n, std::move(colors));
}

}  // namespace localprop
