#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "localprop/checked.hpp"
#include "localprop/combinatorics.hpp"

namespace localprop {

using Vertex = std::uint32_t;
using Color = std::uint32_t;

/// Position of the unordered edge {i, j} in the row-major upper triangle.
/// Requires i != j; arguments may come in either order.
inline std::size_t edge_index(std::size_t n, std::size_t i, std::size_t j) {
    if (i > j) {
        std::swap(i, j);
    }
    return i * n - i * (i + 1) / 2 + j - i - 1;
}

/// The pair (k, ell): every k-element subset must span at least ell
/// distinct colors (or distances, or differences).
struct LocalSpec {
    std::uint32_t k = 2;
    std::uint32_t ell = 1;

    LocalSpec() = default;
    LocalSpec(std::uint32_t k_, std::uint32_t ell_);

    std::uint64_t pairs() const { return pair_count(k); }
};

/// Edge coloring of K_n with dense color ids {0, ..., num_colors-1}.
class ColoredCompleteGraph {
public:
    ColoredCompleteGraph() = default;

    /// Takes colors that are already dense; throws otherwise.
    ColoredCompleteGraph(std::size_t n, std::vector<Color> edge_colors);

    /// Re-indexes arbitrary ordered keys to dense ids by ascending key value.
    template <typename Key>
    static ColoredCompleteGraph from_keys(std::size_t n, const std::vector<Key>& keys) {
        if (keys.size() != pair_count(n)) {
            throw std::invalid_argument("edge count does not match n(n-1)/2");
        }
        std::vector<Key> sorted = keys;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<Color> colors(keys.size());
        for (std::size_t e = 0; e < keys.size(); ++e) {
            colors[e] = static_cast<Color>(
                std::lower_bound(sorted.begin(), sorted.end(), keys[e]) - sorted.begin());
        }
        return ColoredCompleteGraph(n, std::move(colors));
    }

    std::size_t n() const { return n_; }
    std::size_t num_edges() const { return colors_.size(); }
    std::size_t num_colors() const { return num_colors_; }
    std::span<const Color> edge_colors() const { return colors_; }

    Color color(std::size_t i, std::size_t j) const { return colors_[edge_index(n_, i, j)]; }

    friend bool operator==(const ColoredCompleteGraph&, const ColoredCompleteGraph&) = default;

private:
    std::size_t n_ = 1;
    std::vector<Color> colors_;
    std::size_t num_colors_ = 0;
};

/// Failing k-subset (vertex ids, ascending) and its distinct-color count.
struct Witness {
    std::vector<std::size_t> subset;
    std::size_t count = 0;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct PropertyVerdict {
    bool holds = true;
    std::optional<Witness> witness;
};

/// m_c indexed by dense color id.
struct ColorHistogram {
    std::vector<std::uint64_t> multiplicity;

    std::uint64_t total() const;
};

std::size_t subset_color_count(const ColoredCompleteGraph& g, std::span<const std::size_t> subset);

/// Lexicographic k-subset scan; subtrees whose partial subset already has
/// ell colors are skipped. The witness is the least failing subset.
PropertyVerdict verify_local_property(const ColoredCompleteGraph& g, const LocalSpec& spec);

ColorHistogram color_histogram(const ColoredCompleteGraph& g);

/// Σ m_c², exact; throws OverflowError rather than wrapping.
u128 color_energy(const ColoredCompleteGraph& g);

/// ⌈C(n,2)² / num_colors⌉, a lower bound for color_energy.
u128 cauchy_schwarz_floor(const ColoredCompleteGraph& g);

/// Applies color id c -> perm[c]; perm must be a bijection on the ids.
ColoredCompleteGraph relabel_colors(const ColoredCompleteGraph& g, std::span<const Color> perm);

/// Relabels vertices: new vertex perm[v] is old vertex v.
ColoredCompleteGraph permute_vertices(const ColoredCompleteGraph& g, std::span<const std::size_t> perm);

ColoredCompleteGraph monochromatic(std::size_t n);
ColoredCompleteGraph rainbow(std::size_t n);

}  // namespace localprop
