#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "localprop/bitset.hpp"
#include "localprop/coloring.hpp"

namespace localprop {

/// Theorem parameters k > m >= 2, re-expressed as a = ⌊k/(m+1)⌋, b = m.
class ThmParams {
public:
    ThmParams(std::uint32_t k, std::uint32_t m);

    std::uint32_t k() const { return k_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t a() const { return k_ / (m_ + 1); }
    std::uint32_t b() const { return m_; }

    /// A vertex with this many same-colored edges is a forbidden configuration.
    std::uint32_t mono_degree_threshold() const { return b() * a() - b() + 1; }

    /// (a(b+1), C(a(b+1),2) - ba + b + 1); needs a >= 2 to be a valid spec.
    LocalSpec forbidden_spec() const;

    /// (k, C(k,2) - m⌊k/(m+1)⌋ + m + 1).
    LocalSpec theorem_spec() const;

private:
    std::uint32_t k_;
    std::uint32_t m_;
};

struct MonoDegreeEntry {
    std::size_t vertex = 0;
    Color color = 0;
    std::size_t count = 0;

    friend bool operator==(const MonoDegreeEntry&, const MonoDegreeEntry&) = default;
};

struct MonoDegreeReport {
    std::size_t max = 0;
    /// Every (vertex, color) attaining the max, ordered by vertex then color.
    std::vector<MonoDegreeEntry> attained;
};

MonoDegreeReport max_mono_degree(const ColoredCompleteGraph& g);

/// All (vertex, color) pairs with mono-degree >= ba - b + 1.
std::vector<MonoDegreeEntry> mono_degree_violations(const ColoredCompleteGraph& g, const ThmParams& p);

struct ColorSupport {
    Color color = 0;
    DynamicBitset vertices;
};

/// V_c for every used color, ordered by color id.
std::vector<ColorSupport> color_supports(const ColoredCompleteGraph& g);

enum class SearchStatus { found, none, budget_exceeded };

std::string_view to_string(SearchStatus status);

struct PopularIntersection {
    SearchStatus status = SearchStatus::none;
    std::vector<Color> colors;
    std::vector<std::size_t> common_vertices;
    /// |C_j|, the number of colors with multiplicity >= 2^j.
    std::size_t class_size = 0;
};

/// Lexicographically least b-tuple of colors in C_j (m_c >= 2^j) whose
/// supports share at least a vertices. Reports budget_exceeded without
/// searching when C(|C_j|, b) is above `tuple_budget`.
PopularIntersection popular_intersection_search(const ColoredCompleteGraph& g, std::uint32_t j,
                                                const ThmParams& p,
                                                std::uint64_t tuple_budget = 100'000'000);

/// Subsets A_1..A_k of the universe {1..n}, with intersection arity d.
struct SetSystemInstance {
    std::size_t n = 0;
    std::vector<std::vector<std::uint32_t>> sets;
    std::uint32_t d = 2;

    /// Throws when a set is empty, an element is outside {1..n}, or d < 2.
    void validate() const;
    std::size_t min_set_size() const;
    /// k * m^d >= 2d * n^d, compared exactly.
    bool hypothesis_holds() const;
};

struct CountingLemmaHit {
    /// 1-based, strictly increasing.
    std::vector<std::size_t> indices;
    std::size_t intersection_size = 0;
};

/// Least d-tuple whose intersection has size >= m^d / (2 n^(d-1)).
std::optional<CountingLemmaHit> counting_lemma_find(const SetSystemInstance& inst);

}  // namespace localprop
