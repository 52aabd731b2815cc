#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>

#include "localprop/coloring.hpp"
#include "localprop/sets.hpp"

namespace localprop {

struct RandomColoringConfig {
    std::size_t n = 1;
    std::uint32_t colors = 1;
    std::uint64_t seed = 0;
};

/// Every edge independently draws a uniform color from {0..c-1}; the
/// result is re-densified when a color goes unused.
ColoredCompleteGraph random_coloring(const RandomColoringConfig& cfg);

/// Seed for trial `index` of a run seeded with `seed` (splitmix64 mix).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// ⌈n^((k-2)/(C(k,2)-ell+1))⌉, computed exactly.
std::uint64_t eg_color_count(std::uint64_t n, const LocalSpec& spec);

struct ProbabilityEstimate {
    std::uint64_t successes = 0;
    std::uint64_t trials = 0;

    double fraction() const { return trials == 0 ? 0.0 : static_cast<double>(successes) / trials; }
};

/// Fraction of `trials` random colorings (trial t seeded with
/// derive_seed(seed, t)) that have the local property.
ProbabilityEstimate estimate_property_probability(std::size_t n, std::uint32_t colors, const LocalSpec& spec,
                                                  std::uint64_t trials, std::uint64_t seed,
                                                  unsigned threads = 1);

struct BehrendParameters {
    std::uint32_t digit_bound = 0;  // digits lie in {0..digit_bound-1}
    std::uint32_t base = 0;         // 2 * digit_bound - 1
    std::uint32_t digits = 0;       // number of digit positions
    std::uint64_t radius = 0;       // squared Euclidean norm of the digit vectors
    std::uint64_t sphere_size = 0;  // vectors on the chosen sphere
};

struct BehrendSet {
    IntegerSet elements;
    BehrendParameters params;
};

/// 3-AP-free set of exactly `size_target` positive integers taken from the
/// densest digit sphere (smallest members, shifted by +1).
BehrendSet behrend_set(std::size_t size_target);

/// Lexicographically least (x, y, z), x < y < z, with x + z = 2y.
std::optional<std::array<std::int64_t, 3>> verify_no_3ap(const IntegerSet& a);

/// a ↦ (a, 0).
PointSet collinear_point_set(const IntegerSet& a);

struct IsoscelesWitness {
    std::array<std::size_t, 3> indices{};
    /// Index (into the triple) of the point equidistant from the other two.
    std::size_t apex = 0;
};

/// Least index triple i < j < l with two equal squared side lengths.
/// Collinear (degenerate) triples count.
std::optional<IsoscelesWitness> verify_isosceles_free(const PointSet& p);

}  // namespace localprop
