#include "localprop/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "localprop/combinatorics.hpp"
#include "localprop/parallel.hpp"

namespace localprop {

namespace {

// Unbiased draw from {0..bound-1} by rejection; std distributions are not
// specified bit-for-bit across standard libraries.
std::uint32_t uniform_below(std::mt19937_64& rng, std::uint32_t bound) {
    // 2^64 mod bound; draws at or above it cover a multiple of bound.
    const std::uint64_t threshold = (std::uint64_t{0} - bound) % bound;
    for (;;) {
        const std::uint64_t draw = rng();
        if (draw >= threshold) {
            return static_cast<std::uint32_t>(draw % bound);
        }
    }
}

}  // namespace

ColoredCompleteGraph random_coloring(const RandomColoringConfig& cfg) {
    if (cfg.colors < 1) {
        throw std::invalid_argument("random coloring needs at least one color");
    }
    std::mt19937_64 rng(cfg.seed);
    std::vector<Color> raw(pair_count(cfg.n));
    for (auto& c : raw) {
        c = uniform_below(rng, cfg.colors);
    }
    return ColoredCompleteGraph::from_keys(cfg.n, raw);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t eg_color_count(std::uint64_t n, const LocalSpec& spec) {
    using boost::multiprecision::cpp_int;
    using boost::multiprecision::pow;
    if (n < 1) {
        throw std::invalid_argument("eg_color_count needs n >= 1");
    }
    const std::int64_t den = static_cast<std::int64_t>(spec.pairs()) - spec.ell + 1;
    if (den <= 0) {
        throw std::invalid_argument("exponent denominator C(k,2) - ell + 1 must be positive");
    }
    const unsigned num = spec.k - 2;
    const cpp_int target = pow(cpp_int(n), num);
    const auto exact_den = static_cast<unsigned>(den);
    const double estimate = std::ceil(std::pow(static_cast<double>(n), static_cast<double>(num) / den));
    cpp_int x = static_cast<std::uint64_t>(std::max(1.0, estimate));
    while (x > 1 && pow(cpp_int(x - 1), exact_den) >= target) {
        --x;
    }
    while (pow(x, exact_den) < target) {
        ++x;
    }
    return x.convert_to<std::uint64_t>();
}

ProbabilityEstimate estimate_property_probability(std::size_t n, std::uint32_t colors, const LocalSpec& spec,
                                                  std::uint64_t trials, std::uint64_t seed,
                                                  unsigned threads) {
    if (trials < 1) {
        throw std::invalid_argument("estimate needs at least one trial");
    }
    if (spec.k > n) {
        throw std::invalid_argument("estimate needs k <= n");
    }
    if (colors < 1) {
        throw std::invalid_argument("estimate needs at least one color");
    }
    std::vector<char> hit(trials, 0);
    parallel_for_tasks(trials, threads, [&](std::size_t t) {
        const auto g = random_coloring({n, colors, derive_seed(seed, t)});
        hit[t] = verify_local_property(g, spec).holds ? 1 : 0;
    });
    ProbabilityEstimate est;
    est.trials = trials;
    est.successes = static_cast<std::uint64_t>(std::count(hit.begin(), hit.end(), 1));
    return est;
}

namespace {

constexpr std::uint64_t kMaxSphereEnumeration = std::uint64_t{1} << 26;

std::uint64_t int_pow(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t out = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        out = narrow_u64(checked_mul(out, base));
    }
    return out;
}

// Calls visit(value, radius) for every digit vector in {0..bound-1}^digits.
template <typename Visit>
void for_each_digit_vector(std::uint32_t bound, std::uint32_t base, std::uint32_t digits, Visit&& visit) {
    std::vector<std::uint32_t> vec(digits, 0);
    for (;;) {
        std::uint64_t value = 0;
        std::uint64_t radius = 0;
        for (std::uint32_t i = digits; i-- > 0;) {
            value = value * base + vec[i];
            radius += static_cast<std::uint64_t>(vec[i]) * vec[i];
        }
        visit(value, radius);
        std::uint32_t pos = 0;
        while (pos < digits && ++vec[pos] == bound) {
            vec[pos] = 0;
            ++pos;
        }
        if (pos == digits) {
            return;
        }
    }
}

}  // namespace

BehrendSet behrend_set(std::size_t size_target) {
    if (size_target < 1) {
        throw std::invalid_argument("behrend_set needs size_target >= 1");
    }
    std::uint64_t range = std::max<std::uint64_t>(2, size_target);
    for (;;) {
        // Smallest d >= 2 with d² >= log2(range), i.e. 2^(d²) >= range.
        std::uint32_t bound = 2;
        while (bound * bound < 64 && (std::uint64_t{1} << (bound * bound)) < range) {
            ++bound;
        }
        const std::uint32_t base = 2 * bound - 1;
        std::uint32_t digits = 1;
        while (static_cast<u128>(int_pow(base, digits)) < range) {
            ++digits;
        }
        const std::uint64_t vectors = int_pow(bound, digits);
        if (vectors > kMaxSphereEnumeration) {
            throw std::length_error("behrend_set target too large to enumerate");
        }

        std::map<std::uint64_t, std::uint64_t> per_radius;
        for_each_digit_vector(bound, base, digits,
                              [&](std::uint64_t, std::uint64_t radius) { ++per_radius[radius]; });
        std::uint64_t best_radius = 0;
        std::uint64_t best_count = 0;
        for (const auto& [radius, count] : per_radius) {
            if (count > best_count) {
                best_count = count;
                best_radius = radius;
            }
        }
        if (best_count >= size_target) {
            std::vector<std::int64_t> values;
            values.reserve(best_count);
            for_each_digit_vector(bound, base, digits, [&](std::uint64_t value, std::uint64_t radius) {
                if (radius == best_radius) {
                    values.push_back(static_cast<std::int64_t>(value) + 1);
                }
            });
            std::sort(values.begin(), values.end());
            values.resize(size_target);
            return BehrendSet{IntegerSet(std::move(values)),
                              BehrendParameters{bound, base, digits, best_radius, best_count}};
        }
        range *= 2;
    }
}

std::optional<std::array<std::int64_t, 3>> verify_no_3ap(const IntegerSet& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            const __int128 z = 2 * static_cast<__int128>(a[j]) - a[i];
            if (z > a[a.size() - 1]) {
                break;
            }
            if (a.contains(static_cast<std::int64_t>(z))) {
                return std::array<std::int64_t, 3>{a[i], a[j], static_cast<std::int64_t>(z)};
            }
        }
    }
    return std::nullopt;
}

PointSet collinear_point_set(const IntegerSet& a) {
    if (a.empty()) {
        throw std::invalid_argument("collinear point set needs a nonempty set");
    }
    std::vector<Point> points;
    points.reserve(a.size());
    for (auto v : a) {
        points.push_back({v, 0});
    }
    return PointSet(std::move(points));
}

std::optional<IsoscelesWitness> verify_isosceles_free(const PointSet& p) {
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const u128 dij = squared_distance(p[i], p[j]);
            for (std::size_t l = j + 1; l < n; ++l) {
                const u128 dil = squared_distance(p[i], p[l]);
                const u128 djl = squared_distance(p[j], p[l]);
                if (dij == dil) {
                    return IsoscelesWitness{{i, j, l}, 0};
                }
                if (dij == djl) {
                    return IsoscelesWitness{{i, j, l}, 1};
                }
                if (dil == djl) {
                    return IsoscelesWitness{{i, j, l}, 2};
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace localprop
