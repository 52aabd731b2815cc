#include <doctest.h>

#include <cmath>
#include <random>

#include "localprop/constructions.hpp"
#include "oracles.hpp"

using namespace localprop;

namespace {

// Probability that `edges` iid uniform draws from c colors are all distinct.
double all_distinct_probability(std::size_t edges, double c) {
    double p = 1.0;
    for (std::size_t i = 0; i < edges; ++i) {
        p *= 1.0 - static_cast<double>(i) / c;
    }
    return p;
}

std::uint64_t isqrt_ceil(std::uint64_t n) {
    std::uint64_t r = 0;
    while (r * r < n) {
        ++r;
    }
    return r;
}

}  // namespace

TEST_CASE("random_coloring examples") {
    CHECK(random_coloring({7, 1, 42}) == monochromatic(7));
    const auto first = random_coloring({6, 5, 0xC0FFEE});
    const auto second = random_coloring({6, 5, 0xC0FFEE});
    CHECK(first == second);
    CHECK(first.num_colors() <= 5);
    CHECK_THROWS_AS(random_coloring({6, 0, 1}), std::invalid_argument);

    // Different seeds should not all collide.
    int differing = 0;
    for (std::uint64_t s = 1; s <= 20; ++s) {
        if (!(random_coloring({6, 5, s}) == first)) {
            ++differing;
        }
    }
    CHECK(differing >= 19);
}

TEST_CASE("derive_seed is a fixed function of (seed, index)") {
    CHECK(derive_seed(1, 0) == derive_seed(1, 0));
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 0) != derive_seed(2, 0));
}

TEST_CASE("random_coloring: rainbow frequency matches the birthday product") {
    const double expected = all_distinct_probability(6, 15.0);
    CHECK(expected == doctest::Approx(240240.0 / 759375.0));
    const std::uint64_t trials = 20000;
    std::uint64_t rainbow_count = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        if (random_coloring({4, 15, derive_seed(77, t)}).num_colors() == 6) {
            ++rainbow_count;
        }
    }
    const double observed = static_cast<double>(rainbow_count) / trials;
    const double sd = std::sqrt(expected * (1 - expected) / trials);
    CHECK(std::abs(observed - expected) < 5 * sd);

    const auto est = estimate_property_probability(4, 15, LocalSpec(4, 6), trials, 77);
    CHECK(est.successes == rainbow_count);
}

TEST_CASE("random_coloring: per-edge and pairwise chi-square sanity") {
    const std::uint32_t c = 5;
    std::vector<double> single(c, 0.0);
    std::vector<double> joint(c * c, 0.0);
    double draws = 0;
    double pairs = 0;
    for (std::uint64_t s = 0; s < 200; ++s) {
        const auto g = random_coloring({20, c, s});
        REQUIRE(g.num_colors() == c);
        const auto colors = g.edge_colors();
        for (std::size_t e = 0; e < colors.size(); ++e) {
            single[colors[e]] += 1;
            draws += 1;
        }
        for (std::size_t e = 0; e + 1 < colors.size(); e += 2) {
            joint[colors[e] * c + colors[e + 1]] += 1;
            pairs += 1;
        }
    }
    double chi1 = 0;
    for (auto o : single) {
        const double e = draws / c;
        chi1 += (o - e) * (o - e) / e;
    }
    double chi2 = 0;
    for (auto o : joint) {
        const double e = pairs / (c * c);
        chi2 += (o - e) * (o - e) / e;
    }
    // 99.9% quantiles for 4 and 24 degrees of freedom.
    CHECK(chi1 < 18.47);
    CHECK(chi2 < 51.18);
}

TEST_CASE("eg_color_count examples") {
    CHECK(eg_color_count(100, LocalSpec(4, 5)) == 100);
    CHECK(eg_color_count(100, LocalSpec(4, 4)) == 22);
    for (std::uint64_t n = 1; n <= 3000; ++n) {
        CHECK(eg_color_count(n, LocalSpec(3, 2)) == isqrt_ceil(n));
    }
    // 2^60 under exponent 2/2 and 1/2.
    CHECK(eg_color_count(std::uint64_t{1} << 60, LocalSpec(4, 5)) == std::uint64_t{1} << 60);
    CHECK(eg_color_count(std::uint64_t{1} << 60, LocalSpec(3, 2)) == std::uint64_t{1} << 30);
    CHECK_THROWS_AS(eg_color_count(0, LocalSpec(3, 2)), std::invalid_argument);
}

TEST_CASE("estimate_property_probability examples") {
    CHECK(estimate_property_probability(5, 1, LocalSpec(3, 2), 50, 3).fraction() == 0.0);
    CHECK(estimate_property_probability(3, 1, LocalSpec(3, 2), 50, 3).fraction() == 0.0);
    CHECK(estimate_property_probability(5, 2, LocalSpec(3, 3), 200, 3).fraction() == 0.0);

    const std::uint64_t trials = 20000;
    const auto est = estimate_property_probability(4, 1000, LocalSpec(4, 6), trials, 11);
    const double expected = all_distinct_probability(6, 1000.0);
    CHECK(expected == doctest::Approx(0.98505).epsilon(1e-4));
    const double sd = std::sqrt(expected * (1 - expected) / trials);
    CHECK(std::abs(est.fraction() - expected) < 5 * sd);

    CHECK_THROWS_AS(estimate_property_probability(3, 2, LocalSpec(4, 2), 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(estimate_property_probability(5, 2, LocalSpec(3, 2), 0, 1), std::invalid_argument);
}

TEST_CASE("estimate_property_probability does not depend on the thread count") {
    const auto one = estimate_property_probability(6, 6, LocalSpec(3, 2), 3000, 99, 1);
    const auto four = estimate_property_probability(6, 6, LocalSpec(3, 2), 3000, 99, 4);
    CHECK(one.successes == four.successes);
    CHECK(one.trials == 3000);
}

TEST_CASE("property: success probability trends upward in c") {
    const std::uint64_t trials = 1000;
    std::vector<double> p;
    for (std::uint32_t c = 1; c <= 11; ++c) {
        p.push_back(estimate_property_probability(5, c, LocalSpec(3, 2), trials, 500 + c).fraction());
    }
    int agree = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (p[i + 1] >= p[i]) {
            ++agree;
        }
    }
    CHECK(agree * 10 >= static_cast<int>(p.size() - 1) * 9);
}

TEST_CASE("behrend_set examples") {
    CHECK(behrend_set(1).elements == IntegerSet({1}));
    const auto four = behrend_set(4);
    CHECK(four.elements.size() == 4);
    CHECK_FALSE(verify_no_3ap(four.elements));
    CHECK_FALSE(oracle::has_3ap(four.elements));

    const auto big = behrend_set(64);
    CHECK(big.elements.size() == 64);
    CHECK_FALSE(oracle::has_3ap(big.elements));
    CHECK(big.elements[0] >= 1);
    CHECK(big.params.base == 2 * big.params.digit_bound - 1);
    CHECK(big.params.sphere_size >= 64);

    CHECK_THROWS_AS(behrend_set(0), std::invalid_argument);
}

TEST_CASE("property: behrend sets up to 128 are 3-AP-free and give isosceles-free lines") {
    for (std::size_t target = 1; target <= 128; ++target) {
        const auto b = behrend_set(target);
        REQUIRE(b.elements.size() == target);
        CHECK(b.elements[0] >= 1);
        CHECK_FALSE(verify_no_3ap(b.elements));
        if (target <= 40 || target % 16 == 0) {
            CHECK_FALSE(oracle::has_3ap(b.elements));
        }
        CHECK_FALSE(verify_isosceles_free(collinear_point_set(b.elements)));
    }
}

TEST_CASE("verify_no_3ap examples") {
    const auto w = verify_no_3ap(IntegerSet({1, 2, 3}));
    REQUIRE(w);
    CHECK(*w == std::array<std::int64_t, 3>{1, 2, 3});
    CHECK_FALSE(verify_no_3ap(IntegerSet({1, 2, 4, 5})));
    CHECK_FALSE(verify_no_3ap(IntegerSet()));
    CHECK_FALSE(verify_no_3ap(IntegerSet({9})));
    CHECK_FALSE(verify_no_3ap(IntegerSet({-3, 9})));
    // Least triple, not the first middle element found.
    CHECK(*verify_no_3ap(IntegerSet({0, 3, 4, 6, 8})) == std::array<std::int64_t, 3>{0, 3, 6});
}

TEST_CASE("collinear_point_set and verify_isosceles_free examples") {
    const auto line = collinear_point_set(IntegerSet({1, 2, 4}));
    CHECK(line == PointSet({{1, 0}, {2, 0}, {4, 0}}));
    CHECK_FALSE(verify_isosceles_free(line));

    const auto ap = verify_isosceles_free(collinear_point_set(IntegerSet({1, 2, 3})));
    REQUIRE(ap);
    CHECK(ap->indices == std::array<std::size_t, 3>{0, 1, 2});
    CHECK(ap->apex == 1);

    const auto right = verify_isosceles_free(PointSet({{0, 0}, {1, 0}, {0, 1}}));
    REQUIRE(right);
    CHECK(right->apex == 0);
    CHECK_FALSE(verify_isosceles_free(PointSet({{0, 0}, {1, 0}, {3, 0}})));
    CHECK(verify_isosceles_free(PointSet({{0, 0}, {1, 0}, {2, 0}})));

    CHECK_FALSE(verify_isosceles_free(collinear_point_set(behrend_set(8).elements)));
    CHECK_THROWS_AS(collinear_point_set(IntegerSet()), std::invalid_argument);
}

TEST_CASE("property: 3-AP in A iff degenerate isosceles triple on its line") {
    std::mt19937 rng(4242);
    int with_ap = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t size = 3 + rng() % 8;
        const auto a = oracle::random_int_set(rng, size, -30, 30);
        const auto ap = verify_no_3ap(a);
        const auto iso = verify_isosceles_free(collinear_point_set(a));
        REQUIRE(ap.has_value() == oracle::has_3ap(a));
        REQUIRE(ap.has_value() == iso.has_value());
        if (ap) {
            ++with_ap;
            CHECK(a[iso->indices[0]] == (*ap)[0]);
            CHECK(a[iso->indices[1]] == (*ap)[1]);
            CHECK(a[iso->indices[2]] == (*ap)[2]);
            CHECK(iso->apex == 1);
        }
    }
    CHECK(with_ap > 100);
    CHECK(with_ap < 1000);
}
