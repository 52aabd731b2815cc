#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "localprop/checked.hpp"

namespace localprop {

/// Finite set of integers stored strictly increasing.
class IntegerSet {
public:
    IntegerSet() = default;

    /// Requires strictly increasing input.
    explicit IntegerSet(std::vector<std::int64_t> sorted_elements);

    /// Sorts and removes duplicates.
    static IntegerSet normalized(std::vector<std::int64_t> elements);

    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    std::int64_t operator[](std::size_t i) const { return elements_[i]; }
    std::span<const std::int64_t> elements() const { return elements_; }
    bool contains(std::int64_t value) const;

    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }

    friend bool operator==(const IntegerSet&, const IntegerSet&) = default;
    friend auto operator<=>(const IntegerSet&, const IntegerSet&) = default;

private:
    std::vector<std::int64_t> elements_;
};

struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

/// Exact |pq|². 128-bit so that any pair of int64 coordinates fits.
u128 squared_distance(const Point& p, const Point& q);

/// Pairwise-distinct integer points, kept in input order.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<Point> points);

    std::size_t size() const { return points_.size(); }
    const Point& operator[](std::size_t i) const { return points_[i]; }
    std::span<const Point> points() const { return points_; }

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    std::vector<Point> points_;
};

}  // namespace localprop
