#include "localprop/sets.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace localprop {

IntegerSet::IntegerSet(std::vector<std::int64_t> sorted_elements) : elements_(std::move(sorted_elements)) {
    for (std::size_t i = 1; i < elements_.size(); ++i) {
        if (elements_[i - 1] >= elements_[i]) {
            throw std::invalid_argument("integer set must be strictly increasing (position " +
                                        std::to_string(i) + ")");
        }
    }
}

IntegerSet IntegerSet::normalized(std::vector<std::int64_t> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    return IntegerSet(std::move(elements));
}

bool IntegerSet::contains(std::int64_t value) const {
    return std::binary_search(elements_.begin(), elements_.end(), value);
}

u128 squared_distance(const Point& p, const Point& q) {
    // Differences of int64 values fit in 65 bits signed; work in __int128.
    const __int128 dx = static_cast<__int128>(p.x) - q.x;
    const __int128 dy = static_cast<__int128>(p.y) - q.y;
    const u128 ax = static_cast<u128>(dx < 0 ? -dx : dx);
    const u128 ay = static_cast<u128>(dy < 0 ? -dy : dy);
    return checked_add(checked_mul(ax, ax), checked_mul(ay, ay));
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
    std::vector<Point> sorted = points_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("point set contains duplicate points");
    }
}

}  // namespace localprop
