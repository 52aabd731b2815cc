#include "localprop/forbidden.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "localprop/combinatorics.hpp"

namespace localprop {

using boost::multiprecision::cpp_int;

ThmParams::ThmParams(std::uint32_t k, std::uint32_t m) : k_(k), m_(m) {
    if (m < 2 || k <= m) {
        throw std::invalid_argument("theorem parameters require k > m >= 2");
    }
}

LocalSpec ThmParams::forbidden_spec() const {
    const std::uint32_t size = a() * (b() + 1);
    const std::uint64_t pairs = pair_count(size);
    const std::uint64_t loss = static_cast<std::uint64_t>(b()) * a();
    if (loss < b() + 1) {
        throw std::invalid_argument("forbidden-configuration spec needs a >= 2");
    }
    return LocalSpec(size, static_cast<std::uint32_t>(pairs - loss + b() + 1));
}

LocalSpec ThmParams::theorem_spec() const {
    const std::uint64_t pairs = pair_count(k_);
    const std::uint64_t loss = static_cast<std::uint64_t>(m_) * a();
    if (loss < m_ + 1) {
        throw std::invalid_argument("theorem spec needs ⌊k/(m+1)⌋ >= 2");
    }
    return LocalSpec(k_, static_cast<std::uint32_t>(pairs - loss + m_ + 1));
}

MonoDegreeReport max_mono_degree(const ColoredCompleteGraph& g) {
    MonoDegreeReport report;
    std::vector<Color> incident;
    incident.reserve(g.n());
    for (std::size_t v = 0; v < g.n(); ++v) {
        incident.clear();
        for (std::size_t u = 0; u < g.n(); ++u) {
            if (u != v) {
                incident.push_back(g.color(u, v));
            }
        }
        std::sort(incident.begin(), incident.end());
        for (std::size_t i = 0; i < incident.size();) {
            std::size_t j = i;
            while (j < incident.size() && incident[j] == incident[i]) {
                ++j;
            }
            const std::size_t run = j - i;
            if (run > report.max) {
                report.max = run;
                report.attained.clear();
            }
            if (run == report.max) {
                report.attained.push_back({v, incident[i], run});
            }
            i = j;
        }
    }
    return report;
}

std::vector<MonoDegreeEntry> mono_degree_violations(const ColoredCompleteGraph& g, const ThmParams& p) {
    const std::size_t threshold = p.mono_degree_threshold();
    std::vector<MonoDegreeEntry> out;
    std::vector<std::size_t> counts(g.num_colors(), 0);
    for (std::size_t v = 0; v < g.n(); ++v) {
        std::fill(counts.begin(), counts.end(), 0);
        for (std::size_t u = 0; u < g.n(); ++u) {
            if (u != v) {
                ++counts[g.color(u, v)];
            }
        }
        for (Color c = 0; c < counts.size(); ++c) {
            if (counts[c] >= threshold) {
                out.push_back({v, c, counts[c]});
            }
        }
    }
    return out;
}

std::vector<ColorSupport> color_supports(const ColoredCompleteGraph& g) {
    std::vector<ColorSupport> supports(g.num_colors());
    for (Color c = 0; c < supports.size(); ++c) {
        supports[c].color = c;
        supports[c].vertices = DynamicBitset(g.n());
    }
    for (std::size_t i = 0; i < g.n(); ++i) {
        for (std::size_t j = i + 1; j < g.n(); ++j) {
            auto& s = supports[g.color(i, j)].vertices;
            s.set(i);
            s.set(j);
        }
    }
    return supports;
}

std::string_view to_string(SearchStatus status) {
    switch (status) {
        case SearchStatus::found:
            return "found";
        case SearchStatus::none:
            return "none";
        case SearchStatus::budget_exceeded:
            return "budget_exceeded";
    }
    return "unknown";
}

namespace {

// Depth-first scan over increasing index tuples of `pool`, keeping the
// running intersection and abandoning a branch once it drops below `need`.
class TupleIntersector {
public:
    TupleIntersector(const std::vector<const DynamicBitset*>& pool, std::size_t arity, std::size_t need)
        : pool_(pool), arity_(arity), need_(need) {}

    bool run() {
        chosen_.clear();
        if (pool_.size() < arity_ || arity_ == 0) {
            return false;
        }
        return descend(0, std::nullopt);
    }

    const std::vector<std::size_t>& chosen() const { return chosen_; }
    const DynamicBitset& intersection() const { return result_; }

private:
    bool descend(std::size_t start, const std::optional<DynamicBitset>& acc) {
        if (chosen_.size() == arity_) {
            result_ = *acc;
            return true;
        }
        const std::size_t remaining = arity_ - chosen_.size();
        for (std::size_t i = start; i + remaining <= pool_.size(); ++i) {
            DynamicBitset next = *pool_[i];
            if (acc) {
                next &= *acc;
            }
            if (next.count() < need_) {
                continue;
            }
            chosen_.push_back(i);
            if (descend(i + 1, next)) {
                return true;
            }
            chosen_.pop_back();
        }
        return false;
    }

    const std::vector<const DynamicBitset*>& pool_;
    std::size_t arity_;
    std::size_t need_;
    std::vector<std::size_t> chosen_;
    DynamicBitset result_;
};

}  // namespace

PopularIntersection popular_intersection_search(const ColoredCompleteGraph& g, std::uint32_t j,
                                                const ThmParams& p, std::uint64_t tuple_budget) {
    PopularIntersection out;
    const auto hist = color_histogram(g);
    const auto supports = color_supports(g);
    std::vector<Color> members;
    std::vector<const DynamicBitset*> pool;
    for (Color c = 0; c < hist.multiplicity.size(); ++c) {
        if (j < 64 && hist.multiplicity[c] >= (std::uint64_t{1} << j)) {
            members.push_back(c);
            pool.push_back(&supports[c].vertices);
        }
    }
    out.class_size = members.size();
    if (binomial(members.size(), p.b()) > tuple_budget) {
        out.status = SearchStatus::budget_exceeded;
        return out;
    }
    TupleIntersector scan(pool, p.b(), p.a());
    if (scan.run()) {
        out.status = SearchStatus::found;
        for (auto idx : scan.chosen()) {
            out.colors.push_back(members[idx]);
        }
        out.common_vertices = scan.intersection().members();
    }
    return out;
}

void SetSystemInstance::validate() const {
    if (d < 2) {
        throw std::invalid_argument("set system requires d >= 2");
    }
    if (n == 0) {
        throw std::invalid_argument("set system requires n >= 1");
    }
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (sets[i].empty()) {
            throw std::invalid_argument("set " + std::to_string(i + 1) + " is empty");
        }
        for (auto e : sets[i]) {
            if (e < 1 || e > n) {
                throw std::invalid_argument("element " + std::to_string(e) + " of set " +
                                            std::to_string(i + 1) + " is outside {1.." +
                                            std::to_string(n) + "}");
            }
        }
    }
}

namespace {

std::size_t distinct_size(const std::vector<std::uint32_t>& set) {
    auto copy = set;
    std::sort(copy.begin(), copy.end());
    return static_cast<std::size_t>(std::unique(copy.begin(), copy.end()) - copy.begin());
}

}  // namespace

std::size_t SetSystemInstance::min_set_size() const {
    std::size_t m = 0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const auto s = distinct_size(sets[i]);
        m = (i == 0) ? s : std::min(m, s);
    }
    return m;
}

bool SetSystemInstance::hypothesis_holds() const {
    validate();
    if (sets.empty()) {
        return false;
    }
    const cpp_int m = min_set_size();
    const cpp_int lhs = cpp_int(sets.size()) * boost::multiprecision::pow(m, d);
    const cpp_int rhs = cpp_int(2) * d * boost::multiprecision::pow(cpp_int(n), d);
    return lhs >= rhs;
}

std::optional<CountingLemmaHit> counting_lemma_find(const SetSystemInstance& inst) {
    inst.validate();
    if (inst.sets.size() < inst.d) {
        return std::nullopt;
    }
    // Smallest integer s with s * 2n^(d-1) >= m^d.
    const cpp_int num = boost::multiprecision::pow(cpp_int(inst.min_set_size()), inst.d);
    const cpp_int den = cpp_int(2) * boost::multiprecision::pow(cpp_int(inst.n), inst.d - 1);
    const cpp_int need_big = (num + den - 1) / den;
    const std::size_t need = need_big.convert_to<std::size_t>();

    std::vector<DynamicBitset> bits;
    bits.reserve(inst.sets.size());
    for (const auto& s : inst.sets) {
        DynamicBitset b(inst.n + 1);
        for (auto e : s) {
            b.set(e);
        }
        bits.push_back(std::move(b));
    }
    std::vector<const DynamicBitset*> pool;
    for (const auto& b : bits) {
        pool.push_back(&b);
    }
    TupleIntersector scan(pool, inst.d, need);
    if (!scan.run()) {
        return std::nullopt;
    }
    CountingLemmaHit hit;
    for (auto idx : scan.chosen()) {
        hit.indices.push_back(idx + 1);
    }
    hit.intersection_size = scan.intersection().count();
    return hit;
}

}  // namespace localprop
