#include "localprop/energy_analysis.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace localprop {

using boost::multiprecision::cpp_int;
using boost::multiprecision::pow;

namespace {

std::uint32_t floor_log2(std::uint64_t x) { return static_cast<std::uint32_t>(std::bit_width(x) - 1); }

cpp_int pow2(std::uint64_t e) { return cpp_int(1) << e; }

}  // namespace

std::vector<std::uint64_t> dyadic_bins(const ColorHistogram& hist) {
    std::vector<std::uint64_t> bins;
    for (auto m : hist.multiplicity) {
        const auto j = floor_log2(m);
        if (bins.size() <= j) {
            bins.resize(j + 1, 0);
        }
        ++bins[j];
    }
    return bins;
}

std::uint32_t crossover_index(std::size_t n, const ThmParams& p) {
    const std::uint32_t a = p.a();
    const std::uint32_t b = p.b();
    const cpp_int rhs = pow(cpp_int(b), b) * 2 * pow(cpp_int(a), b + 1) * pow(cpp_int(n), b - 1);
    std::uint32_t t = 0;
    while (pow2(static_cast<std::uint64_t>(t + 1) * b) <= rhs) {
        ++t;
    }
    return t;
}

DyadicProfile dyadic_profile(const ColoredCompleteGraph& g, const ThmParams& p) {
    DyadicProfile profile;
    profile.n = g.n();
    profile.bin_count = dyadic_bins(color_histogram(g));
    profile.cum_count.assign(profile.bin_count.size(), 0);
    std::uint64_t running = 0;
    for (std::size_t j = profile.bin_count.size(); j-- > 0;) {
        running += profile.bin_count[j];
        profile.cum_count[j] = running;
    }
    profile.t = crossover_index(g.n(), p);
    return profile;
}

namespace {

std::string describe(const std::vector<MonoDegreeEntry>& violations) {
    const auto& v = violations.front();
    std::ostringstream out;
    out << "mono_degree vertex=" << v.vertex << " color=" << v.color << " count=" << v.count;
    return out.str();
}

std::string describe(const PopularIntersection& hit) {
    std::ostringstream out;
    out << "popular_intersection colors=";
    for (std::size_t i = 0; i < hit.colors.size(); ++i) {
        out << (i ? ";" : "") << hit.colors[i];
    }
    out << " vertices=";
    for (std::size_t i = 0; i < hit.common_vertices.size(); ++i) {
        out << (i ? ";" : "") << hit.common_vertices[i];
    }
    return out.str();
}

}  // namespace

BoundReport bound_report(const ColoredCompleteGraph& g, const ThmParams& p, std::size_t forbidden_search_max_n) {
    BoundReport report;
    report.profile = dyadic_profile(g, p);
    const auto& prof = report.profile;
    const std::uint32_t a = p.a();
    const std::uint32_t b = p.b();
    const cpp_int n = g.n();
    const cpp_int poor_num = n * n;
    const cpp_int rich_num = 2 * pow(n, b) * pow(cpp_int(b), b + 1) * pow(cpp_int(a), b);
    const cpp_int n_pow = pow(n, b - 1);

    const std::size_t top_bin = prof.bin_count.empty() ? 0 : prof.bin_count.size() - 1;
    const std::size_t last = std::max<std::size_t>(top_bin, prof.t + 1);
    std::optional<std::vector<MonoDegreeEntry>> violations;

    for (std::size_t j = 0; j <= last; ++j) {
        BoundRow row;
        row.j = static_cast<std::uint32_t>(j);
        row.bin_count = prof.bin(j);
        row.k_j = prof.cumulative(j);
        const cpp_int kj = row.k_j;
        const cpp_int poor_den = pow2(j);
        const cpp_int rich_den = pow2(j * b);
        row.poor_num = poor_num.str();
        row.poor_den = poor_den.str();
        row.rich_num = rich_num.str();
        row.rich_den = rich_den.str();
        row.poor_ok = kj * poor_den < poor_num;
        row.rich_ok = kj * rich_den < rich_num;
        row.regime = j <= prof.t ? BoundRegime::poor : BoundRegime::rich;
        // 2^((j-1)b) < n^(b-1) < 2^((j+1)b)
        const cpp_int lower = j == 0 ? cpp_int(0) : pow2((j - 1) * b);
        row.remark_range = lower < n_pow && n_pow < pow2((j + 1) * b);

        if (row.regime == BoundRegime::rich && !row.rich_ok && g.n() <= forbidden_search_max_n) {
            if (!violations) {
                violations = mono_degree_violations(g, p);
            }
            if (!violations->empty()) {
                row.forbidden_hint = describe(*violations);
            } else if (j < 64 && (std::uint64_t{1} << j) >= a) {
                const auto hit = popular_intersection_search(g, static_cast<std::uint32_t>(j), p);
                if (hit.status == SearchStatus::found) {
                    row.forbidden_hint = describe(hit);
                } else {
                    row.forbidden_hint = std::string("none_located (") + std::string(to_string(hit.status)) + ")";
                }
            } else {
                row.forbidden_hint = "none_located";
            }
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

EnergyDecomposition energy_decomposition(const ColoredCompleteGraph& g) {
    const auto hist = color_histogram(g);
    EnergyDecomposition out;
    out.bin_count = dyadic_bins(hist);
    out.contribution.assign(out.bin_count.size(), 0);
    for (auto m : hist.multiplicity) {
        const auto j = floor_log2(m);
        const u128 sq = checked_mul(m, m);
        out.contribution[j] = checked_add(out.contribution[j], sq);
        out.total = checked_add(out.total, sq);
    }
    return out;
}

}  // namespace localprop
