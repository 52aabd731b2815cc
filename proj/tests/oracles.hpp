#pragma once

// Brute-force reference implementations. These deliberately avoid the
// library's algorithms (pruning, sorting tricks, bitsets) so that tests
// compare two independent routes.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iterator>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "localprop/coloring.hpp"
#include "localprop/forbidden.hpp"
#include "localprop/sets.hpp"

namespace oracle {

using localprop::ColoredCompleteGraph;
using localprop::Color;

/// Raw color of edge {i, j} read straight from the row-major array.
inline Color raw_color(const ColoredCompleteGraph& g, std::size_t i, std::size_t j) {
    if (i > j) {
        std::swap(i, j);
    }
    const std::size_t n = g.n();
    return g.edge_colors()[i * n - i * (i + 1) / 2 + j - i - 1];
}

/// Ordered pairs of unordered same-colored edges, found by walking all
/// vertex quadruples (v1 < u1, v2 < u2).
inline std::uint64_t quadruple_energy(const ColoredCompleteGraph& g) {
    const std::size_t n = g.n();
    std::uint64_t count = 0;
    for (std::size_t v1 = 0; v1 < n; ++v1) {
        for (std::size_t u1 = v1 + 1; u1 < n; ++u1) {
            for (std::size_t v2 = 0; v2 < n; ++v2) {
                for (std::size_t u2 = v2 + 1; u2 < n; ++u2) {
                    if (raw_color(g, v1, u1) == raw_color(g, v2, u2)) {
                        ++count;
                    }
                }
            }
        }
    }
    return count;
}

/// Visits every k-subset of {0..n-1} in lexicographic order via recursion.
inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> cur;
    std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
        if (cur.size() == k) {
            return visit(cur);
        }
        for (std::size_t v = start; v < n; ++v) {
            cur.push_back(v);
            if (!rec(v + 1)) {
                return false;
            }
            cur.pop_back();
        }
        return true;
    };
    rec(0);
}

inline std::size_t distinct_colors(const ColoredCompleteGraph& g, const std::vector<std::size_t>& s) {
    std::set<Color> seen;
    for (std::size_t a = 0; a < s.size(); ++a) {
        for (std::size_t b = a + 1; b < s.size(); ++b) {
            seen.insert(raw_color(g, s[a], s[b]));
        }
    }
    return seen.size();
}

struct ScanResult {
    bool holds = true;
    std::vector<std::size_t> witness;
    std::size_t count = 0;
};

/// Unpruned scan of every k-subset; first failure in lex order.
inline ScanResult full_scan(const ColoredCompleteGraph& g, std::size_t k, std::size_t ell) {
    ScanResult r;
    for_each_subset(g.n(), k, [&](const std::vector<std::size_t>& s) {
        const auto c = distinct_colors(g, s);
        if (c < ell) {
            r.holds = false;
            r.witness = s;
            r.count = c;
            return false;
        }
        return true;
    });
    return r;
}

/// Minimum distinct-color count over all k-subsets.
inline std::size_t min_subset_colors(const ColoredCompleteGraph& g, std::size_t k) {
    std::size_t best = SIZE_MAX;
    for_each_subset(g.n(), k, [&](const std::vector<std::size_t>& s) {
        best = std::min(best, distinct_colors(g, s));
        return true;
    });
    return best;
}

/// Every coloring of K_n up to relabeling (restricted growth strings).
inline void for_each_coloring(std::size_t n, const std::function<void(const ColoredCompleteGraph&)>& visit) {
    const std::size_t edges = n * (n - 1) / 2;
    std::vector<Color> colors(edges, 0);
    std::function<void(std::size_t, Color)> rec = [&](std::size_t pos, Color used) {
        if (pos == edges) {
            visit(ColoredCompleteGraph(n, colors));
            return;
        }
        for (Color c = 0; c <= used && c < edges; ++c) {
            colors[pos] = c;
            rec(pos + 1, std::max<Color>(used, c + 1));
        }
    };
    if (edges == 0) {
        visit(ColoredCompleteGraph(n, {}));
        return;
    }
    rec(0, 0);
}

inline std::uint64_t additive_energy(const localprop::IntegerSet& a) {
    std::uint64_t count = 0;
    for (auto x : a) {
        for (auto y : a) {
            for (auto z : a) {
                for (auto w : a) {
                    if (x + y == z + w) {
                        ++count;
                    }
                }
            }
        }
    }
    return count;
}

inline bool has_3ap(const localprop::IntegerSet& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            for (std::size_t l = j + 1; l < a.size(); ++l) {
                if (a[i] + a[l] == 2 * a[j]) {
                    return true;
                }
            }
        }
    }
    return false;
}

/// Chromatic index of K_n: n - 1 for even n, n for odd n (n >= 2).
inline std::size_t chromatic_index_complete(std::size_t n) { return n % 2 == 0 ? n - 1 : n; }

struct PaintedEdge {
    std::size_t i;
    std::size_t j;
    std::int64_t key;
};

/// K_n where the listed edges carry the given keys and every other edge
/// gets its own fresh key (so ids follow key order, painted keys first
/// when they are negative).
inline ColoredCompleteGraph painted_graph(std::size_t n, const std::vector<PaintedEdge>& painted) {
    std::vector<std::int64_t> keys(n * (n - 1) / 2);
    for (std::size_t e = 0; e < keys.size(); ++e) {
        keys[e] = 1'000'000 + static_cast<std::int64_t>(e);
    }
    for (const auto& p : painted) {
        const auto lo = std::min(p.i, p.j);
        const auto hi = std::max(p.i, p.j);
        keys[lo * n - lo * (lo + 1) / 2 + hi - lo - 1] = p.key;
    }
    return ColoredCompleteGraph::from_keys(n, keys);
}

/// Endpoints of edges carrying color c, from a plain edge walk.
inline std::set<std::size_t> support(const ColoredCompleteGraph& g, Color c) {
    std::set<std::size_t> out;
    for (std::size_t i = 0; i < g.n(); ++i) {
        for (std::size_t j = i + 1; j < g.n(); ++j) {
            if (raw_color(g, i, j) == c) {
                out.insert(i);
                out.insert(j);
            }
        }
    }
    return out;
}

struct TupleHit {
    std::vector<Color> colors;
    std::set<std::size_t> common;
};

/// Every b-tuple of colors with multiplicity >= 2^j, no pruning.
inline std::optional<TupleHit> popular_scan(const ColoredCompleteGraph& g, std::uint32_t j, std::size_t a,
                                            std::size_t b) {
    std::vector<std::uint64_t> mult(g.num_colors(), 0);
    for (auto c : g.edge_colors()) {
        ++mult[c];
    }
    std::vector<Color> pool;
    for (Color c = 0; c < g.num_colors(); ++c) {
        if (j < 64 && mult[c] >= (std::uint64_t{1} << j)) {
            pool.push_back(c);
        }
    }
    std::optional<TupleHit> hit;
    for_each_subset(pool.size(), b, [&](const std::vector<std::size_t>& idx) {
        std::set<std::size_t> common = support(g, pool[idx[0]]);
        for (std::size_t t = 1; t < idx.size(); ++t) {
            const auto next = support(g, pool[idx[t]]);
            std::set<std::size_t> keep;
            std::set_intersection(common.begin(), common.end(), next.begin(), next.end(),
                                  std::inserter(keep, keep.begin()));
            common = std::move(keep);
        }
        if (common.size() >= a) {
            TupleHit h;
            for (auto i : idx) {
                h.colors.push_back(pool[i]);
            }
            h.common = std::move(common);
            hit = std::move(h);
            return false;
        }
        return true;
    });
    return hit;
}

/// Least d-tuple (1-based) whose intersection satisfies
/// |I| * 2 n^(d-1) >= m^d, by plain set intersection.
inline std::optional<std::vector<std::size_t>> lemma_scan(const localprop::SetSystemInstance& inst) {
    std::size_t m = SIZE_MAX;
    for (const auto& s : inst.sets) {
        m = std::min(m, std::set<std::uint32_t>(s.begin(), s.end()).size());
    }
    std::uint64_t md = 1;
    std::uint64_t nd1 = 1;
    for (std::uint32_t t = 0; t < inst.d; ++t) {
        md *= m;
    }
    for (std::uint32_t t = 0; t + 1 < inst.d; ++t) {
        nd1 *= inst.n;
    }
    std::optional<std::vector<std::size_t>> found;
    for_each_subset(inst.sets.size(), inst.d, [&](const std::vector<std::size_t>& idx) {
        std::set<std::uint32_t> common(inst.sets[idx[0]].begin(), inst.sets[idx[0]].end());
        for (std::size_t t = 1; t < idx.size(); ++t) {
            std::set<std::uint32_t> next(inst.sets[idx[t]].begin(), inst.sets[idx[t]].end());
            std::set<std::uint32_t> keep;
            std::set_intersection(common.begin(), common.end(), next.begin(), next.end(),
                                  std::inserter(keep, keep.begin()));
            common = std::move(keep);
        }
        if (common.size() * 2 * nd1 >= md) {
            std::vector<std::size_t> one_based;
            for (auto i : idx) {
                one_based.push_back(i + 1);
            }
            found = one_based;
            return false;
        }
        return true;
    });
    return found;
}

/// Random set system over {1..n} meeting k * m^d >= 2d n^d, with k kept
/// at most `max_sets`. Sizes are drawn from [m, n] with one set of size m.
inline localprop::SetSystemInstance random_lemma_instance(std::mt19937& rng, std::size_t max_n,
                                                          std::size_t max_sets) {
    for (;;) {
        const std::size_t n = 1 + rng() % max_n;
        const std::uint32_t d = 2 + rng() % 2;
        const std::size_t m = 1 + rng() % n;
        std::uint64_t nd = 1;
        std::uint64_t md = 1;
        for (std::uint32_t t = 0; t < d; ++t) {
            nd *= n;
            md *= m;
        }
        const std::uint64_t k_min = (2 * d * nd + md - 1) / md;
        const std::uint64_t k = std::max<std::uint64_t>(k_min + rng() % 3, d);
        if (k > max_sets) {
            continue;
        }
        localprop::SetSystemInstance inst;
        inst.n = n;
        inst.d = d;
        std::vector<std::uint32_t> universe(n);
        for (std::size_t v = 0; v < n; ++v) {
            universe[v] = static_cast<std::uint32_t>(v + 1);
        }
        for (std::uint64_t i = 0; i < k; ++i) {
            const std::size_t size = i == 0 ? m : m + rng() % (n - m + 1);
            std::shuffle(universe.begin(), universe.end(), rng);
            std::vector<std::uint32_t> s(universe.begin(), universe.begin() + static_cast<std::ptrdiff_t>(size));
            std::sort(s.begin(), s.end());
            inst.sets.push_back(std::move(s));
        }
        return inst;
    }
}

/// Test-side random coloring with its own generator.
inline ColoredCompleteGraph random_graph(std::mt19937& rng, std::size_t n, std::uint32_t colors) {
    std::uniform_int_distribution<std::uint32_t> pick(0, colors - 1);
    std::vector<std::int64_t> raw(n * (n - 1) / 2);
    for (auto& c : raw) {
        c = pick(rng);
    }
    return ColoredCompleteGraph::from_keys(n, raw);
}

inline localprop::IntegerSet random_int_set(std::mt19937& rng, std::size_t size, std::int64_t lo, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> pick(lo, hi);
    std::set<std::int64_t> s;
    while (s.size() < size) {
        s.insert(pick(rng));
    }
    return localprop::IntegerSet(std::vector<std::int64_t>(s.begin(), s.end()));
}

}  // namespace oracle
