#include <algorithm>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "localprop/coloring.hpp"
#include "localprop/constructions.hpp"
#include "localprop/energy_analysis.hpp"
#include "localprop/exact_solver.hpp"
#include "localprop/forbidden.hpp"
#include "localprop/io.hpp"
#include "localprop/number_sets.hpp"

namespace py = pybind11;
using namespace localprop;

namespace {

py::int_ to_py(u128 value) {
    const std::string digits = to_string(value);
    return py::reinterpret_steal<py::int_>(PyLong_FromString(digits.c_str(), nullptr, 10));
}

IntegerSet to_set(std::vector<std::int64_t> values) {
    std::sort(values.begin(), values.end());
    return IntegerSet(std::move(values));
}

std::vector<std::int64_t> from_set(const IntegerSet& a) { return {a.begin(), a.end()}; }

PointSet to_points(const std::vector<std::pair<std::int64_t, std::int64_t>>& pts) {
    std::vector<Point> points;
    points.reserve(pts.size());
    for (const auto& [x, y] : pts) {
        points.push_back({x, y});
    }
    return PointSet(std::move(points));
}

py::object witness_to_py(const PropertyVerdict& v) {
    if (!v.witness) {
        return py::none();
    }
    return py::make_tuple(v.witness->subset, v.witness->count);
}

py::dict verdict_to_py(const PropertyVerdict& v) {
    py::dict d;
    d["holds"] = v.holds;
    d["witness"] = witness_to_py(v);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Local-property colorings of K_n, difference sets and distinct distances";
    m.attr("__version__") = kVersion;

    py::class_<LocalSpec>(m, "LocalSpec")
        .def(py::init<std::uint32_t, std::uint32_t>(), py::arg("k"), py::arg("ell"))
        .def_readonly("k", &LocalSpec::k)
        .def_readonly("ell", &LocalSpec::ell)
        .def("__repr__", [](const LocalSpec& s) {
            return "LocalSpec(k=" + std::to_string(s.k) + ", ell=" + std::to_string(s.ell) + ")";
        });

    py::class_<ColoredCompleteGraph>(m, "ColoredCompleteGraph")
        .def(py::init([](std::size_t n, const std::vector<std::int64_t>& colors) {
                 return ColoredCompleteGraph::from_keys(n, colors);
             }),
             py::arg("n"), py::arg("colors"),
             "Colors in upper-triangle row-major order; sparse ids are re-densified.")
        .def_property_readonly("n", &ColoredCompleteGraph::n)
        .def_property_readonly("num_colors", &ColoredCompleteGraph::num_colors)
        .def_property_readonly("edge_colors",
                               [](const ColoredCompleteGraph& g) {
                                   return std::vector<Color>(g.edge_colors().begin(), g.edge_colors().end());
                               })
        .def("color", &ColoredCompleteGraph::color, py::arg("i"), py::arg("j"))
        .def("to_json", [](const ColoredCompleteGraph& g) { return coloring_to_json(g).dump(); })
        .def("__eq__", [](const ColoredCompleteGraph& a, const ColoredCompleteGraph& b) { return a == b; });

    m.def("monochromatic", &monochromatic, py::arg("n"));
    m.def("rainbow", &rainbow, py::arg("n"));
    m.def("edge_index", &edge_index, py::arg("n"), py::arg("i"), py::arg("j"));

    // colored_core
    m.def(
        "subset_color_count",
        [](const ColoredCompleteGraph& g, const std::vector<std::size_t>& s) { return subset_color_count(g, s); },
        py::arg("graph"), py::arg("subset"));
    m.def(
        "verify_local_property",
        [](const ColoredCompleteGraph& g, const LocalSpec& spec) { return verdict_to_py(verify_local_property(g, spec)); },
        py::arg("graph"), py::arg("spec"));
    m.def(
        "color_histogram", [](const ColoredCompleteGraph& g) { return color_histogram(g).multiplicity; },
        py::arg("graph"));
    m.def(
        "color_energy", [](const ColoredCompleteGraph& g) { return to_py(color_energy(g)); }, py::arg("graph"));
    m.def(
        "cauchy_schwarz_floor", [](const ColoredCompleteGraph& g) { return to_py(cauchy_schwarz_floor(g)); },
        py::arg("graph"));
    m.def(
        "relabel_colors",
        [](const ColoredCompleteGraph& g, const std::vector<Color>& perm) { return relabel_colors(g, perm); },
        py::arg("graph"), py::arg("perm"));

    // forbidden_configs
    m.def(
        "max_mono_degree",
        [](const ColoredCompleteGraph& g) {
            const auto r = max_mono_degree(g);
            py::list attained;
            for (const auto& e : r.attained) {
                attained.append(py::make_tuple(e.vertex, e.color, e.count));
            }
            return py::make_tuple(r.max, attained);
        },
        py::arg("graph"));
    m.def(
        "mono_degree_violations",
        [](const ColoredCompleteGraph& g, std::uint32_t k, std::uint32_t mm) {
            py::list out;
            for (const auto& e : mono_degree_violations(g, ThmParams(k, mm))) {
                out.append(py::make_tuple(e.vertex, e.color, e.count));
            }
            return out;
        },
        py::arg("graph"), py::arg("k"), py::arg("m"));
    m.def(
        "popular_intersection_search",
        [](const ColoredCompleteGraph& g, std::uint32_t j, std::uint32_t k, std::uint32_t mm, std::uint64_t budget) {
            const auto r = popular_intersection_search(g, j, ThmParams(k, mm), budget);
            py::dict d;
            d["status"] = std::string(to_string(r.status));
            d["colors"] = r.colors;
            d["common_vertices"] = r.common_vertices;
            d["class_size"] = r.class_size;
            return d;
        },
        py::arg("graph"), py::arg("j"), py::arg("k"), py::arg("m"), py::arg("budget") = 100'000'000ULL);
    m.def(
        "counting_lemma_find",
        [](std::size_t n, const std::vector<std::vector<std::uint32_t>>& sets, std::uint32_t d) -> py::object {
            SetSystemInstance inst{n, sets, d};
            const auto hit = counting_lemma_find(inst);
            if (!hit) {
                return py::none();
            }
            return py::make_tuple(hit->indices, hit->intersection_size);
        },
        py::arg("n"), py::arg("sets"), py::arg("d"));

    // constructions
    m.def(
        "random_coloring",
        [](std::size_t n, std::uint32_t colors, std::uint64_t seed) { return random_coloring({n, colors, seed}); },
        py::arg("n"), py::arg("colors"), py::arg("seed"));
    m.def("eg_color_count", &eg_color_count, py::arg("n"), py::arg("spec"));
    m.def(
        "estimate_property_probability",
        [](std::size_t n, std::uint32_t c, const LocalSpec& spec, std::uint64_t trials, std::uint64_t seed,
           unsigned threads) {
            py::gil_scoped_release release;
            return estimate_property_probability(n, c, spec, trials, seed, threads).fraction();
        },
        py::arg("n"), py::arg("colors"), py::arg("spec"), py::arg("trials"), py::arg("seed"), py::arg("threads") = 1);
    m.def(
        "behrend_set", [](std::size_t target) { return from_set(behrend_set(target).elements); },
        py::arg("size_target"));
    m.def(
        "verify_no_3ap", [](std::vector<std::int64_t> a) { return verify_no_3ap(to_set(std::move(a))); },
        py::arg("elements"));
    m.def(
        "collinear_point_set",
        [](std::vector<std::int64_t> a) {
            std::vector<std::pair<std::int64_t, std::int64_t>> out;
            for (const auto& p : collinear_point_set(to_set(std::move(a))).points()) {
                out.emplace_back(p.x, p.y);
            }
            return out;
        },
        py::arg("elements"));
    m.def(
        "verify_isosceles_free",
        [](const std::vector<std::pair<std::int64_t, std::int64_t>>& pts) -> py::object {
            const auto w = verify_isosceles_free(to_points(pts));
            if (!w) {
                return py::none();
            }
            return py::make_tuple(w->indices, w->indices[w->apex]);
        },
        py::arg("points"));

    // number_sets
    m.def(
        "difference_set", [](std::vector<std::int64_t> a) { return from_set(difference_set(to_set(std::move(a)))); },
        py::arg("elements"));
    m.def(
        "sum_set", [](std::vector<std::int64_t> a) { return from_set(sum_set(to_set(std::move(a)))); },
        py::arg("elements"));
    m.def(
        "additive_energy", [](std::vector<std::int64_t> a) { return to_py(additive_energy(to_set(std::move(a)))); },
        py::arg("elements"));
    m.def(
        "verify_diff_local_property",
        [](std::vector<std::int64_t> a, const LocalSpec& spec) {
            return verdict_to_py(verify_diff_local_property(to_set(std::move(a)), spec));
        },
        py::arg("elements"), py::arg("spec"));
    m.def(
        "verify_distance_local_property",
        [](const std::vector<std::pair<std::int64_t, std::int64_t>>& pts, const LocalSpec& spec) {
            return verdict_to_py(verify_distance_local_property(to_points(pts), spec));
        },
        py::arg("points"), py::arg("spec"));
    m.def(
        "difference_color_graph", [](std::vector<std::int64_t> a) { return difference_color_graph(to_set(std::move(a))); },
        py::arg("elements"));
    m.def(
        "distance_color_graph",
        [](const std::vector<std::pair<std::int64_t, std::int64_t>>& pts) { return distance_color_graph(to_points(pts)); },
        py::arg("points"));
    m.def(
        "repeated_difference_bound_check",
        [](std::vector<std::int64_t> a) {
            const auto r = repeated_difference_bound_check(to_set(std::move(a)));
            py::dict d;
            d["max_multiplicity"] = r.max_multiplicity;
            py::list w;
            for (const auto& rep : r.witnesses) {
                w.append(py::make_tuple(rep.difference, rep.pairs));
            }
            d["witnesses"] = w;
            d["disjoint_quadruple"] = r.disjoint_quadruple ? py::cast(*r.disjoint_quadruple) : py::none();
            return d;
        },
        py::arg("elements"));
    m.def(
        "g_search",
        [](std::size_t n, const LocalSpec& spec, std::int64_t range_cap, std::uint64_t budget, unsigned threads) {
            GSearchResult r;
            {
                py::gil_scoped_release release;
                r = g_search(n, spec, range_cap, GSearchOptions{budget, threads});
            }
            py::dict d;
            d["status"] = std::string(to_string(r.status));
            d["value"] = r.certificate ? py::cast(r.value) : py::none();
            d["certificate"] = r.certificate ? py::cast(from_set(*r.certificate)) : py::none();
            d["range_cap"] = r.range_cap;
            d["candidates"] = r.candidates;
            return d;
        },
        py::arg("n"), py::arg("spec"), py::arg("range_cap"), py::arg("budget") = 50'000'000ULL,
        py::arg("threads") = 1);

    // exact_solver
    m.def(
        "feasible",
        [](std::size_t n, const LocalSpec& spec, std::uint32_t colors, std::uint64_t node_limit) {
            FeasibleResult r;
            {
                py::gil_scoped_release release;
                r = feasible(n, spec, colors, SolveBudget{node_limit, 3600.0});
            }
            py::dict d;
            d["outcome"] = std::string(to_string(r.outcome));
            d["certificate"] = r.certificate ? py::cast(*r.certificate) : py::none();
            d["nodes"] = r.nodes;
            return d;
        },
        py::arg("n"), py::arg("spec"), py::arg("colors"), py::arg("node_limit") = 2'000'000'000ULL);
    m.def(
        "min_colors",
        [](std::size_t n, const LocalSpec& spec, std::uint64_t node_limit, double time_limit) {
            SolveResult r;
            {
                py::gil_scoped_release release;
                r = min_colors(n, spec, SolveBudget{node_limit, time_limit});
            }
            py::dict d;
            d["status"] = std::string(to_string(r.status));
            d["value"] = r.value;
            d["certificate"] = r.certificate ? py::cast(*r.certificate) : py::none();
            py::list log;
            for (const auto& e : r.log) {
                log.append(py::make_tuple(e.colors, e.nodes, std::string(to_string(e.outcome))));
            }
            d["log"] = log;
            return d;
        },
        py::arg("n"), py::arg("spec"), py::arg("node_limit") = 2'000'000'000ULL, py::arg("time_limit") = 3600.0);

    // energy_analysis
    m.def(
        "dyadic_profile",
        [](const ColoredCompleteGraph& g, std::uint32_t k, std::uint32_t mm) {
            const auto p = dyadic_profile(g, ThmParams(k, mm));
            py::dict d;
            d["bin_count"] = p.bin_count;
            d["cum_count"] = p.cum_count;
            d["t"] = p.t;
            return d;
        },
        py::arg("graph"), py::arg("k"), py::arg("m"));
    m.def(
        "energy_decomposition",
        [](const ColoredCompleteGraph& g) {
            const auto e = energy_decomposition(g);
            py::list contributions;
            for (auto c : e.contribution) {
                contributions.append(to_py(c));
            }
            py::dict d;
            d["bin_count"] = e.bin_count;
            d["contribution"] = contributions;
            d["total"] = to_py(e.total);
            return d;
        },
        py::arg("graph"));
}
