#include "commands.hpp"

#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "localprop/coloring.hpp"
#include "localprop/constructions.hpp"
#include "localprop/energy_analysis.hpp"
#include "localprop/exact_solver.hpp"
#include "localprop/forbidden.hpp"
#include "localprop/io.hpp"
#include "localprop/number_sets.hpp"

namespace localprop::cli {

using nlohmann::json;

namespace {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

json payload_header(const char* command) {
    return json{{"schema_version", kSchemaVersion}, {"version", kVersion}, {"command", command}};
}

void emit_text(const Options& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
    } else {
        write_text_file(opt.output, text);
    }
}

void emit(const Options& opt, const json& payload) { emit_text(opt, payload.dump(2) + "\n"); }

void require_json(const Options& opt) {
    if (opt.format != "json") {
        throw UsageError("--format csv is only available for energy and profile");
    }
}

void require_input(const Options& opt) {
    if (opt.input.empty()) {
        throw UsageError("--input is required");
    }
}

LocalSpec spec_from(const Options& opt) { return LocalSpec(opt.k, opt.ell); }

json spec_json(const LocalSpec& spec) { return json{{"k", spec.k}, {"ell", spec.ell}}; }

json witness_json(const Witness& w) { return json{{"subset", w.subset}, {"count", w.count}}; }

}  // namespace

int verify_coloring(const Options& opt) {
    require_json(opt);
    const auto spec = spec_from(opt);
    require_input(opt);
    const auto g = coloring_from_json(read_json_file(opt.input));
    const auto verdict = verify_local_property(g, spec);
    auto out = payload_header("verify-coloring");
    out["n"] = g.n();
    out["num_colors"] = g.num_colors();
    out["spec"] = spec_json(spec);
    out["holds"] = verdict.holds;
    out["witness"] = verdict.witness ? witness_json(*verdict.witness) : json(nullptr);
    emit(opt, out);
    return verdict.holds ? kOk : kPropertyFails;
}

int verify_diffset(const Options& opt) {
    require_json(opt);
    const auto spec = spec_from(opt);
    require_input(opt);
    const auto a = integer_set_from_json(read_json_file(opt.input));
    const auto verdict = verify_diff_local_property(a, spec);
    auto out = payload_header("verify-diffset");
    out["size"] = a.size();
    out["difference_set_size"] = difference_set(a).size();
    out["spec"] = spec_json(spec);
    out["holds"] = verdict.holds;
    if (verdict.witness) {
        auto w = witness_json(*verdict.witness);
        json elements = json::array();
        for (auto idx : verdict.witness->subset) {
            elements.push_back(a[idx]);
        }
        w["elements"] = std::move(elements);
        out["witness"] = std::move(w);
    } else {
        out["witness"] = nullptr;
    }
    emit(opt, out);
    return verdict.holds ? kOk : kPropertyFails;
}

int verify_distances(const Options& opt) {
    require_json(opt);
    const auto spec = spec_from(opt);
    require_input(opt);
    const auto p = point_set_from_json(read_json_file(opt.input));
    const auto verdict = verify_distance_local_property(p, spec);
    auto out = payload_header("verify-distances");
    out["size"] = p.size();
    out["spec"] = spec_json(spec);
    out["holds"] = verdict.holds;
    if (verdict.witness) {
        auto w = witness_json(*verdict.witness);
        json points = json::array();
        for (auto idx : verdict.witness->subset) {
            points.push_back(json::array({p[idx].x, p[idx].y}));
        }
        w["points"] = std::move(points);
        out["witness"] = std::move(w);
    } else {
        out["witness"] = nullptr;
    }
    emit(opt, out);
    return verdict.holds ? kOk : kPropertyFails;
}

namespace {

std::uint64_t require_seed(const Options& opt) {
    if (!opt.seed) {
        throw UsageError("--seed is required for randomized constructions");
    }
    return *opt.seed;
}

void maybe_write_artifact(const Options& opt, const json& artifact) {
    if (!opt.artifact.empty()) {
        write_json_file(opt.artifact, artifact);
    }
}

}  // namespace

int construct(const Options& opt) {
    require_json(opt);
    auto out = payload_header("construct");
    out["kind"] = opt.kind;
    if (opt.kind == "random-coloring") {
        if (opt.n < 1 || opt.colors < 1) {
            throw UsageError("random-coloring needs --n >= 1 and --colors >= 1");
        }
        const auto seed = require_seed(opt);
        const auto g = random_coloring({opt.n, opt.colors, seed});
        out["seed"] = seed;
        out["coloring"] = coloring_to_json(g);
        out["num_colors"] = g.num_colors();
        maybe_write_artifact(opt, coloring_to_json(g));
    } else if (opt.kind == "estimate") {
        const auto spec = spec_from(opt);
        if (opt.trials < 1 || opt.colors < 1) {
            throw UsageError("estimate needs --trials >= 1 and --colors >= 1");
        }
        const auto seed = require_seed(opt);
        const auto est = estimate_property_probability(opt.n, opt.colors, spec, opt.trials, seed, opt.threads);
        out["seed"] = seed;
        out["n"] = opt.n;
        out["colors"] = opt.colors;
        out["spec"] = spec_json(spec);
        out["trials"] = est.trials;
        out["successes"] = est.successes;
        out["fraction"] = est.fraction();
    } else if (opt.kind == "eg-count") {
        const auto spec = spec_from(opt);
        out["n"] = opt.n;
        out["spec"] = spec_json(spec);
        out["colors"] = eg_color_count(opt.n, spec);
    } else if (opt.kind == "behrend") {
        if (opt.size < 1) {
            throw UsageError("behrend needs --size >= 1");
        }
        const auto result = behrend_set(opt.size);
        out["set"] = integer_set_to_json(result.elements);
        out["parameters"] = json{{"digit_bound", result.params.digit_bound},
                                 {"base", result.params.base},
                                 {"digits", result.params.digits},
                                 {"radius", result.params.radius},
                                 {"sphere_size", result.params.sphere_size}};
        out["three_ap_free"] = !verify_no_3ap(result.elements).has_value();
        maybe_write_artifact(opt, integer_set_to_json(result.elements));
    } else if (opt.kind == "collinear") {
        require_input(opt);
        const auto a = integer_set_from_json(read_json_file(opt.input));
        const auto points = collinear_point_set(a);
        const auto ap = verify_no_3ap(a);
        const auto iso = verify_isosceles_free(points);
        out["points"] = point_set_to_json(points);
        out["three_ap"] = ap ? json(*ap) : json(nullptr);
        out["isosceles_free"] = !iso.has_value();
        if (iso) {
            out["isosceles_witness"] =
                json{{"indices", iso->indices}, {"apex", iso->indices[iso->apex]}};
        }
        maybe_write_artifact(opt, point_set_to_json(points));
    } else {
        throw UsageError("unknown --kind '" + opt.kind +
                         "' (expected random-coloring, estimate, eg-count, behrend, collinear)");
    }
    emit(opt, out);
    return kOk;
}

int solve_f(const Options& opt) {
    require_json(opt);
    const auto spec = spec_from(opt);
    if (opt.n < spec.k) {
        throw UsageError("solve-f needs --n >= --k");
    }
    const SolveBudget budget{opt.node_limit, opt.time_limit};
    budget.validate();
    const auto result = min_colors(opt.n, spec, budget);
    auto out = payload_header("solve-f");
    out["n"] = opt.n;
    out["spec"] = spec_json(spec);
    out["status"] = std::string(to_string(result.status));
    out["value"] = result.value;
    out["start"] = result.start;
    json log = json::array();
    std::ostringstream csv;
    csv << "colors,nodes,outcome\n";
    for (const auto& entry : result.log) {
        log.push_back(json{{"colors", entry.colors},
                           {"nodes", entry.nodes},
                           {"outcome", std::string(to_string(entry.outcome))}});
        csv << entry.colors << ',' << entry.nodes << ',' << to_string(entry.outcome) << '\n';
    }
    out["log"] = std::move(log);
    out["certificate"] = result.certificate ? coloring_to_json(*result.certificate) : json(nullptr);
    if (result.certificate) {
        maybe_write_artifact(opt, coloring_to_json(*result.certificate));
    }
    if (!opt.log.empty()) {
        write_text_file(opt.log, csv.str());
    }
    emit(opt, out);
    return kOk;
}

int solve_g(const Options& opt) {
    require_json(opt);
    const auto spec = spec_from(opt);
    if (opt.n < spec.k) {
        throw UsageError("solve-g needs --n >= --k");
    }
    if (opt.range < 1 || static_cast<std::uint64_t>(opt.range) < opt.n) {
        throw UsageError("solve-g needs --range >= --n");
    }
    GSearchOptions search;
    search.candidate_budget = opt.budget;
    search.threads = opt.threads;
    const auto result = g_search(opt.n, spec, opt.range, search);
    auto out = payload_header("solve-g");
    out["n"] = opt.n;
    out["spec"] = spec_json(spec);
    out["range_cap"] = result.range_cap;
    out["status"] = std::string(to_string(result.status));
    out["candidates"] = result.candidates;
    out["note"] = "minimum over subsets of {1..range_cap}; an upper bound for the unrestricted g";
    if (result.certificate) {
        out["value"] = result.value;
        out["certificate"] = integer_set_to_json(*result.certificate);
        out["difference_set"] = integer_set_to_json(difference_set(*result.certificate));
        maybe_write_artifact(opt, integer_set_to_json(*result.certificate));
    } else {
        out["value"] = nullptr;
        out["certificate"] = nullptr;
    }
    emit(opt, out);
    return result.status == GSearchStatus::infeasible ? kPropertyFails : kOk;
}

int energy(const Options& opt) {
    if (opt.format != "json" && opt.format != "csv") {
        throw UsageError("--format must be json or csv");
    }
    require_input(opt);
    const auto g = coloring_from_json(read_json_file(opt.input));
    const auto decomposition = energy_decomposition(g);
    if (opt.format == "csv") {
        std::ostringstream csv;
        csv << "j,bin_count,energy,estimate_bound\n";
        for (std::size_t j = 0; j < decomposition.bin_count.size(); ++j) {
            const u128 bound = checked_mul(decomposition.bin_count[j], u128{1} << (2 * j + 2));
            csv << j << ',' << decomposition.bin_count[j] << ',' << to_string(decomposition.contribution[j])
                << ',' << to_string(bound) << '\n';
        }
        emit_text(opt, csv.str());
        return kOk;
    }
    auto out = payload_header("energy");
    out["n"] = g.n();
    out["num_colors"] = g.num_colors();
    out["color_energy"] = wide_to_json(color_energy(g));
    out["cauchy_schwarz_floor"] = g.num_colors() > 0 ? wide_to_json(cauchy_schwarz_floor(g)) : json(nullptr);
    out["histogram"] = color_histogram(g).multiplicity;
    json bins = json::array();
    for (std::size_t j = 0; j < decomposition.bin_count.size(); ++j) {
        bins.push_back(json{{"j", j},
                            {"bin_count", decomposition.bin_count[j]},
                            {"energy", wide_to_json(decomposition.contribution[j])}});
    }
    out["decomposition"] = std::move(bins);
    emit(opt, out);
    return kOk;
}

int profile(const Options& opt) {
    if (opt.format != "json" && opt.format != "csv") {
        throw UsageError("--format must be json or csv");
    }
    const ThmParams params(opt.k, opt.m);
    require_input(opt);
    const auto g = coloring_from_json(read_json_file(opt.input));
    const auto report = bound_report(g, params);
    auto flags = [](const BoundRow& row) {
        std::string f = row.regime == BoundRegime::poor ? "poor" : "rich";
        f += row.applicable_ok() ? "|ok" : (row.regime == BoundRegime::rich ? "|forbidden_configuration_implied"
                                                                              : "|violated");
        if (row.remark_range) {
            f += "|remark_range";
        }
        return f;
    };
    if (opt.format == "csv") {
        std::ostringstream csv;
        csv << "j,bin_count,k_j,poor_bound_num,poor_bound_den,rich_bound_num,rich_bound_den,flags\n";
        for (const auto& row : report.rows) {
            csv << row.j << ',' << row.bin_count << ',' << row.k_j << ',' << row.poor_num << ','
                << row.poor_den << ',' << row.rich_num << ',' << row.rich_den << ',' << flags(row) << '\n';
        }
        emit_text(opt, csv.str());
        return kOk;
    }
    auto out = payload_header("profile");
    out["n"] = g.n();
    out["params"] = json{{"k", params.k()}, {"m", params.m()}, {"a", params.a()}, {"b", params.b()}};
    out["t"] = report.profile.t;
    out["k_j_reading"] = "cumulative: k_j = #{c : m_c >= 2^j}; bin_count = #{c : 2^j <= m_c < 2^(j+1)}";
    json rows = json::array();
    for (const auto& row : report.rows) {
        rows.push_back(json{{"j", row.j},
                            {"bin_count", row.bin_count},
                            {"k_j", row.k_j},
                            {"poor_bound", json{{"num", row.poor_num}, {"den", row.poor_den}}},
                            {"rich_bound", json{{"num", row.rich_num}, {"den", row.rich_den}}},
                            {"regime", row.regime == BoundRegime::poor ? "poor" : "rich"},
                            {"poor_ok", row.poor_ok},
                            {"rich_ok", row.rich_ok},
                            {"remark_range", row.remark_range},
                            {"flags", flags(row)},
                            {"forbidden_hint", row.forbidden_hint ? json(*row.forbidden_hint) : json(nullptr)}});
    }
    out["rows"] = std::move(rows);
    const auto mono = max_mono_degree(g);
    out["max_mono_degree"] = mono.max;
    json violations = json::array();
    for (const auto& v : mono_degree_violations(g, params)) {
        violations.push_back(json{{"vertex", v.vertex}, {"color", v.color}, {"count", v.count}});
    }
    out["mono_degree_threshold"] = params.mono_degree_threshold();
    out["mono_degree_violations"] = std::move(violations);
    emit(opt, out);
    return kOk;
}

int lemma_check(const Options& opt) {
    require_json(opt);
    require_input(opt);
    const auto inst = set_system_from_json(read_json_file(opt.input));
    const auto hit = counting_lemma_find(inst);
    auto out = payload_header("lemma-check");
    out["n"] = inst.n;
    out["d"] = inst.d;
    out["k"] = inst.sets.size();
    out["m"] = inst.min_set_size();
    out["hypothesis_holds"] = inst.hypothesis_holds();
    if (hit) {
        out["found"] = true;
        out["indices"] = hit->indices;
        out["intersection_size"] = hit->intersection_size;
    } else {
        out["found"] = false;
        out["indices"] = nullptr;
    }
    emit(opt, out);
    return hit ? kOk : kPropertyFails;
}

}  // namespace localprop::cli
