#include "localprop/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace localprop {

using nlohmann::json;

namespace {

std::int64_t as_int(const json& j, const std::string& what) {
    if (!j.is_number_integer()) {
        throw SchemaError(what + " must be an integer");
    }
    return j.get<std::int64_t>();
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw SchemaError(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

}  // namespace

ColoredCompleteGraph coloring_from_json(const json& j) {
    const auto n = as_int(field(j, "n"), "n");
    if (n < 1) {
        throw SchemaError("n must be >= 1");
    }
    const auto& colors = field(j, "colors");
    if (!colors.is_array()) {
        throw SchemaError("colors must be an array");
    }
    const auto un = static_cast<std::uint64_t>(n);
    if (colors.size() != pair_count(un)) {
        throw SchemaError("colors has " + std::to_string(colors.size()) + " entries, expected n(n-1)/2 = " +
                          std::to_string(pair_count(un)));
    }
    std::vector<std::int64_t> keys;
    keys.reserve(colors.size());
    for (const auto& c : colors) {
        keys.push_back(as_int(c, "color id"));
    }
    return ColoredCompleteGraph::from_keys(static_cast<std::size_t>(n), keys);
}

json coloring_to_json(const ColoredCompleteGraph& g) {
    json colors = json::array();
    for (auto c : g.edge_colors()) {
        colors.push_back(c);
    }
    return json{{"n", g.n()}, {"colors", std::move(colors)}};
}

IntegerSet integer_set_from_json(const json& j) {
    if (!j.is_array()) {
        throw SchemaError("integer set must be a JSON array");
    }
    std::vector<std::int64_t> values;
    values.reserve(j.size());
    for (const auto& v : j) {
        values.push_back(as_int(v, "set element"));
    }
    try {
        return IntegerSet(std::move(values));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

json integer_set_to_json(const IntegerSet& a) {
    json out = json::array();
    for (auto v : a) {
        out.push_back(v);
    }
    return out;
}

PointSet point_set_from_json(const json& j) {
    if (!j.is_array()) {
        throw SchemaError("point set must be a JSON array");
    }
    std::vector<Point> points;
    points.reserve(j.size());
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 2) {
            throw SchemaError("each point must be an [x, y] pair");
        }
        points.push_back({as_int(p[0], "x"), as_int(p[1], "y")});
    }
    try {
        return PointSet(std::move(points));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

json point_set_to_json(const PointSet& p) {
    json out = json::array();
    for (const auto& pt : p.points()) {
        out.push_back(json::array({pt.x, pt.y}));
    }
    return out;
}

SetSystemInstance set_system_from_json(const json& j) {
    SetSystemInstance inst;
    const auto n = as_int(field(j, "n"), "n");
    const auto d = as_int(field(j, "d"), "d");
    if (n < 1 || n > std::numeric_limits<std::uint32_t>::max()) {
        throw SchemaError("n out of range");
    }
    if (d < 2 || d > 64) {
        throw SchemaError("d must lie in [2, 64]");
    }
    inst.n = static_cast<std::size_t>(n);
    inst.d = static_cast<std::uint32_t>(d);
    const auto& sets = field(j, "sets");
    if (!sets.is_array()) {
        throw SchemaError("sets must be an array");
    }
    for (const auto& s : sets) {
        if (!s.is_array()) {
            throw SchemaError("each set must be an array");
        }
        std::vector<std::uint32_t> members;
        for (const auto& e : s) {
            const auto v = as_int(e, "set element");
            if (v < 1 || v > n) {
                throw SchemaError("set element " + std::to_string(v) + " outside {1..n}");
            }
            members.push_back(static_cast<std::uint32_t>(v));
        }
        inst.sets.push_back(std::move(members));
    }
    try {
        inst.validate();
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
    return inst;
}

json set_system_to_json(const SetSystemInstance& inst) {
    return json{{"n", inst.n}, {"sets", inst.sets}, {"d", inst.d}};
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << text;
}

void write_json_file(const std::filesystem::path& path, const json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

json wide_to_json(u128 value) {
    if (value <= std::numeric_limits<std::uint64_t>::max()) {
        return static_cast<std::uint64_t>(value);
    }
    return to_string(value);
}

}  // namespace localprop
