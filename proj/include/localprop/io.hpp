#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "localprop/coloring.hpp"
#include "localprop/forbidden.hpp"
#include "localprop/sets.hpp"

namespace localprop {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kVersion = "1.0.0";

/// Malformed input: bad JSON, wrong shape, or values breaking an invariant.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Coloring: {"n": int, "colors": [int; n(n-1)/2]}, upper-triangle row-major.
// Sparse color ids are re-densified by ascending id.
ColoredCompleteGraph coloring_from_json(const nlohmann::json& j);
nlohmann::json coloring_to_json(const ColoredCompleteGraph& g);

// Integer set: sorted array of distinct integers.
IntegerSet integer_set_from_json(const nlohmann::json& j);
nlohmann::json integer_set_to_json(const IntegerSet& a);

// Point set: array of [x, y] pairs.
PointSet point_set_from_json(const nlohmann::json& j);
nlohmann::json point_set_to_json(const PointSet& p);

// Set system: {"n": int, "sets": [[int, ...], ...], "d": int}, elements in {1..n}.
SetSystemInstance set_system_from_json(const nlohmann::json& j);
nlohmann::json set_system_to_json(const SetSystemInstance& inst);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Big counts go out as numbers when they fit in 64 bits, else as strings.
nlohmann::json wide_to_json(u128 value);

}  // namespace localprop
