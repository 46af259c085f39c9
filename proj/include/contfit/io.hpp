#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "contfit/core.hpp"

namespace contfit::io {

/// Formats a double with enough digits to round-trip exactly.
std::string format_double(double v);

// --- Sample CSV (header "x,y,value") ---------------------------------------

void write_samples_csv(const std::filesystem::path& path, const SampleSet& s);
SampleSet read_samples_csv(const std::filesystem::path& path);

// --- Dense grid values ------------------------------------------------------
//
// Binary format: row-major (y outer, x inner) little-endian float64 blob at
// <path>, plus a JSON sidecar at <path>.json recording extent, resolution and
// an optional rendering hint for signed data.

void write_grid_bin(const std::filesystem::path& path, const EvalGrid& grid,
                    const std::vector<double>& values, bool signed_values = false);

struct GridFile {
    EvalGrid grid; // extent + resolution, truth empty
    std::vector<double> values;
    bool signed_values = false;
};
GridFile read_grid_bin(const std::filesystem::path& path);

void write_grid_csv(const std::filesystem::path& path, const EvalGrid& grid,
                    const std::vector<double>& values);

/// Writes the grid row nearest to y as a CSV with header "x,value".
void write_cross_section_csv(const std::filesystem::path& path, const EvalGrid& grid,
                             const std::vector<double>& values, double y);

// --- Images -----------------------------------------------------------------

/// 16-bit plain PGM (P5, maxval 65535, big-endian samples), one row per y
/// starting at y_min. The linear value->gray mapping is recorded in a JSON
/// sidecar at <path>.json. Signed mode maps symmetrically around zero.
void render_pgm16(const std::filesystem::path& path, int width, int height,
                  const std::vector<double>& values, bool signed_values);

// --- Misc -------------------------------------------------------------------

void write_json(const std::filesystem::path& path, const nlohmann::json& j);
nlohmann::json read_json(const std::filesystem::path& path);
void append_jsonl(const std::filesystem::path& path, const nlohmann::json& j);

void write_text(const std::filesystem::path& path, const std::string& text);

} // namespace contfit::io
