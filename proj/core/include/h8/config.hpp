#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

#include "h8/numeric.hpp"

namespace h8 {

// Suite-wide knobs. Every field has a working default, so an empty JSON object
// is a valid config. Unknown keys are rejected rather than ignored.
struct RunConfig {
    std::filesystem::path cache_dir;            // empty: H8_CACHE_DIR or ./.h8cache
    std::map<std::string, double> tolerances;   // claim_id -> pass-threshold override
    std::map<std::string, std::map<std::string, double>> grids; // claim_id -> knob -> value
    unsigned parallelism = 0;                   // worker count, 0 = all hardware threads
    std::filesystem::path output_path;          // empty: report goes to stdout only
    std::string output_format = "json";         // "json" or "csv"
    bool zero_runtimes = false;                 // report runtime_ms as 0 for byte-stable output
    std::uint64_t seed = default_grid_seed;     // sampled-grid seed, echoed in report params

    double tolerance_or(const std::string& claim_id, double fallback) const;
    double grid_or(const std::string& claim_id, const std::string& key, double fallback) const;
};

// JSON object with the RunConfig field names; "output" nests {"path", "format"}.
RunConfig parse_config_json(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);

} // namespace h8
