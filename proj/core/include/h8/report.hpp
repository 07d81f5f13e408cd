#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace h8 {

// One claim's outcome. pass is a function of metrics and threshold alone;
// params record the knobs (grid sizes, seeds, ranges) the run used.
struct ClaimReport {
    std::string claim_id;
    std::map<std::string, std::string> params;
    std::map<std::string, double> metrics;
    std::string threshold; // human-readable predicate the pass bit encodes
    bool pass = false;
    std::int64_t runtime_ms = 0;
};

// JSON array of objects, keys sorted, 2-space indent, trailing newline.
// Byte-stable for identical inputs.
std::string report_json(const std::vector<ClaimReport>& reports);

// Flattened CSV: claim_id, param.<name>... and metric.<name>... columns are the
// sorted union across reports, blanks where a report lacks an entry.
std::string report_csv(const std::vector<ClaimReport>& reports);

// format "json" or "csv"; refuses other formats, raises IoError on write failure.
void emit_report(const std::vector<ClaimReport>& reports, const std::string& format,
                 const std::filesystem::path& path);

// Inverse of report_json, for re-emitting a saved run in another format.
std::vector<ClaimReport> parse_report_json(const std::string& text);

} // namespace h8
