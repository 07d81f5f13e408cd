#pragma once

#include <string>
#include <vector>

#include "h8/config.hpp"
#include "h8/report.hpp"

namespace h8 {

struct ClaimInfo {
    std::string id;
    std::string description;
};

// The closed set of runnable claims, ascending by id.
const std::vector<ClaimInfo>& claim_registry();

// Expand '*' patterns against the registry. Every pattern must hit at least
// one claim; result is sorted and deduplicated.
std::vector<std::string> match_claims(const std::vector<std::string>& patterns);

// Run the selected claims and return reports ordered by claim_id. A copy of
// the JSON report lands in <cache_dir>/last_run.json for the report command.
std::vector<ClaimReport> run_suite(const RunConfig& config,
                                   const std::vector<std::string>& patterns);

} // namespace h8
