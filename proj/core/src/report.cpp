#include "h8/report.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "h8/errors.hpp"
#include "h8/numeric.hpp"

namespace h8 {

namespace {

std::string csv_field(const std::string& raw) {
    if (raw.find_first_of(",\"\n") == std::string::npos)
        return raw;
    std::string quoted = "\"";
    for (char c : raw) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

} // namespace

std::string report_json(const std::vector<ClaimReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json obj;
        obj["claim_id"] = r.claim_id;
        obj["params"] = r.params;
        obj["metrics"] = r.metrics;
        obj["threshold"] = r.threshold;
        obj["pass"] = r.pass;
        obj["runtime_ms"] = r.runtime_ms;
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

std::string report_csv(const std::vector<ClaimReport>& reports) {
    std::set<std::string> param_keys, metric_keys;
    for (const auto& r : reports) {
        for (const auto& [k, v] : r.params)
            param_keys.insert(k);
        for (const auto& [k, v] : r.metrics)
            metric_keys.insert(k);
    }

    std::ostringstream out;
    out << "claim_id";
    for (const auto& k : param_keys)
        out << ",param." << k;
    for (const auto& k : metric_keys)
        out << ",metric." << k;
    out << ",threshold,pass,runtime_ms\n";

    for (const auto& r : reports) {
        out << csv_field(r.claim_id);
        for (const auto& k : param_keys) {
            auto it = r.params.find(k);
            out << ',' << (it == r.params.end() ? "" : csv_field(it->second));
        }
        for (const auto& k : metric_keys) {
            auto it = r.metrics.find(k);
            out << ',';
            if (it != r.metrics.end())
                out << g12(it->second);
        }
        out << ',' << csv_field(r.threshold) << ',' << (r.pass ? "true" : "false") << ','
            << r.runtime_ms << '\n';
    }
    return out.str();
}

std::vector<ClaimReport> parse_report_json(const std::string& text) {
    nlohmann::json arr;
    try {
        arr = nlohmann::json::parse(text);
        if (!arr.is_array())
            throw ArgumentError("report JSON must be an array");
        std::vector<ClaimReport> reports;
        for (const auto& obj : arr) {
            ClaimReport r;
            r.claim_id = obj.at("claim_id").get<std::string>();
            r.params = obj.at("params").get<std::map<std::string, std::string>>();
            r.metrics = obj.at("metrics").get<std::map<std::string, double>>();
            r.threshold = obj.at("threshold").get<std::string>();
            r.pass = obj.at("pass").get<bool>();
            r.runtime_ms = obj.at("runtime_ms").get<std::int64_t>();
            reports.push_back(std::move(r));
        }
        return reports;
    } catch (const nlohmann::json::exception& e) {
        throw ArgumentError(std::string("malformed report JSON: ") + e.what());
    }
}

void emit_report(const std::vector<ClaimReport>& reports, const std::string& format,
                 const std::filesystem::path& path) {
    if (path.empty())
        throw ArgumentError("report output path required");
    std::string body;
    if (format == "json")
        body = report_json(reports);
    else if (format == "csv")
        body = report_csv(reports);
    else
        throw ArgumentError("report format must be json or csv, got " + format);

    std::ofstream out(path, std::ios::trunc);
    if (!out)
        throw IoError("cannot open report output " + path.string());
    out << body;
    out.flush();
    if (!out)
        throw IoError("write failed for " + path.string());
}

} // namespace h8
