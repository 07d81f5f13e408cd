#include "h8/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "h8/errors.hpp"

namespace h8 {

namespace {

using nlohmann::json;

double number_of(const json& value, const std::string& where) {
    if (!value.is_number())
        throw ArgumentError("config: " + where + " must be a number");
    return value.get<double>();
}

std::string string_of(const json& value, const std::string& where) {
    if (!value.is_string())
        throw ArgumentError("config: " + where + " must be a string");
    return value.get<std::string>();
}

std::map<std::string, double> number_map_of(const json& value, const std::string& where) {
    if (!value.is_object())
        throw ArgumentError("config: " + where + " must be an object");
    std::map<std::string, double> out;
    for (const auto& [key, entry] : value.items())
        out[key] = number_of(entry, where + "." + key);
    return out;
}

RunConfig from_json(const json& root) {
    if (!root.is_object())
        throw ArgumentError("config root must be a JSON object");
    RunConfig cfg;
    for (const auto& [key, value] : root.items()) {
        if (key == "cache_dir") {
            cfg.cache_dir = string_of(value, key);
        } else if (key == "tolerances") {
            cfg.tolerances = number_map_of(value, key);
        } else if (key == "grids") {
            if (!value.is_object())
                throw ArgumentError("config: grids must be an object");
            for (const auto& [claim, knobs] : value.items())
                cfg.grids[claim] = number_map_of(knobs, "grids." + claim);
        } else if (key == "parallelism") {
            if (!value.is_number_unsigned())
                throw ArgumentError("config: parallelism must be a non-negative integer");
            cfg.parallelism = value.get<unsigned>();
        } else if (key == "output") {
            if (!value.is_object())
                throw ArgumentError("config: output must be an object");
            for (const auto& [okey, oval] : value.items()) {
                if (okey == "path")
                    cfg.output_path = string_of(oval, "output.path");
                else if (okey == "format")
                    cfg.output_format = string_of(oval, "output.format");
                else
                    throw ArgumentError("config: unknown key output." + okey);
            }
        } else if (key == "zero_runtimes") {
            if (!value.is_boolean())
                throw ArgumentError("config: zero_runtimes must be a boolean");
            cfg.zero_runtimes = value.get<bool>();
        } else if (key == "seed") {
            if (!value.is_number_unsigned())
                throw ArgumentError("config: seed must be a non-negative integer");
            cfg.seed = value.get<std::uint64_t>();
        } else {
            throw ArgumentError("config: unknown key " + key);
        }
    }
    if (cfg.output_format != "json" && cfg.output_format != "csv")
        throw ArgumentError("config: output.format must be json or csv, got " +
                            cfg.output_format);
    return cfg;
}

} // namespace

double RunConfig::tolerance_or(const std::string& claim_id, double fallback) const {
    auto it = tolerances.find(claim_id);
    return it == tolerances.end() ? fallback : it->second;
}

double RunConfig::grid_or(const std::string& claim_id, const std::string& key,
                          double fallback) const {
    auto claim_it = grids.find(claim_id);
    if (claim_it == grids.end())
        return fallback;
    auto knob_it = claim_it->second.find(key);
    return knob_it == claim_it->second.end() ? fallback : knob_it->second;
}

RunConfig parse_config_json(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        throw ArgumentError(std::string("config: invalid JSON: ") + e.what());
    }
    return from_json(root);
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open config " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_json(buf.str());
}

} // namespace h8
