#include "h8/cache.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "h8/characters.hpp"
#include "h8/errors.hpp"
#include "h8/lfunctions.hpp"
#include "h8/numeric.hpp"
#include "h8/prime_tables.hpp"

namespace h8 {

namespace {

std::string sanitize(const std::string& source) {
    std::string out = source;
    for (char& c : out) {
        if (c == ':')
            c = '_';
        else if (c == '.')
            c = '-';
    }
    return out;
}

std::string unsanitize(const std::string& token) {
    std::string out = token;
    for (char& c : out) {
        if (c == '_')
            c = ':';
        else if (c == '-')
            c = '.';
    }
    return out;
}

double parse_num(const std::string& text, const std::filesystem::path& path) {
    const char* begin = text.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw CacheError("unparseable number '" + text + "' in " + path.string());
    return v;
}

ZeroTable read_zero_csv_file(const std::filesystem::path& path, std::string expected_source,
                             double t_scanned) {
    std::ifstream in(path);
    if (!in)
        throw CacheError("cannot open zero table " + path.string());
    std::string line;
    if (!std::getline(in, line) || line != "source,gamma_height,residual_abs,refinement_width")
        throw CacheError("bad zero-table header in " + path.string());

    ZeroTable table;
    table.t_scanned = t_scanned;
    double prev = -1.0;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::array<std::string, 4> field;
        std::size_t pos = 0;
        for (int i = 0; i < 3; ++i) {
            std::size_t comma = line.find(',', pos);
            if (comma == std::string::npos)
                throw CacheError("truncated zero row in " + path.string());
            field[std::size_t(i)] = line.substr(pos, comma - pos);
            pos = comma + 1;
        }
        field[3] = line.substr(pos);

        if (expected_source.empty())
            expected_source = field[0];
        if (field[0] != expected_source)
            throw CacheError("zero row for " + field[0] + " inside table " +
                             expected_source + " in " + path.string());
        ZeroRecord rec;
        rec.source = field[0];
        rec.gamma_height = parse_num(field[1], path);
        rec.residual_abs = parse_num(field[2], path);
        rec.refinement_width = parse_num(field[3], path);
        if (!(rec.gamma_height > prev))
            throw CacheError("zero heights not increasing in " + path.string());
        if (rec.gamma_height > t_scanned + 1e-9)
            throw CacheError("zero above recorded scan height in " + path.string());
        prev = rec.gamma_height;
        table.records.push_back(rec);
    }
    table.source = expected_source;
    return table;
}

// Height token embedded in the filename; '.' swaps to '-' like the source tag.
std::string height_token(double t) {
    std::string tok = g12(t);
    for (char& c : tok)
        if (c == '.')
            c = '-';
    return tok;
}

// Splits "zeros_<source>_t<height>.csv"; nullopt when the name is not ours.
struct ZeroFileName {
    std::string source;
    double t_scanned;
};

std::optional<ZeroFileName> parse_zero_filename(const std::string& name) {
    const std::string prefix = "zeros_";
    const std::string suffix = ".csv";
    if (name.size() <= prefix.size() + suffix.size() || name.rfind(prefix, 0) != 0 ||
        name.compare(name.size() - suffix.size(), suffix.size(), suffix) != 0)
        return std::nullopt;
    std::string stem = name.substr(prefix.size(), name.size() - prefix.size() - suffix.size());
    std::size_t tpos = stem.rfind("_t");
    if (tpos == std::string::npos || tpos == 0)
        return std::nullopt;
    std::string ttok = unsanitize(stem.substr(tpos + 2));
    const char* begin = ttok.c_str();
    char* end = nullptr;
    double t = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || !(t >= 0.0))
        return std::nullopt;
    return ZeroFileName{unsanitize(stem.substr(0, tpos)), t};
}

std::filesystem::path sieve_file_path(std::uint64_t hi) {
    return cache_dir() / ("sieve_2_" + std::to_string(hi) + ".h8sv");
}

void ensure_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw IoError("cannot create cache directory " + dir.string() + ": " + ec.message());
}

// Primitive quadratic characters whose zero tables the suite leans on.
std::vector<std::string> warm_l_sources() {
    std::vector<std::string> sources;
    for (std::uint64_t q : {3, 4, 5, 8, 11, 12})
        for (const auto& chi : enumerate_characters(q))
            if (chi.is_primitive && !chi.is_principal() && chi.is_quadratic())
                sources.push_back(zero_source_tag(chi));
    return sources;
}

} // namespace

namespace {
std::filesystem::path& dir_override() {
    static std::filesystem::path value;
    return value;
}
} // namespace

void set_cache_dir_override(const std::filesystem::path& dir) { dir_override() = dir; }

std::filesystem::path cache_dir() {
    if (!dir_override().empty())
        return dir_override();
    if (const char* env = std::getenv("H8_CACHE_DIR"); env && *env)
        return std::filesystem::path(env);
    return std::filesystem::path(".h8cache");
}

std::filesystem::path zero_table_path(const std::string& source, double t_scanned) {
    return cache_dir() / ("zeros_" + sanitize(source) + "_t" + height_token(t_scanned) + ".csv");
}

void save_zero_table(const ZeroTable& table) {
    ensure_dir(cache_dir());
    std::filesystem::path final_path = zero_table_path(table.source, table.t_scanned);
    std::filesystem::path tmp_path = final_path;
    tmp_path += ".tmp";
    {
        std::ofstream out(tmp_path, std::ios::trunc);
        if (!out)
            throw IoError("cannot write " + tmp_path.string());
        write_zero_csv(out, table.records);
        out.flush();
        if (!out)
            throw IoError("write failed for " + tmp_path.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp_path, final_path, ec);
    if (ec)
        throw IoError("cannot move " + tmp_path.string() + " into place: " + ec.message());
}

std::optional<ZeroTable> try_load_zero_table(const std::string& source, double t_needed) {
    std::filesystem::path dir = cache_dir();
    if (!std::filesystem::exists(dir))
        return std::nullopt;
    std::optional<ZeroFileName> best;
    std::filesystem::path best_path;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file())
            continue;
        auto parsed = parse_zero_filename(entry.path().filename().string());
        if (!parsed || parsed->source != source || parsed->t_scanned + 1e-9 < t_needed)
            continue;
        if (!best || parsed->t_scanned > best->t_scanned) {
            best = parsed;
            best_path = entry.path();
        }
    }
    if (!best)
        return std::nullopt;
    return read_zero_csv_file(best_path, source, best->t_scanned);
}

ZeroTable load_or_scan_zeros(const std::string& source, double t_max, unsigned workers) {
    if (auto cached = try_load_zero_table(source, t_max))
        return *cached;

    ZeroTable table;
    table.source = source;
    table.t_scanned = t_max;
    if (source == "zeta") {
        table.records = find_zeta_zeros(0.0, t_max, 1e-8, workers);
    } else if (source.rfind("L:", 0) == 0) {
        std::size_t colon = source.find(':', 2);
        if (colon == std::string::npos)
            throw ArgumentError("zero source must be zeta or L:q:label, got " + source);
        std::uint64_t q = 0;
        try {
            std::size_t used = 0;
            q = std::stoull(source.substr(2, colon - 2), &used);
            if (used != colon - 2)
                throw std::invalid_argument("trailing junk");
        } catch (const std::exception&) {
            throw ArgumentError("bad modulus in zero source " + source);
        }
        DirichletCharacter chi = character_by_label(q, source.substr(colon + 1));
        if (zero_source_tag(chi) != source)
            throw ArgumentError("non-canonical zero source " + source + ", expected " +
                                zero_source_tag(chi));
        table.records = find_l_zeros(chi, 0.0, t_max, 1e-8, workers);
    } else {
        throw ArgumentError("zero source must be zeta or L:q:label, got " + source);
    }
    save_zero_table(table);
    return table;
}

std::string cache_admin(CacheAction action, CacheScope scope, std::uint64_t sieve_hi,
                        double zeta_height, double l_height) {
    std::filesystem::path dir = cache_dir();
    bool do_sieve = scope != CacheScope::Zeros;
    bool do_zeros = scope != CacheScope::Sieve;
    std::ostringstream status;

    switch (action) {
    case CacheAction::Warm: {
        ensure_dir(dir);
        status << "warm:";
        if (do_sieve) {
            std::filesystem::path path = sieve_file_path(sieve_hi);
            if (std::filesystem::exists(path)) {
                status << " sieve kept";
            } else {
                save_prime_table(path, build_sieve(2, sieve_hi));
                status << " sieve built to " << sieve_hi;
            }
        }
        if (do_zeros) {
            int built = 0, kept = 0;
            std::vector<std::pair<std::string, double>> wanted;
            wanted.emplace_back("zeta", zeta_height);
            for (const auto& source : warm_l_sources())
                wanted.emplace_back(source, l_height);
            for (const auto& [source, height] : wanted) {
                if (try_load_zero_table(source, height)) {
                    ++kept;
                } else {
                    load_or_scan_zeros(source, height);
                    ++built;
                }
            }
            status << " zero tables built " << built << " kept " << kept;
        }
        return status.str();
    }
    case CacheAction::Verify: {
        if (!std::filesystem::exists(dir))
            return "verify: cache directory absent, nothing to check";
        int checked = 0;
        std::vector<std::string> failures;
        for (const auto& entry : std::filesystem::directory_iterator(dir)) {
            if (!entry.is_regular_file())
                continue;
            std::string name = entry.path().filename().string();
            if (do_sieve && name.size() > 5 && name.compare(name.size() - 5, 5, ".h8sv") == 0) {
                ++checked;
                try {
                    verify_prime_table_file(entry.path());
                } catch (const Error& e) {
                    failures.emplace_back(e.what());
                }
            } else if (do_zeros) {
                auto parsed = parse_zero_filename(name);
                if (!parsed)
                    continue;
                ++checked;
                try {
                    read_zero_csv_file(entry.path(), parsed->source, parsed->t_scanned);
                } catch (const Error& e) {
                    failures.emplace_back(e.what());
                }
            }
        }
        if (!failures.empty()) {
            std::string joined;
            for (const auto& f : failures)
                joined += (joined.empty() ? "" : "; ") + f;
            throw CacheError("verification failed for " + std::to_string(failures.size()) +
                             " of " + std::to_string(checked) + " files: " + joined);
        }
        return "verify: " + std::to_string(checked) + " files ok";
    }
    case CacheAction::Clear: {
        if (!std::filesystem::exists(dir))
            return "clear: cache directory absent";
        int removed = 0;
        for (const auto& entry : std::filesystem::directory_iterator(dir)) {
            if (!entry.is_regular_file())
                continue;
            std::string name = entry.path().filename().string();
            bool is_sieve = name.size() > 5 && name.compare(name.size() - 5, 5, ".h8sv") == 0;
            bool is_zeros = parse_zero_filename(name).has_value();
            bool is_misc = name == "last_run.json" ||
                           (name.size() > 4 && name.compare(name.size() - 4, 4, ".tmp") == 0);
            bool doomed = (do_sieve && is_sieve) || (do_zeros && is_zeros) ||
                          (scope == CacheScope::All && is_misc);
            if (doomed && std::filesystem::remove(entry.path()))
                ++removed;
        }
        return "clear: removed " + std::to_string(removed) + " files";
    }
    }
    throw ArgumentError("unknown cache action");
}

} // namespace h8
