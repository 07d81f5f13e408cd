#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "h8/zeta.hpp"

namespace h8 {

enum class CacheAction { Warm, Verify, Clear };
enum class CacheScope { Sieve, Zeros, All };

// H8_CACHE_DIR if set, otherwise ./.h8cache. Not created until something is written.
std::filesystem::path cache_dir();

// Process-wide override that beats H8_CACHE_DIR (set from RunConfig); empty resets.
void set_cache_dir_override(const std::filesystem::path& dir);

// zeros_<source>_t<height>.csv with ':' -> '_' and '.' -> '-' so tags like
// L:8:0.1 stay portable across filesystems.
std::filesystem::path zero_table_path(const std::string& source, double t_scanned);

// Atomic write (temp file + rename): readers never observe a partial table.
void save_zero_table(const ZeroTable& table);

// Best cached table whose scan height covers t_needed, or nullopt. Malformed
// files raise CacheError rather than being silently skipped.
std::optional<ZeroTable> try_load_zero_table(const std::string& source, double t_needed);

// Cache-through scan: reuse a table covering t_max if present, otherwise scan
// (source "zeta" or "L:q:label") and persist the result.
ZeroTable load_or_scan_zeros(const std::string& source, double t_max, unsigned workers = 0);

// Warm builds the sieve file up to sieve_hi and zero tables for zeta (to
// zeta_height) plus every primitive quadratic character mod 3,4,5,8,11,12 (to
// l_height). Verify re-reads files in scope and raises CacheError listing any
// that fail. Clear deletes files in scope. Returns a short status line.
std::string cache_admin(CacheAction action, CacheScope scope,
                        std::uint64_t sieve_hi = 100000000ull, double zeta_height = 100.0,
                        double l_height = 60.0);

} // namespace h8
