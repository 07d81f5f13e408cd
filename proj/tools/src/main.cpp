#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "h8/arith.hpp"
#include "h8/cache.hpp"
#include "h8/claims.hpp"
#include "h8/config.hpp"
#include "h8/conjectures.hpp"
#include "h8/errors.hpp"
#include "h8/numeric.hpp"
#include "h8/prime_tables.hpp"
#include "h8/report.hpp"
#include "h8/sieve_kit.hpp"

namespace {

int cmd_zeros(const std::string& source, double t_max, const std::string& out) {
    h8::ZeroTable table = h8::load_or_scan_zeros(source, t_max);
    std::vector<h8::ZeroRecord> kept;
    for (const auto& rec : table.records)
        if (rec.gamma_height <= t_max + 1e-9)
            kept.push_back(rec);
    std::ofstream os(out, std::ios::trunc);
    if (!os)
        throw h8::IoError("cannot open " + out);
    h8::write_zero_csv(os, kept);
    os.flush();
    if (!os)
        throw h8::IoError("write failed for " + out);
    std::cout << kept.size() << " zeros of " << source << " up to " << h8::g12(t_max)
              << " -> " << out << "\n";
    return 0;
}

int cmd_check(const std::vector<std::string>& patterns, const std::string& config_path) {
    h8::RunConfig cfg;
    if (!config_path.empty())
        cfg = h8::load_config(config_path);
    auto reports = h8::run_suite(cfg, patterns);
    bool all_pass = true;
    for (const auto& r : reports) {
        all_pass = all_pass && r.pass;
        std::cout << r.claim_id << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.runtime_ms
                  << " ms)\n";
    }
    if (!cfg.output_path.empty()) {
        h8::emit_report(reports, cfg.output_format, cfg.output_path);
        std::cout << "report -> " << cfg.output_path.string() << "\n";
    }
    return all_pass ? 0 : 1;
}

int cmd_ap_error(double x, std::uint64_t q_max) {
    std::vector<h8::ErrorSample> rows;
    h8::ap_checkpoint_scan({x}, q_max, [&](double, const h8::ApClassSums& sums) {
        for (std::uint64_t q = 1; q <= q_max; ++q) {
            double main = x / double(h8::totient(q));
            for (std::uint64_t l = 0; l < q; ++l) {
                if (std::gcd(l, q) != 1)
                    continue;
                double psi = sums.psi(q, l);
                rows.push_back({x, q, l, 1, psi, main, psi - main});
            }
        }
    });
    h8::write_error_csv(std::cout, rows);
    return 0;
}

int cmd_bv(double x, std::uint64_t d_max, const std::optional<std::uint64_t>& b_max) {
    std::cout << "x,D,b_max,kind,value\n";
    if (b_max) {
        double v = h8::scaled_error_sum(x, d_max, *b_max);
        std::cout << h8::g12(x) << ',' << d_max << ',' << *b_max << ",scaled," << h8::g12(v)
                  << "\n";
    } else {
        double fixed = h8::averaged_error_sum(x, d_max, h8::AveragedMode::FixedL, 1);
        double worst = h8::averaged_error_sum(x, d_max, h8::AveragedMode::MaxL);
        std::cout << h8::g12(x) << ',' << d_max << ",,fixed_l," << h8::g12(fixed) << "\n";
        std::cout << h8::g12(x) << ',' << d_max << ",,max_l," << h8::g12(worst) << "\n";
    }
    return 0;
}

int cmd_sandwich(std::uint64_t n, const std::string& mode_name, double u) {
    h8::ShiftMode mode = h8::parse_shift_mode(mode_name);
    h8::SieveContext ctx = h8::make_context(n, mode, std::cbrt(double(n)), u);
    double brute = h8::brute_weighted_sieve(ctx);
    h8::SandwichBounds bounds = h8::rosser_sandwich(ctx);
    h8::write_sandwich_csv(std::cout, ctx, bounds, brute);
    return 0;
}

int cmd_goldbach(std::uint64_t n_min, std::uint64_t n_max) {
    if (n_min < 4 || n_min > n_max)
        throw h8::ArgumentError("need 4 <= n-min <= n-max");
    h8::PrimeTable table = h8::build_sieve(2, n_max);
    std::vector<std::pair<h8::ShiftMode, h8::BoundComparison>> rows;
    for (std::uint64_t N = n_min + (n_min % 2); N <= n_max; N += 2)
        rows.emplace_back(h8::ShiftMode::Goldbach, h8::goldbach_weighted(table, N));
    h8::write_bound_csv(std::cout, rows);
    return 0;
}

int cmd_twins(std::uint64_t n) {
    std::vector<std::pair<h8::ShiftMode, h8::BoundComparison>> rows;
    rows.emplace_back(h8::ShiftMode::Twin, h8::twin_weighted(n));
    h8::write_bound_csv(std::cout, rows);
    return 0;
}

int cmd_cache(const std::string& action_name, const std::string& scope_name) {
    h8::CacheAction action = action_name == "warm"     ? h8::CacheAction::Warm
                             : action_name == "verify" ? h8::CacheAction::Verify
                                                       : h8::CacheAction::Clear;
    h8::CacheScope scope = scope_name == "sieve"   ? h8::CacheScope::Sieve
                           : scope_name == "zeros" ? h8::CacheScope::Zeros
                                                   : h8::CacheScope::All;
    std::cout << h8::cache_admin(action, scope) << "\n";
    return 0;
}

int cmd_report(const std::string& format, const std::string& out) {
    std::filesystem::path last = h8::cache_dir() / "last_run.json";
    std::ifstream in(last);
    if (!in)
        throw h8::CacheError("no saved run at " + last.string() + "; run `h8 check` first");
    std::ostringstream buf;
    buf << in.rdbuf();
    auto reports = h8::parse_report_json(buf.str());
    h8::emit_report(reports, format, out);
    std::cout << reports.size() << " claim reports -> " << out << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"desk-scale analytic number theory toolkit"};
    app.require_subcommand(1);
    int exit_code = 0;

    auto* zeros = app.add_subcommand("zeros", "scan zeros and write the CSV table");
    std::string zeros_source;
    double zeros_t_max = 0.0;
    std::string zeros_out;
    zeros->add_option("--source", zeros_source, "zeta or L:q:label")->required();
    zeros->add_option("--t-max", zeros_t_max, "scan height")->required();
    zeros->add_option("--out", zeros_out, "output CSV path")->required();
    zeros->callback([&] { exit_code = cmd_zeros(zeros_source, zeros_t_max, zeros_out); });

    auto* check = app.add_subcommand("check", "run registered claims");
    std::vector<std::string> check_patterns;
    std::string check_config;
    check->add_option("patterns", check_patterns, "claim id patterns, '*' wildcards")
        ->required();
    check->add_option("--config", check_config, "JSON run configuration");
    check->callback([&] { exit_code = cmd_check(check_patterns, check_config); });

    auto* ap = app.add_subcommand("ap-error", "progression error samples at one x");
    double ap_x = 0.0;
    std::uint64_t ap_q_max = 1;
    ap->add_option("--x", ap_x, "upper limit of the psi sums")->required();
    ap->add_option("--q-max", ap_q_max, "largest modulus")->required();
    ap->callback([&] { exit_code = cmd_ap_error(ap_x, ap_q_max); });

    auto* bv = app.add_subcommand("bv", "averaged / scaled progression error sums");
    double bv_x = 0.0;
    std::uint64_t bv_d = 1;
    std::uint64_t bv_b = 0;
    bv->add_option("--x", bv_x, "upper limit")->required();
    bv->add_option("--d-max", bv_d, "largest modulus")->required();
    auto* bv_b_opt = bv->add_option("--b-max", bv_b, "largest scale factor (scaled variant)");
    bv->callback([&] {
        std::optional<std::uint64_t> b;
        if (bv_b_opt->count() > 0)
            b = bv_b;
        exit_code = cmd_bv(bv_x, bv_d, b);
    });

    auto* sandwich = app.add_subcommand("sandwich", "Rosser sandwich around the sifted sum");
    std::uint64_t sw_n = 0;
    std::string sw_mode;
    double sw_u = 0.0;
    sandwich->add_option("--n", sw_n, "problem size N")->required();
    sandwich->add_option("--mode", sw_mode, "goldbach or twin")->required();
    sandwich->add_option("--u", sw_u, "level exponent, y = z^u")->required();
    sandwich->callback([&] { exit_code = cmd_sandwich(sw_n, sw_mode, sw_u); });

    auto* goldbach = app.add_subcommand("goldbach", "bound comparisons for even N in a range");
    std::uint64_t gb_min = 0, gb_max = 0;
    goldbach->add_option("--n-min", gb_min, "first N")->required();
    goldbach->add_option("--n-max", gb_max, "last N")->required();
    goldbach->callback([&] { exit_code = cmd_goldbach(gb_min, gb_max); });

    auto* twins = app.add_subcommand("twins", "twin-pair bound comparison at N");
    std::uint64_t tw_n = 0;
    twins->add_option("--n", tw_n, "count twins up to N")->required();
    twins->callback([&] { exit_code = cmd_twins(tw_n); });

    auto* cache = app.add_subcommand("cache", "manage the sieve / zero-table cache");
    std::string cache_action, cache_scope = "all";
    cache->add_option("action", cache_action, "warm, verify, or clear")
        ->required()
        ->check(CLI::IsMember({"warm", "verify", "clear"}));
    cache->add_option("--scope", cache_scope, "sieve, zeros, or all")
        ->check(CLI::IsMember({"sieve", "zeros", "all"}));
    cache->callback([&] { exit_code = cmd_cache(cache_action, cache_scope); });

    auto* report = app.add_subcommand("report", "re-emit the last check run");
    std::string rp_format = "json", rp_out;
    report->add_option("--format", rp_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    report->add_option("--out", rp_out, "output path")->required();
    report->callback([&] { exit_code = cmd_report(rp_format, rp_out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const h8::ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const h8::RangeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const h8::CacheError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const h8::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
