#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string output;
};

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Runs the installed binary with an isolated cache directory, capturing the
// combined output and the exit status.
CmdResult run_cli(const std::string& args, const std::string& cache_dir = "cli-cache") {
    const char* bin = std::getenv("H8_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "H8_BIN must point at the built binary");
    std::string cmd = "H8_CACHE_DIR=" + cache_dir + " \"" + std::string(bin) + "\" " + args +
                      " > cli_out.txt 2>&1";
    int raw = std::system(cmd.c_str());
    CmdResult r;
    r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.output = slurp("cli_out.txt");
    return r;
}

struct FreshDir {
    std::filesystem::path path;
    explicit FreshDir(const char* name) : path(name) { std::filesystem::remove_all(path); }
    ~FreshDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
};

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("zeros subcommand writes the catalogued heights") {
    FreshDir cache("cli-zeros-cache");
    auto r = run_cli("zeros --source zeta --t-max 30 --out cli_zeros.csv",
                     cache.path.string());
    CHECK(r.exit_code == 0);
    std::string csv = slurp("cli_zeros.csv");
    CHECK(contains(csv, "source,gamma_height,residual_abs,refinement_width"));
    CHECK(contains(csv, "zeta,14.134725141"));
    CHECK(contains(csv, "zeta,21.022039638"));
    CHECK(contains(csv, "zeta,25.010857580"));

    auto l = run_cli("zeros --source L:4:1 --t-max 12 --out cli_lzeros.csv",
                     cache.path.string());
    CHECK(l.exit_code == 0);
    CHECK(contains(slurp("cli_lzeros.csv"), "L:4:1,6.02094890"));
    std::filesystem::remove("cli_zeros.csv");
    std::filesystem::remove("cli_lzeros.csv");
}

TEST_CASE("zeros subcommand maps bad input onto usage exit codes") {
    FreshDir cache("cli-zerr-cache");
    CHECK(run_cli("zeros --source bogus --t-max 10 --out x.csv", cache.path.string())
              .exit_code == 2);
    CHECK(run_cli("zeros --source zeta --t-max 2000 --out x.csv", cache.path.string())
              .exit_code == 2);
    CHECK(run_cli("zeros --source zeta", cache.path.string()).exit_code == 2);
    CHECK(run_cli("frobnicate", cache.path.string()).exit_code == 2);
    CHECK(run_cli("", cache.path.string()).exit_code == 2);
}

TEST_CASE("check runs claims, reports pass lines, and persists the run") {
    FreshDir cache("cli-check-cache");
    auto r = run_cli("check thm6.mertens bridge.orthogonality", cache.path.string());
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "thm6.mertens: PASS"));
    CHECK(contains(r.output, "bridge.orthogonality: PASS"));
    CHECK(std::filesystem::exists(cache.path / "last_run.json"));

    auto rep = run_cli("report --format csv --out cli_report.csv", cache.path.string());
    CHECK(rep.exit_code == 0);
    std::string csv = slurp("cli_report.csv");
    CHECK(csv.rfind("claim_id,", 0) == 0);
    CHECK(contains(csv, "thm6.mertens"));
    std::filesystem::remove("cli_report.csv");

    CHECK(run_cli("check no.such.claim", cache.path.string()).exit_code == 2);
}

TEST_CASE("report without a prior run exits with a cache error") {
    FreshDir cache("cli-rep-cache");
    auto r = run_cli("report --format json --out never.json", cache.path.string());
    CHECK(r.exit_code == 3);
    CHECK(contains(r.output, "run `h8 check` first"));
}

TEST_CASE("check honors a config file and rejects malformed ones") {
    FreshDir cache("cli-cfg-cache");
    std::ofstream("cli_cfg.json") << R"({"zero_runtimes": true,
                                         "output": {"path": "cli_cfg_out.json", "format": "json"}})";
    auto r = run_cli("check thm6.mertens --config cli_cfg.json", cache.path.string());
    CHECK(r.exit_code == 0);
    CHECK(std::filesystem::exists("cli_cfg_out.json"));
    CHECK(contains(slurp("cli_cfg_out.json"), "\"runtime_ms\": 0"));
    std::filesystem::remove("cli_cfg_out.json");

    std::ofstream("cli_bad_cfg.json") << R"({"tolerance": 1})";
    CHECK(run_cli("check thm6.mertens --config cli_bad_cfg.json", cache.path.string())
              .exit_code == 2);
    std::filesystem::remove("cli_bad_cfg.json");
    std::filesystem::remove("cli_cfg.json");
}

TEST_CASE("ap-error emits one row per residue class") {
    FreshDir cache("cli-ap-cache");
    auto r = run_cli("ap-error --x 1000 --q-max 3", cache.path.string());
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "x,q,l,b,psi,main,error"));
    CHECK(contains(r.output, "1000,1,0,1,996.680912247,1000,-3.31908775282"));
    CHECK(contains(r.output, "1000,3,1,1,"));
    CHECK(contains(r.output, "1000,3,2,1,"));
}

TEST_CASE("bv switches between averaged and scaled forms") {
    FreshDir cache("cli-bv-cache");
    auto avg = run_cli("bv --x 10000 --d-max 20", cache.path.string());
    CHECK(avg.exit_code == 0);
    CHECK(contains(avg.output, "x,D,b_max,kind,value"));
    CHECK(contains(avg.output, "fixed_l"));
    CHECK(contains(avg.output, "max_l"));

    auto scaled = run_cli("bv --x 10000 --d-max 20 --b-max 5", cache.path.string());
    CHECK(scaled.exit_code == 0);
    CHECK(contains(scaled.output, "scaled"));
    CHECK(!contains(scaled.output, "fixed_l"));
}

TEST_CASE("sandwich prints the bracketing row") {
    FreshDir cache("cli-sand-cache");
    auto r = run_cli("sandwich --n 10000 --mode goldbach --u 2.5", cache.path.string());
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "N,mode,z,y,u,lower,S,upper,remainder"));
    CHECK(contains(r.output, ",2993.9654"));
    CHECK(run_cli("sandwich --n 10000 --mode cousin --u 2.5", cache.path.string())
              .exit_code == 2);
}

TEST_CASE("goldbach and twins tabulate bound comparisons") {
    FreshDir cache("cli-gt-cache");
    auto g = run_cli("goldbach --n-min 6 --n-max 12", cache.path.string());
    CHECK(g.exit_code == 0);
    CHECK(contains(g.output, "N,mode,lhs_count,lhs_weighted,rhs_bound,ratio,pass"));
    CHECK(contains(g.output, "6,goldbach,1,1.09861228867,"));
    CHECK(contains(g.output, "8,goldbach,2,2.7080502011,"));
    CHECK(contains(g.output, "10,goldbach,3,"));
    CHECK(contains(g.output, "12,goldbach,2,"));

    auto t = run_cli("twins --n 100", cache.path.string());
    CHECK(t.exit_code == 0);
    CHECK(contains(t.output, "100,twin,8,24.6612570236,21.9946088611,"));
    CHECK(run_cli("goldbach --n-min 10 --n-max 6", cache.path.string()).exit_code == 2);
}

TEST_CASE("cache admin cycles through warm, verify, clear") {
    FreshDir cache("cli-admin-cache");
    // zero tables only: the sieve default would build out to 1e8
    auto warm = run_cli("cache warm --scope zeros", cache.path.string());
    CHECK(warm.exit_code == 0);
    CHECK(contains(warm.output, "warm:"));

    auto verify = run_cli("cache verify --scope zeros", cache.path.string());
    CHECK(verify.exit_code == 0);
    CHECK(contains(verify.output, "files ok"));

    auto clear = run_cli("cache clear --scope all", cache.path.string());
    CHECK(clear.exit_code == 0);
    CHECK(contains(clear.output, "clear: removed"));

    CHECK(run_cli("cache polish", cache.path.string()).exit_code == 2);
}
