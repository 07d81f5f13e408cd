#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "h8/cache.hpp"
#include "h8/errors.hpp"
#include "test_util.hpp"

using h8test::CacheSandbox;
using h8test::near;

TEST_CASE("zero table paths encode source and height portably") {
    CacheSandbox sandbox(".h8cache-paths");
    CHECK(h8::zero_table_path("zeta", 100.0).filename() == "zeros_zeta_t100.csv");
    CHECK(h8::zero_table_path("zeta", 29.5).filename() == "zeros_zeta_t29-5.csv");
    CHECK(h8::zero_table_path("L:8:0.1", 60.0).filename() == "zeros_L_8_0-1_t60.csv");
    CHECK(h8::zero_table_path("zeta", 100.0).parent_path() == sandbox.dir());
}

TEST_CASE("the override wins over the environment default") {
    CacheSandbox sandbox(".h8cache-override");
    CHECK(h8::cache_dir() == sandbox.dir());
}

TEST_CASE("zero tables round-trip through the cache directory") {
    CacheSandbox sandbox(".h8cache-zt");
    h8::ZeroTable table{"zeta", 30.0, h8::find_zeta_zeros(0.0, 30.0)};
    h8::save_zero_table(table);

    auto hit = h8::try_load_zero_table("zeta", 25.0);
    REQUIRE(hit.has_value());
    CHECK(hit->source == "zeta");
    CHECK(hit->t_scanned == 30.0);
    REQUIRE(hit->records.size() == 3);
    CHECK(near(hit->records[0].gamma_height, 14.1347251417347, 1e-9));
    CHECK(hit->records[0].source == "zeta");

    CHECK(!h8::try_load_zero_table("zeta", 31.0).has_value());
    CHECK(!h8::try_load_zero_table("L:4:1", 25.0).has_value());
}

TEST_CASE("the deepest adequate table is preferred") {
    CacheSandbox sandbox(".h8cache-pick");
    h8::ZeroTable shallow{"zeta", 30.0, {{15.0, 1e-10, "zeta", 1e-11}}};
    h8::ZeroTable deep{"zeta", 50.0, {{15.0, 1e-10, "zeta", 1e-11}, {21.0, 1e-10, "zeta", 1e-11}}};
    h8::save_zero_table(shallow);
    h8::save_zero_table(deep);
    auto hit = h8::try_load_zero_table("zeta", 20.0);
    REQUIRE(hit.has_value());
    CHECK(hit->t_scanned == 50.0);
    CHECK(hit->records.size() == 2);
}

TEST_CASE("malformed cached tables raise instead of being skipped") {
    CacheSandbox sandbox(".h8cache-bad");
    std::filesystem::create_directories(sandbox.dir());

    SUBCASE("wrong header") {
        std::ofstream(sandbox.dir() / "zeros_zeta_t10.csv") << "a,b,c,d\n";
        CHECK_THROWS_AS(h8::try_load_zero_table("zeta", 5.0), h8::CacheError);
    }
    SUBCASE("non-ascending heights") {
        std::ofstream(sandbox.dir() / "zeros_zeta_t10.csv")
            << "source,gamma_height,residual_abs,refinement_width\n"
            << "zeta,5,1e-10,1e-11\n"
            << "zeta,4,1e-10,1e-11\n";
        CHECK_THROWS_AS(h8::try_load_zero_table("zeta", 5.0), h8::CacheError);
    }
    SUBCASE("height above the declared scan depth") {
        std::ofstream(sandbox.dir() / "zeros_zeta_t10.csv")
            << "source,gamma_height,residual_abs,refinement_width\n"
            << "zeta,11,1e-10,1e-11\n";
        CHECK_THROWS_AS(h8::try_load_zero_table("zeta", 5.0), h8::CacheError);
    }
    SUBCASE("unparseable number") {
        std::ofstream(sandbox.dir() / "zeros_zeta_t10.csv")
            << "source,gamma_height,residual_abs,refinement_width\n"
            << "zeta,abc,1e-10,1e-11\n";
        CHECK_THROWS_AS(h8::try_load_zero_table("zeta", 5.0), h8::CacheError);
    }
}

TEST_CASE("load_or_scan_zeros reads the cache before it scans") {
    CacheSandbox sandbox(".h8cache-los");
    // a sentinel record no real scan would produce proves the file was used
    h8::ZeroTable sentinel{"zeta", 40.0, {{5.0, 1e-10, "zeta", 1e-11}}};
    h8::save_zero_table(sentinel);
    auto got = h8::load_or_scan_zeros("zeta", 35.0);
    REQUIRE(got.records.size() == 1);
    CHECK(got.records[0].gamma_height == 5.0);

    auto scanned = h8::load_or_scan_zeros("L:4:1", 12.0);
    CHECK(scanned.source == "L:4:1");
    CHECK(scanned.records.size() == 2);
    CHECK(near(scanned.records[0].gamma_height, 6.02094890438, 1e-6));
    CHECK(std::filesystem::exists(h8::zero_table_path("L:4:1", 12.0)));

    CHECK_THROWS_AS(h8::load_or_scan_zeros("junk", 10.0), h8::ArgumentError);
    CHECK_THROWS_AS(h8::load_or_scan_zeros("L:6:1", 10.0), h8::ArgumentError);
}

TEST_CASE("cache_admin warms, verifies, and clears zero tables") {
    CacheSandbox sandbox(".h8cache-admin");
    auto status = h8::cache_admin(h8::CacheAction::Warm, h8::CacheScope::Zeros, 1000, 30.0,
                                  12.0);
    CHECK(status.rfind("warm:", 0) == 0);
    // zeta plus the seven primitive quadratic sources
    CHECK(std::filesystem::exists(h8::zero_table_path("zeta", 30.0)));
    CHECK(std::filesystem::exists(h8::zero_table_path("L:3:1", 12.0)));
    CHECK(std::filesystem::exists(h8::zero_table_path("L:4:1", 12.0)));

    CHECK(h8::cache_admin(h8::CacheAction::Verify, h8::CacheScope::Zeros) ==
          "verify: 8 files ok");

    // warming again reuses every table
    auto again = h8::cache_admin(h8::CacheAction::Warm, h8::CacheScope::Zeros, 1000, 30.0,
                                 12.0);
    CHECK(again.find("kept") != std::string::npos);

    std::ofstream(h8::zero_table_path("L:3:1", 12.0), std::ios::trunc) << "source\n";
    try {
        h8::cache_admin(h8::CacheAction::Verify, h8::CacheScope::Zeros);
        FAIL("verify accepted a truncated table");
    } catch (const h8::CacheError& e) {
        CHECK(std::string(e.what()).find("zeros_L_3_1_t12.csv") != std::string::npos);
    }

    auto cleared = h8::cache_admin(h8::CacheAction::Clear, h8::CacheScope::Zeros);
    CHECK(cleared.rfind("clear:", 0) == 0);
    CHECK(!std::filesystem::exists(h8::zero_table_path("zeta", 30.0)));
}

TEST_CASE("cache_admin handles the sieve scope") {
    CacheSandbox sandbox(".h8cache-sieve");
    h8::cache_admin(h8::CacheAction::Warm, h8::CacheScope::Sieve, 100000);
    auto file = sandbox.dir() / "sieve_2_100000.h8sv";
    REQUIRE(std::filesystem::exists(file));
    CHECK(h8::cache_admin(h8::CacheAction::Verify, h8::CacheScope::Sieve) ==
          "verify: 1 files ok");

    std::filesystem::resize_file(file, std::filesystem::file_size(file) - 8);
    CHECK_THROWS_AS(h8::cache_admin(h8::CacheAction::Verify, h8::CacheScope::Sieve),
                    h8::CacheError);

    h8::cache_admin(h8::CacheAction::Clear, h8::CacheScope::All);
    CHECK(!std::filesystem::exists(file));
}

TEST_CASE("verify on an empty directory reports nothing to check") {
    CacheSandbox sandbox(".h8cache-empty");
    CHECK(h8::cache_admin(h8::CacheAction::Verify, h8::CacheScope::All) ==
          "verify: cache directory absent, nothing to check");
}
