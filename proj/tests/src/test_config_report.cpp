#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "h8/claims.hpp"
#include "h8/config.hpp"
#include "h8/errors.hpp"
#include "h8/report.hpp"
#include "test_util.hpp"

TEST_CASE("an empty config object yields the documented defaults") {
    auto cfg = h8::parse_config_json("{}");
    CHECK(cfg.cache_dir.empty());
    CHECK(cfg.tolerances.empty());
    CHECK(cfg.grids.empty());
    CHECK(cfg.parallelism == 0);
    CHECK(cfg.output_path.empty());
    CHECK(cfg.output_format == "json");
    CHECK(!cfg.zero_runtimes);
    CHECK(cfg.seed == h8::default_grid_seed);
}

TEST_CASE("all recognized keys parse") {
    auto cfg = h8::parse_config_json(R"({
        "cache_dir": "/tmp/cache",
        "tolerances": {"lemma1.functional_eq": 1e-9},
        "grids": {"lemma1.functional_eq": {"points": 50}},
        "parallelism": 4,
        "output": {"path": "out.csv", "format": "csv"},
        "zero_runtimes": true,
        "seed": 7
    })");
    CHECK(cfg.cache_dir == "/tmp/cache");
    CHECK(cfg.tolerance_or("lemma1.functional_eq", 1.0) == 1e-9);
    CHECK(cfg.tolerance_or("lemma2.functional_eq", 1.0) == 1.0);
    CHECK(cfg.grid_or("lemma1.functional_eq", "points", 200.0) == 50.0);
    CHECK(cfg.grid_or("lemma1.functional_eq", "other", 3.0) == 3.0);
    CHECK(cfg.parallelism == 4);
    CHECK(cfg.output_path == "out.csv");
    CHECK(cfg.output_format == "csv");
    CHECK(cfg.zero_runtimes);
    CHECK(cfg.seed == 7);
}

TEST_CASE("unknown or ill-typed config keys are rejected") {
    CHECK_THROWS_AS(h8::parse_config_json(R"({"tolerance": {}})"), h8::ArgumentError);
    CHECK_THROWS_AS(h8::parse_config_json(R"({"output": {"fmt": "csv"}})"), h8::ArgumentError);
    CHECK_THROWS_AS(h8::parse_config_json(R"({"output": {"format": "xml"}})"),
                    h8::ArgumentError);
    CHECK_THROWS_AS(h8::parse_config_json(R"({"parallelism": -1})"), h8::ArgumentError);
    CHECK_THROWS_AS(h8::parse_config_json(R"({"seed": "abc"})"), h8::ArgumentError);
    CHECK_THROWS_AS(h8::parse_config_json(R"({"zero_runtimes": 1})"), h8::ArgumentError);
    CHECK_THROWS_AS(h8::parse_config_json("not json"), h8::ArgumentError);
    CHECK_THROWS_AS(h8::parse_config_json("[1,2]"), h8::ArgumentError);
}

namespace {

h8::ClaimReport demo_report() {
    h8::ClaimReport r;
    r.claim_id = "demo.claim";
    r.params = {{"n", "100"}};
    r.metrics = {{"value", 1.5}};
    r.threshold = "value < 2";
    r.pass = true;
    r.runtime_ms = 0;
    return r;
}

} // namespace

TEST_CASE("JSON report bytes are fixed by content") {
    CHECK(h8::report_json({}) == "[]\n");
    std::string expected = R"([
  {
    "claim_id": "demo.claim",
    "metrics": {
      "value": 1.5
    },
    "params": {
      "n": "100"
    },
    "pass": true,
    "runtime_ms": 0,
    "threshold": "value < 2"
  }
]
)";
    CHECK(h8::report_json({demo_report()}) == expected);
    CHECK(h8::report_json({demo_report()}) == h8::report_json({demo_report()}));
}

TEST_CASE("CSV report flattens params and metrics into a sorted column union") {
    CHECK(h8::report_csv({}) == "claim_id,threshold,pass,runtime_ms\n");

    h8::ClaimReport a;
    a.claim_id = "a.one";
    a.params = {{"x", "10"}};
    a.metrics = {{"alpha", 1.0}};
    a.threshold = "alpha < 2";
    a.pass = true;
    a.runtime_ms = 5;

    h8::ClaimReport b;
    b.claim_id = "b.two";
    b.metrics = {{"beta", 2.5}};
    b.threshold = "beta, then gamma";
    b.pass = false;
    b.runtime_ms = 7;

    CHECK(h8::report_csv({a, b}) ==
          "claim_id,param.x,metric.alpha,metric.beta,threshold,pass,runtime_ms\n"
          "a.one,10,1,,alpha < 2,true,5\n"
          "b.two,,,2.5,\"beta, then gamma\",false,7\n");
}

TEST_CASE("JSON reports parse back to the same records") {
    auto text = h8::report_json({demo_report()});
    auto parsed = h8::parse_report_json(text);
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0].claim_id == "demo.claim");
    CHECK(parsed[0].params.at("n") == "100");
    CHECK(parsed[0].metrics.at("value") == 1.5);
    CHECK(parsed[0].threshold == "value < 2");
    CHECK(parsed[0].pass);
    CHECK(parsed[0].runtime_ms == 0);
    CHECK_THROWS_AS(h8::parse_report_json("{}"), h8::ArgumentError);
    CHECK_THROWS_AS(h8::parse_report_json("[{\"claim_id\": 3}]"), h8::ArgumentError);
}

TEST_CASE("emit_report validates format and path") {
    CHECK_THROWS_AS(h8::emit_report({}, "xml", "r.xml"), h8::ArgumentError);
    CHECK_THROWS_AS(h8::emit_report({}, "json", ""), h8::ArgumentError);
    CHECK_THROWS_AS(h8::emit_report({}, "json", "no_such_dir/sub/r.json"), h8::IoError);
}

TEST_CASE("the claim registry is sorted, unique, and glob-matchable") {
    const auto& reg = h8::claim_registry();
    CHECK(reg.size() == 19);
    CHECK(std::is_sorted(reg.begin(), reg.end(),
                         [](const auto& a, const auto& b) { return a.id < b.id; }));
    for (const auto& info : reg)
        CHECK(!info.description.empty());

    CHECK(h8::match_claims({"*"}).size() == 19);
    auto thm1 = h8::match_claims({"thm1.*"});
    CHECK(thm1 == std::vector<std::string>{"thm1.mechanism", "thm1.rectangle_vs_line",
                                           "thm1.zeros_on_line"});
    auto dedup = h8::match_claims({"thm1.*", "*.mechanism"});
    CHECK(std::count(dedup.begin(), dedup.end(), "thm1.mechanism") == 1);
    CHECK(h8::match_claims({"bridge.orthogonality"}).size() == 1);
    CHECK_THROWS_AS(h8::match_claims({"no.such.claim"}), h8::ArgumentError);
}

TEST_CASE("identical configs give byte-identical suite reports") {
    h8test::CacheSandbox sandbox(".h8cache-suitetest");
    h8::RunConfig cfg;
    cfg.cache_dir = sandbox.dir();
    cfg.zero_runtimes = true;
    auto first = h8::run_suite(cfg, {"thm6.mertens"});
    auto second = h8::run_suite(cfg, {"thm6.mertens"});
    CHECK(h8::report_json(first) == h8::report_json(second));
    REQUIRE(first.size() == 1);
    CHECK(first[0].claim_id == "thm6.mertens");
    CHECK(first[0].pass);
    CHECK(first[0].runtime_ms == 0);
}

TEST_CASE("overrides for unregistered claims are rejected up front") {
    h8test::CacheSandbox sandbox(".h8cache-suitetest2");
    h8::RunConfig cfg;
    cfg.cache_dir = sandbox.dir();
    cfg.tolerances["bogus.claim"] = 1.0;
    CHECK_THROWS_AS(h8::run_suite(cfg, {"thm6.mertens"}), h8::ArgumentError);
    cfg.tolerances.clear();
    cfg.grids["bogus.claim"] = {{"points", 10.0}};
    CHECK_THROWS_AS(h8::run_suite(cfg, {"thm6.mertens"}), h8::ArgumentError);
}
