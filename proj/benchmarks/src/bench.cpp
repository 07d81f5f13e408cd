#include <benchmark/benchmark.h>

#include <complex>
#include <cstdint>

#include "h8/characters.hpp"
#include "h8/lfunctions.hpp"
#include "h8/prime_tables.hpp"
#include "h8/sieve_kit.hpp"
#include "h8/zeta.hpp"

namespace {

void bm_build_sieve(benchmark::State& state) {
    const auto hi = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        auto table = h8::build_sieve(2, hi);
        benchmark::DoNotOptimize(table.count);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(bm_build_sieve)->Arg(1 << 20)->Arg(1 << 24)->Unit(benchmark::kMillisecond);

void bm_zeta_critical_line(benchmark::State& state) {
    const std::complex<double> s{0.5, static_cast<double>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(h8::zeta_eval(s));
}
BENCHMARK(bm_zeta_critical_line)->Arg(10)->Arg(100)->Arg(1000);

void bm_hardy_z(benchmark::State& state) {
    const auto t = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(h8::hardy_z(t));
}
BENCHMARK(bm_hardy_z)->Arg(25)->Arg(250);

void bm_enumerate_characters(benchmark::State& state) {
    const auto q = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        auto group = h8::enumerate_characters(q);
        benchmark::DoNotOptimize(group.size());
    }
}
BENCHMARK(bm_enumerate_characters)->Arg(60)->Arg(360);

void bm_l_eval(benchmark::State& state) {
    const auto chi = h8::character_by_label(12, "1.1");
    const std::complex<double> s{0.5, static_cast<double>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(h8::l_eval(s, chi));
}
BENCHMARK(bm_l_eval)->Arg(10)->Arg(50);

void bm_class_sum_scan(benchmark::State& state) {
    const auto x = static_cast<double>(state.range(0));
    for (auto _ : state) {
        double last = 0.0;
        h8::ap_checkpoint_scan({x}, 12, [&](double, const h8::ApClassSums& sums) {
            last = sums.psi(1, 0);
        });
        benchmark::DoNotOptimize(last);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(bm_class_sum_scan)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void bm_weighted_sieve_brute(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    const auto ctx = h8::make_context(n, h8::ShiftMode::Goldbach, 10.0, 2.5);
    for (auto _ : state) benchmark::DoNotOptimize(h8::brute_weighted_sieve(ctx));
}
BENCHMARK(bm_weighted_sieve_brute)->Arg(100'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
