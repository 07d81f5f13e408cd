#include "h8/conjectures.hpp"

#include <cmath>
#include <string>

#include "h8/errors.hpp"
#include "h8/numeric.hpp"

namespace h8 {

namespace {

constexpr std::uint64_t kMaxBoundN = 100000000ull;

void check_bound_n(std::uint64_t N, std::uint64_t floor_n) {
    if (N < floor_n)
        throw ArgumentError("bound comparison needs N >= " + std::to_string(floor_n) +
                            ", got " + std::to_string(N));
    if (N > kMaxBoundN)
        throw RangeError("bound comparison capped at N <= 1e8, got " + std::to_string(N));
}

BoundComparison finish(BoundComparison b) {
    b.rhs_bound = goldbach_rhs(b.N);
    if (b.lhs_count == 0) {
        b.ratio = 0.0;
        b.pass = false;
    } else {
        b.ratio = b.lhs_weighted / b.rhs_bound;
        b.pass = b.ratio > 1.0;
    }
    return b;
}

} // namespace

BoundComparison goldbach_weighted(const PrimeTable& table, std::uint64_t N) {
    if (N % 2 != 0)
        throw ArgumentError("goldbach count needs even N, got " + std::to_string(N));
    check_bound_n(N, 4);
    if (table.lo > 2 || table.hi < N)
        throw ArgumentError("prime table does not cover [2, N]");

    BoundComparison b;
    b.N = N;
    KahanSum weighted;
    // Ordered odd-prime pairs: each representation N = p + p' with p != p'
    // contributes twice. p = 2 never pairs (N - 2 is even), so N = 4 counts 0.
    for (std::uint64_t p = 3; p + 3 <= N; p += 2) {
        if (table.is_prime(p) && table.is_prime(N - p)) {
            ++b.lhs_count;
            weighted.add(std::log(double(p)));
        }
    }
    b.lhs_weighted = weighted.value();
    return finish(b);
}

BoundComparison goldbach_weighted(std::uint64_t N) {
    if (N % 2 != 0)
        throw ArgumentError("goldbach count needs even N, got " + std::to_string(N));
    check_bound_n(N, 4);
    return goldbach_weighted(build_sieve(2, N), N);
}

BoundComparison twin_weighted(const PrimeTable& table, std::uint64_t N) {
    check_bound_n(N, 6);
    if (table.lo > 2 || table.hi < N)
        throw ArgumentError("prime table does not cover [2, N]");

    BoundComparison b;
    b.N = N;
    KahanSum weighted;
    for (std::uint64_t p = 5; p <= N; p += 2) {
        if (table.is_prime(p) && table.is_prime(p - 2)) {
            ++b.lhs_count;
            weighted.add(std::log(double(p)));
        }
    }
    b.lhs_weighted = weighted.value();
    return finish(b);
}

BoundComparison twin_weighted(std::uint64_t N) {
    check_bound_n(N, 6);
    return twin_weighted(build_sieve(2, N), N);
}

double goldbach_rhs(std::uint64_t N) {
    // 4 (2 log 2 - log 3) = 1.15072828980712...
    constexpr double k_front = 1.1507282898071232;
    return k_front * singular_series_C(N) * double(N) / std::log(double(N));
}

BoundComparison bound_comparison(const PrimeTable& table, std::uint64_t N, ShiftMode mode) {
    return mode == ShiftMode::Goldbach ? goldbach_weighted(table, N)
                                       : twin_weighted(table, N);
}

BoundComparison bound_comparison(std::uint64_t N, ShiftMode mode) {
    return mode == ShiftMode::Goldbach ? goldbach_weighted(N) : twin_weighted(N);
}

std::uint64_t goldbach_missing_count(std::uint64_t n_min, std::uint64_t n_max) {
    if (n_min < 4 || n_min > n_max)
        throw ArgumentError("need 4 <= n_min <= n_max");
    if (n_max > kMaxBoundN)
        throw RangeError("missing-count scan capped at 1e8");
    PrimeTable table = build_sieve(2, n_max);
    std::uint64_t missing = 0;
    for (std::uint64_t N = n_min + (n_min % 2); N <= n_max; N += 2) {
        bool found = N == 4; // 2 + 2
        for (std::uint64_t p = 3; !found && p <= N / 2; p += 2)
            found = table.is_prime(p) && table.is_prime(N - p);
        if (!found)
            ++missing;
    }
    return missing;
}

void write_bound_csv(std::ostream& os,
                     const std::vector<std::pair<ShiftMode, BoundComparison>>& rows) {
    os << "N,mode,lhs_count,lhs_weighted,rhs_bound,ratio,pass\n";
    for (const auto& [mode, b] : rows) {
        os << b.N << ',' << shift_mode_name(mode) << ',' << b.lhs_count << ','
           << g12(b.lhs_weighted) << ',' << g12(b.rhs_bound) << ',' << g12(b.ratio)
           << ',' << (b.pass ? "true" : "false") << '\n';
    }
}

} // namespace h8
