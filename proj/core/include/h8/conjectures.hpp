#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "h8/prime_tables.hpp"
#include "h8/sieve_kit.hpp"

namespace h8 {

// One weighted-count-versus-lower-bound comparison at size N.
struct BoundComparison {
    std::uint64_t N = 0;
    double lhs_weighted = 0.0;  // sum of log p over counted primes
    std::uint64_t lhs_count = 0;
    double rhs_bound = 0.0;     // main-term lower bound
    double ratio = 0.0;         // lhs_weighted / rhs_bound, 0 when count is 0
    bool pass = false;          // ratio > 1
};

// Primes 2 < p < N with N - p prime; each admissible p counted at its own
// position, so representations appear twice unless p = N/2. Even N, 4 <= N <= 1e8.
// The table overload reuses a sieve covering [2, N].
BoundComparison goldbach_weighted(std::uint64_t N);
BoundComparison goldbach_weighted(const PrimeTable& table, std::uint64_t N);

// Primes p <= N with p - 2 prime, anchored at the larger pair member. 6 <= N <= 1e8.
BoundComparison twin_weighted(std::uint64_t N);
BoundComparison twin_weighted(const PrimeTable& table, std::uint64_t N);

// 4 (2 log 2 - log 3) C(N) N / log N, the main-term lower bound; the same
// expression serves both modes (the twin bound reuses it verbatim, C(N)
// instantiated at the counting limit).
double goldbach_rhs(std::uint64_t N);

BoundComparison bound_comparison(std::uint64_t N, ShiftMode mode);
BoundComparison bound_comparison(const PrimeTable& table, std::uint64_t N, ShiftMode mode);

// Number of even N in [n_min, n_max] with no Goldbach representation
// (early-exit smallest-partner scan; expected 0).
std::uint64_t goldbach_missing_count(std::uint64_t n_min, std::uint64_t n_max);

// CSV schema: N,mode,lhs_count,lhs_weighted,rhs_bound,ratio,pass
void write_bound_csv(std::ostream& os,
                     const std::vector<std::pair<ShiftMode, BoundComparison>>& rows);

} // namespace h8
