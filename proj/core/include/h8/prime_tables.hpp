#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <ostream>
#include <vector>

#include "h8/characters.hpp"
#include "h8/numeric.hpp"

namespace h8 {

// Bit-packed primality of the odd integers in [lo, hi]; 2 is tracked by the
// range bounds alone. Full table for [2, 1e9] is ~62 MiB.
struct PrimeTable {
    std::uint64_t lo = 2;
    std::uint64_t hi = 2;
    std::vector<std::uint64_t> bits; // bit i <=> first_odd + 2i is prime
    std::uint64_t count = 0;

    std::uint64_t first_odd() const { return lo | 1; }
    bool is_prime(std::uint64_t n) const;
};

// Segmented sieve of [lo, hi], 2 <= lo <= hi <= 1e9.
PrimeTable build_sieve(std::uint64_t lo, std::uint64_t hi);

// Stream the primes of [lo, hi] in ascending order without materializing a
// table; same bounds as build_sieve.
void sieve_primes(std::uint64_t lo, std::uint64_t hi,
                  const std::function<void(std::uint64_t)>& fn);

// Convenience: materialized ascending primes <= n.
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

// Binary cache for PrimeTable: magic "H8SV", version u32 LE, lo u64 LE,
// hi u64 LE, then the odd bitset as 64-bit little-endian words.
void save_prime_table(const std::filesystem::path& path, const PrimeTable& table);
PrimeTable load_prime_table(const std::filesystem::path& path);
// spot-check a cache file against trial division (seeded sampling); throws a
// cache error naming the file on any mismatch
void verify_prime_table_file(const std::filesystem::path& path, int samples = 1000);

// Psi sums prime powers; Theta is the classical prime-only sum including 2;
// ThetaOdd drops p = 2, the convention every progression-restricted sum
// here defaults to.
enum class SumKind { Psi, Theta, ThetaOdd };

// Sum of log p over n <= x/b with b*n = l (mod q); q = 1 drops the congruence
// (l must be 0 then). Requires gcd(l, q) = 1 when q > 1 and gcd(b, q) = 1 when
// b > 1.
double chebyshev_sum(double x, SumKind kind, std::uint64_t q = 1, std::uint64_t l = 0,
                     std::uint64_t b = 1);

// psi(x, chi) = sum of Lambda(n) chi(n), n <= x; complex for complex chi
cplx psi_chi(double x, const DirichletCharacter& chi);

// One deviation sample E(x; b, q, l) = psi(x; b, q, l) - (x/b)/phi(q).
struct ErrorSample {
    double x = 0.0;
    std::uint64_t q = 1;
    std::uint64_t l = 0;
    std::uint64_t b = 1;
    double psi_value = 0.0;
    double main_term = 0.0;
    double error = 0.0;
};
ErrorSample error_term(double x, std::uint64_t q, std::uint64_t l, std::uint64_t b = 1);

// CSV schema: x,q,l,b,psi,main,error
void write_error_csv(std::ostream& os, const std::vector<ErrorSample>& samples);

// Sum over 2 <= q <= D of |E(x; q, l)|: FixedL keeps one residue (skipping q
// not coprime to it), MaxL takes the worst coprime residue per q.
enum class AveragedMode { FixedL, MaxL };
double averaged_error_sum(double x, std::uint64_t D, AveragedMode mode, std::uint64_t l = 1);

// Sum over 2 <= q <= D, 1 <= b <= b_max with gcd(b, q) = 1 of |E(x; b, q, l)|.
// b_max may not exceed sqrt(x); D * b_max is capped at 1e7 as a work bound.
double scaled_error_sum(double x, std::uint64_t D, std::uint64_t b_max, std::uint64_t l = 1);

// Deviations of psi and odd-prime theta from x/phi(q) on one class, and the
// prime-power gap between them.
struct Lemma6Gap {
    double psi_dev = 0.0;
    double theta_dev = 0.0;
    double gap = 0.0;
};
Lemma6Gap lemma6_gap(double x, std::uint64_t q, std::uint64_t l);

// Sum of 1/p over x^(1/3) <= p <= x^(1/2); tends to log 3 - log 2, slowly.
double mertens_segment(double x);

// Snapshot of every progression sum at one point of an ascending scan: psi and
// theta (odd primes only) for all q <= q_max and every residue class,
// coprime or not.
class ApClassSums {
public:
    explicit ApClassSums(std::uint64_t q_max);

    std::uint64_t q_max() const { return q_max_; }
    double psi(std::uint64_t q, std::uint64_t l) const;
    double theta_odd(std::uint64_t q, std::uint64_t l) const;

    void add(std::uint64_t n, double log_p, bool is_prime);

private:
    std::uint64_t q_max_;
    std::vector<KahanSum> psi_;
    std::vector<KahanSum> theta_;
};

// Single ascending pass over prime powers up to the last checkpoint, invoking
// visit(x, sums) at every checkpoint with all classes q <= q_max accumulated
// through n <= x. Checkpoints must be ascending; far cheaper than one
// chebyshev_sum call per (x, q, l).
void ap_checkpoint_scan(const std::vector<double>& checkpoints, std::uint64_t q_max,
                        const std::function<void(double, const ApClassSums&)>& visit);

} // namespace h8
