#pragma once

#include <cstdint>
#include <ostream>
#include <string>

namespace h8 {

// Which shifted set gets sifted: a = N - p (Goldbach) or a = p + 2 (twins).
enum class ShiftMode { Goldbach, Twin };

const char* shift_mode_name(ShiftMode mode);        // "goldbach" / "twin"
ShiftMode parse_shift_mode(const std::string& name);

struct SieveContext {
    std::uint64_t N = 6;
    ShiftMode shift_mode = ShiftMode::Goldbach;
    double z = 2.0; // sifting limit
    double y = 4.0; // level of distribution
    double u = 2.0; // log y / log z
};

// y is derived as z^u. Requires N >= 6 (even for Goldbach) and 2 <= z <= sqrt(N).
SieveContext make_context(std::uint64_t N, ShiftMode mode, double z, double u);

// C(N) = product over odd p | N of (p-1)/(p-2), times the twin-prime factor
// product over odd p of (1 - 1/(p-1)^2). The infinite factor is truncated at
// 1e7 with an integral tail correction and cached after the first call.
double singular_series_C(std::uint64_t N);

// Linear-sieve bound factors: f(u) = 2 e^gamma log(u-1)/u on [2, 4] and
// F(u) = 2 e^gamma / u on [2, 3].
double rosser_f(double u);
double rosser_F(double u);

// S(A, z) computed literally: sum of log p over 2 < p <= N whose shifted
// element is coprime to every prime <= z (trial division). N <= 1e7.
double brute_weighted_sieve(const SieveContext& ctx);

// Sandwich around S(A, z): main terms 2 e^{-gamma} C(N) f|F(u) N / log z, and
// an exact remainder sum over squarefree d <= y composed of odd primes <= z of
// |theta(N; d, l_d) - N/phi(d)|, theta in the 2 < p convention.
struct SandwichBounds {
    double lower = 0.0;        // main_lower - remainder
    double upper = 0.0;        // main_upper + remainder
    double remainder = 0.0;
    double main_lower = 0.0;
    double main_upper = 0.0;
    std::uint64_t d_count = 0; // moduli enumerated in the remainder
};
SandwichBounds rosser_sandwich(const SieveContext& ctx);

// CSV schema: N,mode,z,y,u,lower,S,upper,remainder
void write_sandwich_csv(std::ostream& os, const SieveContext& ctx, const SandwichBounds& bounds,
                        double brute_s);

} // namespace h8
