#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <string>

namespace h8 {

using cplx = std::complex<double>;

inline constexpr double euler_gamma = std::numbers::egamma;
inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr double log_pi = 1.1447298858494002;

// Compensated (Kahan) accumulator. Used wherever millions of terms meet a
// single double, so the result does not depend on how ranges get chunked.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

struct KahanSumC {
    KahanSum re, im;
    void add(cplx z) {
        re.add(z.real());
        im.add(z.imag());
    }
    cplx value() const { return {re.value(), im.value()}; }
};

// splitmix64: tiny, seedable, identical across platforms. Sampled grids must
// reproduce bit-for-bit, so no std::uniform_real_distribution here (its output
// is implementation-defined).
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0,1) with a full 53-bit mantissa
    double uniform() { return double(next() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }
};

// default seed for every sampled grid, recorded in reports
inline constexpr std::uint64_t default_grid_seed = 0x48385345ull;

// 12 significant digits, the precision every exported CSV uses
inline std::string g12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace h8
