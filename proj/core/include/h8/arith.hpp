#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "h8/errors.hpp"

namespace h8 {

// trial-division factorization; fine for the module bounds (q <= 1e4, N <= 1e8)
inline std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p)
            continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

inline std::uint64_t totient(std::uint64_t n) {
    if (n == 0)
        throw ArgumentError("totient of 0");
    std::uint64_t r = n;
    for (auto [p, e] : factorize(n))
        r = r / p * (p - 1);
    return r;
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1)
            r = (unsigned __int128)r * b % m;
        b = (unsigned __int128)b * b % m;
        e >>= 1;
    }
    return r;
}

// modular inverse for gcd(a, m) = 1
inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = (std::int64_t)m, nr = (std::int64_t)(a % m);
    while (nr) {
        std::int64_t qq = r / nr;
        t -= qq * nt;
        std::swap(t, nt);
        r -= qq * nr;
        std::swap(r, nr);
    }
    if (r != 1)
        throw ArgumentError("inv_mod: arguments not coprime");
    if (t < 0)
        t += (std::int64_t)m;
    return (std::uint64_t)t;
}

inline int v2(std::uint64_t n) {
    int v = 0;
    while (n && (n & 1) == 0) {
        n >>= 1;
        ++v;
    }
    return v;
}

} // namespace h8
