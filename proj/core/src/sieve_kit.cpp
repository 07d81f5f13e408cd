#include "h8/sieve_kit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "h8/arith.hpp"
#include "h8/errors.hpp"
#include "h8/numeric.hpp"
#include "h8/prime_tables.hpp"

namespace h8 {

const char* shift_mode_name(ShiftMode mode) {
    return mode == ShiftMode::Goldbach ? "goldbach" : "twin";
}

ShiftMode parse_shift_mode(const std::string& name) {
    if (name == "goldbach")
        return ShiftMode::Goldbach;
    if (name == "twin")
        return ShiftMode::Twin;
    throw ArgumentError("unknown shift mode '" + name + "' (expected goldbach or twin)");
}

SieveContext make_context(std::uint64_t N, ShiftMode mode, double z, double u) {
    if (N < 6)
        throw ArgumentError("sieve context needs N >= 6");
    if (mode == ShiftMode::Goldbach && N % 2 != 0)
        throw ArgumentError("Goldbach mode needs even N");
    if (!(z >= 2.0) || !(z * z <= (double)N + 1e-9))
        throw ArgumentError("sifting limit must satisfy 2 <= z <= sqrt(N)");
    if (!(u > 0.0) || !std::isfinite(u))
        throw ArgumentError("u must be positive and finite");
    SieveContext ctx;
    ctx.N = N;
    ctx.shift_mode = mode;
    ctx.z = z;
    ctx.u = u;
    ctx.y = std::pow(z, u);
    return ctx;
}

namespace {

// log of the twin-prime factor: sum over odd p <= 1e7 of log(1 - 1/(p-1)^2),
// plus an integral tail for p > 1e7 (error well under 1e-9)
double twin_factor_log() {
    constexpr double P = 1e7;
    KahanSum acc;
    sieve_primes(3, (std::uint64_t)P, [&](std::uint64_t p) {
        double d = (double)p - 1.0;
        acc.add(std::log1p(-1.0 / (d * d)));
    });
    // tail: -integral over t > P of dt / (log t (t-1)^2), via t = P e^v
    double tail = 0.0;
    const int n = 4000;
    const double vmax = 40.0;
    auto integrand = [&](double v) {
        double t = P * std::exp(v);
        return t / (std::log(t) * (t - 1.0) * (t - 1.0));
    };
    for (int i = 0; i < n; ++i) {
        double v0 = vmax * i / n;
        double v1 = vmax * (i + 1) / n;
        tail += 0.5 * (integrand(v0) + integrand(v1)) * (v1 - v0);
    }
    return acc.value() - tail;
}

double twin_constant() {
    static const double c2 = std::exp(twin_factor_log());
    return c2;
}

} // namespace

double singular_series_C(std::uint64_t N) {
    if (N < 4 || N % 2 != 0)
        throw ArgumentError("singular series defined for even N >= 4");
    while (N % 2 == 0)
        N /= 2;
    double c = twin_constant();
    for (auto [p, e] : factorize(N))
        c *= (double)(p - 1) / (double)(p - 2);
    return c;
}

double rosser_f(double u) {
    if (!(u >= 2.0) || !(u <= 4.0))
        throw RangeError("f(u) is available on [2, 4] only");
    return 2.0 * std::exp(euler_gamma) * std::log(u - 1.0) / u;
}

double rosser_F(double u) {
    if (!(u >= 2.0) || !(u <= 3.0))
        throw RangeError("F(u) is available on [2, 3] only");
    return 2.0 * std::exp(euler_gamma) / u;
}

double brute_weighted_sieve(const SieveContext& ctx) {
    if (ctx.N > 10000000)
        throw RangeError("brute weighted sieve feasible for N <= 1e7 only");
    auto sifters = primes_up_to((std::uint64_t)ctx.z);
    KahanSum acc;
    sieve_primes(3, ctx.N, [&](std::uint64_t p) {
        std::uint64_t a = ctx.shift_mode == ShiftMode::Goldbach ? ctx.N - p : p + 2;
        for (std::uint64_t sp : sifters)
            if (a % sp == 0)
                return;
        acc.add(std::log((double)p));
    });
    return acc.value();
}

SandwichBounds rosser_sandwich(const SieveContext& ctx) {
    if (!(ctx.u >= 2.0) || !(ctx.u <= 3.0))
        throw RangeError("sandwich needs 2 <= u <= 3 (both bound factors defined)");

    // squarefree moduli d <= y from odd primes <= z, depth-first
    auto ps = primes_up_to((std::uint64_t)ctx.z);
    std::vector<std::uint64_t> odd_ps(ps.begin() + (ps.empty() || ps[0] != 2 ? 0 : 1), ps.end());
    std::vector<std::uint64_t> moduli{1};
    std::vector<std::pair<std::uint64_t, std::size_t>> stack{{1, 0}};
    while (!stack.empty()) {
        auto [d, i] = stack.back();
        stack.pop_back();
        for (std::size_t j = i; j < odd_ps.size(); ++j) {
            std::uint64_t nd = d * odd_ps[j];
            if ((double)nd > ctx.y)
                break;
            moduli.push_back(nd);
            if (moduli.size() > 10000000)
                throw RangeError("sandwich remainder enumeration exceeds 1e7 moduli");
            stack.emplace_back(nd, j + 1);
        }
    }
    std::sort(moduli.begin(), moduli.end());

    auto primes = primes_up_to(ctx.N);
    KahanSum remainder;
    for (std::uint64_t d : moduli) {
        std::uint64_t l = (ctx.shift_mode == ShiftMode::Goldbach ? ctx.N : 2) % d;
        KahanSum theta;
        for (std::uint64_t p : primes) {
            if (p <= 2)
                continue;
            if (p % d == l)
                theta.add(std::log((double)p));
        }
        remainder.add(std::abs(theta.value() - (double)ctx.N / (double)totient(d)));
    }

    double scale = 2.0 * std::exp(-euler_gamma) * singular_series_C(ctx.N) * (double)ctx.N /
                   std::log(ctx.z);
    SandwichBounds b;
    b.main_lower = scale * rosser_f(ctx.u);
    b.main_upper = scale * rosser_F(ctx.u);
    b.remainder = remainder.value();
    b.lower = b.main_lower - b.remainder;
    b.upper = b.main_upper + b.remainder;
    b.d_count = moduli.size();
    return b;
}

void write_sandwich_csv(std::ostream& os, const SieveContext& ctx, const SandwichBounds& bounds,
                        double brute_s) {
    os << "N,mode,z,y,u,lower,S,upper,remainder\n";
    os << ctx.N << ',' << shift_mode_name(ctx.shift_mode) << ',' << g12(ctx.z) << ','
       << g12(ctx.y) << ',' << g12(ctx.u) << ',' << g12(bounds.lower) << ',' << g12(brute_s)
       << ',' << g12(bounds.upper) << ',' << g12(bounds.remainder) << '\n';
}

} // namespace h8
