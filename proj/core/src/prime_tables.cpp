#include "h8/prime_tables.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numeric>

#include "h8/arith.hpp"
#include "h8/errors.hpp"
#include "h8/parallel.hpp"

namespace h8 {

namespace {

constexpr std::uint64_t kMaxSieve = 1000000000ull;
constexpr std::uint64_t kSegmentBits = 1ull << 22; // odd slots per segment

std::vector<std::uint64_t> base_primes_to(std::uint64_t n) {
    std::vector<std::uint64_t> primes;
    if (n < 2)
        return primes;
    std::vector<bool> comp(n + 1, false);
    for (std::uint64_t p = 2; p <= n; ++p) {
        if (comp[p])
            continue;
        primes.push_back(p);
        for (std::uint64_t m = p * p; m <= n; m += p)
            comp[m] = true;
    }
    return primes;
}

// Mark primality of the odd values v_lo, v_lo+2, ..., covering n_slots slots,
// into words (pre-sized, bit i <=> v_lo + 2i prime). base_primes must reach
// sqrt of the last value.
void sieve_window(std::uint64_t v_lo, std::uint64_t n_slots,
                  const std::vector<std::uint64_t>& base_primes, std::uint64_t* words) {
    std::uint64_t n_words = (n_slots + 63) / 64;
    std::memset(words, 0xff, n_words * 8);
    if (n_slots % 64)
        words[n_words - 1] = ~0ull >> (64 - n_slots % 64);
    std::uint64_t v_hi = v_lo + 2 * (n_slots - 1);
    for (std::uint64_t p : base_primes) {
        if (p == 2)
            continue;
        if (p * p > v_hi)
            break;
        std::uint64_t m = std::max(p * p, (v_lo + p - 1) / p * p);
        if ((m & 1) == 0)
            m += p;
        for (; m <= v_hi; m += 2 * p)
            words[(m - v_lo) / 2 / 64] &= ~(1ull << ((m - v_lo) / 2 % 64));
    }
}

void check_sieve_range(std::uint64_t lo, std::uint64_t hi) {
    if (lo < 2 || lo > hi)
        throw ArgumentError("sieve range must satisfy 2 <= lo <= hi");
    if (hi > kMaxSieve)
        throw RangeError("sieve range above 1e9 is unsupported");
}

} // namespace

bool PrimeTable::is_prime(std::uint64_t n) const {
    if (n < lo || n > hi)
        throw ArgumentError("primality query outside the sieved range");
    if (n == 2)
        return true;
    if ((n & 1) == 0)
        return false;
    std::uint64_t i = (n - first_odd()) / 2;
    return (bits[i / 64] >> (i % 64)) & 1;
}

PrimeTable build_sieve(std::uint64_t lo, std::uint64_t hi) {
    check_sieve_range(lo, hi);
    PrimeTable t;
    t.lo = lo;
    t.hi = hi;
    std::uint64_t base = t.first_odd();
    std::uint64_t n_slots = hi >= base ? (hi - base) / 2 + 1 : 0;
    t.bits.assign((n_slots + 63) / 64, 0);

    if (n_slots) {
        auto primes = base_primes_to((std::uint64_t)std::sqrt((double)hi) + 1);
        std::size_t segments = (n_slots + kSegmentBits - 1) / kSegmentBits;
        parallel_chunks(segments, 0, [&](std::size_t seg) {
            std::uint64_t i0 = seg * kSegmentBits;
            std::uint64_t len = std::min(kSegmentBits, n_slots - i0);
            sieve_window(base + 2 * i0, len, primes, t.bits.data() + i0 / 64);
        });
    }

    std::uint64_t c = lo <= 2 ? 1 : 0;
    for (std::uint64_t w : t.bits)
        c += (std::uint64_t)std::popcount(w);
    t.count = c;
    return t;
}

void sieve_primes(std::uint64_t lo, std::uint64_t hi,
                  const std::function<void(std::uint64_t)>& fn) {
    check_sieve_range(lo, hi);
    if (lo <= 2)
        fn(2);
    std::uint64_t base = lo | 1;
    if (hi < base)
        return;
    std::uint64_t n_slots = (hi - base) / 2 + 1;
    auto primes = base_primes_to((std::uint64_t)std::sqrt((double)hi) + 1);
    std::vector<std::uint64_t> words(std::min(n_slots + 63, kSegmentBits + 63) / 64);

    for (std::uint64_t i0 = 0; i0 < n_slots; i0 += kSegmentBits) {
        std::uint64_t len = std::min(kSegmentBits, n_slots - i0);
        std::uint64_t v0 = base + 2 * i0;
        sieve_window(v0, len, primes, words.data());
        if (v0 == 1) // lo = 2 starts the odd window at 3, never 1, but be safe
            words[0] &= ~1ull;
        std::uint64_t n_words = (len + 63) / 64;
        for (std::uint64_t w = 0; w < n_words; ++w) {
            std::uint64_t bitsw = words[w];
            while (bitsw) {
                int tz = std::countr_zero(bitsw);
                bitsw &= bitsw - 1;
                fn(v0 + 2 * (64 * w + (std::uint64_t)tz));
            }
        }
    }
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    if (n < 2)
        return out;
    out.reserve(n > 100 ? (std::size_t)(1.2 * n / std::log((double)n)) : 32);
    sieve_primes(2, n, [&](std::uint64_t p) { out.push_back(p); });
    return out;
}

namespace {

constexpr char kMagic[4] = {'H', '8', 'S', 'V'};
constexpr std::uint32_t kCacheVersion = 1;

void put_u64(std::ostream& os, std::uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i)
        b[i] = (char)(v >> (8 * i));
    os.write(b, 8);
}

std::uint64_t get_u64(std::istream& is) {
    unsigned char b[8];
    is.read((char*)b, 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
        v |= (std::uint64_t)b[i] << (8 * i);
    return v;
}

} // namespace

void save_prime_table(const std::filesystem::path& path, const PrimeTable& table) {
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw IoError("cannot open " + path.string() + " for writing");
    os.write(kMagic, 4);
    char ver[4];
    for (int i = 0; i < 4; ++i)
        ver[i] = (char)(kCacheVersion >> (8 * i));
    os.write(ver, 4);
    put_u64(os, table.lo);
    put_u64(os, table.hi);
    for (std::uint64_t w : table.bits)
        put_u64(os, w);
    if (!os)
        throw IoError("short write to " + path.string());
}

PrimeTable load_prime_table(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw IoError("cannot open " + path.string());
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw CacheError("bad magic in sieve cache " + path.string());
    unsigned char ver[4];
    is.read((char*)ver, 4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i)
        v |= (std::uint32_t)ver[i] << (8 * i);
    if (!is || v != kCacheVersion)
        throw CacheError("unsupported sieve cache version in " + path.string());

    PrimeTable t;
    t.lo = get_u64(is);
    t.hi = get_u64(is);
    if (!is || t.lo < 2 || t.lo > t.hi || t.hi > kMaxSieve)
        throw CacheError("corrupt range header in sieve cache " + path.string());
    std::uint64_t base = t.first_odd();
    std::uint64_t n_slots = t.hi >= base ? (t.hi - base) / 2 + 1 : 0;
    t.bits.resize((n_slots + 63) / 64);
    for (auto& w : t.bits)
        w = get_u64(is);
    if (!is)
        throw CacheError("truncated sieve cache " + path.string());

    std::uint64_t c = t.lo <= 2 ? 1 : 0;
    for (std::uint64_t w : t.bits)
        c += (std::uint64_t)std::popcount(w);
    t.count = c;
    return t;
}

void verify_prime_table_file(const std::filesystem::path& path, int samples) {
    PrimeTable t = load_prime_table(path);
    SplitMix64 rng(default_grid_seed);
    for (int i = 0; i < samples; ++i) {
        std::uint64_t n = t.lo + rng.next() % (t.hi - t.lo + 1);
        bool expect = n >= 2;
        for (std::uint64_t d = 2; d * d <= n; ++d) {
            if (n % d == 0) {
                expect = false;
                break;
            }
        }
        if (t.is_prime(n) != expect)
            throw CacheError("sieve cache " + path.string() + " disagrees with trial division at " +
                             std::to_string(n));
    }
}

namespace {

// Ascending stream of prime powers n <= limit with fn(n, log p, p == n).
// Backbone of every Chebyshev-type sum here.
void for_each_lambda(double limit,
                     const std::function<void(std::uint64_t, double, bool)>& fn) {
    if (!(limit >= 2.0))
        return;
    if (limit > (double)kMaxSieve)
        throw RangeError("prime-power sums above 1e9 are unsupported");
    std::uint64_t L = (std::uint64_t)limit;

    std::vector<std::pair<std::uint64_t, double>> powers;
    for (std::uint64_t p : primes_up_to((std::uint64_t)std::sqrt((double)L) + 1)) {
        if (p * p > L)
            break;
        double lp = std::log((double)p);
        for (std::uint64_t v = p * p; v <= L; v *= p) {
            powers.emplace_back(v, lp);
            if (v > L / p)
                break;
        }
    }
    std::sort(powers.begin(), powers.end());

    std::size_t pi = 0;
    sieve_primes(2, L, [&](std::uint64_t p) {
        while (pi < powers.size() && powers[pi].first < p) {
            fn(powers[pi].first, powers[pi].second, false);
            ++pi;
        }
        fn(p, std::log((double)p), true);
    });
    for (; pi < powers.size(); ++pi)
        fn(powers[pi].first, powers[pi].second, false);
}

void check_class_args(std::uint64_t q, std::uint64_t l, std::uint64_t b) {
    if (q == 0 || b == 0)
        throw ArgumentError("modulus and scale must be positive");
    if (l >= q)
        throw ArgumentError("residue must satisfy 0 <= l < q");
    if (q > 1 && std::gcd(l, q) != 1)
        throw ArgumentError("residue not coprime to the modulus");
    if (q > 1 && b > 1 && std::gcd(b, q) != 1)
        throw ArgumentError("scale not coprime to the modulus");
}

} // namespace

double chebyshev_sum(double x, SumKind kind, std::uint64_t q, std::uint64_t l, std::uint64_t b) {
    check_class_args(q, l, b);
    if (x > 1e9 / (double)b)
        throw RangeError("chebyshev_sum bound: x <= 1e9 / b");
    double limit = x / (double)b;
    std::uint64_t bq = b % q;
    KahanSum acc;
    for_each_lambda(limit, [&](std::uint64_t n, double lp, bool isp) {
        if (kind != SumKind::Psi && !isp)
            return;
        if (kind == SumKind::ThetaOdd && n == 2)
            return;
        if (q > 1 && bq * (n % q) % q != l)
            return;
        acc.add(lp);
    });
    return acc.value();
}

cplx psi_chi(double x, const DirichletCharacter& chi) {
    if (x > 1e8)
        throw RangeError("psi_chi supported for x <= 1e8");
    unsigned long q = chi.modulus;
    KahanSumC acc;
    for_each_lambda(x, [&](std::uint64_t n, double lp, bool) {
        acc.add(lp * chi.values[n % q]);
    });
    return acc.value();
}

ErrorSample error_term(double x, std::uint64_t q, std::uint64_t l, std::uint64_t b) {
    ErrorSample s;
    s.x = x;
    s.q = q;
    s.l = l;
    s.b = b;
    s.psi_value = chebyshev_sum(x, SumKind::Psi, q, l, b);
    s.main_term = x / (double)b / (double)totient(q);
    s.error = s.psi_value - s.main_term;
    return s;
}

void write_error_csv(std::ostream& os, const std::vector<ErrorSample>& samples) {
    os << "x,q,l,b,psi,main,error\n";
    for (const auto& s : samples)
        os << g12(s.x) << ',' << s.q << ',' << s.l << ',' << s.b << ',' << g12(s.psi_value)
           << ',' << g12(s.main_term) << ',' << g12(s.error) << '\n';
}

namespace {

constexpr std::uint64_t kClassChunk = 2000000; // accumulator slots per pass

std::uint64_t class_offset(std::uint64_t q, std::uint64_t q0) {
    // sum of q0..q-1
    return (q - q0) * (q + q0 - 1) / 2;
}

} // namespace

double averaged_error_sum(double x, std::uint64_t D, AveragedMode mode, std::uint64_t l) {
    if (x > 1e8)
        throw RangeError("averaged_error_sum supported for x <= 1e8");
    if (D > 10000)
        throw RangeError("averaged_error_sum supported for D <= 1e4");
    if (D < 2)
        return 0.0;

    KahanSum total;
    std::uint64_t q0 = 2;
    while (q0 <= D) {
        std::uint64_t q1 = q0;
        std::uint64_t slots = 0;
        while (q1 <= D && slots + q1 <= kClassChunk) {
            slots += q1;
            ++q1;
        }
        std::vector<KahanSum> cls(slots);
        for_each_lambda(x, [&](std::uint64_t n, double lp, bool) {
            for (std::uint64_t q = q0; q < q1; ++q)
                cls[class_offset(q, q0) + n % q].add(lp);
        });
        for (std::uint64_t q = q0; q < q1; ++q) {
            double main = x / (double)totient(q);
            const KahanSum* base = cls.data() + class_offset(q, q0);
            if (mode == AveragedMode::FixedL) {
                if (std::gcd(l, q) != 1)
                    continue;
                total.add(std::abs(base[l % q].value() - main));
            } else {
                double worst = 0.0;
                for (std::uint64_t r = 0; r < q; ++r)
                    if (std::gcd(r, q) == 1)
                        worst = std::max(worst, std::abs(base[r].value() - main));
                total.add(worst);
            }
        }
        q0 = q1;
    }
    return total.value();
}

double scaled_error_sum(double x, std::uint64_t D, std::uint64_t b_max, std::uint64_t l) {
    if (x > 1e8)
        throw RangeError("scaled_error_sum supported for x <= 1e8");
    if (b_max < 1 || (double)b_max > std::sqrt(x) + 1e-9)
        throw ArgumentError("b_max must lie in [1, sqrt(x)]");
    if (D > 10000)
        throw RangeError("scaled_error_sum supported for D <= 1e4");
    if ((double)D * (double)b_max > 1e7)
        throw RangeError("work-bound exceeded: D * b_max must stay <= 1e7");
    if (D < 2)
        return 0.0;

    std::vector<double> phi(D + 1, 0.0);
    for (std::uint64_t q = 2; q <= D; ++q)
        phi[q] = (double)totient(q);

    KahanSum total;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> targets; // (q, residue)
    std::vector<KahanSum> acc;
    for (std::uint64_t b = 1; b <= b_max; ++b) {
        targets.clear();
        for (std::uint64_t q = 2; q <= D; ++q) {
            if (std::gcd(b, q) != 1 || std::gcd(l, q) != 1)
                continue;
            targets.emplace_back(q, inv_mod(b % q, q) * (l % q) % q);
        }
        if (targets.empty())
            continue;
        acc.assign(targets.size(), KahanSum{});
        for_each_lambda(x / (double)b, [&](std::uint64_t n, double lp, bool) {
            for (std::size_t i = 0; i < targets.size(); ++i)
                if (n % targets[i].first == targets[i].second)
                    acc[i].add(lp);
        });
        for (std::size_t i = 0; i < targets.size(); ++i)
            total.add(std::abs(acc[i].value() - x / (double)b / phi[targets[i].first]));
    }
    return total.value();
}

Lemma6Gap lemma6_gap(double x, std::uint64_t q, std::uint64_t l) {
    double psi = chebyshev_sum(x, SumKind::Psi, q, l);
    double theta = chebyshev_sum(x, SumKind::ThetaOdd, q, l);
    double main = x / (double)totient(q);
    return {std::abs(psi - main), std::abs(theta - main), std::abs(psi - theta)};
}

double mertens_segment(double x) {
    if (x > (double)kMaxSieve)
        throw RangeError("mertens_segment supported for x <= 1e9");
    if (x < 8.0)
        return 0.0;
    std::uint64_t lo = (std::uint64_t)std::ceil(std::cbrt(x) - 1e-9);
    std::uint64_t hi = (std::uint64_t)std::floor(std::sqrt(x) + 1e-9);
    lo = std::max<std::uint64_t>(lo, 2);
    if (hi < lo)
        return 0.0;
    KahanSum acc;
    sieve_primes(lo, hi, [&](std::uint64_t p) { acc.add(1.0 / (double)p); });
    return acc.value();
}

ApClassSums::ApClassSums(std::uint64_t q_max) : q_max_(q_max) {
    if (q_max == 0)
        throw ArgumentError("q_max must be positive");
    std::uint64_t slots = q_max * (q_max + 1) / 2;
    psi_.assign(slots, KahanSum{});
    theta_.assign(slots, KahanSum{});
}

double ApClassSums::psi(std::uint64_t q, std::uint64_t l) const {
    if (q == 0 || q > q_max_ || l >= q)
        throw ArgumentError("class index out of range");
    return psi_[q * (q - 1) / 2 + l].value();
}

double ApClassSums::theta_odd(std::uint64_t q, std::uint64_t l) const {
    if (q == 0 || q > q_max_ || l >= q)
        throw ArgumentError("class index out of range");
    return theta_[q * (q - 1) / 2 + l].value();
}

void ApClassSums::add(std::uint64_t n, double log_p, bool is_prime) {
    for (std::uint64_t q = 1; q <= q_max_; ++q) {
        std::uint64_t idx = q * (q - 1) / 2 + n % q;
        psi_[idx].add(log_p);
        if (is_prime && n > 2)
            theta_[idx].add(log_p);
    }
}

void ap_checkpoint_scan(const std::vector<double>& checkpoints, std::uint64_t q_max,
                        const std::function<void(double, const ApClassSums&)>& visit) {
    if (checkpoints.empty())
        throw ArgumentError("need at least one checkpoint");
    for (std::size_t i = 1; i < checkpoints.size(); ++i)
        if (!(checkpoints[i] > checkpoints[i - 1]))
            throw ArgumentError("checkpoints must be strictly ascending");

    ApClassSums sums(q_max);
    std::size_t next = 0;
    for_each_lambda(checkpoints.back(), [&](std::uint64_t n, double lp, bool isp) {
        while (next < checkpoints.size() && (double)n > checkpoints[next]) {
            visit(checkpoints[next], sums);
            ++next;
        }
        sums.add(n, lp, isp);
    });
    for (; next < checkpoints.size(); ++next)
        visit(checkpoints[next], sums);
}

} // namespace h8
