#include "h8/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "h8/arith.hpp"
#include "h8/errors.hpp"

namespace h8 {

namespace {

constexpr unsigned long kMaxModulus = 10000;

// one cyclic factor of (Z/qZ)*: a generator (lifted mod q) and its order
struct Slot {
    std::uint64_t gen;
    std::uint64_t order;
    std::uint64_t prime;   // underlying prime, 2 for both 2-power slots
    int exponent;          // e of the p^e component
    bool is_minus_one = false; // marks the order-2 slot of 2^e, e >= 3
};

std::uint64_t smallest_primitive_root(std::uint64_t p) {
    if (p == 2)
        return 1;
    auto factors = factorize(p - 1);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (auto [r, e] : factors) {
            if (pow_mod(g, (p - 1) / r, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok)
            return g;
    }
    throw ArgumentError("no primitive root found; modulus not prime?");
}

// snap components landing on the axes so quadratic characters come out as
// exact integers and chi(-1) is exactly +-1
cplx snapped_root(std::uint64_t j, std::uint64_t m) {
    double ang = two_pi * (double)j / (double)m;
    auto snap = [](double x) {
        if (std::abs(x) < 3e-16)
            return 0.0;
        if (std::abs(x - 1.0) < 3e-16)
            return 1.0;
        if (std::abs(x + 1.0) < 3e-16)
            return -1.0;
        return x;
    };
    return {snap(std::cos(ang)), snap(std::sin(ang))};
}

class CharacterGroup {
public:
    explicit CharacterGroup(unsigned long q) : q_(q) {
        if (q < 2)
            throw ArgumentError("character modulus must be >= 2");
        if (q > kMaxModulus)
            throw RangeError("character modulus above 10000 is unsupported");

        auto factors = factorize(q);
        for (auto [p, e] : factors) {
            std::uint64_t pe = 1;
            for (int i = 0; i < e; ++i)
                pe *= p;
            std::uint64_t rest = q_ / pe;
            auto crt = [&](std::uint64_t x) {
                // value congruent to x mod pe and 1 mod rest
                if (rest == 1)
                    return x % q_;
                std::uint64_t inv = inv_mod(rest % pe, pe);
                std::uint64_t g = (x + pe - 1) % pe * inv % pe; // (x - 1) / rest mod pe
                return (1 + g * rest) % q_;
            };
            if (p == 2) {
                if (e == 2)
                    slots_.push_back({crt(3), 2, 2, e, false});
                else if (e >= 3) {
                    slots_.push_back({crt(pe - 1), 2, 2, e, true});
                    slots_.push_back({crt(5), std::uint64_t(1) << (e - 2), 2, e, false});
                }
                // e == 1 contributes nothing
            } else {
                std::uint64_t g = smallest_primitive_root(p);
                if (e >= 2 && pow_mod(g, p - 1, p * p) == 1)
                    g += p;
                std::uint64_t order = pe / p * (p - 1);
                slots_.push_back({crt(g), order, p, e, false});
            }
        }

        phi_ = 1;
        for (const auto& s : slots_)
            phi_ *= s.order;

        // discrete-log rank of every coprime residue, odometer over the slots
        // with the first slot most significant
        rank_.assign(q_, (std::uint64_t)-1);
        std::vector<std::uint64_t> digits(slots_.size(), 0);
        for (std::uint64_t r = 0; r < phi_; ++r) {
            std::uint64_t n = 1;
            for (std::size_t i = 0; i < slots_.size(); ++i)
                n = n * pow_mod(slots_[i].gen, digits[i], q_) % q_;
            rank_[n] = r;
            for (std::size_t i = slots_.size(); i-- > 0;) {
                if (++digits[i] < slots_[i].order)
                    break;
                digits[i] = 0;
            }
        }

        roots_.resize(phi_);
        for (std::uint64_t j = 0; j < phi_; ++j)
            roots_[j] = snapped_root(j, phi_);
    }

    unsigned long modulus() const { return q_; }
    std::uint64_t size() const { return phi_; }

    std::uint64_t order_at(std::size_t i) const { return slots_[i].order; }

    std::vector<std::uint64_t> decode(std::uint64_t index) const {
        std::vector<std::uint64_t> digits(slots_.size());
        for (std::size_t i = slots_.size(); i-- > 0;) {
            digits[i] = index % slots_[i].order;
            index /= slots_[i].order;
        }
        return digits;
    }

    std::vector<std::uint64_t> parse_label(const std::string& label) const {
        std::vector<std::uint64_t> digits;
        std::size_t pos = 0;
        while (pos <= label.size()) {
            std::size_t dot = label.find('.', pos);
            std::string part = label.substr(pos, dot == std::string::npos ? dot : dot - pos);
            if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
                throw ArgumentError("bad character label '" + label + "' for q = " +
                                    std::to_string(q_));
            digits.push_back(std::stoull(part));
            if (dot == std::string::npos)
                break;
            pos = dot + 1;
        }
        if (slots_.empty()) {
            if (digits.size() != 1 || digits[0] != 0)
                throw ArgumentError("bad character label '" + label + "' for q = " +
                                    std::to_string(q_));
            return {};
        }
        if (digits.size() != slots_.size())
            throw ArgumentError("character label '" + label + "' has wrong arity for q = " +
                                std::to_string(q_));
        for (std::size_t i = 0; i < digits.size(); ++i)
            if (digits[i] >= slots_[i].order)
                throw ArgumentError("character label '" + label + "' digit out of range");
        return digits;
    }

    std::string format_label(const std::vector<std::uint64_t>& digits) const {
        if (digits.empty())
            return "0";
        std::string out;
        for (std::size_t i = 0; i < digits.size(); ++i) {
            if (i)
                out += '.';
            out += std::to_string(digits[i]);
        }
        return out;
    }

    DirichletCharacter build(const std::vector<std::uint64_t>& digits) const {
        DirichletCharacter chi;
        chi.modulus = q_;
        chi.label = format_label(digits);
        chi.values.assign(q_, cplx(0.0, 0.0));

        // weight of slot i in the root index: t_i scaled to the common order
        std::vector<std::uint64_t> weight(slots_.size());
        for (std::size_t i = 0; i < slots_.size(); ++i)
            weight[i] = digits[i] * (phi_ / slots_[i].order) % phi_;

        for (std::uint64_t n = 0; n < q_; ++n) {
            if (rank_[n] == (std::uint64_t)-1)
                continue;
            auto k = decode(rank_[n]);
            std::uint64_t idx = 0;
            for (std::size_t i = 0; i < slots_.size(); ++i)
                idx = (idx + k[i] * weight[i]) % phi_;
            chi.values[n] = roots_[idx];
        }

        chi.conductor = conductor_of(digits);
        chi.is_primitive = chi.conductor == q_;
        chi.parity_delta = chi.values[q_ - 1].real() > 0.0 ? 0 : 1;
        return chi;
    }

    std::uint64_t conductor_of(const std::vector<std::uint64_t>& digits) const {
        std::uint64_t cond = 1;
        std::uint64_t minus_one_digit = 0;
        for (std::size_t i = 0; i < slots_.size(); ++i) {
            const Slot& s = slots_[i];
            std::uint64_t t = digits[i];
            if (s.prime == 2) {
                if (s.is_minus_one) {
                    minus_one_digit = t;
                    continue; // folded into the 5-slot below, or handled after
                }
                if (s.exponent == 2) {
                    cond *= t ? 4 : 1;
                } else {
                    // 2^e with e >= 3: this is the 5-slot
                    if (t) {
                        std::uint64_t ord = s.order / std::gcd(t, s.order);
                        cond *= 4 * ord; // 2^(v2(ord) + 2)
                    } else if (minus_one_digit) {
                        cond *= 4;
                    }
                }
            } else {
                if (t) {
                    std::uint64_t ord = s.order / std::gcd(t, s.order);
                    std::uint64_t pc = s.prime;
                    while (ord % s.prime == 0) {
                        pc *= s.prime;
                        ord /= s.prime;
                    }
                    cond *= pc;
                }
            }
        }
        return cond;
    }

private:
    unsigned long q_;
    std::vector<Slot> slots_;
    std::uint64_t phi_ = 1;
    std::vector<std::uint64_t> rank_;
    std::vector<cplx> roots_;
};

} // namespace

bool DirichletCharacter::is_quadratic() const {
    for (const auto& v : values)
        if (v.imag() != 0.0)
            return false;
    return true;
}

std::vector<DirichletCharacter> enumerate_characters(unsigned long q) {
    CharacterGroup group(q);
    std::vector<DirichletCharacter> out;
    out.reserve(group.size());
    for (std::uint64_t j = 0; j < group.size(); ++j)
        out.push_back(group.build(group.decode(j)));
    return out;
}

DirichletCharacter character_by_label(unsigned long q, const std::string& label) {
    CharacterGroup group(q);
    return group.build(group.parse_label(label));
}

DirichletCharacter principal_character(unsigned long q) {
    CharacterGroup group(q);
    return group.build(group.decode(0));
}

DirichletCharacter conjugate_character(const DirichletCharacter& chi) {
    CharacterGroup group(chi.modulus);
    auto digits = group.parse_label(chi.label);
    for (std::size_t i = 0; i < digits.size(); ++i)
        digits[i] = digits[i] ? group.order_at(i) - digits[i] : 0;
    return group.build(digits);
}

cplx gauss_sum(const DirichletCharacter& chi) {
    KahanSumC sum;
    unsigned long q = chi.modulus;
    for (unsigned long n = 1; n < q; ++n) {
        if (chi.values[n] == cplx(0.0, 0.0))
            continue;
        double ang = two_pi * (double)n / (double)q;
        sum.add(chi.values[n] * cplx(std::cos(ang), std::sin(ang)));
    }
    return sum.value();
}

void write_character_csv(std::ostream& os, const std::vector<DirichletCharacter>& chars) {
    os << "q,label,n,re,im\n";
    for (const auto& chi : chars)
        for (unsigned long n = 0; n < chi.modulus; ++n)
            os << chi.modulus << ',' << chi.label << ',' << n << ','
               << g12(chi.values[n].real()) << ',' << g12(chi.values[n].imag()) << '\n';
}

} // namespace h8
