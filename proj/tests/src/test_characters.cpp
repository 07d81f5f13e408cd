#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>
#include <vector>

#include "h8/arith.hpp"
#include "h8/characters.hpp"
#include "h8/errors.hpp"
#include "test_util.hpp"

using h8::cplx;
using h8test::near;

namespace {

// Smallest induced modulus, straight from the definition: f | q such that
// chi(n) = 1 whenever n = 1 (mod f) and gcd(n, q) = 1.
unsigned long brute_conductor(const h8::DirichletCharacter& chi) {
    unsigned long q = chi.modulus;
    for (unsigned long f = 1; f <= q; ++f) {
        if (q % f)
            continue;
        bool ok = true;
        for (unsigned long n = 1; n < q && ok; ++n) {
            if (std::gcd(n, q) != 1 || n % f != 1 % f)
                continue;
            if (std::abs(chi(n) - cplx{1.0, 0.0}) > 1e-9)
                ok = false;
        }
        if (ok)
            return f;
    }
    return q;
}

} // namespace

TEST_CASE("enumerate_characters yields phi(q) characters with unit values on units") {
    for (unsigned long q = 2; q <= 60; ++q) {
        auto chars = h8::enumerate_characters(q);
        CHECK(chars.size() == h8::totient(q));
        for (const auto& chi : chars) {
            for (unsigned long n = 0; n < q; ++n) {
                if (std::gcd(n, q) == 1) {
                    CHECK(near(std::abs(chi(n)), 1.0, 1e-12));
                } else {
                    CHECK(chi(n) == cplx{0.0, 0.0});
                }
            }
        }
    }
    CHECK_THROWS_AS(h8::enumerate_characters(10001), h8::RangeError);
    CHECK_THROWS_AS(h8::enumerate_characters(1), h8::ArgumentError);
}

TEST_CASE("characters are completely multiplicative") {
    for (unsigned long q : {7, 12, 16, 45, 128, 243, 500}) {
        auto chars = h8::enumerate_characters(q);
        h8::SplitMix64 rng(q);
        for (const auto& chi : chars) {
            for (int k = 0; k < 20; ++k) {
                unsigned long m = rng.next() % q, n = rng.next() % q;
                CHECK(near(chi(m * n % q), chi(m) * chi(n), 1e-13));
            }
        }
    }
}

TEST_CASE("conductor and primitivity match the brute-force definition up to q = 60") {
    for (unsigned long q = 2; q <= 60; ++q) {
        for (const auto& chi : h8::enumerate_characters(q)) {
            unsigned long f = brute_conductor(chi);
            CHECK(chi.conductor == f);
            CHECK(chi.is_primitive == (f == q));
        }
    }
}

TEST_CASE("the principal character is flagged by conductor one") {
    for (unsigned long q : {2, 4, 9, 24}) {
        auto chi = h8::principal_character(q);
        CHECK(chi.is_principal());
        CHECK(chi.conductor == 1);
        for (unsigned long n = 0; n < q; ++n)
            if (std::gcd(n, q) == 1)
                CHECK(chi(n) == cplx{1.0, 0.0});
    }
}

TEST_CASE("parity reflects the value at -1") {
    for (unsigned long q = 3; q <= 40; ++q) {
        for (const auto& chi : h8::enumerate_characters(q)) {
            cplx at_minus1 = chi(q - 1);
            CHECK(near(at_minus1.imag(), 0.0, 1e-12));
            double expected = chi.parity_delta == 0 ? 1.0 : -1.0;
            CHECK(near(at_minus1.real(), expected, 1e-12));
        }
    }
    // the odd character mod 4
    auto chars4 = h8::enumerate_characters(4);
    REQUIRE(chars4.size() == 2);
    CHECK(near(chars4[1](3), cplx{-1.0, 0.0}, 1e-14));
    CHECK(chars4[1].parity_delta == 1);
}

TEST_CASE("conductors mod 8 are 1, 4, 8, 8") {
    auto chars = h8::enumerate_characters(8);
    REQUIRE(chars.size() == 4);
    std::vector<unsigned long> conductors;
    for (const auto& chi : chars)
        conductors.push_back(chi.conductor);
    std::sort(conductors.begin(), conductors.end());
    CHECK(conductors == std::vector<unsigned long>{1, 4, 8, 8});
}

TEST_CASE("orthogonality in both directions") {
    for (unsigned long q : {5, 8, 12, 36}) {
        auto chars = h8::enumerate_characters(q);
        for (const auto& chi : chars) {
            h8::KahanSumC row;
            for (unsigned long n = 0; n < q; ++n)
                row.add(chi(n));
            if (chi.is_principal()) {
                CHECK(near(row.value(), cplx{double(h8::totient(q)), 0.0}, 1e-10));
            } else {
                CHECK(near(row.value(), cplx{0.0, 0.0}, 1e-10));
            }
        }
        for (unsigned long n = 2; n < q; ++n) {
            if (std::gcd(n, q) != 1)
                continue;
            h8::KahanSumC col;
            for (const auto& chi : chars)
                col.add(chi(n));
            CHECK(near(col.value(), n % q == 1 ? cplx{double(chars.size()), 0.0}
                                               : cplx{0.0, 0.0},
                       1e-10));
        }
    }
}

TEST_CASE("labels round-trip through character_by_label") {
    for (unsigned long q : {2, 3, 8, 15, 16, 45}) {
        for (const auto& chi : h8::enumerate_characters(q)) {
            auto back = h8::character_by_label(q, chi.label);
            CHECK(back.label == chi.label);
            for (unsigned long n = 0; n < q; ++n)
                CHECK(near(back(n), chi(n), 0.0));
        }
    }
    CHECK_THROWS_AS(h8::character_by_label(5, "7"), h8::ArgumentError);
    CHECK_THROWS_AS(h8::character_by_label(8, "1"), h8::ArgumentError);
}

TEST_CASE("conjugation is an involution matching pointwise conjugates") {
    for (const auto& chi : h8::enumerate_characters(5)) {
        auto bar = h8::conjugate_character(chi);
        CHECK(bar.modulus == chi.modulus);
        CHECK(bar.conductor == chi.conductor);
        for (unsigned long n = 0; n < 5; ++n)
            CHECK(bar(n) == std::conj(chi(n)));
        auto twice = h8::conjugate_character(bar);
        CHECK(twice.label == chi.label);
    }
}

TEST_CASE("is_quadratic picks out exactly the real characters") {
    auto chars5 = h8::enumerate_characters(5);
    int quadratic = 0;
    for (const auto& chi : chars5)
        quadratic += chi.is_quadratic() && !chi.is_principal();
    CHECK(quadratic == 1);
}

TEST_CASE("gauss sums at the catalogued small moduli") {
    auto chi3 = h8::enumerate_characters(3)[1];
    CHECK(near(h8::gauss_sum(chi3), cplx{0.0, std::sqrt(3.0)}, 1e-12));
    auto chi4 = h8::enumerate_characters(4)[1];
    CHECK(near(h8::gauss_sum(chi4), cplx{0.0, 2.0}, 1e-12));
    // principal character mod a prime: the full exponential sum collapses to -1
    CHECK(near(h8::gauss_sum(h8::principal_character(7)), cplx{-1.0, 0.0}, 1e-12));
}

TEST_CASE("gauss sums of primitive characters have modulus sqrt(q)") {
    for (unsigned long q : {5, 7, 9, 16, 25, 101, 256, 500}) {
        for (const auto& chi : h8::enumerate_characters(q)) {
            if (!chi.is_primitive)
                continue;
            CHECK(near(std::norm(h8::gauss_sum(chi)), double(q), 1e-8 * q));
        }
    }
}

TEST_CASE("character CSV lists one row per residue") {
    std::ostringstream os;
    h8::write_character_csv(os, {h8::enumerate_characters(3)[0]});
    CHECK(os.str() == "q,label,n,re,im\n"
                      "3,0,0,0,0\n"
                      "3,0,1,1,0\n"
                      "3,0,2,1,0\n");
}
