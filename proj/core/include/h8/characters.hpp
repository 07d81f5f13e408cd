#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "h8/numeric.hpp"

namespace h8 {

// A Dirichlet character mod q, stored as its full value table. The label is
// the dotted exponent vector over the canonical generator decomposition of
// (Z/qZ)*: 2-power component first (generator -1, then 5, for 2^e with e >= 3;
// the single order-2 generator for e = 2), then odd prime powers ascending,
// each contributing the smallest primitive root that stays primitive for
// higher powers. "0" / "0.0" / ... is the principal character; plain "0" is
// also used when (Z/qZ)* is trivial.
struct DirichletCharacter {
    unsigned long modulus = 1;
    std::string label;
    std::vector<cplx> values; // index n in [0, q); 0 where gcd(n, q) > 1
    int parity_delta = 0;     // 0 for even (chi(-1) = 1), 1 for odd
    bool is_primitive = false;
    unsigned long conductor = 1;

    cplx operator()(unsigned long n) const { return values[n % modulus]; }
    bool is_principal() const { return conductor == 1; }
    // real-valued (all values in {-1, 0, 1})
    bool is_quadratic() const;
};

// All phi(q) characters mod q in canonical order (principal first, then
// ascending exponent vectors with the first generator most significant).
// 2 <= q <= 1e4; larger moduli raise a range error.
std::vector<DirichletCharacter> enumerate_characters(unsigned long q);

// Single-character constructors; label must match the canonical format.
DirichletCharacter character_by_label(unsigned long q, const std::string& label);
DirichletCharacter principal_character(unsigned long q);
DirichletCharacter conjugate_character(const DirichletCharacter& chi);

// tau(chi) = sum over n mod q of chi(n) e(n/q)
cplx gauss_sum(const DirichletCharacter& chi);

// CSV schema: q,label,n,re,im with one row per residue n in [0, q)
void write_character_csv(std::ostream& os, const std::vector<DirichletCharacter>& chars);

} // namespace h8
