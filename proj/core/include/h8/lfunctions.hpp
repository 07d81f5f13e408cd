#pragma once

#include <string>
#include <vector>

#include "h8/characters.hpp"
#include "h8/numeric.hpp"
#include "h8/zeta.hpp"

namespace h8 {

// L(s, chi) continued by splitting the Dirichlet series into residue classes,
// each a shifted zeta sum: L(s, chi) = q^-s sum over a of chi(a) zeta(s, a/q).
// Region: Re s > -2, |Im s| <= 1e3. Principal characters keep the pole at
// s = 1; for every other character the evaluation is regular there.
cplx l_eval(cplx s, const DirichletCharacter& chi);

// (q/pi)^((s+d)/2) Gamma((s+d)/2) L(s, chi) with d the parity of chi
cplx completed_l(cplx s, const DirichletCharacter& chi);

// epsilon(chi) = tau(chi) / (i^d sqrt(q)); modulus 1 for primitive chi,
// exactly 1 for primitive quadratic chi
cplx root_number(const DirichletCharacter& chi);

// normalized residual of completed_l(s, chi) = root factor * completed_l(1-s,
// conj chi), the reflection the completed function satisfies for primitive chi
double functional_eq_residual_l(cplx s, const DirichletCharacter& chi);

// L'/L by the same central-difference-plus-Richardson rule as zeta_log_deriv
cplx l_log_deriv(cplx s, const DirichletCharacter& chi);

// Residual of the log-derivative reflection identity
//   L'/L(s,chi) + L'/L(1-s, conj chi) + log(q/pi)
//     + (digamma((s+d)/2) + digamma((1-s+d)/2))/2 = 0.
// The variant keeping chi in both slots is only an identity for real chi;
// lemma4_residual_detail reports both orientations, lemma4_residual returns
// the conjugate-oriented one.
struct Lemma4Residual {
    double conjugate_oriented = 0.0;
    double same_character = 0.0;
};
Lemma4Residual lemma4_residual_detail(cplx s, const DirichletCharacter& chi);
double lemma4_residual(cplx s, const DirichletCharacter& chi);

// "L:q:label", the source tag L-zero records carry
std::string zero_source_tag(const DirichletCharacter& chi);

// Sign-scan of the rotated completed function on the critical line. Only
// primitive quadratic characters are supported (their root number is 1, so
// completed_l is already real on the line); q <= 20, 0 <= t_min < t_max <= 200.
std::vector<ZeroRecord> find_l_zeros(const DirichletCharacter& chi, double t_min, double t_max,
                                     double tol = 1e-8, unsigned workers = 0);

// Truncated explicit-formula gap at x: how much psi(x, chi) differs from minus
// the zero sum over |gamma| <= T (zeros taken on the critical line), plus the
// scale sqrt(x) sum 2/(1+gamma) the bound side uses.
struct ExplicitFormulaResidual {
    double bound_form = 0.0;
    double truncation_residual = 0.0;
};
ExplicitFormulaResidual explicit_formula_residual(double x, const DirichletCharacter& chi,
                                                  double T, const ZeroTable& zeros);
// same, reading the zero table from the cache; raises a cache error when the
// table is missing or too short
ExplicitFormulaResidual explicit_formula_residual(double x, const DirichletCharacter& chi,
                                                  double T);

} // namespace h8
