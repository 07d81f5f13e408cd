#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "h8/numeric.hpp"

namespace h8 {

// One located non-trivial zero on the critical line.
struct ZeroRecord {
    double gamma_height = 0.0;   // imaginary part, > 0
    double residual_abs = 0.0;   // |zeta| or |L| at the refined height
    std::string source;          // "zeta" or "L:q:label"
    double refinement_width = 0.0;
};

// A scan result that remembers how far it looked, so consumers can tell
// "no zeros above 48" apart from "never scanned past 48".
struct ZeroTable {
    std::string source;
    double t_scanned = 0.0;
    std::vector<ZeroRecord> records;
};

// zeta(s) by Euler-Maclaurin continuation: N = max(50, 2|Im s|) leading terms
// plus 12 Bernoulli corrections. Supported for Re s > -2, |Im s| <= 1e4.
cplx zeta_eval(cplx s);

// Hurwitz zeta(s, a) for 0 < a <= 1, same machinery and region.
cplx hurwitz_zeta(cplx s, double a);

// completed function xi(s) = 1/2 s(s-1) pi^(-s/2) Gamma(s/2) zeta(s), computed
// as pi^(-s/2) Gamma(s/2+1) (s-1) zeta(s); (s-1)zeta(s) switches to its Taylor
// series near s = 1 so the pole never surfaces.
cplx xi_eval(cplx s);

// max of the normalized residuals of the two functional equation forms:
// zeta(s) = pi^(s-1/2) Gamma((1-s)/2)/Gamma(s/2) zeta(1-s) and xi(s) = xi(1-s)
double functional_eq_residual_zeta(cplx s);

// phase of the completing factor on the critical line; hardy_z(t) is the real
// function whose sign changes mark zeta zeros at height t without the
// exponential decay that makes xi underflow
double hardy_theta(double t);
double hardy_z(double t);

// zeta'/zeta by central difference of log zeta (h = 1e-6) plus one Richardson step
cplx zeta_log_deriv(cplx s);

// Sign-scan of hardy_z on a 0.05 grid over [t_min, t_max], each bracket bisected
// below 1e-9 width. Records sorted ascending. Sub-intervals are scanned
// concurrently and spliced in order, so output does not depend on worker count.
std::vector<ZeroRecord> find_zeta_zeros(double t_min, double t_max, double tol = 1e-8,
                                        unsigned workers = 0);

// Argument-principle count of zeros with 0 < Im s < T inside the rectangle
// [-0.1, 1.1] x [0, T], by adaptive phase tracking of log xi around the boundary.
int count_zeros_rectangle(double T);

// Absolute residual of the gamma-factor identity connecting zeta'/zeta at s and
// 1-s: zeta'/zeta(s) + zeta'/zeta(1-s) - log pi + (digamma(s/2) + digamma((1-s)/2))/2.
// Evaluates the conjugate-reflected form as well and returns the larger.
double lemma3_residual(cplx s);

// CSV schema: source,gamma_height,residual_abs,refinement_width (12 significant
// digits, ascending height)
void write_zero_csv(std::ostream& os, const std::vector<ZeroRecord>& records);

} // namespace h8
