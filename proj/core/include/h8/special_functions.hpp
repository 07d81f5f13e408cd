#pragma once

#include "h8/numeric.hpp"

namespace h8 {

// A point s = 1/2 + alpha + i*gamma_height in the critical strip, together with
// the character parity delta that shifts the gamma-factor arguments. alpha
// measures the deviation from the critical line.
struct CriticalStripPoint {
    double alpha = 0.0;        // in [0, 1/2]
    double gamma_height = 0.0; // imaginary part
    int delta = 0;             // parity, 0 or 1

    cplx s() const { return {0.5 + alpha, gamma_height}; }
};

// log Gamma(z), principal analytic branch. Continuous (the standard branch) for
// Re z > 0; for Re z <= 0 the value is correct modulo 2*pi*i in the imaginary
// part, which is enough for anything that exponentiates it.
cplx log_gamma(cplx z);

cplx gamma_fn(cplx z);

// Gamma'/Gamma by the truncated difference series with an integral-comparison
// tail, certified to 1e-12 absolute over |z| <= 1e4.
cplx digamma(cplx z);

// sum_{n>=0} (1/(n+z2) - 1/(n+z1)) = digamma(z1) - digamma(z2), evaluated as a
// single series so nearby arguments cancel term by term instead of at the end.
cplx digamma_diff(cplx z1, cplx z2);

// digamma((s+d)/2) + digamma((1-s+d)/2) - digamma((sbar+d)/2) - digamma((1-sbar+d)/2)
// with d = p.delta. Anti-conjugate combination: purely imaginary, and exactly 0
// when alpha = 0 or gamma_height = 0 (the four arguments then coincide pairwise).
cplx gamma_combination(const CriticalStripPoint& p);

// sum_{n>=0} g*m / ((m^2 - g^2/4 - a^2/4)^2 + g^2 m^2) with m = n + delta/2 + 1/4,
// g = gamma_height, a = alpha. Every term is positive for g > 0; returns 0 at g = 0.
// Truncated with an integral tail plus Euler-Maclaurin corrections, <= 1e-12.
double positivity_series_sum(const CriticalStripPoint& p);

// Diagnostic for the reduction step that rewrites the digamma-difference bracket
// as alpha times the positivity series. The bracket is evaluated directly by
// digamma_diff; the claimed right side is alpha * positivity_series_sum. This
// reports, it does not assert: the step itself is what is under measurement.
struct ReductionDiagnostic {
    double bracket_sum_im; // Im of the directly expanded difference bracket
    double printed_form;   // alpha * positivity_series_sum(p)
    double residual;       // |Im(gamma_combination(p)) - printed_form|
};

ReductionDiagnostic reduction_residual(const CriticalStripPoint& p);

} // namespace h8
