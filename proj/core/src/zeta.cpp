#include "h8/zeta.hpp"

#include <algorithm>
#include <cmath>

#include "h8/errors.hpp"
#include "h8/special_functions.hpp"
#include "em_series.hpp"
#include "zero_scan.hpp"

namespace h8 {

namespace {

// B_{2k} / (2k)! for the Euler-Maclaurin correction terms, k = 1..12
constexpr double kEmCoef[] = {
    0.08333333333333333,
    -0.001388888888888889,
    3.306878306878307e-05,
    -8.267195767195768e-07,
    2.08767569878681e-08,
    -5.284190138687493e-10,
    1.3382536530684679e-11,
    -3.3896802963225827e-13,
    8.586062056277845e-15,
    -2.174868698558062e-16,
    5.5090028283602295e-18,
    -1.3954464685812522e-19,
};

void check_region(cplx s) {
    if (!(s.real() > -2.0))
        throw RangeError("zeta continuation supports Re s > -2 only");
    if (!(std::abs(s.imag()) <= 1e4))
        throw RangeError("zeta continuation supports |Im s| <= 1e4 only");
}

// (e^w - 1) / w without cancellation near w = 0
cplx expm1_over(cplx w) {
    if (std::abs(w) < 1e-4)
        return 1.0 + w * (0.5 + w * (1.0 / 6.0 + w * (1.0 / 24.0 + w / 120.0)));
    return (std::exp(w) - 1.0) / w;
}

} // namespace

// shared Euler-Maclaurin core for zeta (a = 1) and Hurwitz zeta
cplx detail::em_zeta(cplx s, double a, bool subtract_pole) {
    check_region(s);
    if (!subtract_pole && std::abs(s - cplx(1.0)) <= 1e-12)
        throw PoleError("zeta: pole at s = 1");

    long N = (long)std::max(50.0, std::ceil(2.0 * std::abs(s.imag())));
    KahanSumC acc;
    for (long n = 0; n < N; ++n)
        acc.add(std::exp(-s * std::log((double)n + a)));

    double T = (double)N + a;
    double logT = std::log(T);
    cplx Tms = std::exp(-s * logT); // T^(-s)
    cplx tail = subtract_pole
                    ? -logT * expm1_over((1.0 - s) * logT) // (T^(1-s) - 1)/(s-1)
                    : T * Tms / (s - 1.0);
    cplx res = acc.value() + tail + 0.5 * Tms;

    cplx rising = s;          // (s)_{2k-1}, starts at (s)_1
    double Tpow = 1.0 / T;    // T^(-(2k-1))
    double Ti2 = Tpow * Tpow;
    for (int k = 0; k < 12; ++k) {
        res += kEmCoef[k] * rising * Tms * Tpow;
        Tpow *= Ti2;
        rising *= (s + (double)(2 * k + 1)) * (s + (double)(2 * k + 2));
    }
    return res;
}

namespace {

// Stieltjes expansion of (s-1) zeta(s) about s = 1; used whenever the direct
// evaluation would sit inside the pole's noise
constexpr double kStieltjes0 = 0.5772156649015329;
constexpr double kStieltjes1 = -0.07281584548367672;
constexpr double kStieltjes2 = -0.009690363192872318;
constexpr double kStieltjes3 = 0.002053834420303346;

cplx zeta_times_s_minus_1(cplx s) {
    cplx u = s - 1.0;
    if (std::abs(u) < 1e-6) {
        return 1.0 + u * (kStieltjes0 +
                          u * (-kStieltjes1 +
                               u * (kStieltjes2 / 2.0 - u * kStieltjes3 / 6.0)));
    }
    return u * detail::em_zeta(s, 1.0, false);
}

} // namespace

cplx zeta_eval(cplx s) {
    return detail::em_zeta(s, 1.0, false);
}

cplx hurwitz_zeta(cplx s, double a) {
    if (!(a > 0.0) || a > 1.0)
        throw ArgumentError("hurwitz_zeta: need 0 < a <= 1");
    return detail::em_zeta(s, a, false);
}

cplx xi_eval(cplx s) {
    check_region(s);
    // s/2 * Gamma(s/2) folded into Gamma(s/2 + 1) so s = 0 needs no special case
    cplx w = zeta_times_s_minus_1(s);
    return std::exp(-s / 2.0 * log_pi + log_gamma(s / 2.0 + 1.0)) * w;
}

double functional_eq_residual_zeta(cplx s) {
    if (std::abs(s) <= 1e-12 || std::abs(s - cplx(1.0)) <= 1e-12)
        throw PoleError("functional equation residual undefined at s = 0, 1");

    cplx xs = xi_eval(s);
    cplx xr = xi_eval(1.0 - s);
    double r_sym = std::abs(xs - xr) / (1.0 + std::abs(xs));

    // asymmetric form zeta(s) = pi^(s-1/2) Gamma((1-s)/2)/Gamma(s/2) zeta(1-s),
    // with the prefactor assembled in log space
    cplx zs = zeta_eval(s);
    cplx rhs = std::exp((s - 0.5) * log_pi + log_gamma((1.0 - s) / 2.0) -
                        log_gamma(s / 2.0)) *
               zeta_eval(1.0 - s);
    double r_asym = std::abs(zs - rhs) / (1.0 + std::abs(zs));
    return std::max(r_sym, r_asym);
}

double hardy_theta(double t) {
    return log_gamma(cplx(0.25, 0.5 * t)).imag() - 0.5 * t * log_pi;
}

double hardy_z(double t) {
    double th = hardy_theta(t);
    cplx z = zeta_eval(cplx(0.5, t));
    return std::cos(th) * z.real() - std::sin(th) * z.imag();
}

cplx zeta_log_deriv(cplx s) {
    auto diff = [&](double h) {
        cplx num = zeta_eval(s + h);
        cplx den = zeta_eval(s - h);
        if (std::abs(den) < 1e-12 || std::abs(num) < 1e-12)
            throw NearZeroError("zeta_log_deriv: too close to a zero");
        return std::log(num / den) / (2.0 * h);
    };
    const double h = 1e-6;
    cplx d1 = diff(h);
    cplx d2 = diff(h / 2.0);
    return (4.0 * d2 - d1) / 3.0;
}

std::vector<ZeroRecord> find_zeta_zeros(double t_min, double t_max, double tol, unsigned workers) {
    if (t_max > 1e3)
        throw RangeError("find_zeta_zeros: supported up to height 1e3");
    return detail::scan_zeros([](double t) { return hardy_z(t); },
                              [](double t) { return std::abs(zeta_eval(cplx(0.5, t))); }, t_min,
                              t_max, tol, "zeta", workers);
}

namespace {

// Im log xi, assembled from smooth pieces; only the log of (s-1)zeta(s) takes a
// principal branch, and the adaptive walk below heals its 2pi jumps
double xi_phase(cplx s) {
    cplx w = zeta_times_s_minus_1(s);
    if (std::abs(w) < 1e-12)
        throw NearZeroError("zero-counting contour passes through a zero near s = " +
                            g12(s.real()) + (s.imag() < 0 ? "-" : "+") + g12(std::abs(s.imag())) +
                            "i");
    return (-s / 2.0 * log_pi + log_gamma(s / 2.0 + 1.0) + std::log(w)).imag();
}

double wrap_angle(double x) {
    return std::remainder(x, two_pi);
}

void walk_phase(cplx s0, double p0, cplx s1, double p1, int depth, double& total) {
    double d = wrap_angle(p1 - p0);
    if (std::abs(d) <= 0.8) {
        total += d;
        return;
    }
    if (depth >= 48)
        throw NearZeroError("zero-counting contour could not resolve the phase; "
                            "a zero sits on or next to the boundary");
    cplx sm = 0.5 * (s0 + s1);
    double pm = xi_phase(sm);
    walk_phase(s0, p0, sm, pm, depth + 1, total);
    walk_phase(sm, pm, s1, p1, depth + 1, total);
}

} // namespace

int count_zeros_rectangle(double T) {
    if (!(T > 0.0) || T > 1e3)
        throw RangeError("count_zeros_rectangle: need 0 < T <= 1e3");

    const cplx corners[4] = {{-0.1, 0.0}, {1.1, 0.0}, {1.1, T}, {-0.1, T}};
    double total = 0.0;
    for (int e = 0; e < 4; ++e) {
        cplx a = corners[e];
        cplx b = corners[(e + 1) % 4];
        // pre-split so no initial segment can hide a full phase wrap
        int pieces = (int)std::ceil(std::abs(b - a) / 0.25);
        cplx s0 = a;
        double p0 = xi_phase(s0);
        for (int k = 1; k <= pieces; ++k) {
            cplx s1 = a + (b - a) * ((double)k / pieces);
            double p1 = xi_phase(s1);
            walk_phase(s0, p0, s1, p1, 0, total);
            s0 = s1;
            p0 = p1;
        }
    }

    double winding = total / two_pi;
    long count = std::lround(winding);
    if (std::abs(winding - (double)count) > 0.25)
        throw NearZeroError("zero-counting contour did not close: winding " + g12(winding));
    return (int)count;
}

double lemma3_residual(cplx s) {
    auto one_sided = [](cplx z) {
        cplx zs = zeta_eval(z);
        cplx zr = zeta_eval(1.0 - z);
        if (std::abs(zs) < 1e-10 || std::abs(zr) < 1e-10)
            throw NearZeroError("lemma3_residual: too close to a zeta zero");
        cplx lhs = zeta_log_deriv(z) + zeta_log_deriv(1.0 - z);
        cplx rhs = log_pi - 0.5 * (digamma(z / 2.0) + digamma((1.0 - z) / 2.0));
        return std::abs(lhs - rhs);
    };
    return std::max(one_sided(s), one_sided(std::conj(s)));
}

void write_zero_csv(std::ostream& os, const std::vector<ZeroRecord>& records) {
    os << "source,gamma_height,residual_abs,refinement_width\n";
    for (const auto& r : records)
        os << r.source << ',' << g12(r.gamma_height) << ',' << g12(r.residual_abs) << ','
           << g12(r.refinement_width) << '\n';
}

} // namespace h8
