#include "h8/lfunctions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "h8/cache.hpp"
#include "h8/errors.hpp"
#include "h8/prime_tables.hpp"
#include "h8/special_functions.hpp"
#include "em_series.hpp"
#include "zero_scan.hpp"

namespace h8 {

cplx l_eval(cplx s, const DirichletCharacter& chi) {
    if (!(std::abs(s.imag()) <= 1e3))
        throw RangeError("l_eval supports |Im s| <= 1e3 only");
    unsigned long q = chi.modulus;
    bool principal = chi.is_principal();
    if (principal && std::abs(s - cplx(1.0)) <= 1e-12)
        throw PoleError("L(s, principal chi) has a pole at s = 1");

    // For non-principal chi, subtract the Hurwitz pole term from every class;
    // the subtractions sum to zero (sum of chi over classes vanishes) and the
    // evaluation sails through s = 1.
    KahanSumC acc;
    for (unsigned long a = 1; a <= q; ++a) {
        cplx v = chi.values[a % q];
        if (v == cplx(0.0, 0.0))
            continue;
        acc.add(v * detail::em_zeta(s, (double)a / (double)q, !principal));
    }
    return std::exp(-s * std::log((double)q)) * acc.value();
}

cplx completed_l(cplx s, const DirichletCharacter& chi) {
    double d = (double)chi.parity_delta;
    double log_q_pi = std::log((double)chi.modulus) - log_pi;
    return std::exp((s + d) / 2.0 * log_q_pi + log_gamma((s + d) / 2.0)) * l_eval(s, chi);
}

cplx root_number(const DirichletCharacter& chi) {
    cplx tau = gauss_sum(chi);
    cplx idelta = chi.parity_delta ? cplx(0.0, 1.0) : cplx(1.0, 0.0);
    return tau / (idelta * std::sqrt((double)chi.modulus));
}

double functional_eq_residual_l(cplx s, const DirichletCharacter& chi) {
    if (!chi.is_primitive)
        throw ArgumentError("functional equation requires a primitive character");
    DirichletCharacter bar = conjugate_character(chi);
    cplx idelta = chi.parity_delta ? cplx(0.0, 1.0) : cplx(1.0, 0.0);
    cplx factor = idelta * std::sqrt((double)chi.modulus) / gauss_sum(bar);
    cplx lhs = completed_l(s, chi);
    cplx rhs = factor * completed_l(1.0 - s, bar);
    return std::abs(lhs - rhs) / (1.0 + std::abs(lhs));
}

cplx l_log_deriv(cplx s, const DirichletCharacter& chi) {
    auto diff = [&](double h) {
        cplx num = l_eval(s + h, chi);
        cplx den = l_eval(s - h, chi);
        if (std::abs(num) < 1e-12 || std::abs(den) < 1e-12)
            throw NearZeroError("l_log_deriv: too close to a zero of L");
        return std::log(num / den) / (2.0 * h);
    };
    const double h = 1e-6;
    cplx d1 = diff(h);
    cplx d2 = diff(h / 2.0);
    return (4.0 * d2 - d1) / 3.0;
}

Lemma4Residual lemma4_residual_detail(cplx s, const DirichletCharacter& chi) {
    if (!chi.is_primitive)
        throw ArgumentError("log-derivative reflection requires a primitive character");
    if (std::abs(l_eval(s, chi)) < 1e-10)
        throw NearZeroError("lemma4_residual: L(s, chi) too close to zero");
    DirichletCharacter bar = conjugate_character(chi);

    double d = (double)chi.parity_delta;
    cplx base = std::log((double)chi.modulus) - log_pi +
                0.5 * (digamma((s + d) / 2.0) + digamma((1.0 - s + d) / 2.0));
    cplx at_s = l_log_deriv(s, chi);

    Lemma4Residual out;
    out.conjugate_oriented = std::abs(at_s + l_log_deriv(1.0 - s, bar) + base);
    out.same_character = std::abs(at_s + l_log_deriv(1.0 - s, chi) + base);
    return out;
}

double lemma4_residual(cplx s, const DirichletCharacter& chi) {
    return lemma4_residual_detail(s, chi).conjugate_oriented;
}

std::string zero_source_tag(const DirichletCharacter& chi) {
    return "L:" + std::to_string(chi.modulus) + ":" + chi.label;
}

std::vector<ZeroRecord> find_l_zeros(const DirichletCharacter& chi, double t_min, double t_max,
                                     double tol, unsigned workers) {
    if (!chi.is_primitive)
        throw ArgumentError("zero scan requires a primitive character");
    if (!chi.is_quadratic())
        throw ArgumentError("complex-character-unsupported: zero scan needs a real-valued "
                            "character");
    if (chi.modulus > 20)
        throw RangeError("zero scan supports modulus <= 20 only");
    if (t_max > 200.0)
        throw RangeError("zero scan supports heights <= 200 only");

    cplx eps = root_number(chi);
    if (std::abs(eps - 1.0) > 1e-8)
        throw ArgumentError("root number is not 1; character table is inconsistent");

    // with root number 1 the completed function is real on the critical line
    auto zfn = [&chi](double t) { return completed_l(cplx(0.5, t), chi).real(); };
    auto residual = [&chi](double t) { return std::abs(l_eval(cplx(0.5, t), chi)); };
    return detail::scan_zeros(zfn, residual, t_min, t_max, tol, zero_source_tag(chi), workers);
}

ExplicitFormulaResidual explicit_formula_residual(double x, const DirichletCharacter& chi,
                                                  double T, const ZeroTable& zeros) {
    if (!chi.is_primitive || chi.is_principal())
        throw ArgumentError("explicit formula requires a primitive non-principal character");
    if (!(x >= 1e2) || !(x <= 1e6))
        throw RangeError("explicit formula supported for 1e2 <= x <= 1e6");
    if (zeros.source != zero_source_tag(chi))
        throw ArgumentError("zero table " + zeros.source + " does not belong to " +
                            zero_source_tag(chi));
    if (zeros.t_scanned + 1e-9 < T)
        throw CacheError("zero table " + zeros.source + " only reaches height " +
                         g12(zeros.t_scanned) + ", need " + g12(T));

    double sx = std::sqrt(x);
    double lx = std::log(x);
    cplx zero_sum = 0.0;
    KahanSum bound;
    for (const auto& rec : zeros.records) {
        double g = rec.gamma_height;
        if (g > T)
            break;
        cplx rho(0.5, g);
        // x^rho / rho + conjugate = 2 Re(x^rho / rho)
        cplx term = sx * cplx(std::cos(g * lx), std::sin(g * lx)) / rho;
        zero_sum += 2.0 * term.real();
        bound.add(2.0 * sx / (1.0 + g));
    }

    ExplicitFormulaResidual out;
    out.bound_form = bound.value();
    out.truncation_residual = std::abs(psi_chi(x, chi) + zero_sum);
    return out;
}

ExplicitFormulaResidual explicit_formula_residual(double x, const DirichletCharacter& chi,
                                                  double T) {
    auto table = try_load_zero_table(zero_source_tag(chi), T);
    if (!table)
        throw CacheError("no cached zero table for " + zero_source_tag(chi) +
                         " up to height " + g12(T) + "; warm the cache first");
    return explicit_formula_residual(x, chi, T, *table);
}

} // namespace h8
