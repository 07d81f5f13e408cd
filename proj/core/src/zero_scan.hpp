#pragma once

// Internal grid-scan machinery shared by the zeta and L zero finders. Not
// installed; include from core sources only.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "h8/errors.hpp"
#include "h8/numeric.hpp"
#include "h8/parallel.hpp"
#include "h8/zeta.hpp"

namespace h8::detail {

constexpr double kScanStep = 0.05;

// refine one sign-change bracket of f and emit a record; residual_of reports
// |zeta| or |L| at the candidate height
template <class F, class R>
ZeroRecord refine_bracket(F&& f, R&& residual_of, double a, double b, double fa, double fb,
                          double tol, const std::string& source) {
    double target = tol < 1e-9 ? 1e-12 : 1e-10;
    while (b - a > target) {
        double m = 0.5 * (a + b);
        double fm = f(m);
        if (fm == 0.0) {
            a = b = m;
            break;
        }
        if ((fa < 0.0) != (fm < 0.0)) {
            b = m;
            fb = fm;
        } else {
            a = m;
            fa = fm;
        }
    }
    ZeroRecord rec;
    rec.gamma_height = 0.5 * (a + b);
    rec.refinement_width = b - a;
    rec.source = source;
    rec.residual_abs = residual_of(rec.gamma_height);
    if (rec.residual_abs > tol)
        throw NearZeroError("zero refinement did not reach the requested tolerance at t = " +
                            g12(rec.gamma_height));
    return rec;
}

// Scan f for sign changes over [t_min, t_max] on a fixed grid. Work is split
// into 200-cell chunks whose boundaries depend only on t_min, so the result is
// identical for any worker count.
template <class F, class R>
std::vector<ZeroRecord> scan_zeros(F&& f, R&& residual_of, double t_min, double t_max, double tol,
                                   const std::string& source, unsigned workers) {
    if (!(t_min >= 0.0) || !(t_max >= t_min))
        throw ArgumentError("zero scan: need 0 <= t_min <= t_max");
    if (tol < 1e-12)
        throw ArgumentError("zero scan: tol must be >= 1e-12");
    if (t_max == t_min)
        return {};

    std::size_t cells = (std::size_t)std::ceil((t_max - t_min) / kScanStep - 1e-12);
    auto grid_at = [&](std::size_t i) { return std::min(t_min + kScanStep * (double)i, t_max); };

    const std::size_t cells_per_chunk = 200;
    std::size_t chunks = (cells + cells_per_chunk - 1) / cells_per_chunk;
    std::vector<std::vector<ZeroRecord>> found(chunks);

    parallel_chunks(chunks, workers, [&](std::size_t c) {
        std::size_t c0 = c * cells_per_chunk;
        std::size_t c1 = std::min(cells, c0 + cells_per_chunk);
        double ta = grid_at(c0);
        double fa = f(ta);
        for (std::size_t i = c0; i < c1; ++i) {
            double tb = grid_at(i + 1);
            double fb = f(tb);
            if (fa == 0.0) {
                // exact grid hit; owned by the cell whose left endpoint it is
                found[c].push_back(ZeroRecord{ta, residual_of(ta), source, 0.0});
            } else if (fb != 0.0 && (fa < 0.0) != (fb < 0.0)) {
                found[c].push_back(refine_bracket(f, residual_of, ta, tb, fa, fb, tol, source));
            }
            ta = tb;
            fa = fb;
        }
    });

    std::vector<ZeroRecord> out;
    for (auto& part : found)
        out.insert(out.end(), part.begin(), part.end());
    return out;
}

} // namespace h8::detail
