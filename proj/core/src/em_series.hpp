#pragma once

// Internal: the Euler-Maclaurin engine behind zeta_eval / hurwitz_zeta, with a
// variant that returns zeta(s, a) - 1/(s-1). The subtracted form stays finite
// at s = 1 and lets Dirichlet series for non-principal characters be summed
// straight through the would-be pole (the subtracted terms cancel there).

#include "h8/numeric.hpp"

namespace h8::detail {

cplx em_zeta(cplx s, double a, bool subtract_pole);

} // namespace h8::detail
