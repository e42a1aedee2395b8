#pragma once

#include "raux/scaled.hpp"

#include <vector>

namespace raux {

// Bernoulli numbers B_0..B_n as doubles, computed once from exact rationals.
const std::vector<long double>& bernoulli_table(int n);

// Principal branch of log Gamma, continuous off the negative real axis.
cplx gamma_log(cplx z);
cplxl gamma_log_l(cplxl z);

// pi^(s-1/2) Gamma((1-s)/2) / Gamma(s/2). Exact zero at s = 0, -2, -4, ...
ScaledComplex chi(cplx s);

// Riemann-Siegel theta function.
double theta_rs(double t);

// Riemann zeta function by Euler-Maclaurin summation.
cplx zeta_em(cplx s);

} // namespace raux
