#pragma once

#include "raux/gfunc.hpp"

namespace raux {

// Saddle quantities for the right-plane expansion.
struct SaddleFrame {
    cplx s;
    cplx xi;        // sqrt(s / 2 pi i), -3pi/4 < arg xi < pi/4
    long long ell;  // floor(xi_1 - xi_2)
    cplx q;         // -2 (ell + 1/2 - xi)
    cplx tau;       // -1 / (4 sqrt(pi) xi)
    StripPoint strip;
};

// Quantities for the left-plane expansion, built from 1 - s.
struct LeftFrame {
    cplx s;
    cplx eta;       // sqrt((s - 1) / 2 pi i), -pi/4 < arg eta < 3pi/4
    long long m;    // floor(eta_1 + eta_2)
    cplx p;         // -2 (m + 1/2 - eta)
};

SaddleFrame saddle_frame(cplx s);
LeftFrame left_frame(cplx s);

// log(xi^(-s) e^(pi i xi^2)) in extended precision, principal log of xi.
cplxl log_saddle_prefactor(const SaddleFrame& f);
// log(eta^(s-1) e^(-pi i eta^2)).
cplxl log_left_prefactor(const LeftFrame& f);

} // namespace raux
