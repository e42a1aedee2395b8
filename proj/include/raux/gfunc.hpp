#pragma once

#include "raux/jets.hpp"
#include "raux/parallel.hpp"

namespace raux {

// q = (mu + i nu) e^(i pi/4).
struct StripPoint {
    cplx q;
    double mu;
    double nu;
};

StripPoint strip_coords(cplx q);
cplx from_strip(double mu, double nu);

// G(q) = (e^(pi i q^2/2) - sqrt2 e^(pi i/8) cos(pi q/2)) / cos(pi q).
cplx g_eval(cplx q);

// Taylor coefficients of G at q up to order n (coefficient k holds G^(k)/k!),
// from the Cauchy integral on a circle sampled with the trapezoid rule.
Jet g_jet(cplx q, int n);
// The same jet by series division of numerator and denominator. Loses
// accuracy quickly with the order away from half-odd integers; kept for
// cross-checks at low order.
Jet g_jet_division(cplx q, int n);

// Leading behaviour for mu > 0: -sqrt2 e^(pi i/8) exp(-pi/(2 sqrt2)(mu + nu - i(mu - nu))).
cplx g_asymptotic(cplx q);

// sinh(pi mu/(2 sqrt2) - pi/4)/sqrt2 - e^(pi/4) e^(-pi mu^2/2), a lower bound
// for |G| on the strip when mu >= 2.
double g_tail_bound(double mu);

struct Certificate {
    int winding = 0;
    double total_phase = 0;
    double min_abs = 0;
    cplx argmin = 0;
    long long grid_points = 0;
    double tail_bound_min = 0; // over mu in [2, 10]
};

// Winding of G around the parallelogram |mu| <= 2, |nu| <= 1/sqrt2 and the
// minimum of |G| on a grid of that parallelogram.
Certificate nonvanishing_certificate(double grid_step, Exec exec = Exec::parallel);

} // namespace raux
